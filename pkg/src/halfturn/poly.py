"""Sparse multivariate polynomials with exact rational coefficients.

Variables are fixed to ``x, y, z, a, b, c``; a term is keyed by its exponent
6-tuple.  Zero coefficients are never stored, so a polynomial is zero exactly
when its term dict is empty.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Mapping, Union

VARS = ("x", "y", "z", "a", "b", "c")
_NVARS = len(VARS)
_ZERO_EXP = (0,) * _NVARS

Coeff = Union[int, Fraction]


def _canon(c: Rational) -> Coeff:
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class MultiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Rational] | None = None):
        clean = {}
        for exp, coeff in (terms or {}).items():
            if coeff:
                clean[tuple(exp)] = _canon(coeff)
        self.terms = dict(sorted(clean.items(), reverse=True))

    @classmethod
    def const(cls, c: Rational) -> "MultiPoly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        exp = [0] * _NVARS
        exp[VARS.index(name)] = 1
        return cls({tuple(exp): 1})

    @staticmethod
    def _lift(other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, Rational):
            return MultiPoly.const(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return MultiPoly({e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = MultiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def evaluate(self, values: Mapping[str, Rational]):
        """Exact value at a point; unspecified variables count as zero."""
        point = [values.get(v, 0) for v in VARS]
        total = 0
        for exp, coeff in self.terms.items():
            term = coeff
            for base, k in zip(point, exp):
                if k:
                    term *= base**k
            total += term
        return _canon(total)

    def subs(self, mapping: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables (simultaneously)."""
        images = [mapping.get(v, MultiPoly.var(v)) for v in VARS]
        out = MultiPoly()
        for exp, coeff in self.terms.items():
            term = MultiPoly.const(coeff)
            for img, k in zip(images, exp):
                if k:
                    term = term * img**k
            out = out + term
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.terms.items():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, exp) if k)
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            elif coeff == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"


x, y, z, a, b, c = (MultiPoly.var(v) for v in VARS)
