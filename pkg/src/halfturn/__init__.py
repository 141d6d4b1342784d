"""Exact barycentric geometry for the quadrilateral half-turn configuration."""

__version__ = "0.1.0"

from .constructions import (
    Configuration,
    build_configuration,
    generalized_circumcenter,
    generalized_orthocenter,
    isotomcomplement,
    validate_p,
)
from .kernel import BaryLine, BaryPoint

__all__ = [
    "BaryLine",
    "BaryPoint",
    "Configuration",
    "build_configuration",
    "generalized_circumcenter",
    "generalized_orthocenter",
    "isotomcomplement",
    "validate_p",
]
