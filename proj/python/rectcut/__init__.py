"""Exact rectangle dissections, resistor networks and LFS criteria."""

from ._rectcut import (
    ArithmeticError,
    DimensionError,
    DomainError,
    GeometryError,
    InternalError,
    MathError,
    NetlistError,
    ParseError,
    RectcutError,
    SizingError,
    cf_eval,
    condition3,
    equivalence,
    ladder_dissection,
    minpoly,
    resistance,
    run,
    solve,
    theorem1,
    validate,
)

__all__ = [
    "ArithmeticError",
    "DimensionError",
    "DomainError",
    "GeometryError",
    "InternalError",
    "MathError",
    "NetlistError",
    "ParseError",
    "RectcutError",
    "SizingError",
    "cf_eval",
    "condition3",
    "equivalence",
    "ladder_dissection",
    "minpoly",
    "resistance",
    "run",
    "solve",
    "theorem1",
    "validate",
]
