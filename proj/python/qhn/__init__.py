"""Slope stability, Harder-Narasimhan and Kempf filtrations for quiver
representations over exact fields.

All functions take a problem description as a JSON string (the same format the
``qhn`` command-line tool reads) and return exact values: fractions are
rendered as ``"a/b"`` strings, never floats.
"""

from ._qhn import (
    InternalContradictionError,
    MalformedInputError,
    NotUnstableError,
    ResourceLimitError,
    UndefinedSlopeError,
    envelope_csv,
    hn_filtration,
    is_semistable,
    kempf_filtration,
    scan,
    slope,
    verify_theorem,
)

__all__ = [
    "slope",
    "is_semistable",
    "hn_filtration",
    "kempf_filtration",
    "verify_theorem",
    "scan",
    "envelope_csv",
    "MalformedInputError",
    "ResourceLimitError",
    "InternalContradictionError",
    "UndefinedSlopeError",
    "NotUnstableError",
]
