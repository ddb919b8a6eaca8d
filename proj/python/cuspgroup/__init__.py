"""Finitely presented groups of cuspidal curves."""

from ._core import (
    Presentation,
    abelianization,
    alexander_polynomial,
    count_homs,
    milnor_ratio,
    present,
    run,
    superabundance,
)

__all__ = [
    "Presentation",
    "abelianization",
    "alexander_polynomial",
    "count_homs",
    "milnor_ratio",
    "present",
    "run",
    "superabundance",
]
