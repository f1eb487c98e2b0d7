"""Exact covering systems, the digraphs they generate on the integers, and
the digit systems they induce.

Quick tour::

    >>> from ecsd import parse_system, Ecsd
    >>> g = Ecsd(parse_system("2n,2n-9"))
    >>> g.analyze().invariant_text()
    '[2; 1,1,2,6]'

    >>> from ecsd import DigitSystem
    >>> negabinary = DigitSystem(-2, (0, 1))
    >>> str(negabinary.encode(-3))
    '1101'
    >>> negabinary.is_complete()
    True
"""

from .covering import (
    Congruence,
    CoveringSystem,
    ExactnessError,
    SpecParseError,
    ValidationReport,
    covering_index,
    parse_system,
    validate_exact,
)
from .digits import (
    DigitString,
    DigitSystem,
    balanced_ternary,
    nega_family,
    standard_family,
)
from .digraph import (
    INFINITE_LOOPS,
    INFINITE_PATHS,
    TWO_CYCLES_NO_LOOP,
    TWO_CYCLES_WITH_LOOP,
    Cycle,
    Degree1Shape,
    Ecsd,
    EcsdAnalysis,
    flip_isomorphism,
    same_invariant,
    shift_isomorphism,
)

__version__ = "0.1.0"

__all__ = [
    "Congruence",
    "CoveringSystem",
    "Cycle",
    "Degree1Shape",
    "DigitString",
    "DigitSystem",
    "Ecsd",
    "EcsdAnalysis",
    "ExactnessError",
    "INFINITE_LOOPS",
    "INFINITE_PATHS",
    "SpecParseError",
    "TWO_CYCLES_NO_LOOP",
    "TWO_CYCLES_WITH_LOOP",
    "ValidationReport",
    "balanced_ternary",
    "covering_index",
    "flip_isomorphism",
    "nega_family",
    "parse_system",
    "same_invariant",
    "shift_isomorphism",
    "standard_family",
    "validate_exact",
]
