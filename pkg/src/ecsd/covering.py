"""Exact covering systems of congruences.

A covering system is a finite list of congruences ``a_i mod d_i`` such that
every integer satisfies at least one of them; it is *exact* when every
integer satisfies exactly one.  Two conventions here are unusual and both
matter downstream:

* Moduli may be negative.  ``n = a (mod -d)`` means the same thing as
  ``n = a (mod d)``, since d and -d have the same multiples, but the sign is
  kept because it changes the linear maps ``n -> d*n + a`` built from the
  system.
* Representatives are significant.  ``1 mod 2`` and ``3 mod 2`` are distinct
  entries, again because they induce different linear maps.  Listing the
  *same* pair twice can never be exact (everything it covers is covered
  twice), so duplicates are caught by validation rather than construction.

All arithmetic is plain Python integers, so residues and moduli of any size
are exact.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from math import lcm


class SpecParseError(ValueError):
    """A system spec string does not match the term grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExactnessError(ValueError):
    """An operation that requires an exact system met a non-exact one."""


@dataclass(frozen=True)
class Congruence:
    """A single congruence ``residue mod modulus``, kept exactly as written.

    ``covers(n)`` is sign-blind: |modulus| divides n - residue.  The residue
    is never reduced, so ``Congruence(3, 2) != Congruence(1, 2)`` even though
    they cover the same integers.
    """

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus == 0:
            raise ValueError("modulus must be nonzero")

    def covers(self, n: int) -> bool:
        return (n - self.residue) % abs(self.modulus) == 0

    def term(self) -> str:
        """Render as a linear term: ``Congruence(-9, 2).term() == '2n-9'``."""
        d, a = self.modulus, self.residue
        coeff = {1: "", -1: "-"}.get(d, str(d))
        if a == 0:
            return f"{coeff}n"
        return f"{coeff}n{'+' if a > 0 else '-'}{abs(a)}"


# One linear term, whitespace already removed: optional sign, optional
# coefficient digits (default 1), the symbol n, optional signed residue.
_TERM_RE = re.compile(r"([+-]?)(\d*)n(?:([+-])(\d+))?")


def parse_system(text: str) -> CoveringSystem:
    """Parse a comma-separated list of linear terms into a covering system.

    The grammar is ``[sign]<int>n[sign<int>]`` per term, with whitespace
    allowed anywhere; a bare ``n`` or ``-n`` means coefficient +1 or -1, and
    a missing trailing integer means residue 0.  The result is *unvalidated*:
    call :func:`validate_exact` (or read ``.is_exact``) before treating it as
    an exact system.

    >>> parse_system("2n,2n-9").congruences
    (Congruence(residue=0, modulus=2), Congruence(residue=-9, modulus=2))
    >>> parse_system("-3n, -3n+1, -3n+2").degree
    3
    """
    congruences = []
    pos = 0
    for chunk in text.split(","):
        lead = len(chunk) - len(chunk.lstrip())
        term_pos = pos + lead
        stripped = re.sub(r"\s+", "", chunk)
        if not stripped:
            raise SpecParseError("empty term", term_pos)
        match = _TERM_RE.fullmatch(stripped)
        if match is None:
            raise SpecParseError(f"bad term {chunk.strip()!r}", term_pos)
        sign, coeff, res_sign, res_digits = match.groups()
        d = int(coeff) if coeff else 1
        if d == 0:
            raise SpecParseError("zero coefficient on n", term_pos)
        if sign == "-":
            d = -d
        a = 0
        if res_digits is not None:
            a = int(res_digits)
            if res_sign == "-":
                a = -a
        congruences.append(Congruence(a, d))
        pos += len(chunk) + 1
    return CoveringSystem(tuple(congruences))


@dataclass(frozen=True)
class ValidationReport:
    """Result of the exhaustive exactness check over one full period."""

    exact: bool
    period: int
    uncovered: tuple[int, ...]
    multiply_covered: tuple[int, ...]
    density_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "exact": self.exact,
            "period": str(self.period),
            "uncovered": [str(n) for n in self.uncovered],
            "multiply_covered": [str(n) for n in self.multiply_covered],
        }


@dataclass(frozen=True)
class CoveringSystem:
    """An ordered list of congruences, possibly exact.

    Order is part of the identity: the k-th congruence drives the k-th edge
    map of the associated digraph, and indexes reported elsewhere are
    1-based positions in this list.
    """

    congruences: tuple[Congruence, ...]

    def __post_init__(self):
        object.__setattr__(self, "congruences", tuple(self.congruences))
        if not self.congruences:
            raise ValueError("a covering system needs at least one congruence")

    @property
    def degree(self) -> int:
        return len(self.congruences)

    @cached_property
    def period(self) -> int:
        """lcm of the |moduli|; coverage is periodic with this period."""
        return lcm(*(abs(c.modulus) for c in self.congruences))

    @cached_property
    def validation(self) -> ValidationReport:
        return validate_exact(self)

    @property
    def is_exact(self) -> bool:
        return self.validation.exact

    def __str__(self) -> str:
        return ",".join(c.term() for c in self.congruences)

    def to_json_dict(self) -> dict:
        return {"terms": [{"d": str(c.modulus), "a": str(c.residue)} for c in self.congruences]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: dict) -> CoveringSystem:
        terms = data["terms"]
        return cls(tuple(Congruence(int(t["a"]), int(t["d"])) for t in terms))

    @classmethod
    def from_json(cls, text: str) -> CoveringSystem:
        return cls.from_json_dict(json.loads(text))


def validate_exact(system: CoveringSystem) -> ValidationReport:
    """Check exactness by scanning one full period.

    The density identity sum(L/|d_i|) == L is a necessary condition and is
    recorded in the report, but the verdict comes from counting covering
    congruences for every n in 0..L-1: exact means every count is 1.
    """
    L = system.period
    density_ok = sum(L // abs(c.modulus) for c in system.congruences) == L
    uncovered = []
    multiply = []
    pairs = [(c.residue, abs(c.modulus)) for c in system.congruences]
    for n in range(L):
        count = sum((n - a) % d == 0 for a, d in pairs)
        if count == 0:
            uncovered.append(n)
        elif count > 1:
            multiply.append(n)
    exact = not uncovered and not multiply
    return ValidationReport(exact, L, tuple(uncovered), tuple(multiply), density_ok)


def covering_index(system: CoveringSystem, n: int) -> int:
    """Position (1-based) of the unique congruence covering n.

    Scans all congruences and insists on exactly one hit, so a system whose
    exactness check was bypassed raises instead of silently picking a side.
    """
    hit = 0
    for i, c in enumerate(system.congruences, 1):
        if (n - c.residue) % abs(c.modulus) == 0:
            if hit:
                raise ExactnessError(f"{n} is covered by congruences {hit} and {i}; system is not exact")
            hit = i
    if not hit:
        raise ExactnessError(f"{n} is not covered by any congruence; system is not exact")
    return hit
