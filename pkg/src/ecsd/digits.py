"""Positional numeral systems with arbitrary digit sets and signed bases.

A digit system is a base D with |D| = d >= 2 and a set of d integer digits,
one per residue class mod d.  Writing digits most significant first, a string
(b_k, ..., b_0) denotes sum(b_j * D**j).  Standard decimal is base 10 with
digits 0..9; balanced ternary is base 3 with digits {-1, 0, 1}; negabinary is
base -2 with digits {0, 1}.  Nothing requires digits to be small or
nonnegative, and the base may be negative, which is exactly what lets some
systems reach every integer.

Everything routes through the graph n -> D*n + b_i over the induced covering
system {b_i mod D}: n is representable exactly when the graph walks from 0 to
n, i.e. when the backward walk from n reaches 0.  In a system where every
integer is representable, representations are unique up to a leading copy of
the "zero block", the digit string spelled around the cycle through 0 (for
ordinary systems that block is just "0", and uniqueness up to leading zeros
is the familiar statement).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .covering import Congruence, CoveringSystem
from .digraph import Ecsd

# Cap on d**(k+1) when materializing descendant sets / exhaustive string
# tables; beyond this the sets stop fitting comfortably in memory.
ENUMERATION_LIMIT = 2**24


@dataclass(frozen=True)
class DigitString:
    """A nonempty digit sequence, most significant digit first.

    The text form is compact ("141") when every digit is a single decimal
    character 0..9, and comma-separated ("1,-1,-1") otherwise; ``parse``
    accepts both.
    """

    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise ValueError("digit strings are nonempty")

    def __str__(self) -> str:
        if all(0 <= b <= 9 for b in self.digits):
            return "".join(str(b) for b in self.digits)
        return ",".join(str(b) for b in self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    @classmethod
    def parse(cls, text: str) -> DigitString:
        """Parse either wire form.

        >>> DigitString.parse("141").digits
        (1, 4, 1)
        >>> DigitString.parse("1,-1,-1").digits
        (1, -1, -1)
        """
        text = text.strip()
        if not text:
            raise ValueError("empty digit string")
        if text.isdigit():
            return cls(tuple(int(ch) for ch in text))
        try:
            return cls(tuple(int(part.strip()) for part in text.split(",")))
        except ValueError:
            raise ValueError(f"cannot parse digit string {text!r}") from None


@dataclass(frozen=True)
class DigitSystem:
    """Base D with one digit per residue class mod |D|."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        d = abs(self.base)
        if d < 2:
            raise ValueError("|base| must be at least 2")
        if len(self.digits) != d:
            raise ValueError(f"base {self.base} needs exactly {d} digits, got {len(self.digits)}")
        seen: dict[int, int] = {}
        for b in self.digits:
            r = b % d
            if r in seen:
                raise ValueError(
                    f"digits {seen[r]} and {b} are both = {r} (mod {d}); "
                    "need one digit per residue class"
                )
            seen[r] = b
        # d distinct classes out of d: every class is present.

    @classmethod
    def from_covering_system(cls, system: CoveringSystem) -> DigitSystem:
        """Reinterpret an equal-modulus covering system as a digit system.

        Mixed moduli are rejected: positional weight D**j only makes sense
        when every congruence shares the same modulus D.
        """
        moduli = {c.modulus for c in system.congruences}
        if len(moduli) != 1:
            raise ValueError(f"digit systems need a single shared modulus, got {sorted(moduli)}")
        (base,) = moduli
        return cls(base, tuple(c.residue for c in system.congruences))

    @cached_property
    def _digit_by_class(self) -> dict[int, int]:
        d = abs(self.base)
        return {b % d: b for b in self.digits}

    def digit_for(self, n: int) -> int:
        """The unique digit congruent to n mod |base|."""
        return self._digit_by_class[n % abs(self.base)]

    @cached_property
    def covering_system(self) -> CoveringSystem:
        return CoveringSystem(tuple(Congruence(b, self.base) for b in self.digits))

    @cached_property
    def graph(self) -> Ecsd:
        """The induced digraph on Z with edges n -> base*n + digit."""
        return Ecsd(self.covering_system)

    # ------------------------------------------------------------------
    # codec

    def decode(self, s: DigitString) -> int:
        """Value of a digit string (Horner, most significant first).

        >>> DigitSystem(-2, (1, 4)).decode(DigitString.parse("141"))
        -3
        """
        allowed = set(self.digits)
        value = 0
        for b in s.digits:
            if b not in allowed:
                raise ValueError(f"digit {b} is not in the digit set {self.digits}")
            value = value * self.base + b
        return value

    def encode(self, n: int) -> DigitString | None:
        """Shortest digit string for n, or None when n is not representable.

        Peels digits least significant first: the last digit of n must be the
        one sharing n's class mod |base|, after which (n - b) / base remains.
        Success means the peeling reaches 0; revisiting any value first means
        n is not a descendant of 0 in the induced graph, so no string of any
        length works.  encode(0) spells the zero block once (plain "0"
        whenever 0 is a digit).
        """
        base = self.base
        out: list[int] = []
        seen: set[int] = set()
        v = n
        while True:
            if v == 0 and out:
                out.reverse()
                return DigitString(tuple(out))
            if v in seen:
                return None
            seen.add(v)
            b = self.digit_for(v)
            out.append(b)
            v = (v - b) // base

    def zero_cycle_block(self) -> DigitString:
        """Digits spelled around the cycle through 0; decodes to 0.

        Raises if 0 is not a cyclic vertex of the induced graph.
        """
        block = self.encode(0)
        if block is None:
            raise ValueError(f"0 is not a cyclic vertex of the graph of {self}")
        return block

    def canonicalize(self, s: DigitString) -> DigitString:
        """Strip leading copies of the zero block, keeping the string nonempty.

        Leading blocks contribute 0 * base**j, so the decoded value is
        unchanged; the result is idempotent.  If 0 is not cyclic there is
        nothing to strip.
        """
        self.decode(s)
        try:
            block = self.zero_cycle_block().digits
        except ValueError:
            return s
        digits = s.digits
        width = len(block)
        while len(digits) > width and digits[:width] == block:
            digits = digits[width:]
        return DigitString(digits)

    def is_complete(self) -> bool:
        """Whether every integer has a representation: the induced graph has
        one component and 0 sits on its cycle."""
        analysis = self.graph.analyze()
        return analysis.component_count == 1 and 0 in analysis.cycles[0]

    def descendants_of_zero(self, k: int) -> set[int]:
        """Values of all digit strings of length exactly k+1.

        Equivalently the set of (k+1)-step successors of 0 in the induced
        graph.  Exhaustive (d**(k+1) strings), guarded by ENUMERATION_LIMIT;
        serves as the independent check on ``encode``.
        """
        if k < 0:
            raise ValueError("k must be nonnegative")
        d = abs(self.base)
        if d ** (k + 1) > ENUMERATION_LIMIT:
            raise ValueError(f"{d}**{k + 1} digit strings exceed the enumeration limit")
        values = {0}
        for _ in range(k + 1):
            values = {self.base * v + b for v in values for b in self.digits}
        return values

    # ------------------------------------------------------------------
    # wire formats

    def __str__(self) -> str:
        return f"base {self.base} digits {{{', '.join(str(b) for b in self.digits)}}}"

    def string_json_dict(self, s: DigitString) -> dict:
        return {"base": self.base, "digits": list(self.digits), "string": list(s.digits)}


def standard_family(d: int, t: int) -> DigitSystem:
    """Base d >= 3 with the d consecutive digits t..t+d-1, for -(d-1) <= t <= 0.

    Strictly inside that range (t != 0 and t != -(d-1)) every integer is
    representable; at the endpoints exactly the nonnegative (t = 0) or
    nonpositive (t = -(d-1)) integers are.
    """
    if d < 3:
        raise ValueError("the consecutive-digit family needs base d >= 3")
    if not -(d - 1) <= t <= 0:
        raise ValueError(f"offset {t} outside [{-(d - 1)}, 0]")
    return DigitSystem(d, tuple(range(t, t + d)))


def nega_family(d: int) -> DigitSystem:
    """Base -d with the ordinary digits 0..d-1 (negabinary at d = 2).

    Every integer is representable for every d >= 2.
    """
    if d < 2:
        raise ValueError("the negative-base family needs d >= 2")
    return DigitSystem(-d, tuple(range(d)))


def balanced_ternary() -> DigitSystem:
    """Base 3 with digits {-1, 0, 1}; represents every integer uniquely."""
    return standard_family(3, -1)
