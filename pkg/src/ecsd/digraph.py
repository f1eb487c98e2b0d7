"""Integer digraphs generated by exact covering systems.

An exact covering system with congruences ``a_i mod d_i`` turns the integers
into a digraph: every vertex n gets one out-edge ``n -> d_i*n + a_i`` per
congruence.  Exactness makes every vertex's indegree exactly 1, so walking
edges backwards is a function (``predecessor``), and any backward walk must
eventually repeat, i.e. fall into a cycle.

For degree >= 2 the global structure is finite in the only way that matters:
whenever a backward step fails to shrink absolute value (|P(m)| >= |m|), m is
confined to an explicitly computable interval [-N, N].  Every cycle contains
such an m, so enumerating backward walks from the 2N+1 seeds in that interval
finds every cycle, and the number of components equals the number of cycles
(each component funnels into exactly one).  Degree-1 graphs are different
animals (infinite paths or infinitely many tiny cycles) and get their own
four-way classification instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import floor

from .covering import Congruence, CoveringSystem, ExactnessError, covering_index

# Backward walks provably terminate for exact systems (values contract once
# they leave a bounded core), so this only trips if validation was bypassed.
WALK_LIMIT = 10**7

INFINITE_LOOPS = "infinite_loops"
INFINITE_PATHS = "infinite_paths"
TWO_CYCLES_WITH_LOOP = "two_cycles_with_loop"
TWO_CYCLES_NO_LOOP = "two_cycles_no_loop"


@dataclass(frozen=True)
class Degree1Shape:
    """Structure of a degree-1 graph: one of four shapes.

    kind        meaning                                extra field
    ----------  -------------------------------------  -----------------
    infinite_loops        n -> n everywhere            -
    infinite_paths        n -> n+a, a != 0             path_count = |a|
    two_cycles_with_loop  n -> -n+a, a even            loop_at = a/2
    two_cycles_no_loop    n -> -n+a, a odd             -
    """

    kind: str
    path_count: int | None = None
    loop_at: int | None = None

    def describe(self) -> str:
        if self.kind == INFINITE_LOOPS:
            return "infinitely many loops, one at each integer"
        if self.kind == INFINITE_PATHS:
            plural = "s" if self.path_count != 1 else ""
            return f"{self.path_count} infinite path{plural}"
        if self.kind == TWO_CYCLES_WITH_LOOP:
            return f"infinitely many 2-cycles plus a loop at {self.loop_at}"
        return "infinitely many 2-cycles, no loop"


@dataclass(frozen=True)
class Cycle:
    """A directed cycle, stored in successor order starting at its minimum.

    ``vertices[i] -> vertices[i+1]`` is an edge for each i, wrapping around.
    Construction accepts any rotation and normalizes it.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        if not verts:
            raise ValueError("a cycle has at least one vertex")
        if len(set(verts)) != len(verts):
            raise ValueError(f"cycle vertices must be distinct: {verts}")
        k = verts.index(min(verts))
        object.__setattr__(self, "vertices", verts[k:] + verts[:k])

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, n: int) -> bool:
        return n in self.vertices


@dataclass(frozen=True)
class EcsdAnalysis:
    """Ancestor bound, full cycle list, and the isomorphism invariant."""

    degree: int
    ancestor_bound: int
    cycles: tuple[Cycle, ...]

    @property
    def component_count(self) -> int:
        return len(self.cycles)

    @property
    def invariant(self) -> tuple[int, tuple[int, ...]]:
        """Degree plus weakly increasing cycle lengths; equal invariants
        certify graph isomorphism."""
        return (self.degree, tuple(sorted(len(c) for c in self.cycles)))

    def invariant_text(self) -> str:
        degree, lengths = self.invariant
        return f"[{degree}; {','.join(str(k) for k in lengths)}]"

    def to_json_dict(self) -> dict:
        degree, lengths = self.invariant
        return {
            "degree": self.degree,
            "ancestor_bound": str(self.ancestor_bound),
            "cycles": [[str(v) for v in c.vertices] for c in self.cycles],
            "component_count": self.component_count,
            "invariant": [degree, list(lengths)],
        }


@dataclass(frozen=True)
class Ecsd:
    """The digraph on Z with edges ``n -> d_i*n + a_i``; system must be exact."""

    system: CoveringSystem

    def __post_init__(self):
        if not self.system.is_exact:
            report = self.system.validation
            raise ExactnessError(
                f"system {self.system} is not exact "
                f"({len(report.uncovered)} uncovered, "
                f"{len(report.multiply_covered)} multiply covered residues mod {report.period})"
            )

    @property
    def degree(self) -> int:
        return self.system.degree

    @cached_property
    def _maps(self) -> tuple[tuple[int, int, int], ...]:
        return tuple((c.modulus, c.residue, abs(c.modulus)) for c in self.system.congruences)

    def successors(self, n: int) -> list[int]:
        """The r out-neighbors of n, in congruence order."""
        return [d * n + a for d, a, _ in self._maps]

    def predecessor(self, n: int) -> int:
        """The unique m with an edge m -> n."""
        for d, a, abs_d in self._maps:
            if (n - a) % abs_d == 0:
                q, rem = divmod(n - a, d)
                if rem:
                    raise ExactnessError(f"predecessor of {n} is not an integer; system is not exact")
                return q
        raise ExactnessError(f"{n} is not covered by any congruence; system is not exact")

    def covering_index(self, n: int) -> int:
        return covering_index(self.system, n)

    def ancestor_bound(self) -> int:
        """The bound N confining every non-contracting backward step.

        If |P(m)| >= |m| then m lies between -a_i/(d_i - 1) and a_i/(d_i + 1)
        for its covering congruence, so |m| <= N with N the floored maximum of
        those endpoints over all congruences.  Computed in exact rationals;
        a float here could lose a boundary seed.
        """
        if self.degree < 2:
            raise ValueError("ancestor bound is defined for degree >= 2 (use classify_degree1)")
        best = 0
        for d, a, _ in self._maps:
            cand = max(abs(Fraction(a, d - 1)), abs(Fraction(a, d + 1)))
            best = max(best, floor(cand))
        return best

    def _backward_walk(self, start: int) -> tuple[list[int], int]:
        """Iterate predecessor until a value repeats.

        Returns (walk, i) where walk[i:] is the detected cycle in the order
        predecessors were taken (walk[j+1] = P(walk[j])).
        """
        seen: dict[int, int] = {}
        walk: list[int] = []
        v = start
        while v not in seen:
            if len(walk) >= WALK_LIMIT:
                raise RuntimeError(
                    f"backward walk from {start} exceeded {WALK_LIMIT} steps; "
                    "the system cannot be exact"
                )
            seen[v] = len(walk)
            walk.append(v)
            v = self.predecessor(v)
        return walk, seen[v]

    def _cycle_from_walk(self, walk: list[int], start: int) -> Cycle:
        # walk[start:] lists the cycle backwards; flip it to successor order.
        backward = walk[start:]
        return Cycle((backward[0], *backward[:0:-1]))

    def find_cycles(self) -> list[Cycle]:
        """Every cycle of the graph, sorted by minimum vertex.

        Complete because each cycle contains a vertex m with |P(m)| >= |m|
        (absolute values cannot strictly decrease around a loop), hence a
        vertex with |m| <= ancestor_bound, so walking backwards from every
        seed in [-N, N] visits every cycle.
        """
        if self.degree < 2:
            raise ValueError("cycle enumeration is defined for degree >= 2 (use classify_degree1)")
        bound = self.ancestor_bound()
        found: dict[int, Cycle] = {}
        for seed in range(-bound, bound + 1):
            walk, start = self._backward_walk(seed)
            cycle = self._cycle_from_walk(walk, start)
            found.setdefault(cycle.vertices[0], cycle)
        return [found[m] for m in sorted(found)]

    @cached_property
    def _analysis(self) -> EcsdAnalysis:
        return EcsdAnalysis(self.degree, self.ancestor_bound(), tuple(self.find_cycles()))

    def analyze(self) -> EcsdAnalysis:
        """Bundle ancestor bound, cycles, component count and invariant.

        Component count equals cycle count for degree >= 2: every vertex has
        an ancestor on some cycle, and no two cycles share a component.
        """
        if self.degree < 2:
            raise ValueError("analysis is defined for degree >= 2 (use classify_degree1)")
        return self._analysis

    def component_representative(self, n: int) -> int:
        """Minimum vertex of the cycle in n's component.

        Two vertices are in the same component exactly when their
        representatives agree.
        """
        if self.degree < 2:
            raise ValueError("component representatives are defined for degree >= 2")
        walk, start = self._backward_walk(n)
        return min(walk[start:])

    def classify_degree1(self) -> Degree1Shape:
        """The four-way structure classification of a degree-1 graph."""
        if self.degree != 1:
            raise ValueError("classification applies to degree-1 systems only (use analyze)")
        (d, a, _), = self._maps
        if d == 1:
            if a == 0:
                return Degree1Shape(INFINITE_LOOPS)
            return Degree1Shape(INFINITE_PATHS, path_count=abs(a))
        if a % 2 == 0:
            return Degree1Shape(TWO_CYCLES_WITH_LOOP, loop_at=a // 2)
        return Degree1Shape(TWO_CYCLES_NO_LOOP)

    def cyclic_vertices_in(self, lo: int, hi: int) -> set[int]:
        """Cyclic vertices within [lo, hi] (works for any degree)."""
        if self.degree >= 2:
            return {v for c in self.find_cycles() for v in c.vertices if lo <= v <= hi}
        shape = self.classify_degree1()
        if shape.kind == INFINITE_PATHS:
            return set()
        return set(range(lo, hi + 1))

    def export_dot(self, lo: int, hi: int) -> str:
        """Graphviz DOT for the window [lo, hi].

        Every edge with both endpoints in the window appears, labeled by its
        1-based congruence index; cyclic vertices are drawn as double circles.
        """
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi}]")
        cyclic = self.cyclic_vertices_in(lo, hi)
        lines = [f'digraph "{self.system}" {{']
        for n in range(lo, hi + 1):
            style = " [shape=doublecircle]" if n in cyclic else ""
            lines.append(f'  "{n}"{style};')
        for n in range(lo, hi + 1):
            for i, m in enumerate(self.successors(n), 1):
                if lo <= m <= hi:
                    lines.append(f'  "{n}" -> "{m}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def shift_isomorphism(system: CoveringSystem, k: int) -> CoveringSystem:
    """The system whose graph is the image of this one under n -> n + k.

    Residues become a_i - (d_i - 1)k with moduli unchanged; exactness is
    preserved either way (translation permutes the integers).
    """
    return CoveringSystem(
        tuple(Congruence(c.residue - (c.modulus - 1) * k, c.modulus) for c in system.congruences)
    )


def flip_isomorphism(system: CoveringSystem, k: int) -> CoveringSystem:
    """The system whose graph is the image of this one under n -> -(n + k).

    Residues become -a_i + (d_i - 1)k with moduli unchanged; with k = 0 this
    is an involution (plain negation of residues).
    """
    return CoveringSystem(
        tuple(Congruence(-c.residue + (c.modulus - 1) * k, c.modulus) for c in system.congruences)
    )


def same_invariant(g1: Ecsd, g2: Ecsd) -> bool:
    """Whether two degree >= 2 graphs have equal invariants (same degree and
    same multiset of cycle lengths), which certifies isomorphism."""
    if g1.degree < 2 or g2.degree < 2:
        raise ValueError("invariant comparison needs degree >= 2 on both sides "
                         "(compare classify_degree1 results instead)")
    return g1.analyze().invariant == g2.analyze().invariant
