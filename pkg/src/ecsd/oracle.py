"""Brute-force reference computations on bounded windows.

Everything in here deliberately avoids the backward-walk machinery in
``digraph``: cycles are found by forward reachability over explicitly
materialized edges, components by undirected flood fill, and digit strings by
exhaustive enumeration.  Slow and obviously correct, so the fast paths can be
checked against them on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .covering import CoveringSystem
from .digits import DigitString, DigitSystem, ENUMERATION_LIMIT
from .digraph import Cycle, Ecsd


@dataclass(frozen=True)
class WindowGraph:
    """The induced subgraph on [-window, window], edges listed explicitly."""

    window: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, system: CoveringSystem, window: int) -> WindowGraph:
        maps = [(c.modulus, c.residue) for c in system.congruences]
        edges = []
        for n in range(-window, window + 1):
            for d, a in maps:
                m = d * n + a
                if -window <= m <= window:
                    edges.append((n, m))
        return cls(window, tuple(edges))

    def successors_in_window(self, n: int) -> list[int]:
        return self._succ.get(n, [])

    @cached_property
    def _succ(self) -> dict[int, list[int]]:
        succ: dict[int, list[int]] = {}
        for n, m in self.edges:
            succ.setdefault(n, []).append(m)
        return succ

    def reachable_from(self, start: int) -> set[int]:
        """Forward reachability (path length >= 1) within the window."""
        seen: set[int] = set()
        stack = list(self.successors_in_window(start))
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(self.successors_in_window(x))
        return seen


def _required_window(system: CoveringSystem) -> int:
    bound = Ecsd(system).ancestor_bound()
    return bound + max(abs(c.residue) for c in system.congruences)


def brute_cycles(system: CoveringSystem, window: int) -> list[Cycle]:
    """All cycles, by forward reachability on the window graph.

    A vertex is cyclic iff it can reach itself; mutually reachable cyclic
    vertices form one cycle, whose order is recovered by walking forward
    inside the group.  Needs window >= ancestor_bound + max |residue| so that
    whole cycles fit (cyclic vertices never exceed that size).
    """
    needed = _required_window(system)
    if window < needed:
        raise ValueError(f"window {window} too small, need at least {needed}")
    wg = WindowGraph.build(system, window)
    reach = {v: wg.reachable_from(v) for v in range(-window, window + 1)}
    cyclic = {v for v, r in reach.items() if v in r}
    cycles = []
    remaining = set(cyclic)
    while remaining:
        c = min(remaining)
        group = {v for v in cyclic if v in reach[c] and c in reach[v]}
        order = [c]
        cur = c
        while True:
            nxt = [m for m in wg.successors_in_window(cur) if m in group]
            if len(nxt) != 1:
                raise AssertionError(f"cycle through {c} is not simple: {sorted(group)}")
            cur = nxt[0]
            if cur == c:
                break
            order.append(cur)
        if set(order) != group:
            raise AssertionError(f"cycle walk from {c} missed vertices of {sorted(group)}")
        cycles.append(Cycle(tuple(order)))
        remaining -= group
    return sorted(cycles, key=lambda cy: cy.vertices[0])


def brute_components(system: CoveringSystem, window: int) -> list[list[Cycle]]:
    """Cycles grouped by undirected connectivity within the window.

    The grouping can only merge as the window grows (paths never disappear),
    so a too-small window may overcount components but never undercounts.
    """
    cycles = brute_cycles(system, window)
    undirected: dict[int, set[int]] = {}
    wg = WindowGraph.build(system, window)
    for n, m in wg.edges:
        undirected.setdefault(n, set()).add(m)
        undirected.setdefault(m, set()).add(n)

    def flood(start: int) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in undirected.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    groups: list[tuple[set[int], list[Cycle]]] = []
    for cycle in cycles:
        region = flood(cycle.vertices[0])
        for members, cyc_list in groups:
            if members & region:
                members |= region
                cyc_list.append(cycle)
                break
        else:
            groups.append((region, [cycle]))
    return [cyc_list for _, cyc_list in groups]


def stable_component_count(system: CoveringSystem, start_window: int | None = None) -> int:
    """Component count with the window doubled until the count stops moving
    across two consecutive sizes."""
    window = start_window if start_window is not None else _required_window(system)
    window = max(window, _required_window(system), 1)
    count = len(brute_components(system, window))
    while True:
        window *= 2
        nxt = len(brute_components(system, window))
        if nxt == count:
            return count
        count = nxt


def brute_representations(system: DigitSystem, max_len: int) -> dict[int, list[DigitString]]:
    """Every digit string of length 1..max_len, grouped by decoded value.

    Exhaustive (d + d**2 + ... + d**max_len strings); used to confirm that
    ``encode`` finds the shortest string and that longer spellings of the
    same value differ only by leading zero blocks.
    """
    d = abs(system.base)
    if d**max_len > ENUMERATION_LIMIT:
        raise ValueError(f"{d}**{max_len} digit strings exceed the enumeration limit")
    table: dict[int, list[DigitString]] = {}
    for length in range(1, max_len + 1):
        for combo in product(system.digits, repeat=length):
            value = 0
            for b in combo:
                value = value * system.base + b
            table.setdefault(value, []).append(DigitString(combo))
    return table
