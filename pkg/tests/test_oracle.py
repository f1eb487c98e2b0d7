import pytest

from ecsd import DigitSystem, balanced_ternary, parse_system
from ecsd.oracle import (
    WindowGraph,
    brute_components,
    brute_cycles,
    brute_representations,
    stable_component_count,
)


def system(text):
    return parse_system(text)


class TestWindowGraph:
    def test_edges_restricted_to_window(self):
        wg = WindowGraph.build(system("2n,2n+1"), 3)
        assert all(-3 <= n <= 3 and -3 <= m <= 3 for n, m in wg.edges)
        assert (1, 2) in wg.edges and (1, 3) in wg.edges
        assert (2, 4) not in wg.edges

    def test_indegree_one_inside(self, corpus_graph):
        wg = WindowGraph.build(corpus_graph.system, 25)
        indegree = {}
        for _, m in wg.edges:
            indegree[m] = indegree.get(m, 0) + 1
        for n in range(-25, 26):
            expected = 1 if -25 <= corpus_graph.predecessor(n) <= 25 else 0
            assert indegree.get(n, 0) == expected


class TestBruteCycles:
    def test_lengths_1_1_2_6(self):
        lengths = sorted(len(c) for c in brute_cycles(system("2n,2n-9"), 20))
        assert lengths == [1, 1, 2, 6]

    def test_two_loops(self):
        assert sorted(len(c) for c in brute_cycles(system("2n,2n+1"), 10)) == [1, 1]

    def test_negabinary_single_loop(self):
        cycles = brute_cycles(system("-2n,-2n+1"), 10)
        assert [c.vertices for c in cycles] == [(0,)]

    def test_window_too_small(self):
        with pytest.raises(ValueError):
            brute_cycles(system("2n,2n-9"), 5)

    def test_matches_fast_path(self, corpus_graph):
        window = corpus_graph.ancestor_bound() + max(
            abs(c.residue) for c in corpus_graph.system.congruences
        )
        assert brute_cycles(corpus_graph.system, max(window, 1)) == corpus_graph.find_cycles()


class TestBruteComponents:
    def test_four_components(self):
        assert len(brute_components(system("2n,2n-9"), 40)) == 4

    def test_single_component(self):
        assert len(brute_components(system("-2n+1,-2n+4"), 40)) == 1

    def test_single_tree_from_zero(self):
        assert len(brute_components(system("3n,3n-1,3n+1"), 20)) == 1

    def test_every_cycle_in_exactly_one_group(self):
        groups = brute_components(system("2n,2n-9"), 40)
        cycles = [c for group in groups for c in group]
        assert sorted(c.vertices for c in cycles) == [
            (0,), (1, 2, 4, 8, 7, 5), (3, 6), (9,)]

    def test_stable_count_matches_analysis(self, corpus_graph):
        assert stable_component_count(corpus_graph.system) == corpus_graph.analyze().component_count


class TestBruteRepresentations:
    def test_minus_three_has_exactly_two_spellings(self):
        table = brute_representations(DigitSystem(-2, (1, 4)), 6)
        assert [str(s) for s in table[-3]] == ["141", "144141"]

    def test_balanced_ternary_window_unique(self):
        table = brute_representations(balanced_ternary(), 4)
        for value in range(-40, 41):
            spellings = table[value]
            canonical = [s for s in spellings if s.digits[0] != 0 or len(s) == 1]
            assert len(canonical) == 1
            # longer spellings are the canonical one behind leading zeros
            for s in spellings:
                assert s.digits[-len(canonical[0].digits):] == canonical[0].digits
                assert set(s.digits[: len(s) - len(canonical[0].digits)]) <= {0}

    def test_standard_binary_values(self):
        table = brute_representations(DigitSystem(2, (0, 1)), 5)
        assert sorted(table) == list(range(32))

    def test_size_guard(self):
        with pytest.raises(ValueError):
            brute_representations(DigitSystem(2, (0, 1)), 40)

    def test_encode_finds_shortest_spelling(self):
        neg = DigitSystem(-2, (1, 4))
        table = brute_representations(neg, 8)
        for value, spellings in table.items():
            shortest = min(len(s) for s in spellings)
            encoded = neg.encode(value)
            assert encoded is not None and len(encoded) == shortest

    def test_unlisted_values_are_unrepresentable_at_that_length(self):
        binary = DigitSystem(2, (0, 1))
        table = brute_representations(binary, 6)
        assert -1 not in table
        assert binary.encode(-1) is None
