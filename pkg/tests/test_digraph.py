import pytest

from ecsd import (
    INFINITE_LOOPS,
    INFINITE_PATHS,
    TWO_CYCLES_NO_LOOP,
    TWO_CYCLES_WITH_LOOP,
    Cycle,
    Ecsd,
    ExactnessError,
    flip_isomorphism,
    parse_system,
    same_invariant,
    shift_isomorphism,
)


def graph(text):
    return Ecsd(parse_system(text))


class TestEdges:
    def test_successors(self):
        assert graph("2n,2n-9").successors(7) == [14, 5]
        assert graph("2n,2n-9").successors(0) == [0, -9]
        assert graph("3n,3n-1,3n+1").successors(1) == [3, 2, 4]

    def test_predecessor(self):
        assert graph("2n,2n-9").predecessor(-5) == 2

    def test_predecessor_chain(self):
        g = graph("2n,2n-9")
        chain = [-1]
        for _ in range(5):
            chain.append(g.predecessor(chain[-1]))
        assert chain == [-1, 4, 2, 1, 5, 7]

    def test_loop_fixed_point(self):
        assert graph("2n,2n+1").predecessor(0) == 0
        assert graph("2n,2n-9").predecessor(9) == 9

    def test_indegree_one_round_trip(self, corpus_graph):
        for n in list(range(-40, 41)) + [10**30, -(10**30) + 7]:
            for m in corpus_graph.successors(n):
                assert corpus_graph.predecessor(m) == n

    def test_not_exact_rejected(self):
        with pytest.raises(ExactnessError):
            graph("2n,3n")


class TestAncestorBound:
    def test_values(self):
        assert graph("2n,2n-9").ancestor_bound() == 9
        assert graph("3n,3n-1,3n+1").ancestor_bound() == 0
        assert graph("-2n+1,-2n+4").ancestor_bound() == 4

    def test_degree_one_rejected(self):
        with pytest.raises(ValueError):
            graph("n+5").ancestor_bound()

    def test_every_cycle_meets_seed_interval(self, corpus_graph):
        analysis = corpus_graph.analyze()
        for cycle in analysis.cycles:
            assert any(abs(v) <= analysis.ancestor_bound for v in cycle.vertices)


class TestCycles:
    def test_full_cycle_list(self):
        cycles = graph("2n,2n-9").find_cycles()
        assert [c.vertices for c in cycles] == [(0,), (1, 2, 4, 8, 7, 5), (3, 6), (9,)]

    def test_two_loops(self):
        assert [c.vertices for c in graph("2n,2n+1").find_cycles()] == [(-1,), (0,)]

    def test_single_loop_at_zero(self):
        assert [c.vertices for c in graph("3n,3n-1,3n+1").find_cycles()] == [(0,)]

    def test_rotation_normalized(self):
        assert Cycle((6, 3)) == Cycle((3, 6))
        assert Cycle((5, 1, 2, 4, 8, 7)).vertices == (1, 2, 4, 8, 7, 5)

    def test_distinct_vertices_required(self):
        with pytest.raises(ValueError):
            Cycle((1, 2, 1))

    def test_cycles_closed_under_predecessor(self, corpus_graph):
        for cycle in corpus_graph.find_cycles():
            verts = cycle.vertices
            for i, v in enumerate(verts):
                assert corpus_graph.predecessor(verts[(i + 1) % len(verts)]) == v

    def test_cycles_disjoint(self, corpus_graph):
        seen = set()
        for cycle in corpus_graph.find_cycles():
            assert not (seen & set(cycle.vertices))
            seen |= set(cycle.vertices)

    def test_no_shorter_period(self, corpus_graph):
        # a reported k-cycle is not a repeated shorter cycle
        for cycle in corpus_graph.find_cycles():
            verts = cycle.vertices
            k = len(verts)
            for step in range(1, k):
                if k % step == 0:
                    assert any(verts[(i + step) % k] != verts[i] for i in range(k))


class TestAnalyze:
    def test_invariant_and_count(self):
        analysis = graph("2n,2n-9").analyze()
        assert analysis.invariant == (2, (1, 1, 2, 6))
        assert analysis.invariant_text() == "[2; 1,1,2,6]"
        assert analysis.component_count == 4

    def test_single_component_cases(self):
        assert graph("-2n+1,-2n+4").analyze().component_count == 1
        assert graph("-2n+1,-2n+10").analyze().component_count == 1

    def test_component_bound(self, corpus_graph):
        analysis = corpus_graph.analyze()
        assert analysis.component_count <= 2 * analysis.ancestor_bound + 1

    def test_json_shape(self):
        data = graph("2n,2n+1").analyze().to_json_dict()
        assert data == {
            "degree": 2,
            "ancestor_bound": "1",
            "cycles": [["-1"], ["0"]],
            "component_count": 2,
            "invariant": [2, [1, 1]],
        }

    def test_degree_one_rejected(self):
        with pytest.raises(ValueError):
            graph("n").analyze()


class TestComponentRepresentative:
    def test_funnels_to_six_cycle(self):
        assert graph("2n,2n-9").component_representative(-1) == 1

    def test_descendant_of_zero(self):
        assert graph("2n,2n+1").component_representative(6) == 0

    def test_negative_side(self):
        assert graph("2n,2n+1").component_representative(-3) == -1

    def test_representative_is_cycle_minimum(self, corpus_graph):
        mins = {c.vertices[0] for c in corpus_graph.find_cycles()}
        for n in range(-25, 26):
            assert corpus_graph.component_representative(n) in mins

    def test_constant_along_edges(self, corpus_graph):
        for n in range(-15, 16):
            rep = corpus_graph.component_representative(n)
            for m in corpus_graph.successors(n):
                assert corpus_graph.component_representative(m) == rep


class TestDegreeOne:
    def test_paths(self):
        shape = graph("n+5").classify_degree1()
        assert shape.kind == INFINITE_PATHS and shape.path_count == 5

    def test_loops(self):
        assert graph("n").classify_degree1().kind == INFINITE_LOOPS

    def test_two_cycles_with_loop(self):
        shape = graph("-n+4").classify_degree1()
        assert shape.kind == TWO_CYCLES_WITH_LOOP and shape.loop_at == 2

    def test_two_cycles_no_loop(self):
        assert graph("-n+7").classify_degree1().kind == TWO_CYCLES_NO_LOOP

    def test_degree_two_rejected(self):
        with pytest.raises(ValueError):
            graph("2n,2n+1").classify_degree1()


class TestIsomorphisms:
    def test_shift_images(self):
        assert str(shift_isomorphism(parse_system("2n,2n-9"), 1)) == "2n-1,2n-10"
        assert str(shift_isomorphism(parse_system("3n,3n-1,3n+1"), 1)) == "3n-2,3n-3,3n-1"

    def test_shift_identity(self):
        system = parse_system("2n,2n-9")
        assert shift_isomorphism(system, 0) == system

    def test_flip_images(self):
        assert str(flip_isomorphism(parse_system("2n,2n-9"), 0)) == "2n,2n+9"
        assert str(flip_isomorphism(parse_system("-2n+1,-2n+4"), 0)) == "-2n-1,-2n-4"

    def test_flip_involution(self):
        system = parse_system("2n,2n-9")
        assert flip_isomorphism(flip_isomorphism(system, 0), 0) == system

    @pytest.mark.parametrize("k", [-3, -1, 0, 1, 2, 5])
    def test_transforms_preserve_exactness(self, corpus_graph, k):
        assert shift_isomorphism(corpus_graph.system, k).is_exact
        assert flip_isomorphism(corpus_graph.system, k).is_exact

    def test_shift_maps_edges(self):
        system = parse_system("2n,2n-9")
        for k in (-2, 1, 4):
            g1, g2 = Ecsd(system), Ecsd(shift_isomorphism(system, k))
            for n in range(-12, 13):
                assert g2.successors(n + k) == [m + k for m in g1.successors(n)]

    def test_flip_maps_edges(self):
        system = parse_system("-2n+1,-2n+4")
        for k in (-2, 0, 3):
            g1, g2 = Ecsd(system), Ecsd(flip_isomorphism(system, k))
            for n in range(-12, 13):
                assert g2.successors(-(n + k)) == [-(m + k) for m in g1.successors(n)]

    def test_same_invariant(self):
        assert same_invariant(graph("2n,2n-9"), graph("2n-1,2n-10"))
        assert not same_invariant(graph("2n,2n+1"), graph("2n,2n-9"))
        g = graph("2n,2n-9")
        assert same_invariant(g, g)

    def test_same_invariant_rejects_degree_one(self):
        with pytest.raises(ValueError):
            same_invariant(graph("n"), graph("2n,2n+1"))


class TestDot:
    def test_binary_window(self):
        text = graph("2n,2n+1").export_dot(-3, 6)
        assert '"0" -> "1" [label="2"];' in text
        assert '"0" -> "0" [label="1"];' in text
        assert '"0" [shape=doublecircle];' in text
        assert '"3" [shape=doublecircle];' not in text

    def test_identity_loops(self):
        text = graph("n").export_dot(0, 2)
        for n in range(3):
            assert f'"{n}" -> "{n}" [label="1"];' in text

    def test_two_cycle_edges(self):
        text = graph("2n,2n-9").export_dot(-9, 9)
        assert '"3" -> "6" [label="1"];' in text
        assert '"6" -> "3" [label="2"];' in text

    def test_out_of_window_edges_dropped(self):
        text = graph("2n,2n+1").export_dot(-3, 6)
        assert '"4" -> "8"' not in text

    def test_empty_window_rejected(self):
        with pytest.raises(ValueError):
            graph("2n,2n+1").export_dot(5, 4)
