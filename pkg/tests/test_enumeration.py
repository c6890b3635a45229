import pytest

from abcspectra.enumeration import (GraphClassSpec, connected_graphs,
                                    graph_class, read_graph_class, trees)
from abcspectra.graph6 import write_graph6_file
from abcspectra.graphs import (canonical_key, cycle, double_star, make_graph,
                               path, star, star_plus_edge)
from conftest import prufer_tree_classes, subset_connected_classes

# class counts up to isomorphism; 3..8 re-derived by the oracles below,
# the rest frozen from those oracles run offline
TREE_COUNTS = {3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106,
               11: 235, 12: 551, 13: 1301, 14: 3159, 15: 7741, 16: 19320}
CONNECTED_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


class TestTrees:
    def test_counts(self):
        for n, expected in TREE_COUNTS.items():
            assert sum(1 for _ in trees(n)) == expected

    def test_small_orders_against_prufer_oracle(self):
        for n in range(3, 8):
            generated = {canonical_key(t) for t in trees(n)}
            assert generated == prufer_tree_classes(n)

    def test_order8_against_prufer_oracle(self):
        generated = {canonical_key(t) for t in trees(8)}
        assert generated == prufer_tree_classes(8)

    def test_t4_is_star_and_path(self):
        keys = {canonical_key(t) for t in trees(4)}
        assert keys == {canonical_key(star(4)), canonical_key(path(4))}

    def test_every_emission_is_a_tree_without_duplicates(self):
        for n in (9, 12):
            keys = []
            for t in trees(n):
                assert t.n == n and t.is_tree()
                keys.append(canonical_key(t))
            assert len(set(keys)) == len(keys)

    def test_deterministic_order(self):
        assert [t.edges for t in trees(9)] == [t.edges for t in trees(9)]

    def test_range_rejection(self):
        with pytest.raises(ValueError):
            list(trees(2))
        with pytest.raises(ValueError):
            list(trees(17))


class TestConnectedGraphs:
    def test_counts_small(self):
        for n in range(2, 7):
            assert sum(1 for _ in connected_graphs(n)) == CONNECTED_COUNTS[n]

    def test_against_subset_oracle_n4_n5(self):
        for n in (4, 5):
            generated = {canonical_key(g) for g in connected_graphs(n)}
            assert generated == subset_connected_classes(n)

    def test_against_subset_oracle_n6(self):
        generated = {canonical_key(g) for g in connected_graphs(6)}
        assert generated == subset_connected_classes(6)

    def test_trees_are_the_m_equals_n_minus_1_slice(self):
        got = {canonical_key(g) for g in connected_graphs(4, 3)}
        assert got == {canonical_key(star(4)), canonical_key(path(4))}

    def test_union_over_m_matches_full_catalog(self):
        n = 6
        full = [canonical_key(g) for g in connected_graphs(n)]
        pieces = []
        for m in range(n - 1, n * (n - 1) // 2 + 1):
            pieces.extend(canonical_key(g) for g in connected_graphs(n, m))
        assert sorted(pieces) == sorted(full)

    def test_all_emitted_connected_no_duplicates(self):
        keys = []
        for g in connected_graphs(6):
            assert g.connected and g.n == 6
            keys.append(canonical_key(g))
        assert len(set(keys)) == len(keys)

    def test_emitted_in_key_order(self):
        keys = [canonical_key(g) for g in connected_graphs(5)]
        assert keys == sorted(keys)

    def test_range_rejection(self):
        with pytest.raises(ValueError, match="<= 8"):
            list(connected_graphs(9))
        with pytest.raises(ValueError):
            list(connected_graphs(5, 2))


class TestGraphClasses:
    def test_unicyclic_n4(self):
        members = list(graph_class(GraphClassSpec("unicyclic", 4)))
        keys = {canonical_key(g) for g in members}
        assert keys == {canonical_key(cycle(4)), canonical_key(star_plus_edge(4))}

    def test_unicyclic_counts(self):
        # A001429: unicyclic graph counts for n = 4..8
        for n, expected in [(4, 2), (5, 5), (6, 13), (7, 33), (8, 89)]:
            assert len(list(graph_class(GraphClassSpec("unicyclic", n)))) == expected

    def test_max_degree_slices(self):
        for n in (5, 6, 8):
            top = list(graph_class(GraphClassSpec("trees-max-degree", n, delta=n - 1)))
            assert [canonical_key(g) for g in top] == [canonical_key(star(n))]
            second = list(graph_class(GraphClassSpec("trees-max-degree", n, delta=n - 2)))
            assert [canonical_key(g) for g in second] == \
                [canonical_key(double_star(n - 3, 1))]
        for n in range(6, 10):
            third = list(graph_class(GraphClassSpec("trees-max-degree", n, delta=n - 3)))
            assert len(third) == 3

    def test_c_cyclic_slices(self):
        for c in (0, 1, 2):
            for g in graph_class(GraphClassSpec("c-cyclic", 6, c=c)):
                assert g.cycle_rank == c and g.connected

    def test_class_members_satisfy_predicate(self):
        spec = GraphClassSpec("connected", 5, m=6)
        members = list(graph_class(spec))
        assert members and all(spec.matches(g) for g in members)

    def test_spec_validation(self):
        with pytest.raises(ValueError, match="unknown class kind"):
            GraphClassSpec("multigraphs", 5)
        with pytest.raises(ValueError, match="n = 20"):
            GraphClassSpec("connected", 20)
        with pytest.raises(ValueError, match="delta"):
            GraphClassSpec("trees-max-degree", 6, delta=7)
        with pytest.raises(ValueError, match="cycle rank"):
            GraphClassSpec("c-cyclic", 4, c=4)

    def test_label(self):
        assert GraphClassSpec("c-cyclic", 6, c=2).label() == "c-cyclic(n=6, c=2)"


class TestGraph6Ingestion:
    def test_accepts_matching_records(self, tmp_path):
        target = tmp_path / "trees9.g6"
        write_graph6_file(target, list(trees(9)))
        graphs, mismatches = read_graph_class(target, GraphClassSpec("trees", 9))
        assert len(graphs) == TREE_COUNTS[9] and mismatches == []

    def test_reports_mismatches_by_line(self, tmp_path):
        target = tmp_path / "mixed.g6"
        write_graph6_file(target, [cycle(5), path(5), make_graph(5, [(0, 1), (2, 3)])])
        graphs, mismatches = read_graph_class(target, GraphClassSpec("unicyclic", 5))
        assert len(graphs) == 1
        assert [lineno for lineno, _ in mismatches] == [2, 3]
        assert "not in unicyclic(n=5)" in mismatches[0][1]
