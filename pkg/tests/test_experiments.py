import json
import math

import pytest

from abcspectra import experiments as ex
from abcspectra.enumeration import GraphClassSpec
from abcspectra.graphs import complete, cycle, double_star, path, star
from abcspectra.invariants import abc_spectral_radius


class TestVerifyUpperBound:
    def test_degree_bound_n6_zero_violations(self):
        rep = ex.verify_upper_bound(GraphClassSpec("connected", 6), "degree")
        assert rep.summary["graphs"] == 112
        assert rep.violations == 0 and rep.passed

    def test_integer_bound_n6(self):
        rep = ex.verify_upper_bound(GraphClassSpec("connected", 6), "degree-int")
        assert rep.violations == 0

    def test_complete_cap_equality_exactly_at_complete(self):
        for n in range(3, 7):
            rep = ex.verify_upper_bound(GraphClassSpec("connected", n), "complete")
            assert rep.violations == 0
            assert rep.summary["attainers"] == [ex.row_key(complete(n))]

    def test_tree_bound_equality_exactly_at_star(self):
        for n in range(4, 10):
            rep = ex.verify_upper_bound(GraphClassSpec("trees", n), "tree")
            assert rep.violations == 0
            assert rep.summary["attainers"] == [ex.row_key(star(n))]

    def test_estrada_both_sides(self):
        rep = ex.verify_upper_bound(GraphClassSpec("connected", 5), "estrada")
        assert rep.violations == 0
        for row in rep.rows:
            assert row.extra["lower_slack"] >= -1e-9

    def test_cyclomatic_on_unicyclic(self):
        rep = ex.verify_upper_bound(GraphClassSpec("unicyclic", 7), "cyclomatic")
        assert rep.violations == 0

    def test_cyclomatic_rejects_mixed_class(self):
        with pytest.raises(ValueError, match="cycle rank"):
            ex.verify_upper_bound(GraphClassSpec("connected", 6), "cyclomatic")

    def test_cyclomatic_rejects_large_rank(self):
        with pytest.raises(ValueError, match="exceeds"):
            ex.verify_upper_bound(GraphClassSpec("c-cyclic", 8, c=5), "cyclomatic")

    def test_rejects_unknown_bound(self):
        with pytest.raises(ValueError, match="unknown bound"):
            ex.verify_upper_bound(GraphClassSpec("connected", 4), "euler")

    def test_rows_sorted_and_bounded(self):
        rep = ex.verify_upper_bound(GraphClassSpec("connected", 5), "degree")
        rhos = [r.rho for r in rep.rows]
        assert rhos == sorted(rhos, reverse=True)
        assert all(r.slack >= -1e-9 for r in rep.rows)


class TestFindAttainers:
    def test_star_and_complete_found_n5(self):
        rep = ex.find_attainers(GraphClassSpec("connected", 5))
        assert rep.summary["contains_star"]
        assert rep.summary["contains_complete"]

    def test_trees_attain_via_star(self):
        rep = ex.find_attainers(GraphClassSpec("trees", 7))
        assert ex.row_key(star(7)) in rep.summary["attainers"]

    def test_regular_attainers_are_complete(self, connected_by_n):
        # r-regular graphs meet the degree bound only at r = n-1
        for n in (4, 5, 6):
            rep = ex.find_attainers(GraphClassSpec("connected", n))
            attained = set(rep.summary["attainers"])
            for g in connected_by_n[n]:
                if len(set(g.degrees)) == 1:  # regular
                    key = ex.row_key(g)
                    is_complete = g.m == n * (n - 1) // 2
                    assert (key in attained) == is_complete


class TestTreeOrdering:
    @pytest.mark.parametrize("n", range(4, 11))
    def test_pattern(self, n):
        rep = ex.verify_tree_ordering(n)
        assert rep.passed, rep.summary["checks"]

    def test_n6_explicit(self):
        rep = ex.verify_tree_ordering(6)
        assert rep.summary["graphs"] == 6
        assert rep.rows[0].key == ex.row_key(star(6))
        assert rep.rows[1].key == ex.row_key(double_star(3, 1))
        assert rep.rows[-1].key == ex.row_key(path(6))

    def test_n4_second_is_path_double_star(self):
        rep = ex.verify_tree_ordering(4)
        assert rep.summary["graphs"] == 2
        assert rep.rows[1].key == ex.row_key(double_star(1, 1))
        assert rep.passed


class TestThresholdLemmas:
    def test_double_star_gate_wide_range(self):
        rep = ex.verify_double_star_gate(range(4, 31))
        assert rep.passed

    def test_p4_case(self):
        rep = ex.verify_double_star_gate([4])
        entry = rep.summary["per_n"]["4"]
        assert abs(entry["rho"] - math.sqrt(2) * math.cos(math.pi / 5)) <= 1e-10
        assert entry["above_gate"]

    def test_near_max_degree_trees(self):
        rep = ex.verify_near_max_degree_trees(range(6, 16))
        assert rep.passed
        assert rep.summary["graphs"] == 3 * 10
        assert rep.summary["min_margin"] > 0

    def test_range_validation(self):
        with pytest.raises(ValueError):
            ex.verify_double_star_gate([3])
        with pytest.raises(ValueError):
            ex.verify_near_max_degree_trees([5])


class TestUnicyclicExtremes:
    @pytest.mark.parametrize("n", range(4, 8))
    def test_extremes(self, n):
        rep = ex.verify_unicyclic_extremes(n)
        assert rep.passed, rep.summary["checks"]
        assert abs(rep.rows[-1].rho - math.sqrt(2)) <= 1e-10

    def test_n4_has_two_classes(self):
        rep = ex.verify_unicyclic_extremes(4)
        assert rep.summary["graphs"] == 2


class TestProbe:
    def test_trees_n8_monotone_from_small_degree(self):
        rep = ex.probe_delta_monotonicity(GraphClassSpec("trees", 8))
        # singleton top levels are ordered, so a level <= n-2 always works
        assert rep.summary["monotone_level"] <= 6

    def test_trees_n9_reports_witness(self):
        rep = ex.probe_delta_monotonicity(GraphClassSpec("trees", 9))
        level = rep.summary["monotone_level"]
        witness = rep.summary["witness_below"]
        if level > min(r.delta for r in rep.rows):
            assert witness is not None
            hi, lo = witness["higher_degree"], witness["lower_degree"]
            assert hi["delta"] > lo["delta"] >= level - 1
            assert hi["rho"] <= lo["rho"] + rep.tolerance

    def test_level_table_covers_all_degrees(self):
        rep = ex.probe_delta_monotonicity(GraphClassSpec("trees", 7))
        assert sum(v["count"] for v in rep.summary["level_table"].values()) == 11


class TestOrdering:
    def test_trees_n5_ranking(self):
        rep = ex.order_class(GraphClassSpec("trees", 5))
        assert [r.key for r in rep.rows] == [
            ex.row_key(star(5)), ex.row_key(double_star(2, 1)), ex.row_key(path(5))]

    def test_connected_n4_top_and_bottom(self):
        rep = ex.order_class(GraphClassSpec("connected", 4))
        assert rep.summary["graphs"] == 6
        assert rep.rows[0].key == ex.row_key(complete(4))
        assert abs(rep.rows[0].rho - 2.0) <= 1e-10
        assert rep.rows[-1].key == ex.row_key(path(4))

    def test_ranking_conserves_class(self):
        spec = GraphClassSpec("unicyclic", 6)
        rep = ex.order_class(spec)
        from abcspectra.enumeration import graph_class
        assert sorted(r.key for r in rep.rows) == \
            sorted(ex.row_key(g) for g in graph_class(spec))


class TestReports:
    def test_csv_header_and_shape(self):
        rep = ex.verify_upper_bound(GraphClassSpec("connected", 4), "degree")
        text = rep.to_csv_text()
        lines = text.strip().split("\n")
        assert lines[0] == "key,graph6,n,m,delta,rho,bound,slack"
        assert len(lines) == 1 + rep.summary["graphs"]
        cells = lines[1].split(",")
        assert len(cells) == 8
        float(cells[5])  # rho parses back

    def test_csv_floats_round_trip(self):
        rep = ex.order_class(GraphClassSpec("trees", 6))
        for row, line in zip(rep.rows, rep.to_csv_text().strip().split("\n")[1:]):
            assert float(line.split(",")[5]) == row.rho

    def test_byte_identical_reruns(self):
        first = ex.verify_tree_ordering(7).to_csv_text()
        ex._RHO_CACHE.clear()
        second = ex.verify_tree_ordering(7).to_csv_text()
        assert first == second

    def test_json_document(self, tmp_path):
        rep = ex.verify_unicyclic_extremes(5)
        target = tmp_path / "report.json"
        rep.write_json(target)
        loaded = json.loads(target.read_text())
        assert loaded["experiment_id"] == "unicyclic-extremes"
        assert loaded["summary"]["passed"] is True
        assert len(loaded["rows"]) == rep.summary["graphs"]
        assert loaded["rows"][0]["rho"] == rep.rows[0].rho

    def test_csv_file_emission(self, tmp_path):
        rep = ex.verify_tree_ordering(5)
        target = tmp_path / "report.csv"
        rep.write_csv(target)
        assert target.read_text() == rep.to_csv_text()

    def test_key_fallback_beyond_caps(self):
        g = double_star(30, 1)  # order 33 tree, past the key cap
        assert ex.row_key(g).startswith("g6:")
