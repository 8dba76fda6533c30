import math

import pytest

from geocover.driver import (SearchConfig, cover_number, distinct_optimal_covers,
                             lower_bound, upper_bound)
from geocover.errors import BudgetExceededError, InvalidParameterError
from geocover.multigraph import Multigraph, build_standard

FAST = SearchConfig()


class TestBounds:
    def test_k5_lower(self):
        assert lower_bound(build_standard("complete", [5])) == 2

    def test_star_lower(self):
        assert lower_bound(build_standard("star", [5])) == 3

    def test_caterpillar_lower(self):
        assert lower_bound(build_standard("caterpillar", [3])) == 2

    def test_k4_upper(self, k4):
        assert upper_bound(k4) == 6

    def test_isolated_loop_upper(self):
        assert upper_bound(Multigraph(1, ((0, 0),))) == 2

    def test_empty_upper(self):
        assert upper_bound(Multigraph(3, ())) == 0


class TestCoverNumber:
    def test_k4(self, k4):
        rep = cover_number(k4, cfg=FAST)
        assert rep.cover_number == 4
        assert rep.bounds_used[0] <= 4 <= rep.bounds_used[1]
        assert rep.witnesses[0].verify(rep.subdivision)

    def test_k23(self):
        rep = cover_number(build_standard("complete_bipartite", [2, 3]), cfg=FAST)
        assert rep.cover_number == 3
        assert rep.witnesses[0].verify(rep.subdivision)

    def test_single_edge(self):
        rep = cover_number(build_standard("path", [1]), cfg=FAST)
        assert rep.cover_number == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_caterpillar_formula(self, n):
        rep = cover_number(build_standard("caterpillar", [n]), cfg=FAST)
        assert rep.cover_number == math.ceil((n + 1) / 2)

    @pytest.mark.parametrize("n", [2, 3])
    def test_sawtooth_weighted_two(self, n):
        rep = cover_number(build_standard("sawtooth", [n]), cfg=FAST)
        assert rep.cover_number == 2

    @pytest.mark.parametrize("n", [2, 3])
    def test_sawtooth_unweighted_n(self, n):
        rep = cover_number(build_standard("sawtooth", [n]), "unweighted", FAST)
        assert rep.cover_number == n

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_star_formula(self, n):
        rep = cover_number(build_standard("star", [n]), cfg=FAST)
        assert rep.cover_number == math.ceil(n / 2)

    def test_isolated_loop(self):
        rep = cover_number(Multigraph(1, ((0, 0),)), cfg=FAST)
        assert rep.cover_number == 2

    def test_disconnected_sums(self):
        g = Multigraph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)))
        rep = cover_number(g, cfg=FAST)
        assert rep.cover_number == 4
        assert rep.witnesses[0].verify(rep.subdivision)

    def test_edgeless_component_ignored(self):
        g = Multigraph(3, ((0, 1),))
        rep = cover_number(g, cfg=FAST)
        assert rep.cover_number == 1

    def test_unknown_mode(self, k4):
        with pytest.raises(InvalidParameterError):
            cover_number(k4, "floating")

    def test_budget_exhaustion_reports_bracket(self, k4):
        with pytest.raises(BudgetExceededError) as exc:
            cover_number(k4, cfg=SearchConfig(node_budget=40))
        assert exc.value.bracket is not None
        lo, hi = exc.value.bracket
        assert lo <= 4 <= hi

    def test_dedup_toggles_do_not_change_verdict(self, k4):
        plain = cover_number(k4, cfg=SearchConfig(dedup_symmetry=False))
        assert plain.cover_number == 4

    @pytest.mark.parametrize("tag,params", [
        ("path", [3]), ("cycle", [3]), ("star", [3]),
        ("caterpillar", [2]), ("sawtooth", [2]), ("complete", [4]),
    ])
    def test_weighted_at_most_unweighted_and_bounds(self, tag, params):
        g = build_standard(tag, params)
        w = cover_number(g, cfg=FAST)
        u = cover_number(g, "unweighted", FAST)
        assert w.cover_number <= u.cover_number
        for rep in (w, u):
            assert lower_bound(g) <= rep.cover_number <= upper_bound(g)


class TestCensus:
    def test_p2_single_class(self):
        rep = distinct_optimal_covers(build_standard("path", [1]), cfg=FAST)
        assert rep.distinct_count == 1

    def test_triangle_classes(self):
        rep = distinct_optimal_covers(build_standard("cycle", [3]), cfg=FAST)
        assert rep.cover_number == 2
        assert rep.distinct_count >= 1
        for wit in rep.witnesses:
            assert wit.verify(rep.subdivision)

    def test_k4_census_verifies(self, k4):
        rep = distinct_optimal_covers(k4, cfg=FAST)
        assert rep.cover_number == 4
        assert rep.distinct_count == len(rep.witnesses) > 0
        for wit in rep.witnesses:
            assert wit.verify(rep.subdivision)

    def test_disconnected_rejected(self):
        g = Multigraph(4, ((0, 1), (2, 3)))
        with pytest.raises(InvalidParameterError):
            distinct_optimal_covers(g, cfg=FAST)


class TestGuards:
    def test_symmetry_guard_degrades_gracefully(self):
        # 18 vertices exceeds the automorphism guard; the search must still
        # run (completely, without dedup) and get the right answer
        g = build_standard("path", [17])
        rep = cover_number(g, cfg=SearchConfig())
        assert rep.cover_number == 1

    def test_label_collision_rejected(self):
        g = Multigraph(3, ((0, 1),), ("a", "b", "a-b"))
        with pytest.raises(InvalidParameterError):
            cover_number(g, cfg=FAST)
