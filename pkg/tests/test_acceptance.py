"""Acceptance suite: one test per criterion, in order, with a printed
pass/fail line each.  Tolerances are exact (integer counts, exact rational
equalities) except the stated wall-clock budgets.

Criterion 4's census count is asserted at the published value of 8 and is
expected to fail: the solver finds, and exactly verifies, nine
pairwise-inequivalent optimal retracted covers of K3,3 (see
notes/decisions.md outside the package for the full analysis).
"""

import math
import time

import pytest

from oracles import (brute_force_weighting, connected_multigraph_battery,
                     verify_cover_with_weights)
from geocover.cover import find_covers
from geocover.driver import (SearchConfig, cover_number,
                             distinct_optimal_covers, lower_bound, upper_bound)
from geocover.lp import build_feasibility_program, solve_feasibility
from geocover.multigraph import build_standard
from geocover.paths import PathPool
from geocover.subdivision import two_subdivision
from geocover.tripleconfig import (GROUP1_DISTINCT_ADMISSIBLE,
                                   GROUP2_ADMISSIBLE_LABELS,
                                   OrientedPathSystem,
                                   compatible_orientation_two, enumerate_group,
                                   system_feasible)

CFG = SearchConfig()

_reports = {}


def _record(name, report):
    _reports[name] = report
    return report


def _line(num, ok, text):
    print(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'} - {text}")
    assert ok, text


class TestAcceptance:
    def test_criterion_01_k4(self):
        t0 = time.monotonic()
        rep = _record("k4", cover_number(build_standard("complete", [4]), cfg=CFG))
        dt = time.monotonic() - t0
        _line(1, rep.cover_number == 4 and dt <= 300,
              f"cover_number(K4) = {rep.cover_number} (want 4) in {dt:.1f}s (budget 300s)")

    def test_criterion_02_k23(self):
        t0 = time.monotonic()
        rep = _record("k23", cover_number(
            build_standard("complete_bipartite", [2, 3]), cfg=CFG))
        dt = time.monotonic() - t0
        _line(2, rep.cover_number == 3 and dt <= 600,
              f"cover_number(K2,3) = {rep.cover_number} (want 3) in {dt:.1f}s (budget 600s)")

    def test_criterion_03_k5_census(self):
        t0 = time.monotonic()
        rep = _record("k5", distinct_optimal_covers(
            build_standard("complete", [5]), cfg=CFG))
        dt = time.monotonic() - t0
        _line(3, rep.cover_number == 4 and rep.distinct_count == 3 and dt <= 3600,
              f"cover_number(K5) = {rep.cover_number} (want 4), "
              f"distinct classes = {rep.distinct_count} (want 3), "
              f"in {dt:.1f}s (budget 3600s)")

    def test_criterion_04_k33_census(self):
        t0 = time.monotonic()
        rep = _record("k33", distinct_optimal_covers(
            build_standard("complete_bipartite", [3, 3]), cfg=CFG))
        dt = time.monotonic() - t0
        _line(4, rep.cover_number == 4 and rep.distinct_count == 8 and dt <= 3600,
              f"cover_number(K3,3) = {rep.cover_number} (want 4), "
              f"distinct classes = {rep.distinct_count} (published value 8; "
              f"every one of this solver's classes verifies exactly and each "
              f"published cover matches one of them, so a count of 9 means "
              f"the published census missed a class), in {dt:.1f}s")

    def test_criterion_05_k5_unweighted(self):
        rep = _record("k5u", cover_number(
            build_standard("complete", [5]), "unweighted", CFG))
        _line(5, rep.cover_number == 5,
              f"unweighted cover_number(K5) = {rep.cover_number} (want 5)")

    def test_criterion_06_caterpillar_sawtooth(self):
        results = []
        ok = True
        for n in (1, 2, 3):
            rep = _record(f"cat{n}", cover_number(
                build_standard("caterpillar", [n]), cfg=CFG))
            want = math.ceil((n + 1) / 2)
            ok &= rep.cover_number == want
            results.append(f"caterpillar({n})={rep.cover_number}/{want}")
        for n in (2, 3):
            w = _record(f"saw{n}", cover_number(
                build_standard("sawtooth", [n]), cfg=CFG))
            u = _record(f"saw{n}u", cover_number(
                build_standard("sawtooth", [n]), "unweighted", CFG))
            ok &= w.cover_number == 2 and u.cover_number == n
            results.append(f"sawtooth({n})={w.cover_number}/2,{u.cover_number}/{n}")
        _line(6, ok, " ".join(results))

    def test_criterion_07_appendix_b(self):
        t0 = time.monotonic()
        res1 = enumerate_group(1)
        distinct = {cfg.index for cfg, a in res1 if a and not cfg.identifications}
        ef = {cfg.index for cfg, a in res1 if a and cfg.identifications}
        g1_ok = (distinct == set(GROUP1_DISTINCT_ADMISSIBLE)
                 and 9 in ef and not ef & {1, 2, 3, 4, 16, 17, 20, 21})
        res2 = enumerate_group(2)
        got = {cfg.case_labels for cfg, a in res2 if a}
        g2_ok = len(res2) == 108 and got == set(GROUP2_ADMISSIBLE_LABELS)
        from geocover.cli import main
        diff_ok = main(["appendix-b", "--group", "1", "--diff-paper",
                        "--output", "/dev/null"]) == 0 and \
            main(["appendix-b", "--group", "2", "--diff-paper",
                  "--output", "/dev/null"]) == 0
        dt = time.monotonic() - t0
        _line(7, g1_ok and g2_ok and diff_ok and dt <= 600,
              f"group 1 distinct admissible {sorted(distinct)} (want [6,7,12,14]), "
              f"e=f admissible {sorted(ef)} (must include 9, exclude the "
              f"contradiction rows), group 2 admissible {len(got)}/7 cases, "
              f"diff-paper exit 0: {diff_ok}, in {dt:.1f}s (budget 600s)")

    def test_criterion_08_witness_soundness(self):
        # every feasible cover produced while running criteria 1-6; entries
        # recompute on demand if an earlier criterion was filtered out
        thunks = {
            "k4": lambda: cover_number(build_standard("complete", [4]), cfg=CFG),
            "k23": lambda: cover_number(
                build_standard("complete_bipartite", [2, 3]), cfg=CFG),
            "k5": lambda: distinct_optimal_covers(
                build_standard("complete", [5]), cfg=CFG),
            "k5u": lambda: cover_number(
                build_standard("complete", [5]), "unweighted", CFG),
            "cat1": lambda: cover_number(build_standard("caterpillar", [1]), cfg=CFG),
            "cat2": lambda: cover_number(build_standard("caterpillar", [2]), cfg=CFG),
            "cat3": lambda: cover_number(build_standard("caterpillar", [3]), cfg=CFG),
            "saw2": lambda: cover_number(build_standard("sawtooth", [2]), cfg=CFG),
            "saw3": lambda: cover_number(build_standard("sawtooth", [3]), cfg=CFG),
            "saw2u": lambda: cover_number(
                build_standard("sawtooth", [2]), "unweighted", CFG),
            "saw3u": lambda: cover_number(
                build_standard("sawtooth", [3]), "unweighted", CFG),
        }
        checked = 0
        ok = True
        for name, thunk in thunks.items():
            rep = _reports.get(name) or _record(name, thunk())
            for wit in rep.witnesses:
                checked += 1
                ok &= wit.verify(rep.subdivision)
        _line(8, ok and checked >= 11,
              f"{checked} witnesses re-verified by exact shortest-path equality")

    def test_criterion_09_oracle_equivalence(self):
        battery = connected_multigraph_battery(max_vertices=4, max_edges=5)
        graphs = scanned = agreed = 0
        for g in battery:
            sub = two_subdivision(g)
            pool = PathPool(sub)
            covers = find_covers(sub, pool, min(3, max(1, upper_bound(g))))
            sample = covers[:4] + covers[-4:] if len(covers) > 8 else covers
            graphs += 1
            budget = 2  # full grid scans per graph, they prove emptiness
            for c in dict.fromkeys(sample):
                res = solve_feasibility(build_feasibility_program(c, pool, sub))
                if res.feasible:
                    assert verify_cover_with_weights(c, res.witness, pool, sub), \
                        (g.edges, c)
                    agreed += 1
                elif budget > 0:
                    budget -= 1
                    scanned += 1
                    w = brute_force_weighting(c, pool, sub)
                    assert w is None, \
                        f"LP infeasible but grid found {w}: {g.edges} {c}"
                    agreed += 1
        two_path_checked = 0
        import itertools
        for k in range(0, 5):
            shared = tuple(f"s{i}" for i in range(k))
            first = ("h0", *shared, "h1")
            for perm in (itertools.permutations(shared) if k else [()]):
                sys2 = OrientedPathSystem((first, ("t0", *perm, "t1")))
                compat = compatible_orientation_two(sys2) is not None
                assert system_feasible(sys2) == compat, sys2.paths
                two_path_checked += 1
        _line(9, graphs == len(battery) and two_path_checked == 34,
              f"{graphs} multigraphs, {agreed} cover verdicts cross-checked "
              f"({scanned} full grid scans), {two_path_checked} two-path "
              f"systems: orientation compatibility == LP feasibility")

    def test_criterion_10_bounds(self):
        ok = True
        details = []
        battery = [build_standard(t, p) for t, p in [
            ("complete", [4]), ("complete_bipartite", [2, 3]),
            ("path", [3]), ("cycle", [3]), ("caterpillar", [2]),
            ("sawtooth", [2]),
        ]]
        for g in battery:
            rep = cover_number(g, cfg=CFG)
            ok &= lower_bound(g) <= rep.cover_number <= upper_bound(g)
        for n in (2, 3, 4, 5):
            g = build_standard("star", [n])
            rep = cover_number(g, cfg=CFG)
            ok &= rep.cover_number == math.ceil(n / 2)
            ok &= lower_bound(g) <= rep.cover_number <= upper_bound(g)
            details.append(f"K_1,{n}={rep.cover_number}")
        _line(10, ok, "bounds bracket every battery result; " + " ".join(details))

    def test_extended_cover_witness(self):
        # hand-built two-geodesic cover of the caterpillar inside a larger
        # space: spine weights 3, pendant and top edges 1; the bottom path
        # and the zigzag both measure 9 and verify as shortest paths
        from geocover.multigraph import Multigraph
        from geocover.metrics import make_weighting
        from geocover.lp import check_fixed_weights
        from geocover.paths import PathSeq
        from geocover.rational import Q
        # vertices: spine v1..v4 (0..3), pendants u1..u4 (4..7)
        edges = [(0, 1), (1, 2), (2, 3),             # spine
                 (0, 4), (1, 5), (2, 6), (3, 7),     # pendants
                 (4, 5), (6, 7)]                     # added top edges
        y = Multigraph(8, tuple(edges),
                       ("v1", "v2", "v3", "v4", "u1", "u2", "u3", "u4"))
        sub = two_subdivision(y)
        pool = PathPool(sub)
        w = []
        for eid in range(len(edges)):
            full = Q(3) if eid < 3 else Q(1)
            w.extend([full / 2, full / 2])
        w = make_weighting(w)

        def lift(vertex_ids):
            vs = [vertex_ids[0]]
            es = []
            for u, v in zip(vertex_ids, vertex_ids[1:]):
                eid = next(e for (x, e) in y.adjacency[u] if x == v)
                vs.extend([sub.midpoint_of(eid), v])
                s0, s1 = sub.segment_pair_of(eid)
                es.extend([s0, s1] if y.edges[eid][0] == u else [s1, s0])
            return pool.id_of(PathSeq.canonical(vs, es))

        bottom = lift([0, 1, 2, 3])
        zigzag = lift([0, 4, 5, 1, 2, 6, 7, 3])
        ok = check_fixed_weights((bottom, zigzag), w, pool, sub)
        print(f"extended-cover witness: {'PASS' if ok else 'FAIL'} - "
              f"caterpillar zigzag construction with weights 1 and 3")
        assert ok
