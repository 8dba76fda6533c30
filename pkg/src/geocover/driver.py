"""Cover-number computation: bounds, size iteration, search + LP, census.

The smallest M admitting a feasible retracted cover with endpoints at
2-subdivision vertices is the metric geodesic cover number.  M runs upward
from the degree/leaf lower bound; within one M candidates are tested in
deterministic order and the search stops at the first feasible cover, while
the census of distinct optima exhausts all candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cover import (DEFAULT_NODE_BUDGET, DEFAULT_VISIT_BUDGET, find_covers,
                    is_minimal_in_reroutings, is_minimal_in_symmetries,
                    path_permutation)
from .errors import BudgetExceededError, InvalidParameterError, SizeGuardError
from .lp import build_feasibility_program, check_fixed_weights, solve_feasibility
from .metrics import path_length, shortest_path_length, unit_weighting
from .multigraph import Multigraph, automorphisms
from .paths import DEFAULT_POOL_CAP, PathPool, PathSeq
from .rational import Q
from .simplex import DEFAULT_PIVOT_BUDGET
from .subdivision import SubdividedGraph, lift_automorphism, two_subdivision

WEIGHTED = "weighted"
UNWEIGHTED = "unweighted"


@dataclass(frozen=True)
class SearchConfig:
    max_m: int | None = None
    node_budget: int = DEFAULT_NODE_BUDGET
    pivot_budget: int = DEFAULT_PIVOT_BUDGET
    pool_cap: int = DEFAULT_POOL_CAP
    visit_budget: int = DEFAULT_VISIT_BUDGET
    dedup_symmetry: bool = True
    dedup_rerouting: bool = True
    automorphism_guard: int = 16


@dataclass(frozen=True)
class CoverWitness:
    """A feasible cover with a certifying weighting, on the graph's own
    2-subdivision."""
    paths: tuple[PathSeq, ...]
    weighting: tuple

    def verify(self, sub: SubdividedGraph) -> bool:
        return all(
            path_length(p, self.weighting)
            == shortest_path_length(sub, self.weighting, *p.endpoints)
            for p in self.paths
        )


@dataclass(frozen=True)
class CoverNumberReport:
    graph: Multigraph
    subdivision: SubdividedGraph
    mode: str
    cover_number: int
    bounds_used: tuple[int, int]
    witnesses: tuple[CoverWitness, ...]
    distinct_count: int | None = None


def lower_bound(g: Multigraph) -> int:
    """max(ceil(maxdeg/2), ceil(#degree-1 vertices / 2), 1)."""
    if g.num_vertices == 0:
        raise InvalidParameterError("lower_bound of empty graph")
    return max(
        math.ceil(g.max_degree / 2),
        math.ceil(g.degree_one_count() / 2),
        1,
    )


def upper_bound(g: Multigraph) -> int:
    """Edge count plus one extra per isolated self-loop."""
    return g.num_edges + g.isolated_loop_count()


def _unit_geodesic_ids(pool: PathPool, sub: SubdividedGraph) -> list[int]:
    w = unit_weighting(sub.num_segments)
    dist_cache: dict[int, list] = {}
    keep = []
    for i, p in enumerate(pool.paths):
        u, v = p.endpoints
        if u not in dist_cache:
            from .metrics import dijkstra
            dist_cache[u] = dijkstra(sub.graph, w, u)
        if path_length(p, w) == dist_cache[u][v]:
            keep.append(i)
    return keep


class _ComponentSolver:
    """Search state for one connected graph (no decomposition)."""

    def __init__(self, g: Multigraph, mode: str, cfg: SearchConfig):
        self.g = g
        self.mode = mode
        self.cfg = cfg
        self.sub = two_subdivision(g)
        full_pool = PathPool(self.sub, cap=cfg.pool_cap)
        if mode == UNWEIGHTED:
            self.pool = full_pool.restrict(_unit_geodesic_ids(full_pool, self.sub))
        else:
            self.pool = full_pool
        self.lb = lower_bound(g)
        self.ub = upper_bound(g) if cfg.max_m is None else cfg.max_m
        self.path_perms = None
        self.min_path_reps = None
        if cfg.dedup_symmetry:
            try:
                group = automorphisms(g, cfg.automorphism_guard)
            except SizeGuardError:
                group = None  # too large to dedup; search completely instead
            if group is not None:
                lifted = [lift_automorphism(a, self.sub) for a in group]
                self.path_perms = [path_permutation(a, self.pool) for a in lifted]
                # ids minimal in their own path orbit; the lowest path of any
                # symmetry-minimal cover is one, so rooting the search there
                # keeps every canonical cover
                self.min_path_reps = [
                    pid for pid in range(len(self.pool))
                    if all(perm[pid] >= pid for perm in self.path_perms)
                ]

    def feasibility(self, cover):
        """(feasible, weighting-or-None) for one candidate cover."""
        if self.mode == UNWEIGHTED:
            # pool is pre-restricted to unit geodesics, so coverage+retracted
            # candidates are feasible by construction
            return True, unit_weighting(self.sub.num_segments)
        program = build_feasibility_program(cover, self.pool, self.sub)
        res = solve_feasibility(program, self.cfg.pivot_budget)
        return res.feasible, res.witness

    def covers_of_size(self, m: int):
        covers = find_covers(self.sub, self.pool, m, self.cfg.node_budget,
                             min_path_candidates=self.min_path_reps)
        return [c for c in covers if len(c) == m]

    def solve(self):
        """(cover number, first feasible cover, weighting, covers at opt M)."""
        for m in range(self.lb, self.ub + 1):
            try:
                candidates = self.covers_of_size(m)
            except BudgetExceededError as exc:
                raise BudgetExceededError(str(exc), bracket=(m, self.ub)) from exc
            for c in candidates:
                if self.path_perms is not None and not is_minimal_in_symmetries(
                        c, self.path_perms):
                    continue
                ok, w = self.feasibility(c)
                if ok:
                    return m, c, w, candidates
        raise BudgetExceededError(
            f"no feasible cover up to size {self.ub}", bracket=(self.ub + 1, self.ub))

    def witness_from(self, c, w) -> CoverWitness:
        return CoverWitness(tuple(self.pool.paths[i] for i in c), tuple(w))

    def census(self):
        """All distinct optimal covers after symmetry+rerouting dedup.

        Each filter is a per-cover property, so feasibility may run before
        the rerouting-minimality BFS without changing the census; it is far
        cheaper that way.
        """
        m, _, _, candidates = self.solve()
        if self.path_perms is not None:
            candidates = [c for c in candidates
                          if is_minimal_in_symmetries(c, self.path_perms)]
        pairs = []
        for c in candidates:
            ok, w = self.feasibility(c)
            if ok:
                pairs.append((c, w))
        if self.cfg.dedup_rerouting:
            disqualified: set = set()
            kept = []
            for c, w in pairs:
                if c in disqualified:
                    continue
                if is_minimal_in_reroutings(c, self.pool, self.sub,
                                            self.cfg.visit_budget, disqualified):
                    kept.append((c, w))
            pairs = kept
        return m, pairs


def cover_number(g: Multigraph, mode: str = WEIGHTED,
                 cfg: SearchConfig = SearchConfig()) -> CoverNumberReport:
    """Smallest size of a feasible retracted cover; includes one witness.

    Disconnected graphs decompose: geodesics cannot cross components, so the
    cover number is the sum over components (edgeless components need no
    geodesics).
    """
    if mode not in (WEIGHTED, UNWEIGHTED):
        raise InvalidParameterError(f"unknown mode {mode!r}")
    sub_full = two_subdivision(g)
    comps = g.components()
    total = 0
    lb_total = 0
    ub_total = 0
    merged_paths: list[PathSeq] = []
    merged_w: list = [Q(1)] * sub_full.num_segments
    for comp in comps:
        comp_g, edge_map = g.subgraph(comp)
        if comp_g.num_edges == 0:
            continue
        solver = _ComponentSolver(comp_g, mode, cfg)
        lb_total += solver.lb
        ub_total += solver.ub
        try:
            m, c, w, _ = solver.solve()
        except BudgetExceededError as exc:
            lo, hi = exc.bracket if exc.bracket else (solver.lb, solver.ub)
            raise BudgetExceededError(
                str(exc), bracket=(total + lo, total + hi)) from exc
        total += m
        for pid in c:
            merged_paths.append(
                _remap_path(solver.pool.paths[pid], comp, edge_map, solver.sub, sub_full))
        for eid_comp, eid_full in enumerate(edge_map):
            merged_w[2 * eid_full] = w[2 * eid_comp]
            merged_w[2 * eid_full + 1] = w[2 * eid_comp + 1]
    witness = CoverWitness(tuple(merged_paths), tuple(merged_w))
    return CoverNumberReport(
        graph=g, subdivision=sub_full, mode=mode, cover_number=total,
        bounds_used=(lb_total, ub_total), witnesses=(witness,))


def _remap_path(p: PathSeq, comp_vertices, edge_map, comp_sub: SubdividedGraph,
                full_sub: SubdividedGraph) -> PathSeq:
    nc = comp_sub.origin.num_vertices
    nf = full_sub.origin.num_vertices

    def vmap(v: int) -> int:
        return comp_vertices[v] if v < nc else nf + edge_map[v - nc]

    vs = [vmap(v) for v in p.vertices]
    es = [2 * edge_map[s // 2] + s % 2 for s in p.edge_ids]
    return PathSeq.canonical(vs, es)


def distinct_optimal_covers(g: Multigraph, mode: str = WEIGHTED,
                            cfg: SearchConfig = SearchConfig()) -> CoverNumberReport:
    """Census of optimal covers up to graph symmetry and geodesic rerouting.

    Requires a connected graph.  Every witness re-verifies under its own
    weighting; the count is the number of equivalence-class representatives
    that remain feasible.
    """
    if len(g.components()) != 1:
        raise InvalidParameterError("distinct-cover census requires a connected graph")
    solver = _ComponentSolver(g, mode, cfg)
    m, pairs = solver.census()
    witnesses = tuple(solver.witness_from(c, w) for c, w in pairs)
    return CoverNumberReport(
        graph=g, subdivision=solver.sub, mode=mode, cover_number=m,
        bounds_used=(solver.lb, solver.ub), witnesses=witnesses,
        distinct_count=len(witnesses))
