"""Geodesic-feasibility linear programs over exact rationals.

A candidate cover is realizable as a geodesic cover iff some weighting
w >= 1 per segment makes every cover path at most as long as every other
pool path between the same endpoints.  The program carries one variable per
segment, homogeneous rows sum(g) - sum(p) <= 0, and the nominal objective
min sum(w); only feasibility is ever used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .metrics import path_length, shortest_path_length
from .paths import PathPool
from .rational import Q
from .simplex import DEFAULT_PIVOT_BUDGET, feasible_point
from .subdivision import SubdividedGraph


@dataclass(frozen=True)
class LPProgram:
    num_vars: int
    # row = ({segment index: integer coefficient}, rhs); lhs <= rhs over w
    rows: tuple[tuple[dict, int], ...]
    lower_bound: int = 1
    objective: str = "min_sum"

    def __post_init__(self):
        for coeffs, _ in self.rows:
            for j in coeffs:
                if not (0 <= j < self.num_vars):
                    raise ValueError(f"constraint references variable {j} out of range")

    def row_satisfied(self, row, w) -> bool:
        coeffs, rhs = row
        total = Q(0)
        for j, a in coeffs.items():
            total += a * w[j]
        return total <= rhs


@dataclass(frozen=True)
class FeasibilityResult:
    status: str  # "feasible" | "infeasible"
    witness: tuple | None = None

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


def build_feasibility_program(cover, pool: PathPool, sub: SubdividedGraph) -> LPProgram:
    """One row per (cover path g, other pool path p with g's endpoint pair).

    Shared segments cancel, so coefficients are +1 on segments private to g
    and -1 on segments private to p.
    """
    rows = []
    for pid in cover:
        g = pool.paths[pid]
        for qid in pool.competitors(pid):
            if qid == pid:
                continue
            p = pool.paths[qid]
            coeffs: dict[int, int] = {}
            for s in g.edge_ids:
                coeffs[s] = coeffs.get(s, 0) + 1
            for s in p.edge_ids:
                coeffs[s] = coeffs.get(s, 0) - 1
            coeffs = {s: a for s, a in coeffs.items() if a != 0}
            rows.append((coeffs, 0))
    return LPProgram(sub.num_segments, tuple(rows))


def solve_feasibility(program: LPProgram,
                      pivot_budget: int = DEFAULT_PIVOT_BUDGET) -> FeasibilityResult:
    """Exact verdict with a rational witness when feasible.

    Rows are activated lazily: a candidate witness from the active subsystem
    is checked against every row of the full program, violated rows join the
    active set, and the loop repeats.  Infeasibility of the active subsystem
    already implies infeasibility of the whole program, and any returned
    witness satisfies every row exactly, so the verdict is exact either way.
    """
    nv = program.num_vars
    lb = Q(program.lower_bound)

    def shifted(row):
        # substitute w = x + lb so the solver sees x >= 0
        coeffs, rhs = row
        return (coeffs, Q(rhs) - sum(Q(a) * lb for a in coeffs.values()))

    active: set[int] = set()
    active_rows: list = []
    while True:
        x = feasible_point(active_rows, nv, pivot_budget)
        if x is None:
            return FeasibilityResult("infeasible")
        w = tuple(xi + lb for xi in x)
        new = [i for i, row in enumerate(program.rows)
               if i not in active and not program.row_satisfied(row, w)]
        if not new:
            return FeasibilityResult("feasible", w)
        active.update(new)
        active_rows.extend(shifted(program.rows[i]) for i in new)


def check_fixed_weights(cover, w, pool: PathPool, sub: SubdividedGraph) -> bool:
    """True iff every cover path is a shortest path under the given weights."""
    for pid in cover:
        p = pool.paths[pid]
        u, v = p.endpoints
        if path_length(p, w) != shortest_path_length(sub, w, u, v):
            return False
    return True


def path_is_shortest(p, w, sub: SubdividedGraph) -> bool:
    u, v = p.endpoints
    return path_length(p, w) == shortest_path_length(sub, w, u, v)
