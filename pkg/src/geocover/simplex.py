"""Exact-rational feasibility test for systems  A x <= b,  x >= 0.

Dictionary-based two-phase simplex with Bland's anti-cycling rule.  Only a
feasible point is wanted, never an optimum, so phase one is the whole
algorithm: its auxiliary objective is maximized and any basis with auxiliary
value zero is returned immediately.
"""

from __future__ import annotations

from .errors import BudgetExceededError
from .rational import Q

DEFAULT_PIVOT_BUDGET = 200_000


def feasible_point(rows, num_vars: int, pivot_budget: int = DEFAULT_PIVOT_BUDGET):
    """Return x >= 0 (list of rationals) satisfying every row, or None.

    rows: iterable of (coeffs, rhs) with coeffs a {var index: int} mapping.
    """
    m = len(rows)
    if m == 0:
        return [Q(0)] * num_vars

    # Dictionary: basic[i] = var id of row i;  x_basic[i] = const[i] +
    # sum(coef[i][j] * x_nonbasic[j]).  Slacks are vars n..n+m-1, the
    # auxiliary variable (if needed) is var n+m.
    n = num_vars
    nonbasic = list(range(n))
    basic = [n + i for i in range(m)]
    const = []
    coef = []
    need_aux = False
    for coeffs, rhs in rows:
        b = Q(rhs)
        if not coeffs and b < 0:
            return None
        row = [Q(0)] * n
        for j, a in coeffs.items():
            row[j] -= Q(a)
        const.append(b)
        coef.append(row)
        if b < 0:
            need_aux = True

    def extract():
        x = [Q(0)] * n
        for i, var in enumerate(basic):
            if var < n:
                x[var] = const[i]
        return x

    if not need_aux:
        return extract()

    aux = n + m
    nonbasic.append(aux)
    for row in coef:
        row.append(Q(1))
    # objective: maximize z = -aux
    obj = [Q(0)] * len(nonbasic)
    obj[-1] = Q(-1)
    obj_const = Q(0)

    def pivot(ir: int, jc: int):
        nonlocal obj_const
        piv = coef[ir][jc]
        enter, leave = nonbasic[jc], basic[ir]
        # solve row ir for the entering variable
        inv = Q(1) / piv
        new_row = [-c * inv for c in coef[ir]]
        new_row[jc] = inv
        new_const = -const[ir] * inv
        coef[ir] = new_row
        const[ir] = new_const
        basic[ir], nonbasic[jc] = enter, leave
        for i in range(m):
            if i == ir:
                continue
            a = coef[i][jc]
            if a == 0:
                continue
            coef[i][jc] = Q(0)
            const[i] += a * new_const
            row = coef[i]
            for j, val in enumerate(new_row):
                if val != 0:
                    row[j] += a * val
        a = obj[jc]
        if a != 0:
            obj[jc] = Q(0)
            obj_const += a * new_const
            for j, val in enumerate(new_row):
                if val != 0:
                    obj[j] += a * val

    # First pivot: bring the auxiliary variable in at the most negative row.
    ir0 = min(range(m), key=lambda i: (const[i], basic[i]))
    pivot(ir0, len(nonbasic) - 1)

    pivots = 1
    while True:
        if obj_const == 0:
            # auxiliary already zero at this basis: feasible
            return extract()
        # Bland: entering = smallest var id with positive objective coefficient
        jc = -1
        best_var = None
        for j, c in enumerate(obj):
            if c > 0 and (best_var is None or nonbasic[j] < best_var):
                best_var = nonbasic[j]
                jc = j
        if jc < 0:
            return None  # optimum reached with aux still positive: infeasible
        # ratio test over rows losing value as the entering variable grows
        ir = -1
        best = None
        for i in range(m):
            a = coef[i][jc]
            if a < 0:
                ratio = -const[i] / a
                key = (ratio, basic[i])
                if best is None or key < best:
                    best = key
                    ir = i
        if ir < 0:
            raise AssertionError("phase-1 objective unbounded; defective program")
        pivot(ir, jc)
        pivots += 1
        if pivots > pivot_budget:
            raise BudgetExceededError(f"simplex pivot budget {pivot_budget} exceeded")
