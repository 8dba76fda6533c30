"""Systems of 2 or 3 abstract paths: orientation compatibility, metric
construction, the three-path catalogue, and the machine-checked case grids.

An abstract path is a sequence of point labels; equal labels across paths
mean the same point, and paths intersect only at labeled points.  Realizing
a system glues fresh arcs between consecutive labels, so the realized
multigraph is exactly the union of the paths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InconsistentConfigError, InvalidParameterError
from .lp import build_feasibility_program, solve_feasibility
from .metrics import make_weighting
from .multigraph import Multigraph
from .paths import PathPool, PathSeq
from .rational import Q
from .subdivision import SubdividedGraph, two_subdivision

FORWARD, BACKWARD = 1, -1

PARTIAL_ORDER = "partial-order"
EXCEPTIONAL_2A = "exceptional-2a"
EXCEPTIONAL_2B = "exceptional-2b"
NOT_GEODESIBLE = "not-geodesible"


@dataclass(frozen=True)
class OrientedPathSystem:
    """2 or 3 labeled paths; orientation flags default to forward."""

    paths: tuple[tuple[str, ...], ...]
    orientations: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.paths) not in (2, 3):
            raise InvalidParameterError(f"need 2 or 3 paths, got {len(self.paths)}")
        for p in self.paths:
            if len(set(p)) != len(p):
                raise InvalidParameterError(f"path {p} repeats a label")
        if not self.orientations:
            object.__setattr__(self, "orientations", tuple(FORWARD for _ in self.paths))

    def oriented(self, i: int, flip: int = FORWARD) -> tuple[str, ...]:
        d = self.orientations[i] * flip
        return self.paths[i] if d == FORWARD else self.paths[i][::-1]


def _compatible(p1: tuple[str, ...], p2: tuple[str, ...]) -> bool:
    """Oriented paths agree on the order of every shared label."""
    shared = set(p1) & set(p2)
    seq1 = [x for x in p1 if x in shared]
    seq2 = [x for x in p2 if x in shared]
    return seq1 == seq2


def compatible_orientation_two(sys: OrientedPathSystem):
    """Orientations making the two paths order-consistent, or None.

    The first path's direction is fixed; both directions of the second are
    tried.  Zero or one shared point is vacuously compatible.
    """
    if len(sys.paths) != 2:
        raise InvalidParameterError("compatible_orientation_two expects 2 paths")
    p1 = sys.oriented(0)
    for d2 in (FORWARD, BACKWARD):
        if _compatible(p1, sys.oriented(1, d2)):
            return (FORWARD, d2)
    return None


# ---------------------------------------------------------------------------
# metric construction for two compatible paths
# ---------------------------------------------------------------------------

def construct_metric_two(sys: OrientedPathSystem, orientations):
    """Glue the two paths and weight arcs so both are shortest paths.

    Shared points sit at increasing integer positions along the first path;
    the second path's private runs interpolate between (or extend past) its
    anchors, and every arc gets weight equal to its position difference.
    Any route's length is then at least the position gap of its endpoints,
    so each monotone path is a geodesic.
    """
    d1, d2 = orientations
    p1 = sys.oriented(0, d1)
    p2 = sys.oriented(1, d2)
    pos: dict[str, Q] = {x: Q(i) for i, x in enumerate(p1)}
    shared_idx = [i for i, x in enumerate(p2) if x in pos]
    if not shared_idx:
        for i, x in enumerate(p2):
            pos[x] = Q(i)
    else:
        first, last = shared_idx[0], shared_idx[-1]
        for j in range(first):  # leading private run, one unit per arc
            pos[p2[j]] = pos[p2[first]] - (first - j)
        for a, b in zip(shared_idx, shared_idx[1:]):  # interpolate between anchors
            lo, hi = pos[p2[a]], pos[p2[b]]
            if hi <= lo:
                raise InvalidParameterError("orientations are not compatible")
            for t, j in enumerate(range(a + 1, b), start=1):
                pos[p2[j]] = lo + (hi - lo) * Q(t, b - a)
        for t, j in enumerate(range(last + 1, len(p2)), start=1):
            pos[p2[j]] = pos[p2[last]] + t

    labels = list(p1) + [x for x in p2 if x not in p1]
    index = {x: i for i, x in enumerate(labels)}
    edges = []
    weights = []
    for p in (p1, p2):
        for x, y in zip(p, p[1:]):
            edges.append((index[x], index[y]))
            weights.append(abs(pos[y] - pos[x]))
    g = Multigraph(len(labels), tuple(edges), tuple(labels))
    w = make_weighting(weights)
    n1 = len(p1) - 1
    path1 = PathSeq.canonical([index[x] for x in p1], range(n1))
    path2 = PathSeq.canonical([index[x] for x in p2], range(n1, len(edges)))
    return g, w, (path1, path2)


# ---------------------------------------------------------------------------
# three-path catalogue
# ---------------------------------------------------------------------------

def _acyclic(paths) -> bool:
    order: dict[str, list[str]] = {}
    indeg: dict[str, int] = {}
    for p in paths:
        for x in p:
            order.setdefault(x, [])
            indeg.setdefault(x, 0)
    for p in paths:
        for x, y in zip(p, p[1:]):
            order[x].append(y)
            indeg[y] += 1
    stack = [x for x, d in indeg.items() if d == 0]
    seen = 0
    while stack:
        x = stack.pop()
        seen += 1
        for y in order[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                stack.append(y)
    return seen == len(indeg)


def _gaps(p1, p2):
    """Components of p1 minus p2: (labels, lower shared or None, upper shared
    or None), in path order.  A gap with both boundaries is a nonempty open
    arc even when it carries no labels."""
    shared = set(p1) & set(p2)
    gaps = []
    run: list[str] = []
    lower = None
    for x in p1:
        if x in shared:
            gaps.append((tuple(run), lower, x))
            run = []
            lower = x
        else:
            run.append(x)
    gaps.append((tuple(run), lower, None))
    return gaps


def _gap_nonempty(gap) -> bool:
    labels, lower, upper = gap
    return bool(labels) or (lower is not None and upper is not None)


def _segregated(p3, x13, x23) -> bool:
    # the third path meets the other two in non-interleaved stretches; a
    # single shared triple point may sit on the boundary of both stretches
    pos = {x: i for i, x in enumerate(p3)}
    a = [pos[x] for x in x13 if x in pos]
    b = [pos[x] for x in x23 if x in pos]
    if not a or not b:
        return True
    return max(a) <= min(b) or max(b) <= min(a)


def _test_2a(p1, p2, p3) -> bool:
    # all pairs order-consistent under this one orientation assignment,
    # third path confined to the trailing end of p1 and leading end of p2,
    # meeting them in separate stretches of itself
    if not (_compatible(p1, p2) and _compatible(p1, p3) and _compatible(p2, p3)):
        return False
    s12 = set(p1) & set(p2)
    if s12:
        last = max(i for i, x in enumerate(p1) if x in s12)
        u_labels = set(p1[last + 1:])
        first = min(i for i, x in enumerate(p2) if x in s12)
        v_labels = set(p2[:first])
    else:
        u_labels, v_labels = set(p1), set(p2)
    x13 = set(p1) & set(p3)
    x23 = set(p2) & set(p3)
    return x13 <= u_labels and x23 <= v_labels and _segregated(p3, x13, x23)


def _test_2b(p1, p2, p3) -> bool:
    # p1 compatible with both, p2/p3 inconsistent; the third path confined to
    # a pair of components hanging off a common shared endpoint e.  Two
    # components that both end at the same e are automatically noncomparable
    # in the induced order on p1_union_p2: nothing below either one reaches
    # at-or-above e on the other path.
    if not (_compatible(p1, p2) and _compatible(p1, p3)) or _compatible(p2, p3):
        return False
    x13 = set(p1) & set(p3)
    x23 = set(p2) & set(p3)
    if not _segregated(p3, x13, x23):
        return False
    for g1 in _gaps(p1, p2):
        e = g1[2]
        if e is None or not _gap_nonempty(g1):
            continue
        for g2 in _gaps(p2, p1):
            if g2[2] != e or not _gap_nonempty(g2):
                continue
            if x13 <= set(g1[0]) | {e} and x23 <= set(g2[0]) | {e}:
                return True
    return False


def classify_three(sys: OrientedPathSystem) -> str:
    """Catalogue verdict for a union of three paths.

    partial-order: some orientation assignment makes the union acyclic.
    exceptional-2a / 2b: some relabeling and orientations match the two
    non-ordered shapes.  Otherwise not-geodesible.
    """
    if len(sys.paths) != 3:
        raise InvalidParameterError("classify_three expects 3 paths")
    flips = list(itertools.product((FORWARD, BACKWARD), repeat=3))
    for f in flips:
        if _acyclic([sys.oriented(i, f[i]) for i in range(3)]):
            return PARTIAL_ORDER
    # a pair with no compatible orientations of its own can never consist of
    # two geodesics: the union would be a smaller space violating the
    # two-path criterion
    for i, j in ((0, 1), (0, 2), (1, 2)):
        a, b = sys.oriented(i), sys.oriented(j)
        if not (_compatible(a, b) or _compatible(a, b[::-1])):
            return NOT_GEODESIBLE
    for perm in itertools.permutations(range(3)):
        for f in flips:
            ps = [sys.oriented(i, f[j]) for j, i in enumerate(perm)]
            if _test_2a(*ps):
                return EXCEPTIONAL_2A
    for perm in itertools.permutations(range(3)):
        for f in flips:
            ps = [sys.oriented(i, f[j]) for j, i in enumerate(perm)]
            if _test_2b(*ps):
                return EXCEPTIONAL_2B
    return NOT_GEODESIBLE


# ---------------------------------------------------------------------------
# realization and LP admissibility
# ---------------------------------------------------------------------------

def realize_system(sys: OrientedPathSystem, fresh_ends: bool = False):
    """Glue the paths into a multigraph; returns (subdivision, pool, cover).

    With fresh_ends each path gets private start/end vertices, so labeled
    points are interior and the paths are never subpaths of one another.
    Each arc gains a midpoint via the 2-subdivision, which also supplies the
    endpoint vertex set the candidate pool needs.
    """
    seqs = []
    for i, p in enumerate(sys.paths):
        seq = (f"s{i}^", *p, f"t{i}^") if fresh_ends else p
        seqs.append(seq)
    labels: list[str] = []
    index: dict[str, int] = {}
    for seq in seqs:
        for x in seq:
            if x not in index:
                index[x] = len(labels)
                labels.append(x)
    edges = []
    arc_ids = []
    for seq in seqs:
        ids = []
        for x, y in zip(seq, seq[1:]):
            ids.append(len(edges))
            edges.append((index[x], index[y]))
        arc_ids.append(ids)
    g = Multigraph(len(labels), tuple(edges), tuple(labels))
    sub = two_subdivision(g)
    pool = PathPool(sub)
    cover = []
    for seq, ids in zip(seqs, arc_ids):
        vs = []
        es = []
        for (x, _y), eid in zip(zip(seq, seq[1:]), ids):
            vs.append(index[x])
            vs.append(sub.midpoint_of(eid))
            s0, s1 = sub.segment_pair_of(eid)
            es.extend([s0, s1])
        vs.append(index[seq[-1]])
        cover.append(pool.id_of(PathSeq.canonical(vs, es)))
    return sub, pool, tuple(sorted(cover))


def system_feasible(sys: OrientedPathSystem, fresh_ends: bool = False,
                    pivot_budget: int | None = None) -> bool:
    """True iff some positive weighting makes every path a shortest path."""
    sub, pool, cover = realize_system(sys, fresh_ends)
    program = build_feasibility_program(cover, pool, sub)
    kwargs = {} if pivot_budget is None else {"pivot_budget": pivot_budget}
    return solve_feasibility(program, **kwargs).feasible


def system_witness(sys: OrientedPathSystem, fresh_ends: bool = False):
    """(subdivision, weighting) when feasible, else None."""
    sub, pool, cover = realize_system(sys, fresh_ends)
    program = build_feasibility_program(cover, pool, sub)
    res = solve_feasibility(program)
    if not res.feasible:
        return None
    return sub, res.witness


# ---------------------------------------------------------------------------
# the two case grids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TripleConfig:
    """One row of a case grid: three point orders, optional identifications."""

    group: int
    index: int
    orders: tuple[tuple[str, ...], ...]
    identifications: tuple[tuple[str, str], ...] = ()
    case_labels: tuple[str, ...] = ()

    def merged_orders(self) -> tuple[tuple[str, ...], ...]:
        """Orders with identified labels merged; adjacent duplicates collapse.

        A non-adjacent duplicate after merging means the identification
        contradicts the configured orders.
        """
        rep: dict[str, str] = {}

        def find(x: str) -> str:
            while x in rep:
                x = rep[x]
            return x

        for x, y in self.identifications:
            rx, ry = find(x), find(y)
            if rx != ry:
                rep[max(rx, ry)] = min(rx, ry)
        merged = []
        for order in self.orders:
            seq: list[str] = []
            for x in order:
                r = find(x)
                if seq and seq[-1] == r:
                    continue
                if r in seq:
                    raise InconsistentConfigError(
                        f"identification {self.identifications} breaks order {order}")
                seq.append(r)
            merged.append(tuple(seq))
        return tuple(merged)

    def system(self) -> OrientedPathSystem:
        return OrientedPathSystem(self.merged_orders())


def config_to_graph(cfg: TripleConfig):
    """Realize a configuration with fresh endpoints per path.

    Returns (subdivision, pool, cover of three designated path ids); the
    pairwise intersections of the designated paths are exactly the shared
    labels in the configured orders.
    """
    return realize_system(cfg.system(), fresh_ends=True)


def check_admissible(cfg: TripleConfig, pivot_budget: int | None = None) -> bool:
    """LP verdict: can all three configured paths be geodesics at once?"""
    return system_feasible(cfg.system(), fresh_ends=True, pivot_budget=pivot_budget)


# Group 1: points a,b on path 1 and 2, c on 2 and 3, e on 1 and 3, f on 1
# and 2; standing constraints a<1 b, b<2 c, c<3 a plus pairwise agreement on
# {b,f} and {a,e}.  Items follow the published enumeration; item 19's third
# chain is corrected to "c a e" (forced by the {a,e} agreement rule) and
# item 17's lax mark between e and c is read strict since c never lies on
# path 1.
GROUP1_ORDERS: tuple[tuple[tuple[str, ...], ...], ...] = (
    (("a", "b", "e", "f"), ("b", "c", "f"), ("c", "a", "e")),   # 1
    (("a", "b", "e", "f"), ("b", "f", "c"), ("c", "a", "e")),   # 2
    (("a", "b", "f", "e"), ("b", "c", "f"), ("c", "a", "e")),   # 3
    (("a", "b", "f", "e"), ("b", "f", "c"), ("c", "a", "e")),   # 4
    (("a", "e", "b", "f"), ("b", "c", "f"), ("c", "a", "e")),   # 5
    (("a", "e", "b", "f"), ("b", "f", "c"), ("c", "a", "e")),   # 6
    (("a", "e", "f", "b"), ("f", "b", "c"), ("c", "a", "e")),   # 7
    (("a", "f", "b", "e"), ("f", "b", "c"), ("c", "a", "e")),   # 8
    (("a", "f", "e", "b"), ("f", "b", "c"), ("c", "a", "e")),   # 9
    (("e", "a", "b", "f"), ("b", "c", "f"), ("c", "e", "a")),   # 10
    (("e", "a", "b", "f"), ("b", "c", "f"), ("e", "c", "a")),   # 11
    (("e", "a", "b", "f"), ("b", "f", "c"), ("c", "e", "a")),   # 12
    (("e", "a", "b", "f"), ("b", "f", "c"), ("e", "c", "a")),   # 13
    (("e", "a", "f", "b"), ("f", "b", "c"), ("c", "e", "a")),   # 14
    (("e", "a", "f", "b"), ("f", "b", "c"), ("e", "c", "a")),   # 15
    (("e", "f", "a", "b"), ("f", "b", "c"), ("c", "e", "a")),   # 16
    (("e", "f", "a", "b"), ("f", "b", "c"), ("e", "c", "a")),   # 17
    (("f", "a", "b", "e"), ("f", "b", "c"), ("c", "a", "e")),   # 18
    (("f", "a", "e", "b"), ("f", "b", "c"), ("c", "a", "e")),   # 19
    (("f", "e", "a", "b"), ("f", "b", "c"), ("c", "e", "a")),   # 20
    (("f", "e", "a", "b"), ("f", "b", "c"), ("e", "c", "a")),   # 21
)

# indices whose first chain places e and f adjacently, so e=f is permitted
GROUP1_EF_ALLOWED = frozenset({1, 2, 3, 4, 7, 9, 16, 17, 20, 21})

# Group 2 chains: (point order, lax flags between consecutive points)
GROUP2_CHAIN1 = {
    "1a": (("c", "e", "f", "g"), (False, True, False)),
    "1b": (("c", "f", "e", "g"), (True, True, True)),
    "1c": (("c", "f", "g", "e"), (True, False, True)),
    "1d": (("f", "g", "c", "e"), (False, True, False)),
    "1e": (("f", "c", "g", "e"), (True, True, True)),
    "1f": (("f", "c", "e", "g"), (True, False, True)),
}
GROUP2_CHAIN2 = {
    "2a": (("a", "b", "c", "e"), (False, True, False)),
    "2b": (("a", "c", "b", "e"), (True, True, True)),
    "2c": (("a", "c", "e", "b"), (True, False, True)),
    "2d": (("c", "e", "a", "b"), (False, True, False)),
    "2e": (("c", "a", "e", "b"), (True, True, True)),
    "2f": (("c", "a", "b", "e"), (True, False, True)),
}
GROUP2_CHAIN3 = {
    "3a": (("f", "g", "b", "a"), (False, True, False)),
    "3b": (("f", "b", "g", "a"), (True, True, True)),
    "3c": (("f", "b", "a", "g"), (True, False, True)),
}

GROUP2_ADMISSIBLE_LABELS = frozenset({
    ("1a", "2a", "3a"),
    ("1a", "2d", "3a"),
    ("1c", "2f", "3a"),
    ("1f", "2a", "3c"),
    ("1f", "2d", "3c"),
    ("1d", "2a", "3a"),
    ("1d", "2d", "3a"),
})

GROUP1_DISTINCT_ADMISSIBLE = frozenset({6, 7, 12, 14})


def group1_configs(include_ef_variants: bool = True) -> list[TripleConfig]:
    out = []
    for i, orders in enumerate(GROUP1_ORDERS, start=1):
        out.append(TripleConfig(group=1, index=i, orders=orders))
        if include_ef_variants and i in GROUP1_EF_ALLOWED:
            out.append(TripleConfig(group=1, index=i, orders=orders,
                                    identifications=(("e", "f"),)))
    return out


def _lax_subsets(lax_flags):
    """Equality choices along one chain: no two adjacent positions equal."""
    positions = [i for i, ok in enumerate(lax_flags) if ok]
    for r in range(len(positions) + 1):
        for combo in itertools.combinations(positions, r):
            if all(b - a > 1 for a, b in zip(combo, combo[1:])):
                yield combo


def group2_configs(include_identifications: bool = False) -> list[TripleConfig]:
    """The 108 distinct-point grid cells, optionally with the degenerate
    identified-point sub-cases (consistent ones only)."""
    out = []
    idx = 0
    for l1 in sorted(GROUP2_CHAIN1):
        for l2 in sorted(GROUP2_CHAIN2):
            for l3 in sorted(GROUP2_CHAIN3):
                idx += 1
                chains = (GROUP2_CHAIN1[l1], GROUP2_CHAIN2[l2], GROUP2_CHAIN3[l3])
                orders = tuple(order for order, _ in chains)
                base = TripleConfig(group=2, index=idx, orders=orders,
                                    case_labels=(l1, l2, l3))
                out.append(base)
                if not include_identifications:
                    continue
                lax = [flags for _, flags in chains]
                for sub1 in _lax_subsets(lax[0]):
                    for sub2 in _lax_subsets(lax[1]):
                        for sub3 in _lax_subsets(lax[2]):
                            if not (sub1 or sub2 or sub3):
                                continue
                            idents = []
                            for chain, subset in zip(orders, (sub1, sub2, sub3)):
                                idents += [(chain[i], chain[i + 1]) for i in subset]
                            cfg = TripleConfig(group=2, index=idx, orders=orders,
                                               identifications=tuple(idents),
                                               case_labels=(l1, l2, l3))
                            try:
                                cfg.merged_orders()
                            except InconsistentConfigError:
                                continue
                            out.append(cfg)
    return out


def enumerate_group(group: int, include_identifications: bool = False,
                    pivot_budget: int | None = None):
    """Every configuration of a grid with its LP admissibility flag."""
    if group == 1:
        configs = group1_configs()
    elif group == 2:
        configs = group2_configs(include_identifications)
    else:
        raise InvalidParameterError(f"group must be 1 or 2, got {group}")
    return [(cfg, check_admissible(cfg, pivot_budget)) for cfg in configs]
