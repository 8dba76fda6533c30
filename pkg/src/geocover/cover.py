"""Candidate retracted covers of a 2-subdivision.

A Cover is a sorted tuple of pool path ids.  Covers are totally ordered by
tuple comparison.  The search enumerates every cover of size <= M that
covers all segments and is retracted: no path may have an endpoint whose
incident segment germs are all carried by the union of the other paths.
"""

from __future__ import annotations

from . import _search_py
from .errors import BudgetExceededError
from .multigraph import Automorphism
from .paths import PathPool, PathSeq
from .subdivision import SubdividedGraph

try:
    from . import _kernel
except ImportError:  # extension not built; the pure kernel is equivalent
    _kernel = None

Cover = tuple  # sorted tuple of path ids

DEFAULT_NODE_BUDGET = 50_000_000
DEFAULT_VISIT_BUDGET = 2_000_000


def search_backend(num_segments: int, num_vertices: int):
    """Compiled kernel when built and the instance fits its word width."""
    if _kernel is not None and num_segments <= 64 and num_vertices <= 64:
        return _kernel
    return _search_py


def covers_all_segments(cover, pool: PathPool, sub: SubdividedGraph) -> bool:
    m = 0
    for pid in cover:
        m |= pool.seg_masks[pid]
    return m == (1 << sub.num_segments) - 1


def is_retracted(cover, pool: PathPool, sub: SubdividedGraph) -> bool:
    """No path's endpoint neighborhood lies inside the union of the others.

    A path covers the germ of segment s at vertex v iff it contains s, so a
    path is retractable at endpoint v iff every segment incident to v lies
    on some other path of the cover.
    """
    inc = sub.incident_segments
    masks = pool.seg_masks
    for i, pid in enumerate(cover):
        others = 0
        for j, qid in enumerate(cover):
            if j != i:
                others |= masks[qid]
        p = pool.paths[pid]
        for v in p.endpoints:
            if all(others >> s & 1 for s in inc[v]):
                return False
    return True


# ---------------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------------

class _SearchSpace:
    """Per-pool precomputation shared by search nodes."""

    def __init__(self, pool: PathPool, sub: SubdividedGraph):
        g = sub.graph
        self.num_segments = sub.num_segments
        self.seg_masks = pool.seg_masks
        self.vert_masks = pool.vert_masks
        self.path_segs = [p.edge_ids for p in pool.paths]
        self.ends = [p.endpoints for p in pool.paths]
        self.inc = sub.incident_segments
        # segment -> bitmask over path ids containing it
        seg_paths = [0] * self.num_segments
        for pid, m in enumerate(pool.seg_masks):
            bit = 1 << pid
            s = m
            while s:
                low = s & -s
                seg_paths[low.bit_length() - 1] |= bit
                s ^= low
        self.seg_paths = seg_paths
        self.max_len = pool.max_path_segments
        # germ-capacity pruning only ever fires at degree >= 3
        self.vert_inc_mask = [
            sum(1 << s for s in segs) for segs in sub.incident_segments
        ]
        self.high_deg = [v for v in range(g.num_vertices) if g.degree(v) >= 3]
        self.num_vertices = g.num_vertices


def find_covers(sub: SubdividedGraph, pool: PathPool, max_size: int,
                node_budget: int = DEFAULT_NODE_BUDGET,
                min_path_candidates=None) -> list[Cover]:
    """All retracted covers of size <= max_size, each once, sorted.

    Covers are partitioned by their lowest path id q: the root loop seeds
    {q} and the recursion may only add ids above q, branching on an
    uncovered segment with the fewest remaining candidates (sibling branches
    exclude already-tried candidates, so every cover appears exactly once).
    Partial covers in which some path has become retractable are pruned:
    coverage only grows along a branch, so no retracted completion is lost.

    min_path_candidates, when given, restricts the root loop.  Passing the
    path-orbit representatives of a symmetry group keeps every
    symmetry-minimal cover: the lowest path of a minimal cover is always
    minimal in its own path orbit (a smaller image of it would begin a
    smaller image of the whole cover).
    """
    if max_size < 1:
        raise ValueError(f"max_size must be >= 1, got {max_size}")
    if sub.num_segments == 0:
        return [()]
    sp = _SearchSpace(pool, sub)
    roots = sorted(min_path_candidates) if min_path_candidates is not None \
        else list(range(len(pool)))
    backend = search_backend(sp.num_segments, sp.num_vertices)
    results, _nodes = backend.run_search(
        sp.num_segments, sp.num_vertices, sp.seg_masks, sp.vert_masks,
        sp.path_segs, sp.ends, sp.inc, sp.high_deg, sp.vert_inc_mask,
        sp.seg_paths, sp.max_len, max_size, node_budget, roots)
    results.sort()
    for c in results:
        assert is_retracted(c, pool, sub)
    return results


# ---------------------------------------------------------------------------
# symmetry dedup
# ---------------------------------------------------------------------------

def apply_symmetry(lifted: Automorphism, cover, pool: PathPool) -> Cover:
    """Map each path vertexwise/edgewise and re-canonicalize."""
    out = []
    for pid in cover:
        p = pool.paths[pid]
        vs = [lifted.vertex_perm[v] for v in p.vertices]
        es = [lifted.edge_perm[e] for e in p.edge_ids]
        out.append(pool.id_of(PathSeq.canonical(vs, es)))
    return tuple(sorted(out))


def path_permutation(lifted: Automorphism, pool: PathPool) -> tuple[int, ...]:
    """The lifted automorphism as a permutation of pool path ids."""
    perm = []
    for p in pool.paths:
        vs = [lifted.vertex_perm[v] for v in p.vertices]
        es = [lifted.edge_perm[e] for e in p.edge_ids]
        perm.append(pool.id_of(PathSeq.canonical(vs, es)))
    return tuple(perm)


def is_minimal_in_symmetries(cover, path_perms) -> bool:
    """True iff no group element maps the cover strictly below itself.

    `path_perms` are the lifted group elements realized as pool-id
    permutations (see path_permutation); the identity must be among them.
    """
    for perm in path_perms:
        if tuple(sorted(perm[pid] for pid in cover)) < tuple(cover):
            return False
    return True


def orbit_of(cover, path_perms) -> set:
    return {tuple(sorted(perm[pid] for pid in cover)) for perm in path_perms}


# ---------------------------------------------------------------------------
# rerouting dedup
# ---------------------------------------------------------------------------

def reroutings(cover, pool: PathPool, sub: SubdividedGraph) -> list[Cover]:
    """Covers reachable by swapping one path for a same-endpoints pool path,
    keeping full coverage and retractedness.  The move is symmetric."""
    out = set()
    cover_set = set(cover)
    for i, pid in enumerate(cover):
        for qid in pool.competitors(pid):
            if qid == pid or qid in cover_set:
                continue
            cand = tuple(sorted(cover[:i] + (qid,) + cover[i + 1:]))
            if covers_all_segments(cand, pool, sub) and is_retracted(cand, pool, sub):
                out.add(cand)
    return sorted(out)


def is_minimal_in_reroutings(cover, pool: PathPool, sub: SubdividedGraph,
                             visit_budget: int = DEFAULT_VISIT_BUDGET,
                             seen_larger: set | None = None) -> bool:
    """Breadth-first over the rerouting class; False iff a smaller cover is
    reachable.  `seen_larger`, when given, collects visited covers larger
    than the argument so callers can disqualify them without their own BFS.
    """
    from collections import deque

    start = tuple(cover)
    visited = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in reroutings(x, pool, sub):
            if y in visited:
                continue
            if y < start:
                return False
            visited.add(y)
            if seen_larger is not None and y > start:
                seen_larger.add(y)
            queue.append(y)
            if len(visited) > visit_budget:
                raise BudgetExceededError(
                    f"rerouting reachable-set budget {visit_budget} exceeded")
    return True
