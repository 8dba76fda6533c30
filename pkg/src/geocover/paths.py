"""Simple paths of a (subdivided) multigraph and the candidate-path pool.

A PathSeq is a vertex-simple path stored in canonical direction: the
endpoint pair (first, last) is lexicographically minimal, so each undirected
path has exactly one representation.  Since the endpoints of a simple path
with at least one edge are distinct, canonically first < last always holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import BudgetExceededError
from .multigraph import Multigraph
from .subdivision import SubdividedGraph

DEFAULT_POOL_CAP = 200_000


@dataclass(frozen=True, order=True)
class PathSeq:
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 2 or len(self.edge_ids) != len(self.vertices) - 1:
            raise ValueError("path needs k>=1 edges and k+1 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path revisits a vertex")
        if self.vertices[0] > self.vertices[-1]:
            raise ValueError("path not in canonical direction")

    @classmethod
    def canonical(cls, vertices, edge_ids) -> "PathSeq":
        vs, es = tuple(vertices), tuple(edge_ids)
        if vs[0] > vs[-1]:
            vs, es = vs[::-1], es[::-1]
        return cls(vs, es)

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.vertices[0], self.vertices[-1])

    @property
    def num_segments(self) -> int:
        return len(self.edge_ids)

    def reversed_vertices(self) -> tuple[int, ...]:
        return self.vertices[::-1]


def _all_paths_from(g: Multigraph, start: int, emit, cap_check):
    """DFS emitting every simple path leaving `start` (directed)."""
    vs = [start]
    es: list[int] = []
    on_path = [False] * g.num_vertices
    on_path[start] = True

    def rec(v: int):
        for u, eid in g.adjacency[v]:
            if on_path[u]:
                continue
            vs.append(u)
            es.append(eid)
            on_path[u] = True
            emit(vs, es)
            cap_check()
            rec(u)
            on_path[u] = False
            vs.pop()
            es.pop()

    rec(start)


def enumerate_simple_paths(sub: SubdividedGraph, cap: int = DEFAULT_POOL_CAP) -> list[PathSeq]:
    """Every canonical simple path with >= 1 edge, sorted, each exactly once.

    Emitting only paths whose start is strictly below their end skips the
    reversed duplicates without a dedup pass; parallel edges (loop halves)
    still yield distinct paths through their distinct edge ids.
    """
    g = sub.graph
    out: list[PathSeq] = []

    def emit(vs, es):
        if vs[0] < vs[-1]:
            out.append(PathSeq(tuple(vs), tuple(es)))

    def cap_check():
        if len(out) > cap:
            raise BudgetExceededError(f"path pool exceeds cap {cap}")

    for start in range(g.num_vertices):
        _all_paths_from(g, start, emit, cap_check)
    out.sort()
    return out


class PathPool:
    """Indexed pool of candidate paths over a subdivided graph."""

    def __init__(self, sub: SubdividedGraph, paths: list[PathSeq] | None = None,
                 cap: int = DEFAULT_POOL_CAP):
        self.sub = sub
        self.paths = enumerate_simple_paths(sub, cap) if paths is None else list(paths)
        self.index_of = {(p.vertices, p.edge_ids): i for i, p in enumerate(self.paths)}
        self.by_endpoints: dict[tuple[int, int], list[int]] = {}
        for i, p in enumerate(self.paths):
            self.by_endpoints.setdefault(p.endpoints, []).append(i)

    def __len__(self) -> int:
        return len(self.paths)

    def id_of(self, p: PathSeq) -> int:
        return self.index_of[(p.vertices, p.edge_ids)]

    @cached_property
    def seg_masks(self) -> list[int]:
        masks = []
        for p in self.paths:
            m = 0
            for e in p.edge_ids:
                m |= 1 << e
            masks.append(m)
        return masks

    @cached_property
    def vert_masks(self) -> list[int]:
        masks = []
        for p in self.paths:
            m = 0
            for v in p.vertices:
                m |= 1 << v
            masks.append(m)
        return masks

    @cached_property
    def max_path_segments(self) -> int:
        return max((p.num_segments for p in self.paths), default=0)

    def competitors(self, path_id: int) -> list[int]:
        """Pool ids sharing the path's endpoint pair (including itself)."""
        return self.by_endpoints[self.paths[path_id].endpoints]

    def restrict(self, keep_ids: list[int]) -> "PathPool":
        """Sub-pool of the given paths (e.g. unit-geodesics only)."""
        return PathPool(self.sub, [self.paths[i] for i in keep_ids])


def count_simple_paths_oracle(g: Multigraph) -> int:
    """Independent count: directed simple edge sequences / 2.

    Deliberately separate from enumerate_simple_paths (adjacency recursion,
    no canonicalization) so it can serve as a test oracle.
    """
    total = 0

    def rec(v, visited):
        nonlocal total
        for u, _eid in g.adjacency[v]:
            if u in visited:
                continue
            total += 1
            rec(u, visited | {u})

    for s in range(g.num_vertices):
        rec(s, {s})
    assert total % 2 == 0
    return total // 2
