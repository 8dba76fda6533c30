"""Edge weightings and exact shortest-path queries.

A Weighting assigns a strictly positive rational to every edge (segment) of
a graph.  Distances are computed by Dijkstra over exact rationals; None is
the infinity sentinel for disconnected pairs.
"""

from __future__ import annotations

import heapq

from .errors import InvalidParameterError
from .multigraph import Multigraph
from .rational import Q, rat
from .subdivision import SubdividedGraph


def make_weighting(values) -> tuple:
    """Validate and freeze a sequence of positive rationals, edge-id indexed."""
    w = tuple(rat(x) for x in values)
    for i, x in enumerate(w):
        if x <= 0:
            raise InvalidParameterError(f"weight of segment {i} must be positive, got {x}")
    return w


def unit_weighting(num_edges: int) -> tuple:
    return tuple(Q(1) for _ in range(num_edges))


def scale_weighting(w, factor) -> tuple:
    f = rat(factor)
    if f <= 0:
        raise InvalidParameterError(f"scale factor must be positive, got {factor}")
    return tuple(x * f for x in w)


def normalize_weighting(w) -> tuple:
    """Rescale so the minimum weight is exactly 1."""
    if not w:
        return w
    return scale_weighting(w, 1 / min(w))


def dijkstra(g: Multigraph, w, source: int) -> list:
    """Exact single-source distances; None where unreachable."""
    dist: list = [None] * g.num_vertices
    dist[source] = Q(0)
    heap = [(Q(0), source)]
    while heap:
        d, v = heapq.heappop(heap)
        if dist[v] is not None and d > dist[v]:
            continue
        for u, eid in g.adjacency[v]:
            nd = d + w[eid]
            if dist[u] is None or nd < dist[u]:
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return dist


def shortest_path_length(sub: SubdividedGraph, w, u: int, v: int):
    """Exact rational distance in the subdivided graph; None if disconnected."""
    if u == v:
        return Q(0)
    return dijkstra(sub.graph, w, u)[v]


def path_length(p, w):
    """Total weight of a PathSeq's edges."""
    total = Q(0)
    for e in p.edge_ids:
        total += w[e]
    return total


def all_pairs_triangle_ok(g: Multigraph, w) -> bool:
    """Exhaustive triangle-inequality check (small graphs only)."""
    n = g.num_vertices
    dists = [dijkstra(g, w, s) for s in range(n)]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                dxy, dyz, dxz = dists[x][y], dists[y][z], dists[x][z]
                if dxy is None or dyz is None:
                    continue
                if dxz is None or dxz > dxy + dyz:
                    return False
    return True
