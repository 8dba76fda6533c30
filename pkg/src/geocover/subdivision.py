"""2-subdivision of a multigraph and lifting of automorphisms to it.

Every edge (u,v) of the origin gains a midpoint vertex w and is replaced by
the two *segments* (u,w) and (w,v).  Loops split into two parallel segments
between the loop vertex and the midpoint.  Original vertices keep their ids;
midpoint of edge e gets id n + e, and edge e's segments get ids 2e and 2e+1,
so all derived numbering is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidParameterError
from .multigraph import Automorphism, Multigraph


@dataclass(frozen=True)
class SubdividedGraph:
    graph: Multigraph
    origin: Multigraph

    @property
    def original_count(self) -> int:
        return self.origin.num_vertices

    def is_original(self, v: int) -> bool:
        return v < self.origin.num_vertices

    def midpoint_of(self, edge_id: int) -> int:
        return self.origin.num_vertices + edge_id

    def segment_pair_of(self, edge_id: int) -> tuple[int, int]:
        return (2 * edge_id, 2 * edge_id + 1)

    @property
    def num_segments(self) -> int:
        return self.graph.num_edges

    def origin_edge_of_segment(self, seg: int) -> int:
        return seg // 2

    @cached_property
    def incident_segments(self) -> tuple[tuple[int, ...], ...]:
        """incident_segments[v] = segment ids with an end at v (the germs)."""
        inc: list[list[int]] = [[] for _ in range(self.graph.num_vertices)]
        for sid, (u, v) in enumerate(self.graph.edges):
            inc[u].append(sid)
            inc[v].append(sid)
        return tuple(tuple(s) for s in inc)

    def segment_label(self, seg: int) -> str:
        """'<edge-label>/0' for the half at the edge's first endpoint, '/1' else."""
        return f"{self.graph.labels[self.midpoint_of(seg // 2)]}/{seg % 2}"

    def segment_by_label(self, name: str) -> int:
        mid_label, _, half = name.rpartition("/")
        if half not in ("0", "1") or not mid_label:
            raise KeyError(f"bad segment label {name!r}")
        mid = self.graph.vertex_by_label(mid_label)
        edge_id = mid - self.origin.num_vertices
        if edge_id < 0:
            raise KeyError(f"{name!r} does not name a segment")
        return 2 * edge_id + int(half)


def _midpoint_labels(g: Multigraph) -> tuple[str, ...]:
    counts: dict[tuple[int, int], int] = {}
    labels = []
    for u, v in g.edges:
        key = (min(u, v), max(u, v))
        counts[key] = counts.get(key, 0) + 1
        base = f"{g.labels[key[0]]}-{g.labels[key[1]]}"
        labels.append(base if counts[key] == 1 else f"{base}*{counts[key]}")
    return tuple(labels)


def two_subdivision(g: Multigraph) -> SubdividedGraph:
    """Insert one midpoint per edge; segments keep deterministic ids."""
    n = g.num_vertices
    segments = []
    for eid, (u, v) in enumerate(g.edges):
        w = n + eid
        segments.append((u, w))
        segments.append((w, v))
    labels = g.labels + _midpoint_labels(g)
    if len(set(labels)) != len(labels):
        # e.g. a vertex literally named like a midpoint; keep labels exact
        raise InvalidParameterError("vertex labels collide with derived midpoint labels")
    sub = Multigraph(n + g.num_edges, tuple(segments), labels)
    return SubdividedGraph(sub, g)


def lift_automorphism(a: Automorphism, sub: SubdividedGraph) -> Automorphism:
    """Extend an origin automorphism to the 2-subdivision.

    Midpoints follow the edge bijection; each segment maps to the image
    edge's half that matches its mapped endpoints.  For loops the two
    parallel halves map in stored order.
    """
    g = sub.origin
    n = g.num_vertices
    vperm = list(a.vertex_perm) + [0] * g.num_edges
    for eid in range(g.num_edges):
        vperm[n + eid] = n + a.edge_perm[eid]
    sperm = [0] * sub.num_segments
    for eid, (u, v) in enumerate(g.edges):
        tgt = a.edge_perm[eid]
        tu, tv = g.edges[tgt]
        s0, s1 = sub.segment_pair_of(eid)
        t0, t1 = sub.segment_pair_of(tgt)
        if u == v:
            sperm[s0], sperm[s1] = t0, t1
        elif a.vertex_perm[u] == tu:
            sperm[s0], sperm[s1] = t0, t1
        else:
            sperm[s0], sperm[s1] = t1, t0
    return Automorphism(tuple(vperm), tuple(sperm))


def contract_midpoints(sub: SubdividedGraph) -> Multigraph:
    """Undo the subdivision (round-trip check helper)."""
    edges = []
    for eid in range(sub.origin.num_edges):
        s0, _ = sub.segment_pair_of(eid)
        u, w = sub.graph.edges[s0]
        _, v = sub.graph.edges[s0 + 1]
        assert w == sub.midpoint_of(eid)
        edges.append((u, v))
    return Multigraph(sub.origin.num_vertices, tuple(edges), sub.origin.labels)
