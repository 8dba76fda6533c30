"""Finite multigraphs: construction, standard families, automorphisms.

Vertices are dense integer ids 0..n-1 with optional string labels.  Edges
are an ordered list of endpoint pairs; loops and parallel edges are allowed,
so the edge list is a multiset over unordered pairs.  All values are
immutable after construction.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidParameterError, SizeGuardError, UnknownStandardGraphError


def default_labels(n: int) -> tuple[str, ...]:
    """a, b, ..., z then v26, v27, ... - deterministic and readable."""
    letters = string.ascii_lowercase
    return tuple(letters[i] if i < 26 else f"v{i}" for i in range(n))


@dataclass(frozen=True)
class Multigraph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.num_vertices < 0:
            raise InvalidParameterError(f"negative vertex count {self.num_vertices}")
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise InvalidParameterError(f"edge {eid} endpoint ({u},{v}) out of range")
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.num_vertices))
        if len(self.labels) != self.num_vertices:
            raise InvalidParameterError(
                f"{len(self.labels)} labels for {self.num_vertices} vertices"
            )
        if len(set(self.labels)) != self.num_vertices:
            raise InvalidParameterError("duplicate vertex labels")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """adjacency[v] = tuple of (neighbor, edge id); loops appear twice."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_vertices)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            if u != v:
                adj[v].append((u, eid))
            else:
                adj[u].append((v, eid))
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    def degree(self, v: int) -> int:
        """Number of edge ends at v; a loop contributes 2."""
        return len(self.adjacency[v])

    @cached_property
    def max_degree(self) -> int:
        if self.num_vertices == 0:
            return 0
        return max(self.degree(v) for v in range(self.num_vertices))

    def degree_one_count(self) -> int:
        return sum(1 for v in range(self.num_vertices) if self.degree(v) == 1)

    def isolated_loop_count(self) -> int:
        """Loops whose vertex carries no other edge end."""
        k = 0
        for eid, (u, v) in enumerate(self.edges):
            if u == v and all(e == eid for (_, e) in self.adjacency[u]):
                k += 1
        return k

    def label_of(self, v: int) -> str:
        return self.labels[v]

    def vertex_by_label(self, name: str) -> int:
        try:
            return self.labels.index(name)
        except ValueError:
            raise KeyError(f"unknown vertex label {name!r}") from None

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of connected components, each sorted, in id order."""
        seen = [False] * self.num_vertices
        comps = []
        for root in range(self.num_vertices):
            if seen[root]:
                continue
            stack, comp = [root], []
            seen[root] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for u, _ in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(tuple(sorted(comp)))
        return comps

    def subgraph(self, vertices: tuple[int, ...]) -> tuple["Multigraph", list[int]]:
        """Induced subgraph on `vertices`; also returns edge-id map sub->full."""
        vmap = {v: i for i, v in enumerate(vertices)}
        sub_edges = []
        edge_map = []
        for eid, (u, v) in enumerate(self.edges):
            if u in vmap and v in vmap:
                sub_edges.append((vmap[u], vmap[v]))
                edge_map.append(eid)
        sub = Multigraph(
            len(vertices), tuple(sub_edges), tuple(self.labels[v] for v in vertices)
        )
        return sub, edge_map

    def degree_histogram(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.num_vertices)))


def handshake_sum(g: Multigraph) -> int:
    """Sum of degrees; equals 2m with loops counting twice."""
    return sum(g.degree(v) for v in range(g.num_vertices))


# ---------------------------------------------------------------------------
# standard families
# ---------------------------------------------------------------------------

def _require(cond: bool, message: str):
    if not cond:
        raise InvalidParameterError(message)


def build_standard(name: str, params: list[int]) -> Multigraph:
    """Construct a named standard multigraph with deterministic numbering.

    Tags: complete, complete_bipartite, star, path, cycle, caterpillar,
    sawtooth.
    """
    tag = name.lower()
    if tag in ("complete", "k"):
        _require(len(params) == 1, f"complete expects 1 parameter, got {params}")
        n = params[0]
        _require(n >= 1, f"complete needs n >= 1, got {n}")
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        return Multigraph(n, tuple(edges))
    if tag in ("complete_bipartite", "k_bipartite"):
        _require(len(params) == 2, f"complete_bipartite expects 2 parameters, got {params}")
        m, n = params
        _require(m >= 1 and n >= 1, f"complete_bipartite needs m,n >= 1, got {m},{n}")
        edges = [(i, m + j) for i in range(m) for j in range(n)]
        return Multigraph(m + n, tuple(edges))
    if tag == "star":
        _require(len(params) == 1, f"star expects 1 parameter, got {params}")
        n = params[0]
        _require(n >= 1, f"star needs n >= 1 leaves, got {n}")
        edges = [(0, i + 1) for i in range(n)]
        return Multigraph(n + 1, tuple(edges))
    if tag == "path":
        _require(len(params) == 1, f"path expects 1 parameter, got {params}")
        n = params[0]
        _require(n >= 1, f"path needs n >= 1 edges, got {n}")
        edges = [(i, i + 1) for i in range(n)]
        return Multigraph(n + 1, tuple(edges))
    if tag == "cycle":
        _require(len(params) == 1, f"cycle expects 1 parameter, got {params}")
        n = params[0]
        _require(n >= 1, f"cycle needs n >= 1 edges, got {n}")
        edges = [(i, (i + 1) % n) for i in range(n)]
        return Multigraph(n, tuple(edges))
    if tag == "caterpillar":
        # Spine of n edges (n+1 spine vertices), one pendant leaf per spine
        # vertex, hence n+1 leaves.  Spine first, then leaves, so labels read
        # a,b,... along the spine.
        _require(len(params) == 1, f"caterpillar expects 1 parameter, got {params}")
        n = params[0]
        _require(n >= 1, f"caterpillar needs n >= 1 spine edges, got {n}")
        spine = [(i, i + 1) for i in range(n)]
        pend = [(i, n + 1 + i) for i in range(n + 1)]
        return Multigraph(2 * (n + 1), tuple(spine + pend))
    if tag == "sawtooth":
        # n triangles chained along a common base: base vertices b0..bn,
        # peaks p1..pn; triangle i = (b_{i-1}, b_i, p_i).  n=1 is a triangle.
        _require(len(params) == 1, f"sawtooth expects 1 parameter, got {params}")
        n = params[0]
        _require(n >= 1, f"sawtooth needs n >= 1 teeth, got {n}")
        base = [(i, i + 1) for i in range(n)]
        slants = []
        for i in range(n):
            peak = n + 1 + i
            slants += [(i, peak), (peak, i + 1)]
        return Multigraph(2 * n + 1, tuple(base + slants))
    raise UnknownStandardGraphError(f"unknown standard graph tag {name!r}")


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Automorphism:
    """A graph automorphism with an explicit edge bijection.

    The edge bijection matters for multigraphs: parallel edges may be
    permuted among themselves on top of the vertex permutation.
    """

    vertex_perm: tuple[int, ...]
    edge_perm: tuple[int, ...]

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other: (self*other)(x) = self(other(x))."""
        vp = tuple(self.vertex_perm[v] for v in other.vertex_perm)
        ep = tuple(self.edge_perm[e] for e in other.edge_perm)
        return Automorphism(vp, ep)

    def inverse(self) -> "Automorphism":
        vp = [0] * len(self.vertex_perm)
        ep = [0] * len(self.edge_perm)
        for i, v in enumerate(self.vertex_perm):
            vp[v] = i
        for i, e in enumerate(self.edge_perm):
            ep[e] = i
        return Automorphism(tuple(vp), tuple(ep))


def identity_automorphism(g: Multigraph) -> Automorphism:
    return Automorphism(tuple(range(g.num_vertices)), tuple(range(g.num_edges)))


def _edge_classes(g: Multigraph) -> dict[tuple[int, int], list[int]]:
    """Edge ids grouped by unordered endpoint pair, in id order."""
    classes: dict[tuple[int, int], list[int]] = {}
    for eid, (u, v) in enumerate(g.edges):
        classes.setdefault((min(u, v), max(u, v)), []).append(eid)
    return classes


def automorphisms(g: Multigraph, max_vertices: int = 16) -> list[Automorphism]:
    """The full automorphism group, deterministic order.

    Backtracking over vertex images with degree pruning, then all edge
    bijections consistent with each vertex permutation (parallel classes may
    be permuted internally).  Guarded for small graphs only.
    """
    n = g.num_vertices
    if n > max_vertices:
        raise SizeGuardError(f"automorphism search guarded to {max_vertices} vertices, got {n}")
    classes = _edge_classes(g)
    profile = [
        (g.degree(v), sum(1 for (u, w) in g.edges if u == w == v)) for v in range(n)
    ]
    # adjacency multiplicity matrix for quick pruning
    mult = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        mult[u][v] += 1
        if u != v:
            mult[v][u] += 1

    vertex_perms: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def extend(v: int):
        if v == n:
            vertex_perms.append(tuple(image))
            return
        for w in range(n):
            if used[w] or profile[w] != profile[v]:
                continue
            ok = True
            for u in range(v):
                if mult[v][u] != mult[w][image[u]]:
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
                image[v] = -1

    extend(0)

    result: list[Automorphism] = []
    for vp in vertex_perms:
        # Map each parallel class onto its image class; any internal
        # permutation of a class yields a distinct automorphism.
        per_class: list[tuple[list[int], list[tuple[int, ...]]]] = []
        valid = True
        for (u, v), eids in sorted(classes.items()):
            tgt = classes.get((min(vp[u], vp[v]), max(vp[u], vp[v])), [])
            if len(tgt) != len(eids):
                valid = False
                break
            per_class.append((eids, list(itertools.permutations(tgt))))
        if not valid:
            continue
        for choice in itertools.product(*(perms for _, perms in per_class)):
            ep = [0] * g.num_edges
            for (eids, _), perm in zip(per_class, choice):
                for eid, target in zip(eids, perm):
                    ep[eid] = target
            result.append(Automorphism(vp, tuple(ep)))
    result.sort(key=lambda a: (a.vertex_perm, a.edge_perm))
    return result


def canonical_key(g: Multigraph, max_vertices: int = 8) -> tuple:
    """Isomorphism-invariant key by minimizing over vertex permutations.

    Brute force; intended for small test batteries only.
    """
    n = g.num_vertices
    if n > max_vertices:
        raise SizeGuardError(f"canonical_key guarded to {max_vertices} vertices, got {n}")
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges))
        if best is None or key < best:
            best = key
    return (n, best)
