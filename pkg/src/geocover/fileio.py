"""Structured-text documents: graphs, covers, weightings, reports, DOT.

Graph and cover files use vertex names rather than indices so they can be
audited against drawings.  Readers reject unknown fields; writers emit a
stable field order so identical inputs give byte-identical documents.
"""

from __future__ import annotations

import io

import yaml

from .errors import FileFormatError
from .metrics import make_weighting, unit_weighting
from .multigraph import Multigraph
from .paths import PathPool, PathSeq
from .rational import format_rational, parse_rational
from .subdivision import SubdividedGraph

PALETTE = ("red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta")


def _load_mapping(text: str, allowed: set[str], kind: str) -> dict:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise FileFormatError(f"malformed {kind} document: {exc}") from exc
    if not isinstance(doc, dict):
        raise FileFormatError(f"{kind} document must be a mapping, got {type(doc).__name__}")
    unknown = set(doc) - allowed
    if unknown:
        raise FileFormatError(f"unknown {kind} fields: {sorted(unknown)}")
    return doc


# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Multigraph:
    doc = _load_mapping(text, {"vertices", "edges"}, "graph")
    try:
        raw_vertices = doc["vertices"]
        raw_edges = doc.get("edges", [])
    except KeyError as exc:
        raise FileFormatError(f"graph document missing field {exc}") from exc
    if not isinstance(raw_vertices, list) or not all(isinstance(v, (str, int)) for v in raw_vertices):
        raise FileFormatError("vertices must be a list of names")
    labels = tuple(str(v) for v in raw_vertices)
    if raw_edges is None:
        raw_edges = []
    index = {name: i for i, name in enumerate(labels)}
    edges = []
    for k, pair in enumerate(raw_edges):
        if not isinstance(pair, list) or len(pair) != 2:
            raise FileFormatError(f"edge {k} must be a 2-element list, got {pair!r}")
        ends = []
        for item in pair:
            if isinstance(item, int):
                if not (0 <= item < len(labels)):
                    raise FileFormatError(f"edge {k} index {item} out of range")
                ends.append(item)
            elif str(item) in index:
                ends.append(index[str(item)])
            else:
                raise FileFormatError(f"edge {k} references unknown vertex {item!r}")
        edges.append((ends[0], ends[1]))
    return Multigraph(len(labels), tuple(edges), labels)


def format_graph(g: Multigraph) -> str:
    out = io.StringIO()
    out.write("vertices: [" + ", ".join(g.labels) + "]\n")
    out.write("edges:\n")
    for u, v in g.edges:
        out.write(f"- [{g.labels[u]}, {g.labels[v]}]\n")
    return out.getvalue()


def read_graph(path: str) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# ---------------------------------------------------------------------------
# covers
# ---------------------------------------------------------------------------

def _step_to_vertex(sub: SubdividedGraph, name: str) -> int:
    return sub.graph.vertex_by_label(name)


def parse_cover(text: str, sub: SubdividedGraph, pool: PathPool):
    """Cover file -> tuple of pool path ids.

    Each path is a list of subdivision vertex names; a step may be written
    'name#k' to pick the k-th parallel segment into that vertex (needed only
    for subdivided loops).
    """
    doc = _load_mapping(text, {"paths"}, "cover")
    raw_paths = doc.get("paths")
    if not isinstance(raw_paths, list) or not raw_paths:
        raise FileFormatError("cover document needs a non-empty 'paths' list")
    g = sub.graph
    ids = []
    for k, raw in enumerate(raw_paths):
        if not isinstance(raw, list) or len(raw) < 2:
            raise FileFormatError(f"path {k} must list at least two vertex names")
        vs: list[int] = []
        es: list[int] = []
        for j, step in enumerate(raw):
            name, _, pick = str(step).partition("#")
            try:
                v = _step_to_vertex(sub, name)
            except KeyError as exc:
                raise FileFormatError(f"path {k} step {j}: {exc}") from exc
            if j > 0:
                parallel = sorted(e for (x, e) in g.adjacency[vs[-1]] if x == v)
                if not parallel:
                    raise FileFormatError(
                        f"path {k}: no segment joins {raw[j-1]!r} and {step!r}")
                which = int(pick) if pick else 0
                if which >= len(parallel):
                    raise FileFormatError(f"path {k} step {j}: no parallel segment #{which}")
                es.append(parallel[which])
            elif pick:
                raise FileFormatError(f"path {k}: first step cannot carry '#'")
            vs.append(v)
        try:
            ids.append(pool.id_of(PathSeq.canonical(vs, es)))
        except (ValueError, KeyError) as exc:
            raise FileFormatError(f"path {k} is not a simple pool path: {exc}") from exc
    return tuple(sorted(ids))


def format_cover(cover, pool: PathPool, sub: SubdividedGraph) -> str:
    g = sub.graph
    out = io.StringIO()
    out.write("paths:\n")
    for pid in cover:
        p = pool.paths[pid]
        steps = [g.labels[p.vertices[0]]]
        for j, e in enumerate(p.edge_ids):
            u, v = p.vertices[j], p.vertices[j + 1]
            parallel = sorted(x for (y, x) in g.adjacency[u] if y == v)
            step = g.labels[v]
            if len(parallel) > 1:
                step = f"{step}#{parallel.index(e)}"
            steps.append(step)
        out.write("- [" + ", ".join(steps) + "]\n")
    return out.getvalue()


# ---------------------------------------------------------------------------
# weightings
# ---------------------------------------------------------------------------

def parse_weights(text: str, sub: SubdividedGraph):
    doc = _load_mapping(text, {"weights"}, "weights")
    raw = doc.get("weights")
    if not isinstance(raw, dict):
        raise FileFormatError("weights document needs a 'weights' mapping")
    values = list(unit_weighting(sub.num_segments))
    seen = set()
    for name, val in raw.items():
        try:
            seg = sub.segment_by_label(str(name))
        except KeyError as exc:
            raise FileFormatError(str(exc)) from exc
        try:
            values[seg] = parse_rational(str(val))
        except ValueError as exc:
            raise FileFormatError(f"segment {name}: {exc}") from exc
        seen.add(seg)
    if len(seen) != sub.num_segments:
        missing = [sub.segment_label(s) for s in range(sub.num_segments) if s not in seen]
        raise FileFormatError(f"weights missing for segments: {missing}")
    return make_weighting(values)


def format_weights(w, sub: SubdividedGraph) -> str:
    out = io.StringIO()
    out.write("weights:\n")
    for seg in range(sub.num_segments):
        out.write(f"  {sub.segment_label(seg)}: {format_rational(w[seg])}\n")
    return out.getvalue()


def weights_block(w, sub: SubdividedGraph, indent: str = "  ") -> str:
    lines = [f"{indent}{sub.segment_label(s)}: {format_rational(w[s])}"
             for s in range(sub.num_segments)]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def to_dot(g: Multigraph, cover_paths=None, name: str = "G") -> str:
    """DOT document; cover paths, when given, color their edges distinctly."""
    color_of: dict[int, str] = {}
    if cover_paths:
        for i, p in enumerate(cover_paths):
            for e in p.edge_ids:
                color_of.setdefault(e, PALETTE[i % len(PALETTE)])
    out = io.StringIO()
    out.write(f"graph {name} {{\n")
    for v in range(g.num_vertices):
        out.write(f'  "{g.labels[v]}";\n')
    for eid, (u, v) in enumerate(g.edges):
        attr = f' [color={color_of[eid]}, penwidth=2]' if eid in color_of else ""
        out.write(f'  "{g.labels[u]}" -- "{g.labels[v]}"{attr};\n')
    out.write("}\n")
    return out.getvalue()
