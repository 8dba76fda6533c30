"""Command-line front end.

Subcommands: number, distinct, feasible, classify2, classify3, appendix-b,
export-dot.  Exit codes: 0 success, 2 parse/usage error, 3 budget
exhaustion, 4 paper-diff mismatch.  Budgets can also be set through
GEOCOVER_NODE_BUDGET, GEOCOVER_PIVOT_BUDGET, GEOCOVER_POOL_CAP and
GEOCOVER_VISIT_BUDGET.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import tripleconfig as tc
from .cover import covers_all_segments
from .driver import (SearchConfig, cover_number, distinct_optimal_covers,
                     lower_bound, upper_bound)
from .errors import (BudgetExceededError, CoverageError, FileFormatError,
                     GeocoverError, InconsistentConfigError,
                     InvalidParameterError, UnknownStandardGraphError)
from .fileio import (format_cover, format_graph, format_weights, parse_cover,
                     parse_graph, parse_weights, to_dot, weights_block)
from .lp import build_feasibility_program, check_fixed_weights, solve_feasibility
from .metrics import normalize_weighting, unit_weighting
from .multigraph import build_standard
from .paths import PathPool
from .subdivision import two_subdivision

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_DIFF = 4


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InvalidParameterError(f"{name} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise InvalidParameterError(f"{name} must be positive, got {value}")
    return value


def _config_from(args) -> SearchConfig:
    base = SearchConfig()
    return SearchConfig(
        max_m=args.max_m if getattr(args, "max_m", None) else None,
        node_budget=_env_int("GEOCOVER_NODE_BUDGET",
                             getattr(args, "node_budget", None) or base.node_budget),
        pivot_budget=_env_int("GEOCOVER_PIVOT_BUDGET",
                              getattr(args, "pivot_budget", None) or base.pivot_budget),
        pool_cap=_env_int("GEOCOVER_POOL_CAP",
                          getattr(args, "pool_cap", None) or base.pool_cap),
        visit_budget=_env_int("GEOCOVER_VISIT_BUDGET",
                              getattr(args, "visit_budget", None) or base.visit_budget),
        dedup_symmetry=not getattr(args, "no_dedup_symmetry", False),
        dedup_rerouting=not getattr(args, "no_dedup_rerouting", False),
    )


def _load_graph(args):
    if args.std:
        tag = args.std[0]
        try:
            params = [int(x) for x in args.std[1:]]
        except ValueError:
            raise InvalidParameterError(f"--std parameters must be integers: {args.std[1:]}")
        return build_standard(tag, params)
    if not args.graph:
        raise FileFormatError("need a graph file or --std NAME PARAMS")
    with open(args.graph, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _add_graph_source(sp):
    sp.add_argument("graph", nargs="?", help="graph document (YAML)")
    sp.add_argument("--std", nargs="+", metavar="ARG",
                    help="standard graph: NAME PARAM... "
                         "(complete, complete_bipartite, star, path, cycle, "
                         "caterpillar, sawtooth)")


def _add_budget_flags(sp):
    sp.add_argument("--node-budget", type=int, dest="node_budget")
    sp.add_argument("--pivot-budget", type=int, dest="pivot_budget")
    sp.add_argument("--pool-cap", type=int, dest="pool_cap")
    sp.add_argument("--visit-budget", type=int, dest="visit_budget")


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _witness_block(witness, sub, normalize: bool) -> str:
    lines = ["  paths:"]
    g = sub.graph
    for p in witness.paths:
        lines.append("  - [" + ", ".join(g.labels[v] for v in p.vertices) + "]")
    w = normalize_weighting(witness.weighting) if normalize else witness.weighting
    lines.append("  weights:")
    lines.append(weights_block(w, sub, indent="    "))
    return "\n".join(lines)


def cmd_number(args) -> int:
    g = _load_graph(args)
    cfg = _config_from(args)
    t0 = time.monotonic()
    report = cover_number(g, args.mode, cfg)
    elapsed = time.monotonic() - t0
    lines = [
        f"graph: {{vertices: {g.num_vertices}, edges: {g.num_edges}}}",
        f"mode: {report.mode}",
        f"bounds: {{lower: {report.bounds_used[0]}, upper: {report.bounds_used[1]}}}",
        f"cover_number: {report.cover_number}",
        "witness:",
        _witness_block(report.witnesses[0], report.subdivision, args.normalize),
    ]
    if args.timing:
        lines.append(f"seconds: {elapsed:.2f}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_distinct(args) -> int:
    g = _load_graph(args)
    cfg = _config_from(args)
    t0 = time.monotonic()
    report = distinct_optimal_covers(g, args.mode, cfg)
    elapsed = time.monotonic() - t0
    lines = [
        f"graph: {{vertices: {g.num_vertices}, edges: {g.num_edges}}}",
        f"mode: {report.mode}",
        f"bounds: {{lower: {report.bounds_used[0]}, upper: {report.bounds_used[1]}}}",
        f"cover_number: {report.cover_number}",
        f"distinct_count: {report.distinct_count}",
        "covers:",
    ]
    for i, wit in enumerate(report.witnesses, start=1):
        lines.append(f"- # cover {i}")
        lines.append(_witness_block(wit, report.subdivision, args.normalize))
    if args.timing:
        lines.append(f"seconds: {elapsed:.2f}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_feasible(args) -> int:
    g = _load_graph(args)
    sub = two_subdivision(g)
    pool = PathPool(sub, cap=_env_int("GEOCOVER_POOL_CAP", SearchConfig().pool_cap))
    with open(args.cover, encoding="utf-8") as fh:
        cover = parse_cover(fh.read(), sub, pool)
    if not covers_all_segments(cover, pool, sub):
        raise CoverageError("cover does not span every segment")
    if args.check_weights:
        if args.check_weights == "unit":
            w = unit_weighting(sub.num_segments)
        else:
            with open(args.check_weights, encoding="utf-8") as fh:
                w = parse_weights(fh.read(), sub)
        ok = check_fixed_weights(cover, w, pool, sub)
        _emit(args, f"geodesic_under_given_weights: {str(ok).lower()}\n")
        return EXIT_OK
    program = build_feasibility_program(cover, pool, sub)
    res = solve_feasibility(program, _env_int("GEOCOVER_PIVOT_BUDGET",
                                              SearchConfig().pivot_budget))
    if not res.feasible:
        _emit(args, "feasible: false\n")
        return EXIT_OK
    w = normalize_weighting(res.witness) if args.normalize else res.witness
    _emit(args, "feasible: true\nweights:\n" + weights_block(w, sub) + "\n")
    return EXIT_OK


def _parse_point_path(text: str) -> tuple[str, ...]:
    points = tuple(x.strip() for x in text.split(",") if x.strip())
    if len(points) < 1:
        raise InvalidParameterError(f"empty path {text!r}")
    return points


def cmd_classify2(args) -> int:
    sys2 = tc.OrientedPathSystem(tuple(_parse_point_path(p) for p in args.path))
    orientations = tc.compatible_orientation_two(sys2)
    if orientations is None:
        _emit(args, "compatible: false\n")
        return EXIT_OK
    g, w, _paths = tc.construct_metric_two(sys2, orientations)
    sub = two_subdivision(g)
    half = tuple(x / 2 for e in range(g.num_edges) for x in (w[e], w[e]))
    lines = [
        "compatible: true",
        f"orientations: [{orientations[0]}, {orientations[1]}]",
        "weights:",
        weights_block(half, sub),
    ]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_classify3(args) -> int:
    sys3 = tc.OrientedPathSystem(tuple(_parse_point_path(p) for p in args.path))
    verdict = tc.classify_three(sys3)
    lines = [f"verdict: {verdict}"]
    if args.lp:
        lines.append(f"lp_feasible: {str(tc.system_feasible(sys3)).lower()}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _format_config_row(cfg, admissible: bool, witness) -> list[str]:
    ident = "".join(f"{x}={y}" for x, y in cfg.identifications) or "none"
    tag = f"{cfg.index}"
    if cfg.case_labels:
        tag += " (" + ",".join(cfg.case_labels) + ")"
    lines = [f"- config: {tag}"]
    for i, order in enumerate(cfg.orders, start=1):
        lines.append(f"  order{i}: [" + ", ".join(order) + "]")
    lines.append(f"  identifications: {ident}")
    lines.append(f"  admissible: {str(admissible).lower()}")
    if admissible and witness is not None:
        sub, w = witness
        lines.append("  witness:")
        lines.append(weights_block(w, sub, indent="    "))
    return lines


def cmd_appendix_b(args) -> int:
    group = args.group
    results = tc.enumerate_group(group, include_identifications=args.with_identifications)
    lines = [f"group: {group}", f"configurations: {len(results)}"]
    for cfg, admissible in results:
        witness = tc.system_witness(cfg.system(), fresh_ends=True) if admissible else None
        lines.extend(_format_config_row(cfg, admissible, witness))
    admissible_count = sum(1 for _, a in results if a)
    lines.append(f"admissible_count: {admissible_count}")
    status = EXIT_OK
    if args.diff_paper:
        problems = _diff_paper(group, results)
        if problems:
            lines.append("diff_paper: mismatch")
            lines.extend(f"- {p}" for p in problems)
            status = EXIT_DIFF
        else:
            lines.append("diff_paper: ok")
    _emit(args, "\n".join(lines) + "\n")
    return status


def _diff_paper(group: int, results) -> list[str]:
    problems = []
    if group == 1:
        distinct = {cfg.index for cfg, a in results if a and not cfg.identifications}
        ef = {cfg.index for cfg, a in results if a and cfg.identifications}
        if distinct != set(tc.GROUP1_DISTINCT_ADMISSIBLE):
            problems.append(
                f"distinct-point admissible set {sorted(distinct)} != "
                f"{sorted(tc.GROUP1_DISTINCT_ADMISSIBLE)}")
        if 9 not in ef:
            problems.append("config 9 with e=f should be admissible")
        stray = ef - {7, 9}
        if stray:
            problems.append(f"e=f variants {sorted(stray)} admissible but expected contradictions")
    else:
        got = {cfg.case_labels for cfg, a in results if a and not cfg.identifications}
        want = set(tc.GROUP2_ADMISSIBLE_LABELS)
        if got != want:
            problems.append(f"admissible cases {sorted(got)} != {sorted(want)}")
    return problems


def cmd_export_dot(args) -> int:
    g = _load_graph(args)
    cover_paths = None
    if args.cover:
        sub = two_subdivision(g)
        pool = PathPool(sub)
        with open(args.cover, encoding="utf-8") as fh:
            ids = parse_cover(fh.read(), sub, pool)
        cover_paths = [pool.paths[i] for i in ids]
        _emit(args, to_dot(sub.graph, cover_paths))
        return EXIT_OK
    _emit(args, to_dot(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="geocover",
        description="Exact metric geodesic cover numbers of finite multigraphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, census=False):
        _add_graph_source(sp)
        sp.add_argument("--mode", choices=("weighted", "unweighted"), default="weighted")
        sp.add_argument("--unweighted", dest="mode", action="store_const", const="unweighted")
        sp.add_argument("--max-m", type=int, dest="max_m")
        sp.add_argument("--normalize", action="store_true")
        sp.add_argument("--timing", action="store_true")
        sp.add_argument("--no-dedup-symmetry", action="store_true")
        sp.add_argument("--no-dedup-rerouting", action="store_true")
        sp.add_argument("--output")
        _add_budget_flags(sp)

    sp = sub.add_parser("number", help="compute the cover number")
    common(sp)
    sp.set_defaults(func=cmd_number)

    sp = sub.add_parser("distinct", help="census of distinct optimal covers")
    common(sp)
    sp.set_defaults(func=cmd_distinct)

    sp = sub.add_parser("feasible", help="test one cover for geodesic feasibility")
    _add_graph_source(sp)
    sp.add_argument("--cover", required=True, help="cover document (YAML)")
    sp.add_argument("--check-weights", metavar="FILE|unit",
                    help="verify a fixed weighting instead of solving")
    sp.add_argument("--normalize", action="store_true")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_feasible)

    sp = sub.add_parser("classify2", help="two-path orientation compatibility")
    sp.add_argument("--path", action="append", required=True,
                    help="comma-separated point labels (give twice)")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_classify2)

    sp = sub.add_parser("classify3", help="three-path catalogue verdict")
    sp.add_argument("--path", action="append", required=True,
                    help="comma-separated point labels (give three times)")
    sp.add_argument("--lp", action="store_true", help="also print the LP verdict")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_classify3)

    sp = sub.add_parser("appendix-b", help="machine-check a case grid")
    sp.add_argument("--group", type=int, choices=(1, 2), required=True)
    sp.add_argument("--diff-paper", action="store_true")
    sp.add_argument("--with-identifications", action="store_true")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_appendix_b)

    sp = sub.add_parser("export-dot", help="emit a DOT drawing")
    _add_graph_source(sp)
    sp.add_argument("--cover", help="color this cover's paths")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_export_dot)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        if exc.bracket:
            sys.stderr.write(f"bracket: [{exc.bracket[0]}, {exc.bracket[1]}]\n")
        return EXIT_BUDGET
    except (FileFormatError, UnknownStandardGraphError, InvalidParameterError,
            InconsistentConfigError, CoverageError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except GeocoverError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
