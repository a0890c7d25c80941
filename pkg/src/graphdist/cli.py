"""Command-line interface for generating, summarizing, and comparing graphs.

Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
3 domain error (e.g. a graph too small for pairwise distances).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .compare import ComparisonResult, EmpiricalCdf, compare_cdfs
from .generators import (
    ErSpec,
    SbmSpec,
    components_metadata,
    generate_er,
    generate_sbm,
    plant_components,
)
from .graph import (
    EdgeListParseError,
    Graph,
    GraphSummary,
    parse_edge_list,
    serialize_edge_list,
    summarize,
)
from .jaccard import all_pairs_distances, all_pairs_histogram

_STAT_COLUMNS = (
    "num_vertices",
    "num_edges",
    "density",
    "min_degree",
    "mean_degree",
    "max_degree",
    "num_components",
)


@dataclass(frozen=True)
class MatrixReport:
    """Pairwise comparison grid: upper-triangular cells, None elsewhere."""

    metric: str
    graph_ids: tuple[str, ...]
    cells: tuple[tuple[float | None, ...], ...]
    p_values: tuple[tuple[float | None, ...], ...] | None = None
    raw_cells: tuple[tuple[float | None, ...], ...] | None = None


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; this CLI reserves 2 for
    input errors, so usage failures are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _probability(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must be in [0, 1], got {text}")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _node_list(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated node counts, got {text!r}"
        )
    if not sizes or any(size < 0 for size in sizes):
        raise argparse.ArgumentTypeError(
            f"expected comma-separated node counts, got {text!r}"
        )
    return sizes


def _order(text: str) -> float:
    value = float(text)
    if value < 1.0:
        raise argparse.ArgumentTypeError(f"order must be >= 1, got {text}")
    return value


def _add_output_flag(parser) -> None:
    parser.add_argument(
        "-o", "--output", default="-", help="output path, or - for stdout (default)"
    )


def _add_format_flag(parser, default: str) -> None:
    parser.add_argument(
        "--format",
        choices=("md", "csv", "json"),
        default=default,
        help=f"output format (default: {default})",
    )


def _add_threads_flag(parser) -> None:
    parser.add_argument(
        "--threads",
        type=_positive_int,
        default=None,
        help="worker threads for the all-pairs computation (default: all CPUs); "
        "results are identical for any value",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="graphdist",
        description="Compare graphs through their pairwise neighborhood-distance "
        "distributions.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    gen = sub.add_parser("gen", help="generate a random graph and write its edge list")
    gen_sub = gen.add_subparsers(dest="model", required=True, metavar="model")

    gen_er = gen_sub.add_parser("er", help="independent-edge random graph")
    gen_er.add_argument("--nodes", type=_nonneg_int, required=True)
    gen_er.add_argument("--prob", type=_probability, required=True)
    gen_er.add_argument("--seed", type=_seed, required=True)
    _add_output_flag(gen_er)
    gen_er.set_defaults(handler=_cmd_gen_er)

    gen_sbm = gen_sub.add_parser("sbm", help="block-structured random graph")
    gen_sbm.add_argument("--nodes", type=_nonneg_int, required=True)
    gen_sbm.add_argument("--size-min", type=_positive_int, required=True)
    gen_sbm.add_argument("--size-max", type=_positive_int, required=True)
    gen_sbm.add_argument("--pin", type=_probability, required=True)
    gen_sbm.add_argument("--pout", type=_probability, required=True)
    gen_sbm.add_argument("--seed", type=_seed, required=True)
    _add_output_flag(gen_sbm)
    gen_sbm.set_defaults(handler=_cmd_gen_sbm)

    gen_cc = gen_sub.add_parser(
        "er-components",
        help="disjoint union of independent-edge graphs (one per --nodes entry); "
        "component k draws from seed+k",
    )
    gen_cc.add_argument("--nodes", type=_node_list, required=True, metavar="N1,N2,...")
    gen_cc.add_argument("--prob", type=_probability, required=True)
    gen_cc.add_argument("--seed", type=_seed, required=True)
    _add_output_flag(gen_cc)
    gen_cc.set_defaults(handler=_cmd_gen_components)

    stats = sub.add_parser("stats", help="summary row for a graph file")
    stats.add_argument("graph", help="edge-list path, or - for stdin")
    _add_format_flag(stats, "md")
    _add_output_flag(stats)
    stats.set_defaults(handler=_cmd_stats)

    distances = sub.add_parser(
        "distances", help="all-pairs distance sample (or histogram) as CSV"
    )
    distances.add_argument("graph", help="edge-list path, or - for stdin")
    distances.add_argument(
        "--bins",
        type=_positive_int,
        default=None,
        help="emit an equal-width histogram over [0, 1] instead of raw values",
    )
    _add_threads_flag(distances)
    _add_output_flag(distances)
    distances.set_defaults(handler=_cmd_distances)

    compare = sub.add_parser("compare", help="compare two graphs' distance samples")
    compare.add_argument("graph_a", help="edge-list path, or - for stdin")
    compare.add_argument("graph_b", help="edge-list path, or - for stdin")
    compare.add_argument("--order", type=_order, default=2.0)
    _add_threads_flag(compare)
    _add_format_flag(compare, "json")
    _add_output_flag(compare)
    compare.set_defaults(handler=_cmd_compare)

    matrix = sub.add_parser("matrix", help="pairwise comparison table for many graphs")
    matrix.add_argument("graphs", nargs="+", help="edge-list paths")
    matrix.add_argument(
        "--metric", choices=("both", "ks", "wasserstein"), default="both"
    )
    matrix.add_argument("--order", type=_order, default=2.0)
    _add_threads_flag(matrix)
    _add_format_flag(matrix, "md")
    _add_output_flag(matrix)
    matrix.set_defaults(handler=_cmd_matrix)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse printed the message already
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.handler(args)
    except EdgeListParseError as exc:
        print(f"graphdist: parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"graphdist: cannot read input: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"graphdist: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


# ---------------------------------------------------------------- I/O helpers


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return parse_edge_list(text)
    except EdgeListParseError as exc:
        raise EdgeListParseError(f"{path}: {exc}") from exc


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _graph_id(path: str, taken: set[str]) -> str:
    base = "stdin" if path == "-" else (Path(path).stem or path)
    name = base
    suffix = 2
    while name in taken:
        name = f"{base}#{suffix}"
        suffix += 1
    taken.add(name)
    return name


# ------------------------------------------------------------------ rendering


def _summary_csv_row(s: GraphSummary) -> str:
    return (
        f"{s.num_vertices},{s.num_edges},{s.density:.2f},{s.min_degree},"
        f"{s.mean_degree:.2f},{s.max_degree},{s.num_components}"
    )


def _md_table(header: list[str], rows: list[list[str]]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def _render_summary(s: GraphSummary, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(s.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        return _summary_csv_row(s) + "\n"
    cells = [
        str(s.num_vertices),
        str(s.num_edges),
        f"{s.density:.2f}",
        str(s.min_degree),
        f"{s.mean_degree:.2f}",
        str(s.max_degree),
        str(s.num_components),
    ]
    return _md_table(list(_STAT_COLUMNS), [cells])


def _render_comparison(result: ComparisonResult, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.to_dict(), indent=2) + "\n"
    cells = [
        f"{result.ks_stat:.2f}",
        f"{result.p_value:.2f}",
        f"{result.wasserstein_raw:.2f}",
        f"{result.wasserstein_norm:.2f}",
        f"{result.order:.2f}",
        str(result.n1),
        str(result.n2),
    ]
    header = [
        "ks_stat",
        "p_value",
        "wasserstein_raw",
        "wasserstein_norm",
        "order",
        "n1",
        "n2",
    ]
    if fmt == "csv":
        return ",".join(header) + "\n" + ",".join(cells) + "\n"
    return _md_table(header, [cells])


def _cell(value: float | None) -> str:
    return "NA" if value is None else f"{value:.2f}"


def _render_matrix_md(report: MatrixReport) -> str:
    title = {
        "ks": "**K-S statistic (p-values in parentheses)**",
        "wasserstein": "**Wasserstein (normalized)**",
    }[report.metric]
    header = ["graph", *report.graph_ids]
    rows = []
    for i, row_id in enumerate(report.graph_ids):
        rows.append([row_id, *(_cell(v) for v in report.cells[i])])
        if report.p_values is not None:
            p_row = [
                "" if p is None else f"({p:.2f})" for p in report.p_values[i]
            ]
            if any(p_row):
                rows.append(["", *p_row])
    return title + "\n\n" + _md_table(header, rows)


def _render_matrix_csv(report: MatrixReport) -> str:
    def grid(name: str, cells) -> str:
        lines = [f"metric,{name}", "id," + ",".join(report.graph_ids)]
        for row_id, row in zip(report.graph_ids, cells):
            lines.append(row_id + "," + ",".join(_cell(v) for v in row))
        return "\n".join(lines) + "\n"

    blocks = [grid(report.metric if report.metric != "wasserstein" else "wasserstein_norm", report.cells)]
    if report.p_values is not None:
        blocks.append(grid("ks_p_value", report.p_values))
    return "\n".join(blocks)


def _report_json_dict(report: MatrixReport) -> dict:
    payload: dict = {
        "metric": report.metric,
        "cells": [list(row) for row in report.cells],
    }
    if report.p_values is not None:
        payload["p_values"] = [list(row) for row in report.p_values]
    if report.raw_cells is not None:
        payload["raw_cells"] = [list(row) for row in report.raw_cells]
    return payload


# ------------------------------------------------------------------- commands


def _emit_generated(graph: Graph, metadata: dict[str, str], output: str) -> int:
    _write_text(output, serialize_edge_list(graph, metadata))
    s = summarize(graph)
    print(
        f"generated: {_summary_csv_row(s)}  "
        f"({','.join(_STAT_COLUMNS)})",
        file=sys.stderr,
    )
    return 0


def _cmd_gen_er(args) -> int:
    spec = ErSpec(args.nodes, args.prob, args.seed)
    return _emit_generated(generate_er(spec), spec.metadata(), args.output)


def _cmd_gen_sbm(args) -> int:
    spec = SbmSpec(
        args.nodes, args.size_min, args.size_max, args.pin, args.pout, args.seed
    )
    return _emit_generated(generate_sbm(spec), spec.metadata(), args.output)


def _cmd_gen_components(args) -> int:
    specs = [
        ErSpec(n, args.prob, args.seed + k) for k, n in enumerate(args.nodes)
    ]
    return _emit_generated(
        plant_components(specs), components_metadata(specs), args.output
    )


def _cmd_stats(args) -> int:
    graph = _read_graph(args.graph)
    _write_text(args.output, _render_summary(summarize(graph), args.format))
    return 0


def _cmd_distances(args) -> int:
    graph = _read_graph(args.graph)
    if args.bins is not None:
        edges, counts = all_pairs_histogram(graph, args.bins, threads=args.threads)
        lines = ["bin_lo,bin_hi,count"]
        lines.extend(
            f"{lo},{hi},{int(c)}"
            for lo, hi, c in zip(edges[:-1], edges[1:], counts)
        )
    else:
        sample = all_pairs_distances(graph, threads=args.threads)
        lines = ["zeta"]
        lines.extend(f"{value:.4f}" for value in sample.values)
    _write_text(args.output, "\n".join(lines) + "\n")
    return 0


def _cmd_compare(args) -> int:
    taken: set[str] = set()
    sample_a = all_pairs_distances(
        _read_graph(args.graph_a),
        threads=args.threads,
        source_id=_graph_id(args.graph_a, taken),
    )
    sample_b = all_pairs_distances(
        _read_graph(args.graph_b),
        threads=args.threads,
        source_id=_graph_id(args.graph_b, taken),
    )
    result = compare_cdfs(
        EmpiricalCdf.from_sample(sample_a.values),
        EmpiricalCdf.from_sample(sample_b.values),
        args.order,
    )
    _write_text(args.output, _render_comparison(result, args.format))
    return 0


def _build_reports(args) -> tuple[list[MatrixReport], tuple[str, ...]]:
    taken: set[str] = set()
    ids = tuple(_graph_id(path, taken) for path in args.graphs)
    # One pass per file: parse, compute the distance sample, keep only its ECDF.
    cdfs = []
    for path in args.graphs:
        sample = all_pairs_distances(_read_graph(path), threads=args.threads)
        cdfs.append(EmpiricalCdf.from_sample(sample.values))
    k = len(cdfs)
    none_row = lambda: [None] * k  # noqa: E731
    ks_cells, p_cells = [none_row() for _ in range(k)], [none_row() for _ in range(k)]
    w_cells, w_raw = [none_row() for _ in range(k)], [none_row() for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            result = compare_cdfs(cdfs[i], cdfs[j], args.order)
            ks_cells[i][j] = result.ks_stat
            p_cells[i][j] = result.p_value
            w_cells[i][j] = result.wasserstein_norm
            w_raw[i][j] = result.wasserstein_raw
    freeze = lambda rows: tuple(tuple(row) for row in rows)  # noqa: E731
    reports = []
    if args.metric in ("both", "ks"):
        reports.append(
            MatrixReport("ks", ids, freeze(ks_cells), p_values=freeze(p_cells))
        )
    if args.metric in ("both", "wasserstein"):
        reports.append(
            MatrixReport("wasserstein", ids, freeze(w_cells), raw_cells=freeze(w_raw))
        )
    return reports, ids


def _cmd_matrix(args) -> int:
    reports, ids = _build_reports(args)
    if args.format == "json":
        payload = {
            "graph_ids": list(ids),
            "order": args.order,
            "reports": [_report_json_dict(r) for r in reports],
        }
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        text = "\n".join(_render_matrix_csv(r) for r in reports)
    else:
        text = "\n".join(_render_matrix_md(r) for r in reports)
    _write_text(args.output, text)
    return 0
