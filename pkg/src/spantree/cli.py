"""Command-line entry point: one subcommand per capability.

Counts are printed as decimal strings in every format, including JSON,
since they outgrow 64-bit integers.  Identical invocations produce
byte-identical output; the only varying fields (elapsed times) live in
atlas files, not on stdout.  Exit codes: 0 success, 2 usage or input
error, 3 required atlas data missing.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .asymptotics import (
    check_lhospital,
    cumulative_lower_bound,
    hardy_ramanujan,
    prime_main_term,
)
from .atlas import (
    DEFAULT_CAP,
    HARD_CAP,
    alpha_exact,
    azarija_skrekovski_bound,
    exact_atlas,
    load_atlas_dir,
    save_atlas,
    sedlacek_bound,
)
from .graphs import EdgeListError, complete, cycle, format_edge_list, parse_edge_list
from .partitions import (
    PartClass,
    count_partitions,
    count_partitions_up_to,
    enumerate_partitions,
    p_set_enumerate,
    p_set_size,
)
from .spanning import tau
from .witness import flower, sidecar_json, witness_family

_P_EXACT_LIMIT = 10_000


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _emit_csv(header: list[str], rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _emit_table(header: list[str] | None, rows: list[list[str]]) -> None:
    cols = len(header) if header else (len(rows[0]) if rows else 0)
    widths = [0] * cols
    for row in ([header] if header else []) + rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    for row in ([header] if header else []) + rows:
        print(" | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def _atlas_dir_arg(parser: argparse.ArgumentParser, required_hint: bool) -> None:
    parser.add_argument(
        "--atlas-dir",
        default=os.environ.get("SPANTREE_ATLAS_DIR"),
        help="directory of atlas_<n>.json files"
        + (" (or SPANTREE_ATLAS_DIR)" if required_hint else ""),
    )


def _cmd_tau(args: argparse.Namespace) -> int:
    try:
        if args.input is not None:
            try:
                text = Path(args.input).read_text(encoding="utf-8")
            except OSError as exc:
                return _fail(str(exc), 2)
            g = parse_edge_list(text)
        elif args.cycle is not None:
            g = cycle(args.cycle)
        elif args.complete is not None:
            g = complete(args.complete)
        else:
            parts = tuple(sorted(int(s) for s in args.flower.split(",")))
            g = flower(parts)
    except EdgeListError as exc:
        return _fail(f"{args.input}: {exc}", 2)
    except ValueError as exc:
        return _fail(str(exc), 2)
    value = str(tau(g))
    if args.format == "json":
        _emit_json({"tau": value})
    elif args.format == "csv":
        _emit_csv(["tau"], [[value]])
    else:
        print(value)
    return 0


def _cmd_partitions(args: argparse.Namespace) -> int:
    if args.n < 0:
        return _fail("--n must be >= 0", 2)
    part_class = PartClass(args.part_class)
    if args.cumulative and part_class is not PartClass.ODD_PRIME:
        return _fail("--cumulative is defined only for --class oddprime", 2)
    if args.list:
        stream = p_set_enumerate(args.n) if args.cumulative else enumerate_partitions(
            args.n, part_class
        )
        items = [str(p) for p in stream]
        if args.format == "json":
            _emit_json(
                {
                    "n": args.n,
                    "class": part_class.value,
                    "cumulative": args.cumulative,
                    "partitions": items,
                }
            )
        elif args.format == "csv":
            _emit_csv(["partition"], [[s] for s in items])
        else:
            for s in items:
                print(s)
        return 0
    count = p_set_size(args.n) if args.cumulative else count_partitions(args.n, part_class)
    if args.format == "json":
        _emit_json(
            {
                "n": args.n,
                "class": part_class.value,
                "cumulative": args.cumulative,
                "count": str(count),
            }
        )
    elif args.format == "csv":
        _emit_csv(["count"], [[str(count)]])
    else:
        print(count)
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    if args.n < 3:
        return _fail("--n must be >= 3", 2)
    ws = list(witness_family(args.n))
    if args.emit is not None:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        for idx, w in enumerate(ws):
            stem = f"witness_{args.n}_{idx}"
            (out / f"{stem}.edgelist").write_text(
                format_edge_list(w.graph), encoding="utf-8"
            )
            (out / f"{stem}.json").write_text(sidecar_json(w), encoding="utf-8")
    rows = [
        [str(w.partition), str(w.tau_value), str(w.graph.n_vertices), str(w.graph.n_edges)]
        for w in ws
    ]
    if args.format == "json":
        _emit_json(
            {
                "n": args.n,
                "witnesses": [
                    {
                        "parts": list(w.partition.parts),
                        "tau": str(w.tau_value),
                        "vertices": w.graph.n_vertices,
                        "edges": w.graph.n_edges,
                    }
                    for w in ws
                ],
            }
        )
    elif args.format == "csv":
        _emit_csv(["partition", "tau", "vertices", "edges"], rows)
    else:
        _emit_table(None, rows)
    return 0


def _cmd_atlas(args: argparse.Namespace) -> int:
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    try:
        record = exact_atlas(args.n, jobs=jobs, force=args.force, progress=args.progress)
    except ValueError as exc:
        return _fail(str(exc), 2)
    if args.out is not None:
        save_atlas(record, args.out)
    if args.format == "json":
        _emit_json(
            {
                "n": record.n,
                "size": record.size,
                "values": [str(v) for v in record.values],
                "graphs_scanned": record.graphs_scanned,
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["n", "size", "graphs_scanned"],
            [[str(record.n), str(record.size), str(record.graphs_scanned)]],
        )
    else:
        print(record.size)
    return 0


def _contiguous_prefix(cache: dict) -> int:
    prefix = 0
    while prefix + 1 in cache:
        prefix += 1
    return prefix


def _cmd_alpha(args: argparse.Namespace) -> int:
    if args.m < 1:
        return _fail("--m must be >= 1", 2)
    if args.atlas_dir is None:
        return _fail("--atlas-dir required (or set SPANTREE_ATLAS_DIR)", 2)
    directory = Path(args.atlas_dir)
    cache = load_atlas_dir(directory) if directory.is_dir() else {}
    if not cache:
        return _fail(f"no atlas files in {directory}", 3)
    record = alpha_exact(args.m, cache)
    prefix = _contiguous_prefix(cache)
    exact = record.status == "exact"
    shown = str(record.alpha) if exact else f"> {prefix}"
    if args.format == "json":
        _emit_json(
            {
                "m": str(args.m),
                "status": record.status,
                "alpha": record.alpha if exact else None,
                "searched_up_to": prefix,
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["m", "alpha", "status"],
            [[str(args.m), str(record.alpha) if exact else f">{prefix}", record.status]],
        )
    else:
        print(shown)
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        return _fail("--max-n must be >= 1", 2)
    cache = {}
    if args.atlas_dir is not None and Path(args.atlas_dir).is_dir():
        cache = load_atlas_dir(args.atlas_dir)
    header = ["n", "p_set", "atlas", "lower_log", "sedlacek", "azarija"]
    rows = []
    payload = []
    for n in range(1, args.max_n + 1):
        atlas_size = cache[n].size if n in cache else None
        lower = cumulative_lower_bound(n).log_value if n >= 2 else None
        sed = sedlacek_bound(n)
        azs = azarija_skrekovski_bound(n)
        payload.append(
            {
                "n": n,
                "p_set": str(p_set_size(n)),
                "atlas": atlas_size,
                "lower_log": lower,
                "sedlacek": sed,
                "azarija": azs,
            }
        )
        rows.append(
            [
                str(n),
                str(p_set_size(n)),
                "-" if atlas_size is None else str(atlas_size),
                "-" if lower is None else f"{lower:.6f}",
                "-" if sed is None else str(sed),
                "-" if azs is None else str(azs),
            ]
        )
    if args.format == "json":
        _emit_json({"rows": payload})
    elif args.format == "csv":
        _emit_csv(header, rows)
    else:
        _emit_table(header, rows)
    return 0


def _cmd_asymptotics(args: argparse.Namespace) -> int:
    try:
        grid = [int(s) for s in args.grid.split(",")]
    except ValueError:
        return _fail("--grid must be comma-separated integers", 2)
    if not grid:
        return _fail("--grid must be nonempty", 2)
    if any(a > b for a, b in zip(grid, grid[1:])):
        return _fail("--grid must be ascending", 2)
    if any(n < 2 for n in grid):
        return _fail("--grid values must be >= 2", 2)
    ratios: dict[int, float] = {}
    if args.check_lhospital:
        try:
            report = check_lhospital(grid)
        except ValueError as exc:
            return _fail(str(exc), 2)
        ratios = dict(report.rows)
    small = [n for n in grid if n <= _P_EXACT_LIMIT]
    exact_table = count_partitions_up_to(max(small), PartClass.ALL) if small else []
    header = ["n", "p_exact", "hr_estimate", "ratio", "f_log", "lower_log"]
    if args.check_lhospital:
        header.append("r")
    rows = []
    payload = []
    for n in grid:
        p_exact = exact_table[n] if n <= _P_EXACT_LIMIT else None
        hr = hardy_ramanujan(n)
        ratio = None
        if p_exact is not None and hr.value is not None:
            ratio = p_exact / hr.value
        f_log = prime_main_term(n).log_value
        lower_log = cumulative_lower_bound(n).log_value
        entry = {
            "n": n,
            "p_exact": None if p_exact is None else str(p_exact),
            "hr_log": hr.log_value,
            "hr_value": hr.value,
            "ratio": ratio,
            "f_log": f_log,
            "lower_log": lower_log,
        }
        row = [
            str(n),
            "-" if p_exact is None else str(p_exact),
            f"{hr.value:.6e}" if hr.value is not None else f"exp({hr.log_value:.6f})",
            "-" if ratio is None else f"{ratio:.6f}",
            f"{f_log:.6f}",
            f"{lower_log:.6f}",
        ]
        if args.check_lhospital:
            entry["r"] = ratios[n]
            row.append(f"{ratios[n]:.6f}")
        payload.append(entry)
        rows.append(row)
    if args.format == "json":
        _emit_json({"rows": payload})
    elif args.format == "csv":
        _emit_csv(header, rows)
    else:
        _emit_table(header, rows)
    return 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=["table", "csv", "json"], default="table",
        help="output format (default: table)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spantree",
        description="Exact spanning-tree counts: witnesses, atlases, asymptotics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tau = sub.add_parser("tau", help="spanning-tree count of one graph")
    src = p_tau.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="edge-list file")
    src.add_argument("--cycle", type=int, help="cycle length")
    src.add_argument("--complete", type=int, help="complete-graph order")
    src.add_argument("--flower", help="comma-separated cycle lengths")
    _add_format(p_tau)

    p_parts = sub.add_parser("partitions", help="restricted partition counts")
    p_parts.add_argument("--n", type=int, required=True)
    p_parts.add_argument(
        "--class", dest="part_class", required=True, choices=["all", "prime", "oddprime"]
    )
    p_parts.add_argument("--list", action="store_true", help="list members, one per line")
    p_parts.add_argument(
        "--cumulative", action="store_true",
        help="all odd-prime partitions with sum <= n (class oddprime only)",
    )
    _add_format(p_parts)

    p_wit = sub.add_parser("witness", help="one graph per odd-prime partition")
    p_wit.add_argument("--n", type=int, required=True)
    p_wit.add_argument("--emit", help="write edge lists and sidecars to this directory")
    _add_format(p_wit)

    p_atlas = sub.add_parser("atlas", help="exhaustive realizable-count set")
    p_atlas.add_argument("--n", type=int, required=True)
    p_atlas.add_argument("--jobs", type=int, default=None, help="worker processes")
    p_atlas.add_argument("--out", help="write atlas JSON here")
    p_atlas.add_argument(
        "--force", action="store_true", help=f"allow n up to {HARD_CAP} (default cap {DEFAULT_CAP})"
    )
    p_atlas.add_argument("--progress", action="store_true", help="report chunk completion")
    _add_format(p_atlas)

    p_alpha = sub.add_parser("alpha", help="least vertex count realizing m")
    p_alpha.add_argument("--m", type=int, required=True)
    _atlas_dir_arg(p_alpha, required_hint=True)
    _add_format(p_alpha)

    p_bounds = sub.add_parser("bounds", help="per-n family sizes and bound table")
    p_bounds.add_argument("--max-n", type=int, required=True)
    _atlas_dir_arg(p_bounds, required_hint=False)
    _add_format(p_bounds)

    p_asym = sub.add_parser("asymptotics", help="growth formulas on a grid")
    p_asym.add_argument("--grid", required=True, help="comma-separated ascending n values")
    p_asym.add_argument(
        "--check-lhospital", action="store_true",
        help="append the derivative/main-term ratio column",
    )
    _add_format(p_asym)

    return parser


_COMMANDS = {
    "tau": _cmd_tau,
    "partitions": _cmd_partitions,
    "witness": _cmd_witness,
    "atlas": _cmd_atlas,
    "alpha": _cmd_alpha,
    "bounds": _cmd_bounds,
    "asymptotics": _cmd_asymptotics,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
