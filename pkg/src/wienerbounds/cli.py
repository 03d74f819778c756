"""Command-line interface.

Subcommands: compute, construct, closed-form, enumerate, verify, lemmas,
search.  Exit codes: 0 success (and, for verify/lemmas, every claim
holding), 1 claim violation (the counterexample is part of the report),
2 usage or input error.  Data goes to stdout, diagnostics to stderr.
Exact integer and rational values serialize as decimal strings in JSON so
consumers never round them through floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import enumeration, extremal, families
from .closed_forms import (
    cycle_closed_form,
    path_closed_form,
    tadpole_closed_form,
    triangle_star_closed_form,
)
from .graphs import Graph, GraphError, format_edge_list, parse_edge_list
from .indices import (
    IndexValue,
    generalized_wiener,
    harary,
    hyper_wiener,
    q_wiener,
    reciprocal_wiener,
    tsz_index,
    wiener,
)
from .weights import QWienerWeight, WeightError, parse_weight_spec

USAGE_ERROR = 2
CLAIM_VIOLATION = 1


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _emit_rows(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        _emit_json(rows)
    elif fmt == "csv":
        header = list(rows[0].keys()) if rows else []
        print(",".join(header))
        for row in rows:
            print(",".join(str(row[k]) for k in header))
    else:
        for row in rows:
            print("\t".join(str(v) for v in row.values()))


def _index_row(iv: IndexValue) -> dict:
    return {"index_name": iv.index_name, "value": iv.to_json_value(), "mode": iv.mode}


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc


def _parse_shard(text: str) -> tuple[int, int]:
    try:
        i, k = text.split("/")
        shard = (int(i), int(k))
    except ValueError:
        raise ValueError(f"bad shard spec {text!r}, expected i/k") from None
    if not (0 <= shard[0] < shard[1]):
        raise ValueError(f"bad shard spec {text!r}: need 0 <= i < k")
    return shard


def _cmd_compute(args) -> int:
    g = _load_graph(args.graph)
    rows = []
    if args.weight:
        h = parse_weight_spec(args.weight)
        rows.append(_index_row(generalized_wiener(g, h)))
    if args.all_named:
        rows.append(_index_row(wiener(g)))
        rows.append(_index_row(hyper_wiener(g)))
        rows.append(_index_row(harary(g)))
        rows.append(_index_row(reciprocal_wiener(g)))
        rows.append(_index_row(tsz_index(g)))
        if args.q is not None:
            for variant in (1, 2, 3):
                rows.append(_index_row(q_wiener(g, args.q, variant)))
    if not rows:
        raise ValueError("nothing to compute: pass --weight and/or --all-named")
    _emit_rows(rows, args.format)
    return 0


def _cmd_construct(args) -> int:
    if args.family == "path":
        g = families.path(args.n)
    elif args.family == "cycle":
        g = families.cycle(args.n)
    elif args.family == "star":
        g = families.star(args.n)
    elif args.family == "jn":
        g = families.triangle_star(args.n)
    else:  # grn
        if args.r is None:
            raise ValueError("--r is required for the grn family")
        g = families.tadpole(args.r, args.n)
    text = format_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_closed_form(args) -> int:
    h = parse_weight_spec(args.weight)
    if args.formula == "path":
        iv = path_closed_form(args.n, h)
    elif args.formula == "cycle":
        iv = cycle_closed_form(args.n, h)
    elif args.formula == "jn":
        iv = triangle_star_closed_form(args.n, h)
    else:  # F
        if args.r is None:
            raise ValueError("--r is required for formula F")
        iv = tadpole_closed_form(args.r, args.n, h)
    _emit_rows([_index_row(iv)], args.format)
    return 0


def _cmd_enumerate(args) -> int:
    shard = _parse_shard(args.shard) if args.shard else None
    if args.count_only:
        if args.unlabeled:
            count = sum(1 for _ in enumeration.enumerate_unicyclic_unlabeled(args.n, cap=args.cap))
            _emit_json({"n": args.n, "unlabeled_count": count})
        else:
            count = 0
            cyclen = 0
            for _masks, r in enumeration.iter_unicyclic_edge_masks(args.n, shard, cap=args.cap):
                count += 1
                cyclen += r
            _emit_json({"n": args.n, "labeled_count": count, "cycle_length_sum": cyclen})
        return 0
    stream = (
        enumeration.enumerate_unicyclic_unlabeled(args.n, cap=args.cap)
        if args.unlabeled
        else enumeration.enumerate_unicyclic_labeled(args.n, shard, cap=args.cap)
    )
    for g in stream:
        edges = list(g.edges())
        if args.format == "json":
            _emit_json({"edges": edges})
        else:
            print(" ".join(f"{u}-{v}" for u, v in edges))
    return 0


def _report_payload(report: extremal.VerificationReport) -> dict:
    payload = {
        "n": report.n,
        "weight": report.weight_description,
        "monotonicity": report.monotonicity.value,
        "graphs_scanned": report.graphs_scanned,
        "cycle_length_sum": report.cycle_length_sum,
        "min_value": report.min_value.to_json_value(),
        "max_value": report.max_value.to_json_value(),
        "mode": report.min_value.mode,
        "argmin_count": report.argmin_count,
        "argmax_count": report.argmax_count,
        "argmin_classes": len(report.argmin_forms),
        "argmax_classes": len(report.argmax_forms),
        "argmin_example": [list(e) for e in report.argmin_example],
        "argmax_example": [list(e) for e in report.argmax_example],
        "applicable": report.applicable,
    }
    if report.applicable:
        payload.update(
            {
                "expected_min": report.expected_min.to_json_value(),
                "expected_max": report.expected_max.to_json_value(),
                "min_value_ok": report.min_value_ok,
                "min_unique_ok": report.min_unique_ok,
                "max_value_ok": report.max_value_ok,
                "max_unique_ok": report.max_unique_ok,
                "all_ok": report.claims_ok(),
            }
        )
    return payload


def _cmd_verify(args) -> int:
    h = parse_weight_spec(args.weight)
    if isinstance(h, QWienerWeight) and h.variant == 2 and h.diameter is None:
        raise WeightError(
            "verification needs a fixed weight function; use q2:Q:L with an explicit diameter"
        )
    if args.shard:
        shard = _parse_shard(args.shard)
        summary = extremal.scan_extremes(args.n, [h], shard=shard, cap=args.cap)
        sc = summary.per_weight[0]
        _emit_json(
            {
                "n": args.n,
                "weight": h.description,
                "shard": args.shard,
                "partial": True,
                "graphs_scanned": summary.graphs_scanned,
                "cycle_length_sum": summary.cycle_length_sum,
                "min_value": str(sc.min_value) if h.exact else sc.min_value,
                "max_value": str(sc.max_value) if h.exact else sc.max_value,
                "argmin_count": sc.argmin_count,
                "argmax_count": sc.argmax_count,
            }
        )
        return 0
    report = extremal.verify_theorem(
        args.n, h, jobs=args.jobs, rel_tol=args.tol, cap=args.cap
    )
    payload = _report_payload(report)
    if args.format == "csv":
        flat = dict(payload)
        for key in ("argmin_example", "argmax_example"):
            flat[key] = " ".join(f"{u}-{v}" for u, v in payload[key])
        _emit_rows([flat], "csv")
    else:
        _emit_json(payload)
    ok = report.claims_ok()
    return 0 if ok is None or ok else CLAIM_VIOLATION


def _cmd_lemmas(args) -> int:
    h = parse_weight_spec(args.weight)
    results = extremal.check_f3_dominance(args.nmax, h)
    violations = [(r, n) for r, n, ok in results if not ok]
    payload = {
        "nmax": args.nmax,
        "weight": h.description,
        "pairs_checked": len(results),
        "violations": [list(v) for v in violations],
    }
    if args.format == "csv":
        print("r,n,ok")
        for r, n, ok in results:
            print(f"{r},{n},{ok}")
    else:
        _emit_json(payload)
    return CLAIM_VIOLATION if violations else 0


def _cmd_search(args) -> int:
    g = _load_graph(args.graph)
    h = parse_weight_spec(args.weight)
    moves: list[dict] = []

    def on_move(move, before, after):
        moves.append(
            {
                "kind": move.kind,
                "vertices": list(move.vertices),
                "value_before": str(before),
                "value_after": str(after),
            }
        )

    start_value = generalized_wiener(g, h)
    result = extremal.local_search_max(g, h, on_move=on_move)
    final_value = generalized_wiener(result, h)
    _emit_json(
        {
            "weight": h.description,
            "initial_value": start_value.to_json_value(),
            "final_value": final_value.to_json_value(),
            "moves": moves,
            "final_edges": [list(e) for e in result.edges()],
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wienerbounds",
        description="Weighted Wiener indices on graphs and exhaustive extremal checks "
        "over unicyclic graphs.",
    )
    parser.add_argument(
        "--format", choices=("plain", "json", "csv"), default="json", help="output format"
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized helpers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute indices of a graph from an edge-list file")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--weight", help="weight spec, e.g. power:1, q1:0.5, table:1,2,3")
    p.add_argument("--all-named", action="store_true", help="also emit every named index")
    p.add_argument("--q", type=float, help="q for the q-variants under --all-named")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("construct", help="write a named family member as an edge list")
    p.add_argument("--family", required=True, choices=("path", "cycle", "star", "jn", "grn"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, help="cycle length for the grn family")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("closed-form", help="evaluate a closed-form index value")
    p.add_argument("--formula", required=True, choices=("path", "cycle", "jn", "F"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, help="cycle length for formula F")
    p.add_argument("--weight", required=True)
    p.set_defaults(func=_cmd_closed_form)

    p = sub.add_parser("enumerate", help="stream labeled (or unlabeled) unicyclic graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--unlabeled", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--shard", help="process only Prufer ranks == i mod k, as i/k")
    p.add_argument("--cap", type=int, default=enumeration.DEFAULT_LABELED_CAP)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustively verify the extremal bounds for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--shard", help="emit a mergeable partial scan for shard i/k")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the scan")
    p.add_argument("--tol", type=float, default=1e-9, help="relative tolerance for float weights")
    p.add_argument("--cap", type=int, default=enumeration.DEFAULT_LABELED_CAP)
    p.add_argument("--json", dest="format", action="store_const", const="json")
    p.add_argument("--csv", dest="format", action="store_const", const="csv")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lemmas", help="sweep the closed-form dominance comparisons")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=_cmd_lemmas)

    p = sub.add_parser("search", help="maximize an index by branch-relocation local search")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--weight", required=True)
    p.set_defaults(func=_cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return USAGE_ERROR if exc.code not in (0,) else 0
    if getattr(args, "cap", None) is not None and args.cap > enumeration.HARD_CAP:
        print(
            f"error: --cap {args.cap} exceeds the hard ceiling {enumeration.HARD_CAP}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    try:
        return args.func(args)
    except (GraphError, WeightError, enumeration.EnumerationCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
