"""Command-line interface.

Subcommands: field, ksum, tracedist, weights, moments, table, verify-all.
All big integers are emitted as decimal strings (JSON numbers would lose
precision past 2^53); output is deterministic byte-for-byte for a fixed
configuration and always newline-terminated.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .field import Field
from .ksums import brute_moment, kloosterman_table
from .moments import (
    default_truncation,
    moisio_moments,
    recursive_moments,
    salie_moments,
)
from .slgroup import group_order, trace_distribution_closed, trace_distribution_oracle
from .tables import TABLE_PARAMS
from .verify import run_all_checks
from .weights import weight_distribution, weight_distribution_direct


def _parse_int(text: str) -> int:
    """Accept decimal, 0x.., 0o.. and 0b.. integer literals."""
    return int(text, 0)


def _make_field(args) -> Field:
    poly = _parse_int(args.poly) if args.poly else None
    return Field(args.r, poly)


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload) -> None:
    _emit(args, json.dumps(payload, indent=2))


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


def cmd_field(args) -> int:
    field = _make_field(args)
    if field.r > 4:
        raise ValueError("table printout supported for r <= 4 only")
    lines = [f"# multiplication table, GF(2^{field.r}), poly=0b{field.poly:b}"]
    for a in field.elements():
        lines.append(",".join(str(field.mul(a, b)) for b in field.elements()))
    lines.append("# trace table")
    lines.append("a,trace")
    for a in field.elements():
        lines.append(f"{a},{field.trace(a)}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_ksum(args) -> int:
    field = _make_field(args)
    table = kloosterman_table(field, args.m)
    hist: dict[int, int] = {}
    for v in table.values():
        hist[v] = hist.get(v, 0) + 1
    payload = {
        "q": field.q,
        "r": field.r,
        "poly": field.poly,
        "m": args.m,
        "values": [{"a": a, "k": str(table[a])} for a in sorted(table)],
        "histogram": {str(t): hist[t] for t in sorted(hist)},
    }
    _emit_json(args, payload)
    return 0


def cmd_tracedist(args) -> int:
    field = _make_field(args)
    if args.oracle:
        dist = trace_distribution_oracle(args.n, field)
    else:
        dist = trace_distribution_closed(args.n, field)
    payload = {
        "n": args.n,
        "q": field.q,
        "N": str(group_order(args.n, field)),
        "counts": [
            {"beta": b, "n_beta": str(dist.counts[b])} for b in sorted(dist.counts)
        ],
    }
    _emit_json(args, payload)
    return 0


def _resolve_max_weight(args, field: Field) -> int:
    n_len = group_order(args.n, field)
    if args.max_weight is None:
        return min(32, n_len)
    if args.max_weight == "full":
        return n_len
    w = _parse_int(args.max_weight)
    if w < 0:
        raise ValueError("--max-weight must be nonnegative")
    return w


def cmd_weights(args) -> int:
    field = _make_field(args)
    w = _resolve_max_weight(args, field)
    wd = weight_distribution(args.n, field, w, args.algorithm)
    if args.format == "csv":
        lines = ["w,frequency"]
        lines += [f"{i},{c}" for i, c in enumerate(wd.counts)]
        _emit(args, "\n".join(lines))
        return 0
    payload = {
        "n": args.n,
        "q": field.q,
        "N": str(group_order(args.n, field)),
        "W": wd.W,
        "counts": [str(c) for c in wd.counts],
    }
    _emit_json(args, payload)
    return 0


def cmd_moments(args) -> int:
    field = _make_field(args)
    n = args.n
    h_max = args.max_h
    if h_max < 0:
        raise ValueError("--max-h must be nonnegative")
    if args.method in ("salie", "moisio") and n != 2:
        raise ValueError(f"method {args.method!r} applies to n = 2 only")
    if args.method == "moisio" and h_max > 10:
        raise ValueError("closed forms cover h <= 10 only")
    cross: dict[str, bool] = {}
    if args.method == "brute":
        values = [brute_moment(field, n - 1, h) for h in range(h_max + 1)]
    elif args.method == "salie":
        values = salie_moments(field, h_max)
    elif args.method == "moisio":
        values = moisio_moments(field, h_max)
    else:
        values = _recursion_moments(n, field, h_max)
        if args.method == "all":
            cross["recursion_vs_definition"] = (
                [brute_moment(field, n - 1, h) for h in range(h_max + 1)] == values
            )
            if n == 2:
                cross["tuple_count_route"] = salie_moments(field, h_max) == values
                cross["closed_forms_h10"] = (
                    moisio_moments(field, min(h_max, 10)) == values[: min(h_max, 10) + 1]
                )
    payload = {
        "n": n,
        "q": field.q,
        "H": h_max,
        "values": [str(v) for v in values],
        "cross_checks": cross,
    }
    _emit_json(args, payload)
    if cross and not all(cross.values()):
        return 1
    return 0


def _recursion_moments(n: int, field: Field, h_max: int) -> list[int]:
    w = default_truncation(n, field, h_max)
    wd = weight_distribution_direct(trace_distribution_closed(n, field), w)
    return recursive_moments(n, field, wd, h_max)


def cmd_table(args) -> int:
    info = TABLE_PARAMS[args.table_id]
    field = Field(info["r"])
    top = len(info["values"]) - 1
    if info["kind"] == "weights":
        wd = weight_distribution_direct(
            trace_distribution_closed(info["n"], field), top
        )
        values = wd.counts
        key = "w"
    else:
        values = _recursion_moments(info["n"], field, top)
        key = "h"
    if args.format == "csv":
        lines = [f"{key},value"]
        lines += [f"{i},{v}" for i, v in enumerate(values)]
        _emit(args, "\n".join(lines))
        return 0
    payload = {
        "table": args.table_id,
        "n": info["n"],
        "q": field.q,
        "rows": [{key: i, "value": str(v)} for i, v in enumerate(values)],
    }
    _emit_json(args, payload)
    return 0


def cmd_verify_all(args) -> int:
    results = run_all_checks()
    for res in results:
        tag = "PASS" if res.ok else "FAIL"
        print(f"{tag}  {res.name}: {res.detail}", file=sys.stderr)
    payload = {
        "checks": [
            {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
        ],
        "passed": sum(r.ok for r in results),
        "failed": sum(not r.ok for r in results),
        "ok": all(r.ok for r in results),
    }
    _emit_json(args, payload)
    return 0 if payload["ok"] else 1


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------


def _add_field_args(p, with_n=False):
    if with_n:
        p.add_argument("--n", type=int, default=2,
                       help="matrix size, a power of 2 (default 2)")
    p.add_argument("--r", type=int, required=True,
                   help="extension degree of GF(2^r)")
    p.add_argument("--poly", default=None,
                   help="reduction polynomial bitmask (0b../0x../decimal); "
                        "defaults to the built-in table for r <= 8")
    p.add_argument("--output", default=None, help="write to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kloosterman",
        description="Exact Kloosterman sums, SL(n,q) trace codes and power moments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="print multiplication/trace tables (r <= 4) as CSV")
    _add_field_args(p)
    p.set_defaults(fn=cmd_field)

    p = sub.add_parser("ksum", help="table of K_m values over all nonzero a")
    _add_field_args(p)
    p.add_argument("--m", type=int, default=1, help="dimension m (default 1)")
    p.set_defaults(fn=cmd_ksum)

    p = sub.add_parser("tracedist", help="trace distribution of SL(n,q)")
    _add_field_args(p, with_n=True)
    p.add_argument("--oracle", action="store_true",
                   help="force the matrix-enumeration path")
    p.set_defaults(fn=cmd_tracedist)

    p = sub.add_parser("weights", help="weight distribution of the SL(n,q) code")
    _add_field_args(p, with_n=True)
    p.add_argument("--max-weight", default=None,
                   help="top weight to compute, or 'full' "
                        "(default: 32, clamped to the code length)")
    p.add_argument("--algorithm", choices=("direct", "macwilliams", "both"),
                   default="direct")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_weights)

    p = sub.add_parser("moments", help="power moments MK_(n-1)^h for h <= max-h")
    _add_field_args(p, with_n=True)
    p.add_argument("--max-h", type=int, default=10)
    p.add_argument("--method",
                   choices=("recursion", "brute", "salie", "moisio", "all"),
                   default="recursion")
    p.set_defaults(fn=cmd_moments)

    p = sub.add_parser("table", help="reproduce a built-in reference table")
    p.add_argument("table_id", choices=("I", "II", "III", "IV"))
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("verify-all", help="run the full cross-verification suite")
    p.add_argument("--output", default=None)
    p.set_defaults(fn=cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
