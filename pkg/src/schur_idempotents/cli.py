"""Command-line front end.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage
error, 3 refused by the cost bound.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable

from .centraliser_algebra import (
    AlgebraContext,
    char0_basis_identity,
    f_polynomial,
    minimal_polynomial_check,
    powers_of_b1_independent,
)
from .errors import CostBoundExceeded, InvalidArgument, SchurError
from .idempotents import (
    admissible_g,
    block_basis_independent,
    block_basis_spans,
    block_description,
    build_idempotent,
    build_truncated,
    describe,
    orthogonality_check,
    verify_complete_set,
    zero_columns,
)
from .padic_arith import column_symbol, is_prime, kostka_cell, kostka_window, window_to_csv, window_to_json
from .tensor_oracle import DEFAULT_COST_BOUND, compare_structure_constants, idempotent_rank_report

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_COST = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text}")
    return value


def _prime(text: str) -> int:
    value = _natural(text)
    if not is_prime(value):
        raise argparse.ArgumentTypeError(f"not a prime: {text}")
    return value


def _range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    lo, hi = _natural(lo), _natural(hi)
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _resolve(args) -> tuple[int, int]:
    """Return ``(m, lambda2)`` from any two of ``m``, ``lambda2``, ``r``."""
    m, k, r = args.m, args.lambda2, args.r
    given = sum(v is not None for v in (m, k, r))
    if given < 2:
        raise UsageError("give two of --m, --lambda2, --r")
    if m is None:
        m = r - 2 * k
    elif k is None:
        if (r - m) % 2 or r < m:
            raise UsageError(f"r - m must be even and >= 0 (r={r}, m={m})")
        k = (r - m) // 2
    if m < 0:
        raise UsageError(f"lambda2={k} too large for r={r}")
    if r is not None and r != m + 2 * k:
        raise UsageError(f"inconsistent: r={r} but m + 2*lambda2 = {m + 2 * k}")
    return m, k


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands: each returns (text, exit_code) -----------------------------


def cmd_kostka(args) -> tuple[str, int]:
    rows = kostka_window(args.m_max, args.g_max, args.p)
    if args.format == "csv":
        return window_to_csv(rows), EXIT_OK
    if args.format == "json":
        return window_to_json(rows, args.p) + "\n", EXIT_OK
    lines = [f"{args.p}-Kostka window, rows m=0..{args.m_max}, columns g=0..{args.g_max}"]
    lines += [" ".join(map(str, row)) for row in rows]
    if args.p == 2:
        lines.append("")
        lines.append("column factors, least significant first (b = b(2^u)):")
        for m in range(args.m_max + 1):
            for g in range(args.g_max + 1):
                cell = kostka_cell(m, g, 2)
                cols = " ".join(f"({top}/{bottom})" for top, bottom in cell.columns) or "-"
                syms = " ".join(column_symbol(c) for c in cell.columns) or "1"
                lines.append(f"m={m} g={g}: {cols} -> {syms}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_idempotents(args) -> tuple[str, int]:
    m, k = _resolve(args)
    ctx = AlgebraContext(2, m, k)
    entries = []
    for g in admissible_g(m, ctx):
        desc = describe(m, g)
        e = build_idempotent(m, g, ctx)
        entries.append(
            {
                "g": g,
                "I": sorted(desc.index_sets.I),
                "J": sorted(desc.index_sets.J),
                "factored": desc.factored(),
                "expanded": str(e),
                "element": e.to_dict(),
            }
        )
    if args.format == "json":
        return _json({"m": m, "lambda2": k, "r": ctx.r, "idempotents": entries}), EXIT_OK
    if args.format == "csv":
        rows = [["g", "I", "J", "factored", "expanded"]]
        rows += [[x["g"], " ".join(map(str, x["I"])), " ".join(map(str, x["J"])), x["factored"], x["expanded"]] for x in entries]
        return _csv(rows), EXIT_OK
    lines = [f"m={m} lambda2={k} r={ctx.r}: {len(entries)} primitive idempotent(s)"]
    for x in entries:
        lines.append(f"e_{{{m},{x['g']}}} = {x['factored']} = {x['expanded']}    I={x['I']} J={x['J']}")
    return "\n".join(lines) + "\n", EXIT_OK


def _column_checks(m: int, ctx: AlgebraContext) -> tuple[bool, bool]:
    orth = trunc = True
    for g in admissible_g(m, ctx):
        for s in zero_columns(m, g, ctx):
            orth &= orthogonality_check(m, g, s, ctx)
        top = describe(m, g).degree
        for t in range(0, (top or 0) + 1):
            for strict in (False, True):
                e = build_truncated(m, g, t, ctx, strict)
                trunc &= e * e == e
    return orth, trunc


def cmd_verify(args) -> tuple[str, int]:
    if args.m_range is not None or args.lambda2_range is not None:
        if args.m_range is None or args.lambda2_range is None:
            raise UsageError("--m-range and --lambda2-range go together")
        grid = [(m, k) for m in args.m_range for k in args.lambda2_range]
    else:
        grid = [_resolve(args)]
    results = []
    for m, k in grid:
        ctx = AlgebraContext(2, m, k)
        data = verify_complete_set(m, ctx).to_dict()
        orth, trunc = _column_checks(m, ctx)
        data["zero_columns_orthogonal"] = orth
        data["truncations_idempotent"] = trunc
        data["pass"] = data["pass"] and orth and trunc
        results.append(data)
    ok = all(d["pass"] for d in results)
    code = EXIT_OK if ok else EXIT_FAILED
    if args.format == "json":
        return _json(results[0] if len(results) == 1 else results), code
    keys = ["m", "lambda2", "r", "sum_is_identity", "count_matches", "zero_columns_orthogonal", "truncations_idempotent", "pass"]
    if args.format == "csv":
        rows = [keys + ["admissible_g"]] + [[d[key] for key in keys] + [" ".join(map(str, d["admissible_g"]))] for d in results]
        return _csv(rows), code
    lines = []
    for d in results:
        status = "pass" if d["pass"] else "FAIL"
        lines.append(f"m={d['m']} lambda2={d['lambda2']} r={d['r']} g={d['admissible_g']}: {status}")
        if not d["pass"]:
            lines.append("  " + json.dumps(d))
    lines.append(f"{sum(d['pass'] for d in results)}/{len(results)} grid points pass")
    return "\n".join(lines) + "\n", code


def cmd_oracle(args) -> tuple[str, int]:
    m, k = _resolve(args)
    r = m + 2 * k
    structure = compare_structure_constants(r, k, args.p, args.cost_bound)
    out = {"structure_constants": structure.to_dict()}
    ok = structure.passed
    if args.p == 2:
        ranks = idempotent_rank_report(r, k, 2, args.cost_bound)
        out["rank_report"] = ranks.to_dict()
        ok = ok and ranks.passed
    code = EXIT_OK if ok else EXIT_FAILED
    if args.format == "json":
        return _json(out), code
    if args.format == "csv":
        rows = [["g", "rank", "idempotent"]]
        rows += [[x["g"], x["rank"], x["idempotent"]] for x in out.get("rank_report", {}).get("per_g", [])]
        return _csv(rows), code
    s = structure.to_dict()
    lines = [
        f"r={r} lambda2={k} m={m} p={args.p}",
        f"structure constants: {s['products_checked']} products, mismatches={s['mismatches']}, "
        f"basis independent={s['basis_independent']} -> {'pass' if s['pass'] else 'FAIL'}",
    ]
    if "rank_report" in out:
        rr = out["rank_report"]
        for x in rr["per_g"]:
            lines.append(f"  g={x['g']}: rank {x['rank']}, idempotent={x['idempotent']}")
        lines.append(f"rank sum {rr['rank_sum']} of {rr['dim']} -> {'pass' if rr['pass'] else 'FAIL'}")
    return "\n".join(lines) + "\n", code


def cmd_blocks(args) -> tuple[str, int]:
    m, k = _resolve(args)
    ctx = AlgebraContext(2, m, k)
    blocks = []
    for g in admissible_g(m, ctx):
        data = block_description(m, g, ctx).to_dict()
        data["independent"] = block_basis_independent(m, g, ctx)
        data["spans"] = block_basis_spans(m, g, ctx)
        blocks.append(data)
    total = sum(b["dimension"] for b in blocks)
    ok = all(b["independent"] and b["spans"] for b in blocks) and total == k + 1
    code = EXIT_OK if ok else EXIT_FAILED
    if args.format == "json":
        return _json({"m": m, "lambda2": k, "r": ctx.r, "blocks": blocks, "dimension_sum": total, "algebra_dimension": k + 1}), code
    if args.format == "csv":
        rows = [["g", "basis_degrees", "generator_degrees", "dimension", "independent", "spans"]]
        for b in blocks:
            rows.append([b["g"], " ".join(map(str, b["basis_degrees"])), " ".join(map(str, b["generator_degrees"])), b["dimension"], b["independent"], b["spans"]])
        return _csv(rows), code
    lines = [f"m={m} lambda2={k} r={ctx.r}: {len(blocks)} block(s)"]
    for b in blocks:
        lines.append(
            f"g={b['g']}: basis degrees {b['basis_degrees']}, generators {b['generator_degrees']}, "
            f"dimension {b['dimension']}, independent={b['independent']}, spans={b['spans']}"
        )
    lines.append(f"dimension sum {total} (algebra dimension {k + 1})")
    return "\n".join(lines) + "\n", code


def cmd_char0(args) -> tuple[str, int]:
    m, k = _resolve(args)
    ctx = AlgebraContext(0, m, k)
    poly = f_polynomial(k + 1, m)
    identities = {kk: char0_basis_identity(kk, ctx) for kk in range(1, k + 1)}
    minimal = minimal_polynomial_check(ctx)
    generated = powers_of_b1_independent(ctx)
    ok = all(identities.values()) and minimal and generated
    code = EXIT_OK if ok else EXIT_FAILED
    data = {
        "m": m,
        "lambda2": k,
        "F": {"k": k + 1, "coeffs": list(poly.coeffs), "roots": poly.roots, "factored": poly.factored(), "expanded": str(poly)},
        "basis_identity": {str(kk): v for kk, v in identities.items()},
        "minimal_polynomial": minimal,
        "b1_generates": generated,
        "pass": ok,
    }
    if args.format == "json":
        return _json(data), code
    if args.format == "csv":
        rows = [["k", "identity"]] + [[kk, v] for kk, v in identities.items()]
        return _csv(rows), code
    lines = [
        f"F_{k + 1}(T) = {poly.factored()} = {poly}",
        f"(k!)^2 b(k) = F_k(b(1)) for k=1..{k}: {all(identities.values())}",
        f"F_{k + 1}(b(1)) = 0 and lower F_k(b(1)) != 0: {minimal}",
        f"1, b(1), ..., b(1)^{k} independent: {generated}",
        "pass" if ok else "FAIL",
    ]
    return "\n".join(lines) + "\n", code


COMMANDS: dict[str, Callable] = {
    "kostka": cmd_kostka,
    "idempotents": cmd_idempotents,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "blocks": cmd_blocks,
    "char0": cmd_char0,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", metavar="PATH", help="write here instead of standard output")
    common.add_argument("--cost-bound", type=_natural, default=DEFAULT_COST_BOUND, help="largest weight-space dimension the oracle will build")

    def triple(sub):
        sub.add_argument("--m", type=_natural)
        sub.add_argument("--lambda2", type=_natural)
        sub.add_argument("--r", type=_natural)

    parser = argparse.ArgumentParser(
        prog="schur-idem",
        description="Idempotents and structure of two-part Schur centraliser algebras.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("kostka", parents=[common], help="window of the p-Kostka matrix")
    sub.add_argument("--m-max", type=_natural, default=0)
    sub.add_argument("--g-max", type=_natural, default=0)
    sub.add_argument("--p", type=_prime, default=2)

    sub = subs.add_parser("idempotents", parents=[common], help="list e_{m,g} (characteristic 2)")
    triple(sub)

    sub = subs.add_parser("verify", parents=[common], help="check the complete set of idempotents")
    triple(sub)
    sub.add_argument("--m-range", type=_range, metavar="LO:HI")
    sub.add_argument("--lambda2-range", type=_range, metavar="LO:HI")

    sub = subs.add_parser("oracle", parents=[common], help="compare with tensor-space matrices")
    triple(sub)
    sub.add_argument("--p", type=_prime, default=2)

    sub = subs.add_parser("blocks", parents=[common], help="block bases and generators")
    triple(sub)

    sub = subs.add_parser("char0", parents=[common], help="characteristic-zero identities")
    triple(sub)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, InvalidArgument) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CostBoundExceeded as exc:
        print(f"{parser.prog} {args.command}: refused: {exc}", file=sys.stderr)
        return EXIT_COST
    except SchurError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
