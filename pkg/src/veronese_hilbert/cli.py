"""Command line front end.

Exit codes: 0 on success, 1 on a validation or computation error (or a
failed ``verify``), 2 on bad arguments. With ``--json`` a single object is
written to stdout; every exact count is rendered as a decimal string.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import oracle, veronese
from .bigcomb import ceil_div
from .polyring import eval_at_one, is_reciprocal

NAIVE_LIMIT = 22


class CliError(Exception):
    pass


def _csv_ints(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _index_range(text: str) -> list:
    """``"3"`` -> [3]; ``"0..4"`` -> [0, 1, 2, 3, 4]."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or lo..hi, got {text!r}")
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 0 <= lo <= hi, got {text!r}")
    return list(range(lo, hi + 1))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON object")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for random caps (bench)")

    parser = _Parser(prog="veronese-hilbert", parents=[common],
                     description="Hilbert series of algebras of Veronese type.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_caps(name, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("--a", type=_csv_ints, required=True, help="caps, e.g. 1,1,2")
        p.add_argument("--d", type=int, required=True, help="generator degree")
        return p

    def with_nd(name, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        return p

    with_caps("hilbert", "Hilbert function values").add_argument(
        "--i", type=_index_range, required=True, help="degree or range lo..hi")
    with_caps("hvector", "h-vector (numerator coefficients)")
    with_caps("series", "numerator and denominator exponent")
    with_caps("mult", "multiplicity")
    with_caps("ainv", "a-invariant and the -ceil(n/d) bound")
    with_nd("classical", "classical Veronese V(d,...,d; d)")
    with_nd("ehrhart", "lattice points of dilated hypersimplex").add_argument(
        "--i", type=_index_range, required=True, help="dilation or range lo..hi")
    with_caps("verify", "check closed forms against brute force").add_argument(
        "--max-i", type=int, default=4)
    bench = with_nd("bench", "time the subset DP against 2^n enumeration")
    bench.add_argument("--naive", action="store_true")
    return parser


def _s(x) -> str:
    return str(x)


def _coeffs(p) -> list:
    return [_s(c) for c in p.coeffs]


def _random_caps(n: int, d: int, rng: random.Random) -> list:
    while True:
        caps = [rng.randint(1, d) for _ in range(n)]
        if sum(caps) > d:
            return caps


def _best_time(fn, repeat: int):
    best, result = None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def _dispatch(args) -> tuple:
    """Return ``(input, result, plain_lines, ok)`` for one command."""
    cmd = args.command
    if cmd in ("classical", "ehrhart", "bench"):
        inp = {"n": args.n, "d": args.d}
    else:
        vt = veronese.make_veronese(args.a, args.d)
        inp = {"a": list(vt.a), "d": vt.d}

    if cmd == "hilbert":
        values = [(i, veronese.hilbert_function(vt, i)) for i in args.i]
        result = {"type": "values", "values": [{"i": i, "value": _s(v)} for i, v in values]}
        return inp, result, [" ".join(_s(v) for _, v in values)], True

    if cmd == "ehrhart":
        values = [(i, veronese.ehrhart_hypersimplex(args.n, args.d, i)) for i in args.i]
        result = {"type": "values", "values": [{"i": i, "value": _s(v)} for i, v in values]}
        return inp, result, [" ".join(_s(v) for _, v in values)], True

    if cmd == "hvector":
        h = veronese.hilbert_series(vt).numerator
        return inp, {"type": "coefficients", "coefficients": _coeffs(h)}, [" ".join(_coeffs(h))], True

    if cmd == "series":
        hs = veronese.hilbert_series(vt)
        result = {
            "type": "report",
            "numerator": _coeffs(hs.numerator),
            "denominator_exponent": hs.denominator_exponent,
        }
        lines = [
            f"numerator: {' '.join(_coeffs(hs.numerator))}",
            f"denominator_exponent: {hs.denominator_exponent}",
        ]
        return inp, result, lines, True

    if cmd == "mult":
        m = veronese.multiplicity(vt)
        return inp, {"type": "scalar", "value": _s(m)}, [_s(m)], True

    if cmd == "ainv":
        ainv = veronese.a_invariant(vt)
        bound, applicable = veronese.a_invariant_bound(vt)
        result = {"type": "report", "a_invariant": ainv, "bound": bound, "applicable": applicable}
        lines = [
            f"a_invariant: {ainv}",
            f"bound: {bound}",
            f"applicable: {str(applicable).lower()}",
        ]
        return inp, result, lines, True

    if cmd == "classical":
        rep = veronese.classical_report(args.n, args.d)
        result = {
            "type": "report",
            "gorenstein": rep.gorenstein,
            "multiplicity": _s(rep.multiplicity),
            "a_invariant": rep.a_invariant,
            "h_vector": _coeffs(rep.h_vector),
        }
        lines = [
            f"gorenstein: {str(rep.gorenstein).lower()}",
            f"multiplicity: {rep.multiplicity}",
            f"a_invariant: {rep.a_invariant}",
            f"h_vector: {' '.join(_coeffs(rep.h_vector))}",
        ]
        return inp, result, lines, True

    if cmd == "verify":
        rep = oracle.verify(vt, args.max_i)
        result = {
            "type": "report",
            "max_i": rep.max_i,
            "hilbert_matches": [
                {"i": i, "closed_form": _s(c), "oracle": _s(o), "equal": eq}
                for i, c, o, eq in rep.hilbert_matches
            ],
            "hvector_match": rep.hvector_match,
            "multiplicity_match": rep.multiplicity_match,
            "overall": rep.overall,
        }
        lines = [f"{i:>4} {c:>12} {o:>12} {'ok' if eq else 'MISMATCH'}"
                 for i, c, o, eq in rep.hilbert_matches]
        lines.insert(0, f"{'i':>4} {'closed':>12} {'oracle':>12}")
        if rep.closed_numerator is not None:
            lines.append(f"h closed: {' '.join(_coeffs(rep.closed_numerator))}")
        if rep.oracle_numerator is not None:
            lines.append(f"h oracle: {' '.join(_coeffs(rep.oracle_numerator))}")
        if rep.error:
            result["error"] = rep.error
            lines.append(f"error: {rep.error}")
        lines += [
            f"hvector_match: {str(rep.hvector_match).lower()}",
            f"multiplicity_match: {str(rep.multiplicity_match).lower()}",
            f"overall: {str(rep.overall).lower()}",
        ]
        return inp, result, lines, rep.overall

    if cmd == "bench":
        if args.naive and args.n > NAIVE_LIMIT:
            raise CliError(f"--naive enumerates 2^n subsets; refusing n={args.n} > {NAIVE_LIMIT}")
        rng = random.Random(getattr(args, "seed", 0))
        vt = veronese.make_veronese(_random_caps(args.n, args.d, rng), args.d)
        inp["a"] = list(vt.a)
        dp_time, dp_table = _best_time(lambda: veronese.subset_statistics(vt), 5)
        result = {"type": "report", "dp_seconds": dp_time, "cells": _s(dp_table.total())}
        lines = [f"caps: {','.join(map(str, vt.a))}", f"dp_seconds: {dp_time:.6g}"]
        ok = True
        if args.naive:
            naive_time, naive_table = _best_time(lambda: veronese.subset_statistics_naive(vt), 1)
            agree = naive_table == dp_table
            speedup = naive_time / dp_time if dp_time > 0 else float("inf")
            result.update(naive_seconds=naive_time, speedup=speedup, tables_agree=agree)
            lines += [
                f"naive_seconds: {naive_time:.6g}",
                f"speedup: {speedup:.1f}x",
                f"tables_agree: {str(agree).lower()}",
            ]
            ok = agree
        return inp, result, lines, ok

    raise CliError(f"unknown command {cmd!r}")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliError as exc:
        print(f"{parser.prog}: error: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 2
    as_json = getattr(args, "json", False)

    record = {"command": args.command, "input": None, "result": None,
              "status": "ok", "error_message": None}
    try:
        inp, result, lines, ok = _dispatch(args)
    except (CliError, ValueError, ArithmeticError, RuntimeError) as exc:
        record.update(status="error", error_message=str(exc))
        if "a" in vars(args):
            record["input"] = {"a": args.a, "d": args.d}
        elif "n" in vars(args):
            record["input"] = {"n": args.n, "d": args.d}
        print(f"error: {exc}", file=stderr)
        if as_json:
            print(json.dumps(record), file=stdout)
        return 1

    record.update(input=inp, result=result)
    if as_json:
        print(json.dumps(record), file=stdout)
    else:
        print("\n".join(lines), file=stdout)
    if not ok:
        print(f"{args.command}: check failed", file=stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
