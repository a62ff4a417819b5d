"""Command-line interface.

Exit codes:

    0  success
    1  a verification check failed, or a sum word could not be decoded
    2  unsupported arity (k < 3) or invalid arguments
    3  a construction or enumeration cap was exceeded
    4  malformed code-table file
    5  simulate was given a code that is not uniquely decodable
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import analysis, codefile
from .channel import TransitionMatrix, apply_dmc
from .codefile import CodeFile, CodeFileError
from .codebook import sum_tuple
from .construction import DEFAULT_SYMBOL_CAP, binary_profile, build_arbitrary, build_pow2
from .decoder import build_lookup, decode_recursive
from .errors import (CapacityError, DecodingError, NotUniquelyDecodableError,
                     UnsupportedArityError)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_UNSUPPORTED = 2
EXIT_CAPACITY = 3
EXIT_BAD_FILE = 4
EXIT_NOT_UD = 5


def _fmt_rate(rate) -> str:
    return f"{float(rate):.3f}"


def _exact(rate) -> str:
    return str(rate.as_fraction()) if rate.is_rational() else repr(rate)


def _compact(value) -> str:
    return json.dumps(value, separators=(",", ":"))


def _int_list(text: str):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_construct(args) -> int:
    if args.mode == "pow2":
        if args.m is None:
            print("error: construct --mode pow2 needs --m", file=sys.stderr)
            return EXIT_UNSUPPORTED
        code, trace = build_pow2(args.m, args.k, symbol_cap=args.symbol_cap)
        provenance = {"mode": "pow2", "m": args.m, "k": args.k}
    else:
        if args.n is None:
            print("error: construct --mode arbitrary needs --n", file=sys.stderr)
            return EXIT_UNSUPPORTED
        code, trace = build_arbitrary(args.n, args.k, symbol_cap=args.symbol_cap)
        provenance = {"mode": "arbitrary", "profile": binary_profile(args.n, args.k).to_dict()}
    doc = CodeFile(code, None if args.no_trace else trace, provenance)
    rate = analysis.total_rate(code).total
    summary = f"T={code.T} n={code.n} k={code.k} total_rate={_fmt_rate(rate)} ({_exact(rate)})"
    if args.out:
        codefile.dump(doc, args.out)
        print(summary)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(codefile.dumps(doc))
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = codefile.load(args.path)
    code = doc.code
    if args.check == "ud":
        report = analysis.check_ud(code, cap=args.cap)
        if report.is_ud:
            print(f"PASS ud: {report.tuples_checked} tuples, all sums distinct")
            return EXIT_OK
        a, b = report.witness
        print(f"FAIL ud: tuples {_compact(a)} and {_compact(b)} "
              f"both sum to {_compact(sum_tuple(a))}")
        return EXIT_CHECK_FAILED
    if args.check == "delta":
        delta = analysis.min_delta(code, cap=args.cap)
        status = "PASS" if delta >= 1 else "FAIL"
        print(f"{status} delta: min sum distance {delta}, "
              f"corrects {max(delta - 1, 0) // 2} errors, detects {max(delta - 1, 0)}")
        return EXIT_OK if delta >= 1 else EXIT_CHECK_FAILED
    # formulas
    users, predicted = analysis.predicted_arbitrary(code.n, code.k)
    if doc.provenance and doc.provenance.get("mode") == "pow2":
        users, predicted = analysis.predicted_pow2(int(doc.provenance["m"]), code.k)
    measured = analysis.total_rate(code).total
    ok = code.T == users and measured == predicted
    print(f"measured users={code.T} rate={_exact(measured)} ({_fmt_rate(measured)})")
    print(f"predicted users={users} rate={predicted} ({_fmt_rate(predicted)})")
    print(("PASS" if ok else "FAIL") + " formulas")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_rate_table(args) -> int:
    rows = analysis.rate_table(args.lengths, args.k)
    if args.format == "csv":
        print("users,length,total_rate,exact,predicted,agrees")
        for r in rows:
            print(f"{r.users},{r.length},{_fmt_rate(r.measured)},{_exact(r.measured)},"
                  f"{r.predicted},{str(r.agrees).lower()}")
    else:
        ell = analysis.floor_log2(args.k - 1)
        print(f"k={args.k}  l=floor(log2(k-1))={ell}")
        print(f"{'users':>6} {'length':>7} {'total rate':>11} {'rate - l':>9}  exact")
        for r in rows:
            print(f"{r.users:>6} {r.length:>7} {_fmt_rate(r.measured):>11} "
                  f"{float(r.measured) - ell:>9.3f}  {_exact(r.measured)}")
    return EXIT_OK


def _noise_seed(seed: int, i: int) -> int:
    return int(np.random.SeedSequence([seed, i]).generate_state(1, dtype=np.uint64)[0])


def cmd_simulate(args) -> int:
    doc = codefile.load(args.path)
    code = doc.code
    try:
        table = build_lookup(code, cap=args.cap)
    except NotUniquelyDecodableError as exc:
        print(f"error: code is not uniquely decodable: {exc}", file=sys.stderr)
        return EXIT_NOT_UD

    matrix = None
    if args.noise_matrix:
        try:
            with open(args.noise_matrix, encoding="utf-8") as fh:
                matrix = TransitionMatrix.for_code(code, json.load(fh))
        except (OSError, ValueError) as exc:
            print(f"error: bad noise matrix: {exc}", file=sys.stderr)
            return EXIT_UNSUPPORTED
    elif args.noise_p is not None:
        matrix = TransitionMatrix.symmetric(code.max_sum_symbol() + 1, args.noise_p)

    sizes = code.sizes
    if args.messages == "enumerate":
        total = code.tuple_count()
        count = total if args.count is None else min(args.count, total)
        index_rows = (np.unravel_index(i, sizes) for i in range(count))
    else:
        count = 10_000 if args.count is None else args.count
        rng = np.random.Generator(np.random.PCG64(args.seed))
        cols = np.stack([rng.integers(0, s, size=count) for s in sizes], axis=1)
        index_rows = iter(cols)

    tally = {"ok": 0, "detected": 0, "undetected": 0}
    for i, idx in enumerate(index_rows):
        tup = tuple(c.words[int(j)] for c, j in zip(code, idx))
        y = sum_tuple(tup)
        received = y if matrix is None else apply_dmc(y, matrix, _noise_seed(args.seed, i))
        try:
            if args.decoder == "recursive":
                if doc.trace is None:
                    print("error: file has no trace; use --decoder lookup", file=sys.stderr)
                    return EXIT_BAD_FILE
                decoded = decode_recursive(received, doc.trace)
            else:
                decoded = table.decode(received)
        except DecodingError:
            decoded = None
        status = "detected" if decoded is None else ("ok" if decoded == tup else "undetected")
        tally[status] += 1
        if not args.quiet:
            print(_compact({"tuple": tup, "sum": y, "received": received,
                            "decoded": decoded, "status": status}))
    print(f"summary: {tally['ok']}/{count} decoded correctly, "
          f"{tally['detected']} detected errors, {tally['undetected']} undetected errors")
    return EXIT_OK


def cmd_decode(args) -> int:
    doc = codefile.load(args.path)
    try:
        if args.method == "recursive":
            if doc.trace is None:
                print("error: file has no trace; use --method lookup", file=sys.stderr)
                return EXIT_BAD_FILE
            decoded = decode_recursive(args.sum, doc.trace)
        else:
            decoded = build_lookup(doc.code, cap=args.cap).decode(args.sum)
    except DecodingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except NotUniquelyDecodableError as exc:
        print(f"error: code is not uniquely decodable: {exc}", file=sys.stderr)
        return EXIT_NOT_UD
    print(_compact([list(w) for w in decoded]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udcodes",
        description="Uniquely decodable k-ary multi-user codes for the adder channel.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and write a code-table file")
    p.add_argument("--mode", choices=("pow2", "arbitrary"), required=True)
    p.add_argument("--m", type=int, help="exponent for --mode pow2 (length 2**m)")
    p.add_argument("--n", type=int, help="length for --mode arbitrary")
    p.add_argument("--k", type=int, required=True, help="arity, >= 3")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--no-trace", action="store_true", help="omit the construction trace")
    p.add_argument("--symbol-cap", type=int, default=DEFAULT_SYMBOL_CAP)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a code-table file")
    p.add_argument("path")
    p.add_argument("--check", choices=("ud", "delta", "formulas"), default="ud")
    p.add_argument("--cap", type=int, default=analysis.DEFAULT_TUPLE_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rate-table", help="measured vs predicted total rates")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lengths", type=_int_list, default=[4, 7, 10, 13, 16])
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_rate_table)

    p = sub.add_parser("simulate", help="send tuples through the channel and decode")
    p.add_argument("path")
    p.add_argument("--messages", choices=("random", "enumerate"), default="random")
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int, default=0)
    noise = p.add_mutually_exclusive_group()
    noise.add_argument("--noise-matrix", help="JSON file with a square row-stochastic matrix")
    noise.add_argument("--noise-p", type=float, help="symmetric +-1 demo noise with parameter p")
    p.add_argument("--decoder", choices=("lookup", "recursive"), default="lookup")
    p.add_argument("--cap", type=int, default=analysis.DEFAULT_TUPLE_CAP)
    p.add_argument("--quiet", action="store_true", help="print only the summary")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("decode", help="decode one channel sum word")
    p.add_argument("path")
    p.add_argument("--sum", type=_int_list, required=True, help="comma-separated sum word")
    p.add_argument("--method", choices=("lookup", "recursive"), default="lookup")
    p.add_argument("--cap", type=int, default=analysis.DEFAULT_TUPLE_CAP)
    p.set_defaults(func=cmd_decode)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedArityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except CapacityError as exc:
        print(f"error: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except CodeFileError as exc:
        print(f"error: malformed code file: {exc}", file=sys.stderr)
        return EXIT_BAD_FILE


if __name__ == "__main__":
    sys.exit(main())
