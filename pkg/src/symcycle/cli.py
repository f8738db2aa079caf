"""Command-line interface.

    symcycle decompose --t 5 --neg 2
    symcycle count topes --t 4 --ell 3
    symcycle count pairs --t 5 --jp 1 --jpp 1 --ellp 3 --ellpp 3 --ell 5 --case i
    symcycle count smirnov --start theta --end beta --counts 1,1,1
    symcycle count compositions --m 2 --n 4
    symcycle verify --t-max 8 --suite all

Tables go to stdout as CSV (default) or JSON; diagnostics go to stderr.
Exit status: 0 success, 1 verification failure, 2 usage or domain error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Any, Iterable, Sequence

from .errors import DomainError, ResourceLimitError
from .hypercube import decompose, q_set, tope_from_negative_set
from .smirnov import (
    THETA,
    Letter,
    composition_count,
    gf_coefficient,
    smirnov_count_closed,
    smirnov_count_dp,
    smirnov_enumerate,
)
from .statistics import (
    BoundaryCase,
    PairQuery,
    brute_force_pairs,
    count_pairs_case,
    count_pairs_case_structural,
    count_topes_with_negpart_and_qsize,
    count_topes_with_qsize,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

PAIR_FIELDS = ("t", "j_prime", "j_double_prime", "ell_prime", "ell_double_prime", "ell", "case", "count")


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _vector(v: Sequence[int]) -> str:
    return " ".join(str(x) for x in v)


def _text(v):
    if isinstance(v, list):
        return [_text(x) for x in v]
    return str(v) if isinstance(v, int) else v


def emit(rows: Iterable[dict[str, Any]], fields: Sequence[str], fmt: str, out=None) -> None:
    """Write rows as CSV or a JSON array; integers become decimal strings."""
    out = out or sys.stdout
    rows = [{k: _text(v) for k, v in r.items()} for r in rows]
    if fmt == "json":
        json.dump(rows, out, indent=1, ensure_ascii=False)
        out.write("\n")
        return
    writer = csv.DictWriter(out, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: (_vector(v) if isinstance(v, list) else v) for k, v in r.items()})


def _odd_range(value: int | None, t: int) -> list[int]:
    return [value] if value is not None else list(range(1, t + 1, 2))


# ---------------------------------------------------------------------------
# commands

def cmd_decompose(args) -> int:
    tope = tope_from_negative_set(args.t, args.neg)
    x = decompose(tope)
    terms = [f"{'+' if c > 0 else '-'}R^{i}" for c, i in q_set(tope)]
    row = {
        "t": args.t,
        "neg": sorted(args.neg),
        "tope": list(tope.signs),
        "x": list(x),
        "ell": len(terms),
        "q": terms,
    }
    emit([row], list(row), args.format)
    return EXIT_OK


def cmd_count_topes(args) -> int:
    t = args.t
    ells = _odd_range(args.ell, t)
    if args.j is None and not args.by_negpart:
        rows = [{"t": t, "ell": ell, "count": count_topes_with_qsize(t, ell)} for ell in ells]
        emit(rows, ("t", "ell", "count"), args.format)
        return EXIT_OK
    js = [args.j] if args.j is not None else list(range(1, t))
    rows = [
        {"t": t, "j": j, "ell": ell, "count": count_topes_with_negpart_and_qsize(t, j, ell)}
        for j in js
        for ell in ells
    ]
    emit(rows, ("t", "j", "ell", "count"), args.format)
    return EXIT_OK


def cmd_count_pairs(args) -> int:
    t = args.t
    cases = list(BoundaryCase) if args.case == "all" else [BoundaryCase.parse(args.case)]
    brute = brute_force_pairs(t, workers=args.threads) if args.method == "brute" else None

    def evaluate(q: PairQuery, case: BoundaryCase) -> int:
        if brute is not None:
            return brute.get((*q.key, case), 0)
        if args.method == "structural":
            return count_pairs_case_structural(q, case)
        return count_pairs_case(q, case)

    rows = []
    for lp in _odd_range(args.ellp, t):
        for lpp in _odd_range(args.ellpp, t):
            for l in _odd_range(args.ell, t):
                q = PairQuery(t, args.jp, args.jpp, lp, lpp, l)
                base = dict(zip(PAIR_FIELDS[:6], (t, args.jp, args.jpp, lp, lpp, l)))
                total = 0
                for case in cases:
                    n = evaluate(q, case)
                    total += n
                    if n or not args.nonzero:
                        rows.append({**base, "case": case.value, "count": n})
                if args.case == "all" and (total or not args.nonzero):
                    rows.append({**base, "case": "all", "count": total})
    emit(rows, PAIR_FIELDS, args.format)
    return EXIT_OK


def cmd_count_smirnov(args) -> int:
    start, end = Letter.parse(args.start), Letter.parse(args.end)
    if len(args.counts) != 3:
        raise DomainError("--counts takes three integers n_theta,n_alpha,n_beta")
    counts = tuple(args.counts)
    if args.method == "closed":
        n = smirnov_count_closed(start, end, counts)
    elif args.method == "dp":
        n = smirnov_count_dp(start, end, counts)
    elif args.method == "gf":
        if start is not THETA:
            raise DomainError("generating-function coefficients count words starting with theta")
        n = gf_coefficient(end, *counts)
    else:
        n = sum(1 for w in smirnov_enumerate(counts) if w[0] is start and w[-1] is end)
    row = {
        "start": start.value,
        "end": end.value,
        "n_theta": counts[0],
        "n_alpha": counts[1],
        "n_beta": counts[2],
        "count": n,
    }
    emit([row], list(row), args.format)
    return EXIT_OK


def cmd_count_compositions(args) -> int:
    row = {"m": args.m, "n": args.n, "count": composition_count(args.m, args.n)}
    emit([row], list(row), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite, args.t_max, workers=args.threads, unsafe=args.unsafe_cap)
    rows = [
        {
            "suite": r.suite,
            "check": r.check,
            "t": r.t,
            "passed": r.passed,
            "failed": r.failed,
            "note": r.note,
        }
        for r in results
    ]
    emit(rows, ("suite", "check", "t", "passed", "failed", "note"), args.format)
    failures = [c for r in results for c in r.counterexamples]
    by_suite: dict[str, list[int]] = {}
    for r in results:
        tally = by_suite.setdefault(r.suite, [0, 0])
        tally[0] += r.passed
        tally[1] += r.failed
    for suite, (ok, bad) in by_suite.items():
        print(f"{suite}: {ok} passed, {bad} failed", file=sys.stderr)
    if any(r.failed for r in results):
        print("counterexamples:", file=sys.stderr)
        for line in failures[:10]:
            print(f"  {line}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcycle",
        description="Decompositions of hypercube vertices along the symmetric 2t-cycle.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("csv", "json"), default="csv")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[fmt], help="decompose one tope")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--neg", type=_int_list, default=[], help="negative part, e.g. 1,3,4")
    p.set_defaults(func=cmd_decompose)

    count = sub.add_parser("count", help="counting formulas")
    csub = count.add_subparsers(dest="what", required=True)

    p = csub.add_parser("topes", parents=[fmt], help="topes by |Q| (and |T^-|)")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--ell", type=int, help="odd |Q|; all odd values if omitted")
    p.add_argument("--j", type=int, help="size of the negative part")
    p.add_argument("--by-negpart", action="store_true", help="tabulate over all j in [1, t-1]")
    p.set_defaults(func=cmd_count_topes)

    p = csub.add_parser("pairs", parents=[fmt], help="pairs (A, B) by boundary case")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--jp", type=int, required=True, help="|A|")
    p.add_argument("--jpp", type=int, required=True, help="|B|")
    p.add_argument("--ellp", type=int, help="|Q| of A; all odd values if omitted")
    p.add_argument("--ellpp", type=int, help="|Q| of B; all odd values if omitted")
    p.add_argument("--ell", type=int, help="|Q| of A u B; all odd values if omitted")
    p.add_argument("--case", default="all", help="i..ix or all (itemized plus total)")
    p.add_argument("--method", choices=("closed", "structural", "brute"), default="closed")
    p.add_argument("--nonzero", action="store_true", help="drop zero rows")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_count_pairs)

    p = csub.add_parser("smirnov", parents=[fmt], help="Smirnov words by endpoints and letter counts")
    p.add_argument("--start", required=True, help="theta|alpha|beta")
    p.add_argument("--end", required=True, help="theta|alpha|beta")
    p.add_argument("--counts", type=_int_list, required=True, help="n_theta,n_alpha,n_beta")
    p.add_argument("--method", choices=("closed", "dp", "gf", "enumerate"), default="closed")
    p.set_defaults(func=cmd_count_smirnov)

    p = csub.add_parser("compositions", parents=[fmt], help="compositions of n into m parts")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count_compositions)

    p = sub.add_parser("verify", parents=[fmt], help="exhaustive formula/oracle cross-checks")
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--unsafe-cap", action="store_true", help="lift the enumeration caps")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
