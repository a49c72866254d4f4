"""Batch command-line front end.

Subcommands: decompose, apply, seq, count, verify, lift, project.
Output is plain text by default; --json selects the machine format and
--latex (where supported) the display format.  Exit codes: 0 on success,
1 when a verification suite fails, 2 on usage or parse errors.  The
environment variable WOPLAB_MAX_N overrides the per-subcommand size bounds.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from fractions import Fraction

from . import counting, noncross, oracle, pring, summation
from .errors import BoundExceededError, MismatchError, ParseError
from .perm import Permutation, all_permutations, lift, project, to_hat_quiver

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

DEFAULT_BOUNDS = {
    "decompose": 8,
    "apply": 8,
    "enumerate": noncross.DEFAULT_MAX_ENUMERATE,
    "verify-counts": 8,
    "verify-star": 7,
    "verify-oracle": oracle.DEFAULT_MAX_TRACE_POWER,
    "verify-dual": 10,
    "verify-lift": 7,
}


def _bound(kind: str, override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get("WOPLAB_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise BoundExceededError(f"WOPLAB_MAX_N must be an integer, got {env!r}")
    return DEFAULT_BOUNDS[kind]


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(text)]
    if not values or values[0] < 1:
        raise ValueError(f"bad range {text!r}")
    return values


# -- subcommands ---------------------------------------------------------------


def cmd_decompose(args) -> int:
    bound = _bound("decompose", args.max_n)
    templates = summation.decompose_W(args.n, max_n=bound)
    if args.format == "json":
        print(json.dumps([summation.to_json_dict(t) for t in templates]))
    elif args.format == "latex":
        for t in templates:
            print(f"FS_{{{t.perm}}}: {summation.render(t, 'latex')}")
    else:
        for t in templates:
            os_type = summation.is_OS(t)
            os_text = f"OS({os_type[0]},{os_type[1]})" if os_type else "-"
            print(
                f"{t.perm}  dP={t.dP} dD={t.dD} degree={t.degree} {os_text}  "
                f"{summation.render(t, 'plain')}"
            )
    return EXIT_OK


def cmd_apply(args) -> int:
    bound = _bound("apply", args.max_n)
    F = pring.parse_p(args.polynomial)
    if args.perm is not None:
        beta = Permutation.parse(args.perm)
        if beta.n != args.n:
            raise ParseError(
                f"--perm has rank {beta.n}, expected {args.n}"
            )
        if args.n > bound:
            raise BoundExceededError(f"apply bound is {bound}, got n={args.n}")
        template = summation.summation_of(beta)
        result = Fraction(1, args.n) * pring.apply_template(template, F)
    else:
        result = pring.apply_W(args.n, F, max_n=bound)
    if args.format == "json":
        print(json.dumps({"n": args.n, "perm": args.perm, "result": pring.print_p(result)}))
    else:
        print(pring.print_p(result))
    return EXIT_OK


def cmd_seq(args) -> int:
    action = args.action
    if action == "decode":
        result = noncross.decode(noncross.parse_seq(args.value))
        print(json.dumps({"perm": str(result)}) if args.format == "json" else result)
    elif action == "encode":
        seq = noncross.encode(Permutation.parse(args.value))
        print(seq.to_json_dict() if args.format == "json" else noncross.print_seq(seq))
    elif action == "dual":
        seq = noncross.dual(noncross.parse_seq(args.value))
        print(
            json.dumps(seq.to_json_dict())
            if args.format == "json"
            else noncross.print_seq(seq)
        )
    elif action == "classify":
        seq = noncross.parse_seq(args.value)
        c = noncross.classify_pairs(seq)
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "top_level": sorted(c.top_level),
                        "embedded": sorted(c.embedded),
                        "bottom_level": sorted(c.bottom_level),
                        "adjacent": sorted(list(pair) for pair in c.adjacent),
                    }
                )
            )
        else:
            print(noncross.print_seq(seq, labels=True))
            print(f"top-level: {sorted(c.top_level)}")
            print(f"embedded: {sorted(c.embedded)}")
            print(f"bottom-level: {sorted(c.bottom_level)}")
            print(f"adjacent: {sorted(tuple(pair) for pair in c.adjacent)}")
    elif action == "enumerate":
        if args.r_value is None:
            raise ParseError("seq enumerate needs N and R")
        bound = _bound("enumerate", args.max_n)
        seqs = noncross.enumerate_sequences(
            int(args.value), int(args.r_value), max_n=bound
        )
        if args.format == "json":
            print(json.dumps([s.to_json_dict() for s in seqs]))
        else:
            for s in seqs:
                print(noncross.print_seq(s))
    else:  # unreachable through argparse
        raise ParseError(f"unknown seq action {action!r}")
    return EXIT_OK


def cmd_count(args) -> int:
    bound = _bound("verify-counts", args.max_n)
    if args.n > bound:
        raise BoundExceededError(f"count bound is {bound}, got n={args.n}")
    report = counting.verify_counts(args.n)
    print(report.as_json() if args.format == "json" else report.as_text())
    return EXIT_OK


def cmd_lift(args) -> int:
    alpha = Permutation.parse(args.perm)
    beta = lift(alpha, args.j)
    print(json.dumps({"perm": str(beta)}) if args.format == "json" else beta)
    return EXIT_OK


def cmd_project(args) -> int:
    alpha, j = project(Permutation.parse(args.perm))
    if args.format == "json":
        print(json.dumps({"perm": str(alpha), "j": j}))
    else:
        print(f"{alpha} j={j}")
    return EXIT_OK


# -- verification suites ---------------------------------------------------------


def _check_counts(ns) -> list[tuple[str, bool]]:
    results = []
    for n in ns:
        try:
            counting.verify_counts(n)
            results.append((f"counts n={n}: enumeration == OS census == formula == recurrence", True))
        except MismatchError as err:
            results.append((f"counts n={n}: {err}", False))
    return results


def _check_star(ns) -> list[tuple[str, bool]]:
    results = []
    for n in ns:
        ok = all(
            (summation.is_OS(summation.summation_of(b)) is not None)
            == summation.satisfies_star(b)
            for b in all_permutations(n)
        )
        results.append((f"star n={n}: maximal degree iff star condition, all {n}! permutations", ok))
    return results


def _check_oracle(ns, max_weight: int) -> list[tuple[str, bool]]:
    def monomials(w):
        def partitions(total, largest):
            if total == 0:
                yield ()
                return
            for first in range(min(total, largest), 0, -1):
                for rest in partitions(total - first, first):
                    yield (first,) + rest

        return [pring.PPolynomial.monomial(p) for p in partitions(w, w)]

    results = []
    for n in ns:
        ok = True
        for w in range(1, max_weight + 1):
            for F in monomials(w):
                N = w + n + 1
                lhs = oracle.tr_Dn_apply(n, F, N)
                if not oracle.equal_as_p(lhs, n * pring.apply_W(n, F), N):
                    ok = False
        results.append(
            (f"oracle n={n}: trace calculus == summation engine, weights <= {max_weight}", ok)
        )
    return results


def _check_dual(ns) -> list[tuple[str, bool]]:
    results = []
    for n in ns:
        ok = True
        for s in noncross.enumerate_sequences(n):
            d = noncross.dual(s)
            if d.r != n - s.r + 1 or noncross.dual(d) != s:
                ok = False
            if d != noncross.dual_via_gap_toggle(s):
                ok = False
        results.append((f"dual n={n}: involution, type swap, table == gap toggle", ok))
    return results


def _check_lift(ns) -> list[tuple[str, bool]]:
    results = []
    for n in ns:
        lifted = [
            lift(alpha, j) for alpha in all_permutations(n) for j in range(n + 1)
        ]
        ok = len(set(lifted)) == len(lifted) and set(lifted) == set(
            all_permutations(n + 1)
        )
        for alpha in all_permutations(n):
            ta = summation.summation_of(alpha)
            chain = set(to_hat_quiver(alpha).chain)
            for j in range(n + 1):
                tb = summation.summation_of(lift(alpha, j))
                if j == 0:
                    ok = ok and (tb.dP, tb.dD) == (ta.dP, ta.dD + 1)
                elif j in chain:
                    ok = ok and (tb.dP, tb.dD) == (ta.dP + 1, ta.dD)
                else:
                    ok = ok and (tb.dP, tb.dD) == (ta.dP - 1, ta.dD)
        results.append(
            (f"lift n={n}: lifts partition the next rank; degree transitions", ok)
        )
    return results


def cmd_verify(args) -> int:
    ns = _parse_range(args.range)
    bound = _bound(f"verify-{args.suite}", args.max_n)
    if max(ns) > bound:
        raise BoundExceededError(
            f"verify {args.suite} bound is {bound}, requested up to {max(ns)}"
        )
    if args.suite == "counts":
        results = _check_counts(ns)
    elif args.suite == "star":
        results = _check_star(ns)
    elif args.suite == "oracle":
        results = _check_oracle(ns, args.max_weight)
    elif args.suite == "dual":
        results = _check_dual(ns)
    else:
        results = _check_lift(ns)
    for claim, ok in results:
        print(f"[{'PASS' if ok else 'FAIL'}] {claim}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_VERIFY_FAILED


# -- argument plumbing ------------------------------------------------------------


def _add_format_flags(parser, latex=False):
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--plain", dest="format", action="store_const", const="plain", default="plain"
    )
    group.add_argument("--json", dest="format", action="store_const", const="json")
    if latex:
        group.add_argument(
            "--latex", dest="format", action="store_const", const="latex"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="woplab", description="Exact W-operator workbench"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="list the n! summations of W([n])")
    p.add_argument("n", type=int)
    p.add_argument("--max-n", type=int, default=None)
    _add_format_flags(p, latex=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("apply", help="apply W([n]) (or one summation) to a polynomial")
    p.add_argument("n", type=int)
    p.add_argument("polynomial")
    p.add_argument("--perm", default=None, help="apply only (1/n) * the summation of this permutation")
    p.add_argument("--max-n", type=int, default=None)
    _add_format_flags(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("seq", help="bracket-sequence operations")
    p.add_argument(
        "action", choices=["decode", "encode", "dual", "classify", "enumerate"]
    )
    p.add_argument("value", help="sequence text, permutation text, or N")
    p.add_argument("r_value", nargs="?", default=None, help="R (enumerate only)")
    p.add_argument("--max-n", type=int, default=None)
    _add_format_flags(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("count", help="multi-route count verification table")
    p.add_argument("n", type=int)
    p.add_argument("--max-n", type=int, default=None)
    _add_format_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run an invariant suite; exit 1 on failure")
    p.add_argument("suite", choices=["counts", "star", "oracle", "dual", "lift"])
    p.add_argument("range", help="like 1..8, or a single integer")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-weight", type=int, default=4, help="oracle suite input weight cap")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lift", help="lift a permutation to the next rank")
    p.add_argument("perm")
    p.add_argument("j", type=int)
    _add_format_flags(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("project", help="project a permutation to the previous rank")
    p.add_argument("perm")
    _add_format_flags(p)
    p.set_defaults(func=cmd_project)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, BoundExceededError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
