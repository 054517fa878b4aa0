"""Command-line surface.

Exit codes: 0 for any successful computation (verdicts are data, not errors),
1 for usage errors, 2 for internal assertion failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chern import chern_presentation, in_real_plus_line_kernel
from .golden import EXPECTED_DISCREPANCY, FAIL, all_consistent, verify_paper
from .graded import GradedClass
from .homotopy import bott_pi, sphere6_report
from .numtheory import binom_exact, binom_mod_lucas
from .obstructions import classify
from .rings import ZZ
from .search import DEFAULT_PRIMES, CHECK_KEYS, SearchSpec, render_md, run_search
from .spaces import cotangent_sphere6, divisor_complement, sphere6_bundle_total_space, wedge


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_range(text: str) -> tuple:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        value = int(text)
        return value, value
    except ValueError:
        raise UsageError(f"expected an integer or A..B range, got {text!r}") from None


def build_parser() -> _Parser:
    parser = _Parser(prog="ccobstruct", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="run every check on one space model")
    analyze.add_argument("--space", required=True,
                         choices=("pn-complement", "sphere6-bundle", "wedge-s6"))
    analyze.add_argument("--n", type=int)
    analyze.add_argument("--d", type=int)
    analyze.add_argument("--k", type=int)
    analyze.add_argument("--p", type=int, action="append")
    analyze.add_argument("--format", default="json", choices=("json", "md"))
    analyze.add_argument("--out")

    search = sub.add_parser("search", help="sweep divisor complements over (n, d) grids")
    search.add_argument("--n", required=True, help="range A..B")
    search.add_argument("--d", help="range A..B (ignored with --anticanonical)")
    search.add_argument("--odd-d", action="store_true")
    search.add_argument("--anticanonical", action="store_true")
    search.add_argument("--p", type=int, action="append")
    search.add_argument("--checks", default=",".join(CHECK_KEYS),
                        help="comma list from gradable,polarization,arboreal,maslov (empty for none)")
    search.add_argument("--format", default="csv", choices=("json", "csv", "md"))
    search.add_argument("--out")

    verify = sub.add_parser("verify-paper", help="replay the golden reference suite")
    verify.add_argument("--format", default="md", choices=("json", "md"))
    verify.add_argument("--out")

    kernel = sub.add_parser("kernel-check", help="confirm c1*c_{2k} - c_{2k+1} relations")
    kernel.add_argument("--max-k", type=int, default=12)
    kernel.add_argument("--out")

    sphere = sub.add_parser("sphere6", help="invariants of the k-fold tangent bundle over S^6")
    sphere.add_argument("--k", type=int, required=True)
    sphere.add_argument("--out")

    facts = sub.add_parser("facts", help="fact tables")
    facts_sub = facts.add_subparsers(dest="table", required=True)
    pi = facts_sub.add_parser("pi", help="stable homotopy groups")
    pi.add_argument("--group", required=True, choices=("O", "U", "U/O"))
    pi.add_argument("--k", required=True, help="range A..B")
    pi.add_argument("--format", default="md", choices=("json", "csv", "md"))
    pi.add_argument("--out")
    binom = facts_sub.add_parser("binom", help="exact and modular binomials")
    binom.add_argument("--n", type=int, required=True)
    binom.add_argument("--k", type=int, required=True)
    binom.add_argument("--mod", type=int)
    binom.add_argument("--p", type=int)
    binom.add_argument("--out")

    return parser


def _cmd_analyze(args) -> str:
    primes = tuple(args.p) if args.p else DEFAULT_PRIMES
    if args.space == "pn-complement":
        if args.n is None or args.d is None:
            raise UsageError("pn-complement needs --n and --d")
        model = divisor_complement(args.n, args.d, ZZ)
    elif args.space == "sphere6-bundle":
        if args.k is None:
            raise UsageError("sphere6-bundle needs --k")
        model = sphere6_bundle_total_space(args.k)
    else:
        if args.k is None:
            raise UsageError("wedge-s6 needs --k")
        model = wedge(sphere6_bundle_total_space(args.k), cotangent_sphere6())
    report = classify(model, primes)
    if args.format == "json":
        return json.dumps(report.to_json(), indent=2) + "\n"
    lines = [f"space: {report.space}", ""]
    lines.append("| check | verdict | witnesses |")
    lines.append("| --- | --- | --- |")
    for result in report.checks:
        witnesses = "; ".join(f"{param}: {value}" for param, value in result.witnesses)
        verdict = result.verdict.status
        if result.verdict.reason:
            verdict += f" ({result.verdict.reason})"
        lines.append(f"| {result.name} | {verdict} | {witnesses} |")
    return "\n".join(lines) + "\n"


def _cmd_search(args) -> str:
    checks = tuple(c for c in args.checks.split(",") if c) if args.checks else ()
    if args.anticanonical:
        d_range = (1, 1)
    elif args.d is None:
        raise UsageError("search needs --d unless --anticanonical is given")
    else:
        d_range = _parse_range(args.d)
    try:
        spec = SearchSpec(
            n_range=_parse_range(args.n),
            d_range=d_range,
            primes=tuple(args.p) if args.p else DEFAULT_PRIMES,
            checks=checks,
            anticanonical_only=args.anticanonical,
            odd_d_only=args.odd_d,
            fmt=args.format,
        )
    except ValueError as err:
        raise UsageError(str(err)) from None
    return run_search(spec)


def _cmd_verify(args) -> str:
    outcomes = verify_paper()
    if args.format == "json":
        payload = {
            "schema": "ccobstruct/1",
            "all_consistent": all_consistent(outcomes),
            "cases": [
                {"id": o.id, "status": o.status, "detail": o.detail, "note": o.note}
                for o in outcomes
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    columns = ("id", "status", "detail")
    rows = [{"id": o.id, "status": o.status, "detail": o.detail} for o in outcomes]
    table = render_md(columns, rows)
    counts = {
        "pass": sum(o.status == "PASS" for o in outcomes),
        "flagged": sum(o.status == EXPECTED_DISCREPANCY for o in outcomes),
        "fail": sum(o.status == FAIL for o in outcomes),
    }
    summary = (f"\n{counts['pass']} passed, {counts['flagged']} flagged as expected "
               f"discrepancies, {counts['fail']} failed\n")
    return table + summary


def _cmd_kernel(args) -> str:
    if args.max_k < 1:
        raise UsageError(f"--max-k must be >= 1, got {args.max_k}")
    max_degree = 4 * args.max_k + 2
    presentation = chern_presentation(max_degree)
    lines = []
    for k in range(1, args.max_k + 1):
        relation = (GradedClass.from_generator(presentation, "c1", max_degree=max_degree)
                    * GradedClass.from_generator(presentation, f"c{2 * k}", max_degree=max_degree)
                    - GradedClass.from_generator(presentation, f"c{2 * k + 1}", max_degree=max_degree))
        in_kernel, image = in_real_plus_line_kernel(relation)
        label = f"c1*c{2 * k} - c{2 * k + 1}"
        if in_kernel:
            lines.append(f"{label}: IN KERNEL")
        else:
            lines.append(f"{label}: NOT IN KERNEL (image: {image.to_text()})")
    return "\n".join(lines) + "\n"


def _cmd_sphere6(args) -> str:
    return json.dumps(sphere6_report(args.k).to_json(), indent=2) + "\n"


def _cmd_facts(args) -> str:
    if args.table == "pi":
        lo, hi = _parse_range(args.k)
        if lo < 0 or lo > hi:
            raise UsageError(f"bad index range {args.k!r}")
        columns = ("k", "group")
        rows = [{"k": k, "group": str(bott_pi(args.group, k))} for k in range(lo, hi + 1)]
        if args.format == "json":
            return json.dumps({"schema": "ccobstruct/1", "group": args.group,
                               "rows": rows}, indent=2) + "\n"
        if args.format == "csv":
            from .search import render_csv
            return render_csv(columns, rows)
        return render_md(columns, rows)
    value = binom_exact(args.n, args.k)
    payload = {"schema": "ccobstruct/1", "n": args.n, "k": args.k, "exact": str(value)}
    if args.mod is not None:
        payload["mod"] = args.mod
        payload["residue"] = value % args.mod
    if args.p is not None:
        payload["p"] = args.p
        payload["lucas"] = binom_mod_lucas(args.n, args.k, args.p)
    return json.dumps(payload, indent=2) + "\n"


_COMMANDS = {
    "analyze": _cmd_analyze,
    "search": _cmd_search,
    "verify-paper": _cmd_verify,
    "kernel-check": _cmd_kernel,
    "sphere6": _cmd_sphere6,
    "facts": _cmd_facts,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        output = _COMMANDS[args.command](args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        print(f"run `{parser.prog} --help` for usage", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except AssertionError as err:
        print(f"internal assertion failure: {err}", file=sys.stderr)
        return 2
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
