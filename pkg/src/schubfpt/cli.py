"""Command-line front end.

Exit codes: 0 success, 1 an oracle or check disagreed, 2 invalid input,
3 a budget was exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .chains import decrement_chain
from .config import load_settings
from .errors import BudgetExceededError, SchubertError
from .export import (
    dumps,
    invariant_report,
    irreducibles_dot,
    irreducibles_json,
    lattice_dot,
    lattice_json,
    report_table,
)
from .lattice import SchubertLattice, principal_chain_direct
from .tuples import GammaTuple
from .verify import CHECKS, run_checks, summarize

EXIT_OK, EXIT_DISAGREE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _settings(args):
    overrides = {
        "max_elements": args.max_elements,
        "max_ideals": args.max_ideals,
        "max_multichains": args.max_multichains,
        "max_triples": args.max_triples,
        "jobs": getattr(args, "jobs", None),
    }
    try:
        return load_settings(args.config, overrides)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _gamma(args) -> GammaTuple:
    return GammaTuple.parse(args.gamma, d=args.d, n=args.n)


def format_chain(chain, mark: str = "*") -> str:
    """One tuple per line; entries that changed from the previous line get ``mark``."""
    lines = []
    prev = None
    for i, xi in enumerate(chain, 1):
        cells = [f"{mark}{x}" if prev is not None and x != p else str(x) for x, p in zip(xi, prev or xi)]
        lines.append(f"{i:>3}  [" + ", ".join(cells) + "]")
        prev = xi
    return "\n".join(lines) + "\n"


def cmd_invariants(args) -> int:
    settings = _settings(args)
    gamma = _gamma(args)
    report = invariant_report(gamma, oracles=args.oracles, max_elements=settings.max_elements)
    sys.stdout.write(dumps(report) if args.format == "json" else report_table(report))
    if args.oracles and not all(report["oracles"]["agreement"].values()):
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_chain(args) -> int:
    gamma = _gamma(args)
    chain = principal_chain_direct(gamma) if args.mode == "principal" else decrement_chain(gamma.entries)
    if args.format == "json":
        doc = {"mode": args.mode, "gamma": list(gamma.entries), "n": gamma.n, "chain": [list(x) for x in chain]}
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write(format_chain(chain))
    return EXIT_OK


def cmd_export(args) -> int:
    settings = _settings(args)
    gamma = _gamma(args)
    lat = SchubertLattice.enumerate(gamma, settings.max_elements)
    render = {
        ("lattice", "json"): lambda: dumps(lattice_json(lat)),
        ("lattice", "dot"): lambda: lattice_dot(lat),
        ("irreducibles", "json"): lambda: dumps(irreducibles_json(lat)),
        ("irreducibles", "dot"): lambda: irreducibles_dot(lat),
    }[(args.what, args.format)]
    text = render()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    settings = _settings(args)
    names = list(CHECKS) if args.checks == "all" else [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)} or 'all'")
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    results = run_checks(names, args.max_n, settings)
    summary = summarize(results)
    if args.format == "json":
        sys.stdout.write(dumps({"max_n": args.max_n, "checks": summary}))
    else:
        for name in names:
            s = summary.get(name, {"pass": 0, "fail": 0, "skip": 0, "tags": {}, "failures": []})
            tags = " ".join(f"{k}={v}" for k, v in s["tags"].items())
            status = "FAIL" if s["fail"] else ("SKIPPED" if s["skip"] else "PASS")
            print(f"{status:<7} {name:<10} pass={s['pass']} fail={s['fail']} skipped={s['skip']}  {tags}".rstrip())
            for f in s["failures"]:
                print(f"        n={f['n']} gamma={f['gamma']}: {'; '.join(f['messages'])}")
        for r in results:
            if r.status == "skip":
                print(f"skipped {r.check} n={r.n} gamma={list(r.gamma)}: {'; '.join(r.messages)}")
    if any(r.status == "fail" for r in results):
        return EXIT_DISAGREE
    if any(r.status == "skip" for r in results):
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with budget settings (also $SCHUBFPT_CONFIG)")
    common.add_argument("--max-elements", type=int, help="largest lattice to materialize")
    common.add_argument("--max-ideals", type=int, help="largest ideal lattice to rebuild")
    common.add_argument("--max-multichains", type=int, help="cap on enumerated multichains")
    common.add_argument("--max-triples", type=int, help="exhaustive distributivity check below this")

    tuple_args = argparse.ArgumentParser(add_help=False)
    tuple_args.add_argument("-d", type=int, required=True, help="tuple length")
    tuple_args.add_argument("-n", type=int, required=True, help="ambient bound")
    tuple_args.add_argument("-g", "--gamma", required=True, help="comma-separated entries, e.g. 2,3,4,6,8,9")

    parser = argparse.ArgumentParser(prog="schubfpt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common, tuple_args], help="fpt, -a and the kappa profile")
    p.add_argument("--oracles", action="store_true", help="also run lattice, chain and poset oracles")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("chain", parents=[common, tuple_args], help="print the principal or decrement chain")
    p.add_argument("--mode", choices=["principal", "algorithm2"], default="principal")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("export", parents=[common, tuple_args], help="lattice or join-irreducibles as JSON/DOT")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--what", choices=["lattice", "irreducibles"], default="lattice")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", parents=[common], help="sweep every check over all tuples with n <= N")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--checks", default="all", help=f"comma-separated subset of {','.join(CHECKS)}, or 'all'")
    p.add_argument("--jobs", type=int, help="worker processes")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, SchubertError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
