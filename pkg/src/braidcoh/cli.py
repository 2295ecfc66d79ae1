"""Command-line front end.

    braidcoh compute b3 2 8 int            # H^2(B3; M_8)
    braidcoh compute --group z4 --coh-degree 2 --degree 8 --json
    braidcoh series b3-free 28
    braidcoh verify --suite sl2z-h1 --max-degree 120 --jobs 4 --output report.json

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from sympy import isprime

from . import series as series_mod
from .suites import SUITES, run_suite

GROUPS = ("z2", "z4", "z6", "sl2z", "b3")


def parse_coeff(text: str) -> int:
    """``int`` -> 0, ``mod:p`` -> p (p prime)."""
    if text == "int":
        return 0
    if text.startswith("mod:"):
        try:
            p = int(text[4:])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad coefficient {text!r}") from None
        if not isprime(p):
            raise argparse.ArgumentTypeError(f"mod:{p} needs a prime modulus")
        return p
    raise argparse.ArgumentTypeError(f"coefficient must be 'int' or 'mod:p', got {text!r}")


def compute(group: str, i: int, n: int, coeff: int):
    from .amalgam import sl2z_cohomology
    from .braid import b3_cohomology
    from .cyclic import cyclic_cohomology

    if group == "sl2z":
        return sl2z_cohomology(i, n, coeff)
    if group == "b3":
        return b3_cohomology(i, n, coeff)
    return cyclic_cohomology(int(group[1:]), i, n, coeff)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidcoh",
                                     description="Cohomology of B3 and SL2(Z) with coefficients in Z[x, y].")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="one cohomology group")
    c.add_argument("pos", nargs="*", metavar="GROUP I DEGREE [COEFF]")
    c.add_argument("--group", choices=GROUPS)
    c.add_argument("--coh-degree", type=int)
    c.add_argument("--degree", type=int, help="weighted degree n = 2d (even)")
    c.add_argument("--coeff", default=None, help="int or mod:p")
    c.add_argument("--json", action="store_true")

    s = sub.add_parser("series", help="expand a catalog Poincare series")
    s.add_argument("name", nargs="?")
    s.add_argument("max_degree", nargs="?", type=int)
    s.add_argument("--max-degree", dest="max_degree_flag", type=int)
    s.add_argument("--zeros", action="store_true", help="also print zero coefficients")
    s.add_argument("--list", action="store_true", help="list catalog identifiers")
    s.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite_pos", nargs="?", metavar="SUITE")
    v.add_argument("--suite")
    v.add_argument("--max-degree", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.add_argument("--output")
    return parser


def _cmd_compute(parser, args) -> int:
    pos = list(args.pos)
    if len(pos) > 4:
        parser.error("compute takes at most GROUP I DEGREE COEFF")
    pos += [None] * (4 - len(pos))
    group = args.group or pos[0]
    try:
        i = args.coh_degree if args.coh_degree is not None else (int(pos[1]) if pos[1] is not None else None)
        n = args.degree if args.degree is not None else (int(pos[2]) if pos[2] is not None else None)
    except ValueError:
        parser.error("cohomological degree and weighted degree must be integers")
    coeff_text = args.coeff or pos[3] or "int"
    if group not in GROUPS:
        parser.error(f"group must be one of {', '.join(GROUPS)}")
    if i is None or n is None:
        parser.error("need a cohomological degree and a weighted degree")
    if i < 0:
        parser.error("cohomological degree must be >= 0")
    if n < 0 or n % 2:
        parser.error(f"weighted degree must be even and non-negative, got {n}")
    try:
        coeff = parse_coeff(coeff_text)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))

    note = None
    if group == "b3" and i > 2:
        note = "B3 has cohomological dimension 2, so H^i vanishes for i > 2"
    result = compute(group, i, n, coeff)
    if coeff:
        text = f"F_{coeff}^{result}" if result else "0"
        payload = {"group": group, "i": i, "n": n, "coeff": coeff_text, "dimension": result}
    else:
        text = str(result)
        payload = {"group": group, "i": i, "n": n, "free_rank": result.free_rank,
                   "torsion": [str(q) for q in result.prime_powers()]}
    if args.json:
        if note:
            payload["note"] = note
        print(json.dumps(payload))
    else:
        if note:
            print(note, file=sys.stderr)
        print(text)
    return 0


def _cmd_series(parser, args) -> int:
    if args.list or not args.name:
        for name in series_mod.catalog_names():
            print(f"{name:24s} {series_mod.CATALOG[name].meaning}")
        return 0 if args.list else 2
    try:
        entry = series_mod.get(args.name)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    top = args.max_degree_flag if args.max_degree_flag is not None else args.max_degree
    top = 40 if top is None else top
    if top < 0:
        parser.error("max degree must be non-negative")
    coeffs = entry.series.expand(top)
    rows = [(d, c) for d, c in enumerate(coeffs) if c or args.zeros]
    if args.json:
        print(json.dumps({"series": entry.name, "coefficients": rows}))
    else:
        for d, c in rows:
            print(f"{d}\t{c}")
    return 0


def _cmd_verify(parser, args) -> int:
    suite = args.suite or args.suite_pos
    if suite not in SUITES + ("all",):
        parser.error(f"suite must be one of {', '.join(SUITES + ('all',))}")
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    if args.max_degree is not None and (args.max_degree < 0 or args.max_degree % 2):
        parser.error("--max-degree must be even and non-negative")
    report = run_suite(suite, args.max_degree, args.jobs)
    text = report.to_json()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    if args.json:
        print(text)
    else:
        for case in report.cases:
            if case.status == "fail":
                print(f"FAIL {case.group} i={case.i} n={case.n} {case.coeff}: "
                      f"expected {case.expected}, computed {case.computed}")
        print(f"{report.suite}: {report.passed} passed, {report.failed} failed "
              f"({report.wall_time:.1f}s)")
    return 0 if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {"compute": _cmd_compute, "series": _cmd_series, "verify": _cmd_verify}[args.command]
    return handler(parser, args)


if __name__ == "__main__":
    sys.exit(main())
