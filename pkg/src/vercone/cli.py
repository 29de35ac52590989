"""Command-line front end.

stdout carries data (JSON or CSV), stderr carries diagnostics.  Exit codes:
0 success, 1 mathematical mismatch, 2 invalid usage, 3 resource cap hit.
"""

import argparse
import json
import sys

from .bott import bott
from .charpoly import WeightWindow
from .errors import ResourceCapExceeded, VerificationFailure, VeroneseError
from .verify import SUITES, run_suite
from .veronese import MultiplicityTable, dj_character, e_character, ext_via_bott, m_lambda, nu_stable

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

NEGATIVE_HELP = (
    "Negative entries: write a leading 'm' (m3 means -3, e.g. --mu m1,2) or attach "
    "the value with '=' (--mu=-1,2). Plain '--r -3' also works."
)


class UsageError(Exception):
    pass


def integer(text):
    text = text.strip()
    if text.startswith("m"):
        text = "-" + text[1:]
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def integer_list(text):
    if text.strip() == "":
        return ()
    return tuple(integer(part) for part in text.split(","))


def _guards(args):
    n, d = getattr(args, "n", None), getattr(args, "d", None)
    if args.allow_large:
        return
    if n is not None and not 1 <= n <= 10:
        raise UsageError(f"--n {n} is outside 1..10 (pass --allow-large to override)")
    if d is not None and not 2 <= d <= 6:
        raise UsageError(f"--d {d} is outside 2..6 (pass --allow-large to override)")


def _emit(args, text):
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj):
    return json.dumps(obj, separators=(", ", ": "))


def cmd_character(args):
    target = args.target.upper()
    window = WeightWindow(args.n, args.l1max, args.lnmin)
    if target == "E":
        table = MultiplicityTable.from_character("e", args.d, e_character(args.d, window, args.threads))
    elif target.startswith("D") and target[1:].isdigit() and int(target[1:]) < args.d:
        j = int(target[1:])
        char = dj_character(j, args.d, window, args.threads)
        table = MultiplicityTable.from_character("a_j", args.d, char, j)
    else:
        raise UsageError(f"--target must be one of D0..D{args.d - 1} or E, got {args.target!r}")
    _emit(args, table.to_csv() if args.format == "csv" else _dump(table.to_dict()))
    return EXIT_OK


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    options = {}
    for key in ("n", "d"):
        if getattr(args, key) is not None:
            options[key] = [getattr(args, key)]
    for key in ("l1max", "lnmin", "sizemax", "musize"):
        if getattr(args, key) is not None:
            options[key] = getattr(args, key)
    worst = EXIT_OK
    lines = []
    for name in names:
        for result in run_suite(name, options):
            lines.append(result.line())
            if result.status != "pass":
                worst = EXIT_MISMATCH
    _emit(args, "\n".join(lines))
    if worst:
        failed = sum(1 for line in lines if not line.startswith("[PASS]"))
        print(f"{failed} suite(s) did not pass", file=sys.stderr)
    return worst


def cmd_bott(args):
    if len(args.mu) != args.n - 1:
        raise UsageError(f"--mu needs n-1 = {args.n - 1} entries, got {len(args.mu)}")
    result = bott(args.mu, args.r, args.n)
    if result is None:
        out = {"vanishing": True, "l": None, "lambda": None}
    else:
        out = {"vanishing": False, "l": result.l, "lambda": list(result.weight)}
    _emit(args, _dump(out))
    return EXIT_OK


def cmd_nu(args):
    if len(args.mu) != args.n - 1:
        raise UsageError(f"--mu needs n-1 = {args.n - 1} entries, got {len(args.mu)}")
    _emit(args, _dump(nu_stable(args.mu, args.d)))
    return EXIT_OK


def cmd_m(args):
    if len(args.weight) != args.n:
        raise UsageError(f"--lambda needs n = {args.n} entries, got {len(args.weight)}")
    _emit(args, _dump(m_lambda(args.weight, args.d)))
    return EXIT_OK


def cmd_ext(args):
    if len(args.mu) != args.n:
        raise UsageError(f"--mu needs n = {args.n} entries, got {len(args.mu)}")
    window = WeightWindow(args.n, args.l1max, args.lnmin)
    _emit(args, _dump(ext_via_bott(args.mu, args.d, window).to_dict()))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--allow-large", action="store_true", help="lift the n <= 10, d <= 6 guard")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--threads", type=int, default=1, help="worker threads for weight sweeps")

    parser = argparse.ArgumentParser(
        prog="vercone",
        description="Characters of equivariant D-modules on Veronese cones.",
        epilog=NEGATIVE_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("character", parents=[common], help="windowed character of D_j or E")
    p.add_argument("--target", required=True, help="D0 .. D(d-1) or E")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--l1max", type=integer, required=True)
    p.add_argument("--lnmin", type=integer, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--l1max", type=integer)
    p.add_argument("--lnmin", type=integer)
    p.add_argument("--sizemax", type=int)
    p.add_argument("--musize", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bott", parents=[common], help="Bott's theorem on P^(n-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=integer_list, required=True)
    p.add_argument("--r", type=integer, required=True)
    p.set_defaults(func=cmd_bott)

    p = sub.add_parser("nu", parents=[common], help="stable plethysm multiplicity nu_mu")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", type=integer_list, required=True)
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("m", parents=[common], help="alternating sum m_lambda")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="weight", type=integer_list, required=True)
    p.set_defaults(func=cmd_m)

    p = sub.add_parser("ext", parents=[common], help="Ext^*(M_mu, S) through Bott's theorem")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", type=integer_list, required=True)
    p.add_argument("--l1max", type=integer, required=True)
    p.add_argument("--lnmin", type=integer, required=True)
    p.set_defaults(func=cmd_ext)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _guards(args)
        return args.func(args)
    except VerificationFailure as exc:
        print(f"mathematical mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, VeroneseError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
