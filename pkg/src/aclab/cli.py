"""Command-line front end: ``aclab <subcommand> ...``.

Exit status is 0 on success, 1 when a verification run has a failing row,
2 on usage errors (bad arguments, parameters outside a class's domain) and
3 when a resource budget is exhausted.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as B
from .atoms import atom_report, atomaton, atomicity_classes
from .automata import Dfa, Nfa, determinize, dumps, from_json, minimize
from .classify import classify
from .config import BudgetExceeded
from .manifest import MANIFEST
from .operations import NAMED_OPS, boolean, boolean_op, complement, product, reverse, star
from .regex import derivative_dfa, parse
from .semigroup import transition_semigroup
from .verify import any_failed, measure, report, verify
from .witnesses import WITNESS_CLASSES, apply_dialect, make_witness, parse_dialect

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

UNARY_OPS = ("star", "reverse", "complement")
BUDGET_FLAGS = {"semigroup-limit": "ACLAB_SEMIGROUP_LIMIT",
                "subset-limit": "ACLAB_SUBSET_LIMIT",
                "pair-limit": "ACLAB_PAIR_LIMIT"}
BINARY_OPS = ("product",) + tuple(NAMED_OPS)


class UsageError(ValueError):
    pass


def parse_range(text: str) -> list:
    """``"4..6"`` -> [4, 5, 6]; ``"4,6"`` -> [4, 6]; ``"5"`` -> [5]."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def _int_range(text: str) -> list:
    try:
        return parse_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _state_set(text: str) -> frozenset:
    return frozenset(int(x) for x in text.split(",") if x.strip())


def _read_automaton(path: str):
    if path == "-":
        return from_json(json.load(sys.stdin))
    with open(path) as fh:
        return from_json(json.load(fh))


def _as_dfa(x) -> Dfa:
    return determinize(x) if isinstance(x, Nfa) else x


def _inputs(args) -> list:
    """DFAs from the positional files, or from ``--regex``."""
    out = []
    for expr in args.regex or ():
        out.append(derivative_dfa(parse(expr)))
    for path in args.inputs or ():
        out.append(_as_dfa(_read_automaton(path)))
    return out


def _one_input(args) -> Dfa:
    dfas = _inputs(args)
    if len(dfas) != 1:
        raise UsageError(f"expected one automaton, got {len(dfas)}")
    return dfas[0]


def _emit(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# subcommands


def cmd_witness(args) -> int:
    d = make_witness(args.cls, args.n, args.k)
    if args.dialect is not None:
        d = apply_dialect(d, parse_dialect(args.dialect))
    _emit(dumps(d), args.output)
    return EXIT_OK


def cmd_measure(args) -> int:
    d = _one_input(args)
    _emit(_json(measure(d, args.measure or ("all",))), args.output)
    return EXIT_OK


def cmd_op(args) -> int:
    if (args.op is None) == (args.op_mask is None):
        raise UsageError("give exactly one of --op and --op-mask")
    name = args.op
    dfas = _inputs(args)
    if name in UNARY_OPS:
        if len(dfas) != 1:
            raise UsageError(f"{name} takes one automaton, got {len(dfas)}")
        d = dfas[0]
        result = {"star": star, "reverse": reverse,
                  "complement": lambda x: minimize(complement(x))}[name](d)
    else:
        if len(dfas) != 2:
            raise UsageError(f"binary operations take two automata, got {len(dfas)}")
        if name == "product":
            result = product(dfas[0], dfas[1], args.mode)
        else:
            result = boolean(dfas[0], dfas[1], boolean_op(args.op_mask or name), args.mode)
    _emit(dumps(result), args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    d = _one_input(args)
    _emit(_json(classify(d, explain=args.explain).to_json()), args.output)
    return EXIT_OK


def cmd_atoms(args) -> int:
    d = minimize(_one_input(args))
    out = atom_report(d)
    if args.atomaton:
        a = atomaton(d)
        out["atomaton"] = a.nfa.to_json()
        out["atomaton_states"] = [sorted(S) for S in a.atoms]
    _emit(_json(out), args.output)
    return EXIT_OK


def cmd_semigroup(args) -> int:
    d = minimize(_one_input(args))
    out = transition_semigroup(d).report()
    if args.atomicity:
        out["atomicity"] = atomicity_classes(d)
    _emit(_json(out), args.output)
    return EXIT_OK


def _bound_value(args, n, m):
    op = args.op_mask or args.op
    return B.bound(args.cls, args.measure, n, m=m, k=args.k, j=args.j, S=args.S,
                   op=op, mode=args.mode, allow_conjecture=args.allow_conjecture)


def cmd_bounds(args) -> int:
    ns = args.n
    ms = args.m or []
    if args.table:
        rows = B.bound_table(args.cls, ns, ms)
        if args.format == "json":
            _emit(_json({"class": args.cls, "rows": rows}), args.output)
        else:
            lines = ["| measure | n | m | value |", "|---|---|---|---|"]
            for r in rows:
                m = "-" if r["m"] is None else r["m"]
                lines.append(f"| {r['measure']} | {r['n']} | {m} | {r['value']} |")
            _emit("\n".join(lines), args.output)
        return EXIT_OK
    if args.measure is None:
        raise UsageError("--measure is required unless --table is given")
    if len(ns) != 1 or len(ms) > 1:
        raise UsageError("ranges are only accepted with --table")
    value = _bound_value(args, ns[0], ms[0] if ms else None)
    if isinstance(value, tuple):
        value = " ".join(map(str, value))
    _emit(str(value), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify(args.cls, args.n, args.m or (), args.measure)
    _emit(report(results, args.format, timings=args.timings), args.output)
    return EXIT_FAIL if any_failed(results) else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="aclab",
                                description="Complexity laboratory for regular languages.")
    for flag, env in BUDGET_FLAGS.items():
        p.add_argument(f"--{flag}", type=int, metavar="N",
                       help=f"override the budget otherwise read from {env}")
    sub = p.add_subparsers(dest="command", required=True)

    def inputs(sp, nargs="*"):
        sp.add_argument("inputs", nargs=nargs, metavar="FILE",
                        help="automaton JSON ('-' reads standard input)")
        sp.add_argument("--regex", action="append",
                        help="use the quotient DFA of this expression instead of a file")

    def out(sp):
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")

    sp = sub.add_parser("witness", help="print a witness DFA as JSON")
    sp.add_argument("--class", dest="cls", required=True, choices=WITNESS_CLASSES)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--dialect", help='positional renaming such as "a,b,-,c"')
    out(sp)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("measure", help="complexity measures of an automaton")
    inputs(sp)
    sp.add_argument("--measure", action="append",
                    choices=("all", "quotient_profile", "semigroup", "reversal", "atoms", "star"))
    out(sp)
    sp.set_defaults(func=cmd_measure)

    sp = sub.add_parser("op", help="apply an operation and print the minimal DFA")
    inputs(sp)
    sp.add_argument("--op", choices=UNARY_OPS + BINARY_OPS)
    sp.add_argument("--op-mask", help="boolean operation as four bits, e.g. 0110")
    sp.add_argument("--mode", choices=("restricted", "unrestricted"), default="restricted")
    out(sp)
    sp.set_defaults(func=cmd_op)

    sp = sub.add_parser("classify", help="class memberships as JSON")
    inputs(sp)
    sp.add_argument("--explain", action="store_true",
                    help="add counterexample words for every false flag")
    out(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("atoms", help="atoms and their complexities")
    inputs(sp)
    sp.add_argument("--atomaton", action="store_true", help="include the átomaton NFA")
    out(sp)
    sp.set_defaults(func=cmd_atoms)

    sp = sub.add_parser("semigroup", help="transition semigroup summary")
    inputs(sp)
    sp.add_argument("--atomicity", action="store_true",
                    help="add the FTS/STS/MAL/MNA/MCR flags")
    out(sp)
    sp.set_defaults(func=cmd_semigroup)

    sp = sub.add_parser("bounds", help="evaluate closed-form bounds")
    sp.add_argument("--class", dest="cls", required=True)
    sp.add_argument("--measure", choices=B.MEASURES)
    sp.add_argument("--n", type=_int_range, required=True, help="size, or a range with --table")
    sp.add_argument("--m", type=_int_range)
    sp.add_argument("--k", type=int)
    sp.add_argument("--j", type=int)
    sp.add_argument("--S", type=_state_set, help='atom index set such as "0,2"')
    sp.add_argument("--op")
    sp.add_argument("--op-mask")
    sp.add_argument("--mode", choices=("restricted", "unrestricted"), default="restricted")
    sp.add_argument("--allow-conjecture", action="store_true")
    sp.add_argument("--table", action="store_true", help="every measure over the given ranges")
    sp.add_argument("--format", choices=("markdown", "json"), default="markdown")
    out(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("verify", help="check witnesses against the bounds")
    sp.add_argument("--class", dest="cls", required=True, choices=sorted(MANIFEST))
    sp.add_argument("--n", type=_int_range, required=True, help='sizes such as "4..6"')
    sp.add_argument("--m", type=_int_range, help="sizes of the first operand")
    sp.add_argument("--measure", action="append")
    sp.add_argument("--format", choices=("markdown", "json"), default="markdown")
    sp.add_argument("--timings", action="store_true")
    out(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    saved = {}
    for flag, env in BUDGET_FLAGS.items():
        value = getattr(args, flag.replace("-", "_"))
        if value is not None:
            saved[env] = os.environ.get(env)
            os.environ[env] = str(value)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"aclab: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, LookupError, OSError) as exc:
        print(f"aclab {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        for env, old in saved.items():
            if old is None:
                os.environ.pop(env, None)
            else:
                os.environ[env] = old


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
