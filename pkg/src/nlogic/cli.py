"""``nl`` command line.

Exit status: 0 success / VALID / provable, 1 a checked negative verdict
(INVALID, ill-typed, not found within budget), 2 usage, I/O or syntax error.
"""

import argparse
import json
import sys

from nlogic.calculus import Mode, Sequent, check_proof, wf_sequent
from nlogic.errors import FuelExhausted, IllTyped, NLError, NLSyntaxError
from nlogic.proofio import dump_proof, load_prelude, load_proof, proof_to_json
from nlogic.search import SearchBudget, prove
from nlogic.surface import print_term, print_type, read_sequent, read_term
from nlogic.surface.elaborate import ill_typed_span
from nlogic.term import normalize
from nlogic.typecheck import types_of

OK, NEGATIVE, FAILURE = 0, 1, 2


class _Usage(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _diagnose(err, source=None):
    print(f"error: {err}", file=sys.stderr)
    span = getattr(err, "span", None)
    if source is not None and span is not None and "\n" not in source:
        start, end = span
        print(f"  {source}", file=sys.stderr)
        print("  " + " " * start + "^" * max(1, end - start), file=sys.stderr)


def _expr_source(args):
    if args.expr is not None:
        return args.expr
    if args.source is None:
        raise _Usage("give an expression or -e EXPR")
    return args.source


def cmd_parse(args):
    if args.expr is not None:
        text = args.expr
    elif args.source is None or args.source == "-":
        text = sys.stdin.read()
    else:
        with open(args.source, encoding="utf-8") as fh:
            text = fh.read()
    args.text = text = text.strip()
    prelude = load_prelude(args.prelude)
    term = read_term(text, prelude)
    print(print_term(term, resugar=args.resugar))
    return OK


def cmd_type(args):
    prelude = load_prelude(args.prelude)
    text = _expr_source(args)
    term = read_term(text, prelude)
    try:
        tys = types_of(term)
    except IllTyped as e:
        e.span = ill_typed_span(text, prelude)
        raise
    for ty in tys:
        print(print_type(ty))
    return OK


def cmd_reduce(args):
    prelude = load_prelude(args.prelude)
    term = read_term(_expr_source(args), prelude)
    print(print_term(normalize(term, args.strategy, args.fuel), resugar=args.resugar))
    return OK


def cmd_check(args):
    root, mode, _ = load_proof(args.proof)
    if args.mode:
        mode = Mode(args.mode)
    report = check_proof(root, mode)
    if args.report == "json":
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(report.to_text())
    return OK if report.valid else NEGATIVE


def cmd_prove(args):
    prelude = load_prelude(args.prelude)
    left, right = read_sequent(args.sequent, prelude)
    goal = Sequent(left, right)
    if not wf_sequent(goal):
        print("error: every member of the sequent must be a formula", file=sys.stderr)
        return NEGATIVE
    mode = Mode(args.mode)
    node = prove(goal, SearchBudget(args.depth, args.nodes), mode)
    if node is None:
        print("not found within budget")
        return NEGATIVE
    if args.emit:
        dump_proof(node, mode, args.emit, None if args.prelude in (None, "empty") else args.prelude)
    else:
        print(json.dumps(proof_to_json(node, mode, args.prelude), indent=2))
    print("proof found", file=sys.stderr)
    return OK


def build_parser():
    parser = _ArgParser(prog="nl", description="Nominalistic Logic kernel")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    def with_term(name, help_, positional):
        p = sub.add_parser(name, help=help_)
        p.add_argument("source", nargs="?", help=positional)
        p.add_argument("-e", "--expr", help="term given inline")
        p.add_argument("--prelude", help="prelude file ('empty' for none)")
        return p

    p = with_term("parse", "print the elaborated kernel term", "file with a term ('-' for stdin)")
    p.add_argument("--resugar", action="store_true")
    p.set_defaults(func=cmd_parse)

    p = with_term("type", "print every type of a term", "term")
    p.set_defaults(func=cmd_type)

    p = with_term("reduce", "print the beta/eta normal form", "term")
    p.add_argument("--strategy", choices=["lo", "ri"], default="lo")
    p.add_argument("--fuel", type=int, default=10000)
    p.add_argument("--resugar", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("check", help="check a JSON proof file")
    p.add_argument("proof")
    p.add_argument("--mode", choices=["strict", "paper"])
    p.add_argument("--report", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("prove", help="search for a proof of a sequent")
    p.add_argument("sequent", help="e.g. 'p, q |- q'")
    p.add_argument("--prelude")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--nodes", type=int, default=200_000)
    p.add_argument("--mode", choices=["strict", "paper"], default="strict")
    p.add_argument("--emit", help="write the proof file here")
    p.set_defaults(func=cmd_prove)
    return parser


def _source_text(args):
    """The text a span points into, for the caret line."""
    for name in ("text", "expr", "sequent"):
        value = getattr(args, name, None)
        if value is not None:
            return value
    return None if args.command == "parse" else getattr(args, "source", None)


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except _Usage as e:
        print(f"usage error: {e}", file=sys.stderr)
        return FAILURE
    try:
        return args.func(args)
    except _Usage as e:
        print(f"usage error: {e}", file=sys.stderr)
        return FAILURE
    except (IllTyped, FuelExhausted) as e:
        _diagnose(e, _source_text(args))
        return NEGATIVE
    except NLSyntaxError as e:
        _diagnose(e, _source_text(args))
        return FAILURE
    except (NLError, OSError, ValueError) as e:
        _diagnose(e)
        return FAILURE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
