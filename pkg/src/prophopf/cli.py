"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (ill-typed term,
non-canonical input, failing suite) and 2 on a parse or usage error. Errors
are a single stderr line ``ERROR <kind>: <message>``.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import axioms
from .canonical import decode, encode, equal, normalize_eval, normalize_rewrite, peel
from .errors import ParseError, PropHopfError
from .hterm import conv, evaluate, infer_type, vee
from .render import render
from .syntax import parse_bracket, parse_canonical, parse_term, print_term


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"usage: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="prophopf", description="Normal forms for the free commutative Hopf PROP.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("parse", "type", "eval", "render"):
        sub.add_parser(name).add_argument("term")
    norm = sub.add_parser("normalize")
    norm.add_argument("--engine", choices=("eval", "rewrite"), default="eval")
    norm.add_argument("term")
    sub.add_parser("encode").add_argument("bracket")
    sub.add_parser("peel").add_argument("bracket")
    sub.add_parser("decode").add_argument("canonical")
    for name in ("equal", "conv", "vee"):
        cmd = sub.add_parser(name)
        cmd.add_argument("term")
        cmd.add_argument("other")
    suite = sub.add_parser("suite", help="run an invariant suite; 'all' runs every suite, 'manifest' lists them")
    suite.add_argument("name")
    suite.add_argument("--seed", type=int, default=None)
    suite.add_argument("--count", type=int, default=1000)
    suite.add_argument("--max-nodes", type=int, default=30)
    return parser


def _default_seed() -> int:
    raw = os.environ.get("PROP_HOPF_SEED")
    if raw is None:
        return 1
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"PROP_HOPF_SEED must be an integer, got {raw!r}") from None


def _suite(args) -> tuple[str, int]:
    if args.name == "manifest":
        return axioms.manifest_text(), 0
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        cfg = axioms.FuzzConfig(seed=seed, max_nodes=args.max_nodes, count=args.count)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    names = axioms.SUITES if args.name == "all" else (args.name,)
    reports = [axioms.run_suite(name, cfg) for name in names]
    return "\n".join(map(str, reports)), 0 if all(r.passed for r in reports) else 1


def _peel(text: str) -> str:
    f = parse_bracket(text)
    c = encode(f.words, f.cod)
    lines = []
    while c.size:
        (i, j, e), c = peel(c)
        lines.append(f"y({i},{j},{e},{f.dom},{f.cod})")
    lines.append(str(c))
    return "\n".join(lines)


def run(argv: list[str]) -> tuple[str, int]:
    args = build_parser().parse_args(argv)
    cmd = args.command
    if cmd == "parse":
        return print_term(parse_term(args.term)), 0
    if cmd == "type":
        dom, cod = infer_type(parse_term(args.term))
        return f"{dom} -> {cod}", 0
    if cmd == "eval":
        return str(evaluate(parse_term(args.term))), 0
    if cmd == "normalize":
        t = parse_term(args.term)
        form = normalize_rewrite(t) if args.engine == "rewrite" else normalize_eval(t)
        return str(form), 0
    if cmd == "encode":
        f = parse_bracket(args.bracket)
        return str(encode(f.words, f.cod)), 0
    if cmd == "decode":
        return print_term(decode(parse_canonical(args.canonical))), 0
    if cmd == "equal":
        return ("true" if equal(parse_term(args.term), parse_term(args.other)) else "false"), 0
    if cmd == "conv":
        return str(evaluate(conv(parse_term(args.term), parse_term(args.other)))), 0
    if cmd == "vee":
        return str(evaluate(vee(parse_term(args.term), parse_term(args.other)))), 0
    if cmd == "peel":
        return _peel(args.bracket), 0
    if cmd == "suite":
        return _suite(args)
    if cmd == "render":
        return render(parse_term(args.term)), 0
    raise ParseError(f"unknown command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        out, status = run(argv)
    except ParseError as exc:
        print(f"ERROR parse: {exc}", file=sys.stderr)
        return 2
    except PropHopfError as exc:
        print(f"ERROR {exc.kind}: {exc}", file=sys.stderr)
        return 1
    except RecursionError:
        print("ERROR domain: term nesting too deep", file=sys.stderr)
        return 1
    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
