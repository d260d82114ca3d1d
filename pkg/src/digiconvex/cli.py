"""Command-line client for the library.

Every subcommand parses arguments, calls one library function, and prints;
no algorithmic logic lives here.  Exit codes: 0 success (all requested
checks true), 1 a requested check is false or a factorization is absent,
2 usage or domain errors, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .christoffel import central_word, christoffel_lower, christoffel_upper
from .convexity import is_digitally_convex, mfw_balanced, mfw_dc, mfw_of_word
from .counting import OEIS_IDS, count_table
from .errors import CapExceeded, ContractError, ParseError
from .lattice import (
    cover_relations,
    deflate,
    deflation_chain,
    deflation_sites,
    enumerate_dc,
    inflate,
    inflation_chain,
    inflation_sites,
    join,
    meet,
)
from .lyndon import PRETTY_SEPARATOR
from .render import RenderSpec, render
from .service import factorize_word, run_checks
from .words import parikh, parse_word

DEFAULT_CAP = 24

TEXT = "text"
JSON = "json"


def _emit(payload: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == JSON:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_christoffel(args) -> int:
    if args.central:
        word = central_word(args.a, args.b)
    elif args.upper:
        word = christoffel_upper(args.a, args.b)
    else:
        word = christoffel_lower(args.a, args.b)
    a, b = parikh(word)
    _emit({"word": word, "parikh": [a, b]}, [word], args.format)
    return 0


_CHECK_FLAGS = {
    "balanced": "balanced",
    "convex_up": "convex-up",
    "convex_down": "convex-down",
    "lyndon": "lyndon",
    "central": "central",
    "christoffel": "christoffel",
}


def cmd_check(args) -> int:
    word = parse_word(args.word)
    requested = [name for attr, name in _CHECK_FLAGS.items() if getattr(args, attr)]
    if not requested:
        print("error: request at least one check flag", file=sys.stderr)
        return 2
    results, witness = run_checks(word, requested, args.order)
    a, b = parikh(word)
    payload: dict = {"word": word, "parikh": [a, b]}
    payload.update({name.replace("-", "_"): value for name, value in results.items()})
    payload["witness"] = (
        {"start": witness.start, "end": witness.end, "factor": witness.factor}
        if witness
        else None
    )
    lines = [f"{name} {'true' if value else 'false'}" for name, value in results.items()]
    if witness:
        lines.append(f"witness {witness.factor} at {witness.start}..{witness.end}")
    _emit(payload, lines, args.format)
    return 0 if all(results.values()) else 1


def cmd_factorize(args) -> int:
    word = parse_word(args.word)
    factors = factorize_word(word, args.mode)
    if factors is None:
        _emit({"word": word, "factors": None}, ["absent"], args.format)
        return 1
    _emit(
        {"word": word, "factors": factors},
        [PRETTY_SEPARATOR.join(factors)],
        args.format,
    )
    return 0


def cmd_mfw(args) -> int:
    if args.source == "word":
        words = mfw_of_word(parse_word(args.arg), args.max_len)
    elif args.source == "balanced":
        words = mfw_balanced(int(args.arg))
    else:
        words = mfw_dc(int(args.arg), args.construction)
    _emit({"words": words}, words, args.format)
    return 0


def _check_cap(a: int, b: int, cap: int) -> None:
    if a + b > cap:
        raise CapExceeded(f"a+b = {a + b} exceeds the cap {cap}; raise --cap to proceed")


def cmd_lattice(args) -> int:
    action = args.action
    if action == "enumerate":
        _check_cap(args.a, args.b, args.cap)
        words = enumerate_dc(args.a, args.b)
        _emit({"words": words}, words, args.format)
        return 0
    if action == "covers":
        _check_cap(args.a, args.b, args.cap)
        covers = cover_relations(args.a, args.b)
        if covers.inflation != covers.dominance:  # pragma: no cover - contract
            print("warning: inflation and dominance covers differ", file=sys.stderr)
        _emit(
            {"inflation": covers.inflation, "dominance": covers.dominance},
            [f"{u} -> {v}" for u, v in covers.inflation],
            args.format,
        )
        return 0
    if action in ("meet", "join"):
        u, v = parse_word(args.u), parse_word(args.v)
        word = meet(u, v) if action == "meet" else join(u, v)
        if not is_digitally_convex(word).convex:
            print("warning: result is not digitally convex", file=sys.stderr)
        _emit({"word": word}, [word], args.format)
        return 0
    if action in ("inflate", "deflate"):
        word = parse_word(args.word)
        finder = inflation_sites if action == "inflate" else deflation_sites
        apply = inflate if action == "inflate" else deflate
        position = args.position
        if position is None:
            sites = finder(word)
            if not sites:
                raise ContractError(f"word has no {action[:-1]}ion site")
            position = sites[0].position
        result = apply(word, position)
        _emit({"word": result, "position": position}, [result], args.format)
        return 0
    if action in ("chain-up", "chain-down"):
        word = parse_word(args.word)
        chain = inflation_chain(word) if action == "chain-up" else deflation_chain(word)
        _emit({"words": chain}, chain, args.format)
        return 0
    raise AssertionError(f"unhandled lattice action {action!r}")


def cmd_count(args) -> int:
    table = count_table(args.kind, args.n_max)
    payload = {"kind": table.kind, "values": list(table.values)}
    oeis = OEIS_IDS.get(table.kind)
    if oeis:
        payload["oeis"] = oeis
    _emit(
        payload,
        [f"{n} {value}" for n, value in enumerate(table.values)],
        args.format,
    )
    return 0


def cmd_render(args) -> int:
    word = parse_word(args.word)
    marks = tuple(m for m in (args.marks or "").split(",") if m)
    spec = RenderSpec(
        word=word,
        show_segment=args.segment,
        marks=marks,
        format=args.format,
        cell_size=args.cell_size,
    )
    sys.stdout.write(render(spec))
    if args.format == "ascii":
        sys.stdout.write("\n")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digiconvex",
        description="Christoffel words, Lyndon factorizations, and digitally convex paths.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=(TEXT, JSON)) -> None:
        p.add_argument("--format", choices=choices, default=choices[0])

    p = sub.add_parser("christoffel", help="construct a Christoffel or central word")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--upper", action="store_true", help="upper word instead of lower")
    group.add_argument("--central", action="store_true", help="central word of (a, b)")
    add_format(p)
    p.set_defaults(func=cmd_christoffel)

    p = sub.add_parser("check", help="run predicates against a word")
    p.add_argument("word")
    for attr, name in _CHECK_FLAGS.items():
        p.add_argument(f"--{name}", dest=attr, action="store_true")
    p.add_argument("--order", choices=("01", "10"), default="01")
    add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("factorize", help="factor a word")
    p.add_argument("word")
    p.add_argument(
        "--mode",
        choices=("lyndon", "lyndon-rev", "standard", "palindromic"),
        default="lyndon",
    )
    add_format(p)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("mfw", help="minimal forbidden words")
    p.add_argument("source", choices=("word", "balanced", "dc"))
    p.add_argument("arg", help="a word for `word`, a length for `balanced`/`dc`")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--construction", choices=("complement", "provencal"), default="complement")
    add_format(p)
    p.set_defaults(func=cmd_mfw)

    p = sub.add_parser("lattice", help="dominance lattice operations")
    actions = p.add_subparsers(dest="action", required=True)
    for name in ("enumerate", "covers"):
        q = actions.add_parser(name)
        q.add_argument("a", type=int)
        q.add_argument("b", type=int)
        q.add_argument("--cap", type=int, default=DEFAULT_CAP)
        add_format(q)
        q.set_defaults(func=cmd_lattice, action=name)
    for name in ("meet", "join"):
        q = actions.add_parser(name)
        q.add_argument("u")
        q.add_argument("v")
        add_format(q)
        q.set_defaults(func=cmd_lattice, action=name)
    for name in ("inflate", "deflate"):
        q = actions.add_parser(name)
        q.add_argument("word")
        q.add_argument("--position", type=int, default=None)
        add_format(q)
        q.set_defaults(func=cmd_lattice, action=name)
    for name in ("chain-up", "chain-down"):
        q = actions.add_parser(name)
        q.add_argument("word")
        add_format(q)
        q.set_defaults(func=cmd_lattice, action=name)

    p = sub.add_parser("count", help="counting sequences")
    p.add_argument("kind", choices=("dc0", "dc", "balanced", "mfw-dc"))
    p.add_argument("n_max", type=int)
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("render", help="draw the lattice path of a word")
    p.add_argument("word")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--segment", action="store_true", help="draw the straight segment")
    p.add_argument("--marks", default="", help="comma list from S,S',boundaries")
    p.add_argument("--cell-size", type=int, default=24)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
