"""Command-line front end: active, passive, enumerate, test-suite, repl."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, TextIO

from .errors import LexiconError
from .goldens import run_suite
from .lexicon import Lexicon, builtin_lexicon, load_lexicon
from .parser import tokenize
from .pipeline import (
    Bounds,
    convert_from_active,
    convert_from_passive,
    enumerate_pairs,
    unknown_tokens,
)
from .syntax import parse_tense


def format_tokens(tokens) -> str:
    return "[" + ",".join(tokens) + "]"


def _report(result, direction: str) -> list[str]:
    active = [f"ActiveS: {format_tokens(result.active_tokens)}"]
    passive = [f"PassiveS: {format_tokens(result.passive_tokens)}"]
    tense = [f"Tense: {result.tense.value}"]
    if direction == "active":
        return active + tense + [f"ActiveRe: {result.active_term}"] + passive + [
            f"PassiveRe: {result.passive_term}"
        ]
    return passive + tense + active + [
        f"ActiveRe: {result.active_term}",
        f"PassiveRe: {result.passive_term}",
    ]


def convert_sentence(sentence: str, direction: str, lexicon: Lexicon, first_only: bool,
                     fmt: str, out: TextIO, err: TextIO) -> int:
    tokens = tokenize(sentence)
    unknown = unknown_tokens(tokens, lexicon)
    if unknown:
        for tok in unknown:
            print(f"unknown word {tok!r}: define it in the lexicon (--lexicon PATH)", file=err)
        return 2
    convert = convert_from_active if direction == "active" else convert_from_passive
    results = convert(tokens, lexicon, first_only=first_only)
    if fmt == "json":
        for r in results:
            print(json.dumps(r.as_json()), file=out)
        return 0 if results else 1
    if not results:
        print("false.", file=out)
        return 1
    for i, r in enumerate(results):
        for line in _report(r, direction):
            print(line, file=out)
        print("true ;" if i + 1 < len(results) else "true.", file=out)
    return 0


def _lexicon(args) -> Lexicon:
    return load_lexicon(args.lexicon) if args.lexicon else builtin_lexicon()


def _cmd_convert(args, out, err) -> int:
    sentence = " ".join(args.sentence)
    return convert_sentence(sentence, args.command, _lexicon(args), args.first, args.format, out, err)


def _cmd_enumerate(args, out, err) -> int:
    bounds = Bounds(
        max_adjectives=args.max_adjectives,
        max_pp_depth=args.max_pp_depth,
        tenses=tuple(parse_tense(t) for t in args.tense) if args.tense else None,
        modals=not args.no_modals,
    )
    for n, pair in enumerate(enumerate_pairs(_lexicon(args), bounds, args.limit), start=1):
        if args.format == "json":
            print(json.dumps(pair.as_json()), file=out)
        else:
            print(f"{n}. ActiveS: {format_tokens(pair.active_tokens)}", file=out)
            print(f"{n}. PassiveS: {format_tokens(pair.passive_tokens)}", file=out)
            print(f"{n}. Tense: {pair.tense.value}", file=out)
    return 0


def _cmd_test_suite(args, out, err) -> int:
    failed = run_suite(args.which, _lexicon(args), emit=lambda line: print(line, file=out))
    return 1 if failed else 0


def _cmd_repl(args, out, err, stdin: TextIO) -> int:
    lexicon = _lexicon(args)
    for raw in stdin:
        line = raw.strip()
        if not line:
            continue
        if line in ("quit", "exit", "halt."):
            break
        direction, sep, sentence = line.partition(":")
        direction = direction.strip().lower()
        if not sep or direction not in ("active", "passive"):
            print("expected 'active: <sentence>' or 'passive: <sentence>'", file=err)
            continue
        convert_sentence(sentence, direction, lexicon, args.first, args.format, out, err)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lexicon", metavar="PATH", help="lexicon file (default: builtin)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--all", dest="first", action="store_false", help="every solution (default)")
    mode.add_argument("--first", dest="first", action="store_true", help="first solution only")
    common.set_defaults(first=False)

    parser = argparse.ArgumentParser(prog="activepassive", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("active", "passive"):
        p = sub.add_parser(name, parents=[common], help=f"convert a sentence from {name} voice")
        p.add_argument("sentence", nargs="+")
    p = sub.add_parser("enumerate", parents=[common], help="generate sentence pairs")
    p.add_argument("--limit", type=int, default=100)
    p.add_argument("--max-adjectives", type=int, default=1)
    p.add_argument("--max-pp-depth", type=int, default=0)
    p.add_argument("--tense", action="append", help="restrict to a tense (repeatable)")
    p.add_argument("--no-modals", action="store_true")
    p = sub.add_parser("test-suite", parents=[common], help="run the golden corpus")
    p.add_argument("which", nargs="?", choices=("active", "passive", "all"), default="all")
    sub.add_parser("repl", parents=[common], help="read 'active: ...' / 'passive: ...' lines")
    return parser


def main(argv: Optional[list[str]] = None, stdin: TextIO = None, out: TextIO = None,
         err: TextIO = None) -> int:
    stdin, out, err = stdin or sys.stdin, out or sys.stdout, err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("active", "passive"):
            return _cmd_convert(args, out, err)
        if args.command == "enumerate":
            return _cmd_enumerate(args, out, err)
        if args.command == "test-suite":
            return _cmd_test_suite(args, out, err)
        return _cmd_repl(args, out, err, stdin)
    except (LexiconError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2
