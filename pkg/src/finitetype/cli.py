"""Command line front end: ``python -m finitetype <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import shlex
import sys

from .braid import parse_braid_word, parse_letters, parse_orientation
from .invariants import alexander, bracket, conway, evaluate, jones
from .moves import MoveSpec, bh_word
from .singular import DEFAULT_CONVENTION, SignConvention, expand_word
from .sweep import load_config, sweep
from .verify import check_block_symbolic, check_general, check_symbolic, check_theorem, sign_convention_oracle


def _ints(text: str) -> list[int]:
    return [int(p) for p in text.replace(" ", "").split(",") if p]


def _strands(word: str, o: str | None, n: int | None) -> int:
    if n:
        return n
    if o:
        return len(o)
    letters = parse_letters(word)
    return max((letter.index for letter in letters), default=1) + 1


def _spec(args) -> MoveSpec:
    return MoveSpec(args.k, _ints(args.d), args.o)


def cmd_bh(args) -> int:
    spec = _spec(args)
    w = bh_word(spec)
    if args.json:
        print(json.dumps({"spec": spec.to_json(), "word": str(w), "length": len(w)}))
    else:
        print(w)
    return 0


def cmd_expand(args) -> int:
    n = _strands(args.word, args.o, args.n)
    w = parse_braid_word(args.word, n, args.o)
    sm = expand_word(w, SignConvention(args.conv), args.max_sing)
    print(sm.dumps() if args.json else sm)
    return 0


def _print_report(rep, as_json: bool) -> None:
    if as_json:
        print(json.dumps(rep.to_json(), indent=2))
        return
    print(f"lhs = {rep.lhs}")
    print(f"rhs = {rep.rhs}")
    for sign, word, value in rep.term_values:
        print(f"  {'+' if sign > 0 else '-'} {value}  [{word}]")
    if rep.backend_agree is not None:
        print(f"jones/conway paths agree: {rep.backend_agree}")
    for note in rep.notes:
        print(f"note: {note}")
    print(f"equal: {rep.equal}")


def cmd_check(args) -> int:
    spec = _spec(args)
    n = spec.strands
    T = parse_braid_word(args.t, n, spec.o)
    x = parse_braid_word(args.x, n, spec.o)
    rep = check_theorem(spec, T, x, args.inv, args.conv, args.singular_rhs, args.allow_higher)
    _print_report(rep, args.json)
    return 0 if rep.equal else 1


def cmd_symbolic(args) -> int:
    if args.oracle:
        res = sign_convention_oracle(range(1, args.k + 1))
        print(res.summary())
        return 0 if res.winner is not None else 1
    rep = check_symbolic(_spec(args), args.conv)
    if args.json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(rep.expansion)
        print(f"matches the signed word sum ({rep.conv.value} convention): {rep.equal}")
    return 0 if rep.equal else 1


def cmd_general(args) -> int:
    ds = [_ints(part) for part in args.d.split(";")]
    if len(ds) == 1:
        ds *= args.n
    width = args.k + 2
    o = parse_orientation(args.o, args.n * width)
    specs = [MoveSpec(args.k, d, o[j * width : (j + 1) * width]) for j, d in enumerate(ds)]
    if args.symbolic:
        rep = check_block_symbolic(specs, args.conv, args.literal)
        print(rep.expansion)
        print(f"matches ({'literal' if args.literal else 'flipped'} right factor): {rep.equal}")
        return 0 if rep.equal else 1
    T = parse_braid_word(args.t, len(o), o)
    x = parse_braid_word(args.x, len(o), o)
    rep = check_general(args.n, specs, T, x, args.inv, args.conv, args.literal, args.singular_rhs)
    _print_report(rep, args.json)
    return 0 if rep.equal else 1


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    if args.force:
        cfg["force"] = True
    if args.workers:
        cfg["workers"] = args.workers
    cmd = "python -m finitetype sweep" + (f" --config {shlex.quote(args.config)}" if args.config else "") + f" --seed {args.seed}"
    res = sweep(cfg, args.seed, args.out, sweep_cmd=cmd)
    print(f"{len(res.results)} cases, {len(res.failures)} failures")
    for r in res.failures:
        print(f"FAIL {r.case.kind} {r.case.invariant}: {r.detail.get('repro')}")
    return 0 if res.ok else 1


def cmd_invariant(args) -> int:
    n = _strands(args.word, args.o, args.n)
    w = parse_braid_word(args.word, n, args.o)
    which = args.which
    if which == "jones":
        print(jones(w))
    elif which == "bracket":
        print(bracket(w))
    elif which == "conway":
        print(conway(w))
    elif which == "alexander":
        print(alexander(w))
    else:
        print(evaluate(which, w))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="finitetype", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def move_args(sp, d_help="comma separated entries of d, each 2 or -2", d_required=True):
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--d", required=d_required, help=d_help)
        sp.add_argument("--o", default=None, help="orientation bits, 0 = up (default all 0)")

    def conv_arg(sp):
        sp.add_argument("--conv", default=DEFAULT_CONVENTION.value, choices=[c.value for c in SignConvention])

    sp = sub.add_parser("bh", help="print the move word")
    move_args(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bh)

    sp = sub.add_parser("expand", help="expand squares into singular letters")
    sp.add_argument("--word", required=True)
    sp.add_argument("--o", default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--max-sing", type=int, default=None)
    sp.add_argument("--json", action="store_true")
    conv_arg(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("check", help="compare both sides on one pair of knots")
    move_args(sp)
    sp.add_argument("--t", required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--inv", required=True)
    sp.add_argument("--singular-rhs", action="store_true")
    sp.add_argument("--allow-higher", action="store_true", help="permit invariants of degree above k+1")
    sp.add_argument("--json", action="store_true")
    conv_arg(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("symbolic", help="symbolic identity in the singular braid algebra")
    move_args(sp, d_required=False)
    sp.add_argument("--oracle", action="store_true", help="run every orientation for both conventions, k' <= k")
    sp.add_argument("--json", action="store_true")
    conv_arg(sp)
    sp.set_defaults(func=cmd_symbolic)

    sp = sub.add_parser("general", help="several blocks side by side")
    sp.add_argument("--n", type=int, required=True)
    move_args(sp, d_help="d vectors separated by ';' (one is reused for every block)")
    sp.add_argument("--t", default=None)
    sp.add_argument("--x", default=None)
    sp.add_argument("--inv", default="c2")
    sp.add_argument("--literal", action="store_true", help="use W_u^r on the right, without the flip")
    sp.add_argument("--symbolic", action="store_true")
    sp.add_argument("--singular-rhs", action="store_true")
    sp.add_argument("--json", action="store_true")
    conv_arg(sp)
    sp.set_defaults(func=cmd_general)

    sp = sub.add_parser("sweep", help="seeded randomized corpus")
    sp.add_argument("--config", default=None, help="key=value or JSON file")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)
    sp.add_argument("--force", action="store_true", help="run cases beyond the desk-scale budget")
    sp.add_argument("--workers", type=int, default=None)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("invariant", help="evaluate one invariant on a closure")
    sp.add_argument("--word", required=True)
    sp.add_argument("--o", default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--which", required=True, help="jones, bracket, conway, alexander, c2, c4 or jm")
    sp.set_defaults(func=cmd_invariant)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.command == "general" and not args.symbolic and (args.t is None or args.x is None):
        parser.error("general needs --t and --x unless --symbolic is given")
    if args.command == "symbolic" and not args.oracle and args.d is None:
        parser.error("symbolic needs --d unless --oracle is given")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
