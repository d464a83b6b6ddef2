"""Command-line interface: ``openstrings <verb> ...``.

Exit codes: 0 ok, 1 usage, 2 invalid input, 3 falsified invariant.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import multistring as ms
from .census import CensusConfig, census
from .checks import VerifyConfig, verify
from .gauss import (
    DiagramError,
    GaussDiagram,
    apply_move,
    enumerate_moves,
    format_diagram,
    hat,
    parse_diagram,
    random_diagram,
    star,
)
from .invariant import (
    NormalFormError,
    commute_check,
    compose,
    normal_form,
    phi,
    phi_poly,
    ribbon_obstruction_abelian,
    ribbon_obstruction_full,
)
from .moves import MoveError
from .words import format_word

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_FALSIFIED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_code(text: str) -> str:
    """A Gauss code, or ``@path`` to read it from a file."""
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return fh.read().strip()
    return text


def _diagram(text: str) -> GaussDiagram:
    return parse_diagram(_read_code(text))


def _is_colored(text: str) -> bool:
    return _read_code(text).lstrip().startswith("n=")


def _emit(args, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


# -- verbs --------------------------------------------------------------------

def cmd_phi(args) -> int:
    if _is_colored(args.code):
        d = ms.parse_colored(_read_code(args.code))
        inv = ms.phi_multi(d)
        _emit(args, {"diagram": ms.format_colored(d), **inv.to_json()}, [str(inv)])
        return EXIT_OK
    d = _diagram(args.code)
    w = phi(d)
    payload = {"diagram": format_diagram(d), "word": str(w)}
    try:
        head, omega = normal_form(w)
    except NormalFormError as exc:
        print(f"normal form violated: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    payload.update(W=format_word(head), omega=omega)
    _emit(args, payload, [str(w)])
    return EXIT_OK


def cmd_poly(args) -> int:
    d = _diagram(args.code)
    p = phi_poly(d)
    _emit(args, {"diagram": format_diagram(d), "poly": str(p)}, [str(p)])
    return EXIT_OK


def cmd_compose(args) -> int:
    if _is_colored(args.first) or _is_colored(args.second):
        i1 = ms.phi_multi(ms.parse_colored(_read_code(args.first)))
        i2 = ms.phi_multi(ms.parse_colored(_read_code(args.second)))
        out = ms.compose_multi(i1, i2)
        _emit(args, out.to_json(), [str(out)])
        return EXIT_OK
    w = compose(phi(_diagram(args.first)), phi(_diagram(args.second)))
    _emit(args, {"word": str(w)}, [str(w)])
    return EXIT_OK


def cmd_commute(args) -> int:
    r = commute_check(_diagram(args.first), _diagram(args.second))
    verdict = "COMMUTE" if r.commute else "DISTINCT"
    lines = [verdict]
    if not r.commute:
        lines += [f"first.second: {r.left_right}", f"second.first: {r.right_left}"]
    _emit(args, {"commute": r.commute, "first_second": str(r.left_right),
                 "second_first": str(r.right_left)}, lines)
    return EXIT_OK


def cmd_ribbon(args) -> int:
    d = _diagram(args.code)
    v = ribbon_obstruction_full(d) if args.full else ribbon_obstruction_abelian(d)
    if v.passed:
        lines = [f"PASS ({v.obstruction}): inconclusive, the string may or may not be ribbon"]
    else:
        lines = [f"FAIL ({v.obstruction}): {v.detail}", f"lhs: {v.lhs}", f"rhs: {v.rhs}"]
    _emit(args, {"diagram": format_diagram(d), **v.to_json()}, lines)
    return EXIT_OK


def cmd_hat(args) -> int:
    d = hat(_diagram(args.code))
    _emit(args, d.to_json(), [format_diagram(d)])
    return EXIT_OK


def cmd_star(args) -> int:
    d = star(_diagram(args.code))
    _emit(args, d.to_json(), [format_diagram(d)])
    return EXIT_OK


def cmd_moves(args) -> int:
    d = _diagram(args.code)
    rows = []
    for mv in enumerate_moves(d, include_insertions=args.insertions):
        rows.append((str(mv), format_diagram(apply_move(d, mv))))
    _emit(args, {"diagram": format_diagram(d), "moves": [{"move": m, "result": r} for m, r in rows]},
          [f"{m} -> {r or '(empty)'}" for m, r in rows])
    return EXIT_OK


def cmd_random(args) -> int:
    rng = random.Random(args.seed)
    ds = [random_diagram(rng.randint(0, args.max_arrows), rng) for _ in range(args.count)]
    _emit(args, {"diagrams": [format_diagram(d) for d in ds]}, [format_diagram(d) for d in ds])
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify(VerifyConfig(count=args.count, max_arrows=args.max_arrows, seed=args.seed))
    lines = [
        f"verified {report.diagrams} diagrams (seed {args.seed}, at most {args.max_arrows} arrows)",
        "checks: " + " ".join(f"{c}={n}" for c, n in report.checked.items()),
        f"omega differs from writhe on {report.omega_differs_from_writhe} diagrams (informational)",
    ]
    for f in report.failures:
        lines.append(f"FAIL {f.check} seed={args.seed} index={f.index} diagram={f.diagram}: {f.detail}")
    lines.append("OK" if report.ok else f"{len(report.failures)} failures")
    _emit(args, report.to_json(), lines)
    return EXIT_OK if report.ok else EXIT_FALSIFIED


def cmd_census(args) -> int:
    report = census(CensusConfig(max_arrows=args.max_arrows, depth=args.depth, commute=not args.no_commute))
    _emit(args, report.to_json(), report.lines())
    return EXIT_OK if report.ok else EXIT_FALSIFIED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="openstrings", description="Invariants of open virtual strings.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, func, help_text):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("--json", action="store_true", help="machine-readable output")
        s.set_defaults(func=func)
        return s

    s = verb("phi", cmd_phi, "the invariant word (colored codes give one word per line)")
    s.add_argument("code")
    s = verb("poly", cmd_poly, "the abelian invariant phi(u,v)")
    s.add_argument("code")
    for name, func, text in (("compose", cmd_compose, "invariant of the concatenation"),
                             ("commute", cmd_commute, "do the two strings commute under Phi")):
        s = verb(name, func, text)
        s.add_argument("first")
        s.add_argument("second")
    s = verb("ribbon", cmd_ribbon, "ribbon obstruction (abelian by default)")
    s.add_argument("code")
    s.add_argument("--full", action="store_true", help="compare Phi with Phi of the hat diagram")
    for name, func in (("hat", cmd_hat), ("star", cmd_star)):
        s = verb(name, func, f"the {name} diagram")
        s.add_argument("code")
    s = verb("moves", cmd_moves, "applicable homotopy moves")
    s.add_argument("code")
    s.add_argument("--insertions", action="store_true", help="also list every insertion")
    s = verb("random", cmd_random, "random diagrams")
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--max-arrows", type=int, default=4)
    s.add_argument("--seed", type=int, default=0)
    s = verb("verify", cmd_verify, "property suite on random diagrams")
    s.add_argument("--count", type=int, default=1000)
    s.add_argument("--max-arrows", type=int, default=6)
    s.add_argument("--seed", type=int, default=0)
    s = verb("census", cmd_census, "exhaustive census of small diagrams")
    s.add_argument("--max-arrows", type=int, default=3)
    s.add_argument("--depth", type=int, default=8)
    s.add_argument("--no-commute", action="store_true", help="skip the pairwise commutation count")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name in ("count", "max_arrows", "depth"):
            if getattr(args, name, 0) < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be non-negative")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (DiagramError, MoveError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
