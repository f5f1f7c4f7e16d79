"""
Command-line driver.

Exit status: 0 when everything requested succeeded or verified, 1 when a
verification found counterexamples (printed as JSON on stdout), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .arquiver import components_of, slices_for
from .cones import c_pbw_cone, l_pbw_cone, lusztig_cone
from .crystal import StringVector, Triangle, apply_monomial, string_of
from .maps import d_map, e_map
from .render import FORMATS, render, render_components
from .typea import InvalidWordError, QuiverA, ReducedWord, num_roots, word_for_quiver
from .verify import SWEEPS, correspondence_table, verify_crystal

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _globals(defaults: bool) -> argparse.ArgumentParser:
    # the same flags are accepted before and after the subcommand
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n", type=int, default=d(None), help="rank; with no --quiver, commands run on every quiver of this rank")
    p.add_argument("--quiver", default=d(None), help="orientation as a string of L and R")
    p.add_argument("--bound", type=int, default=d(None), help="per-coordinate cap for lattice sweeps")
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomised suites")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _globals(False)
    parser = argparse.ArgumentParser(prog="canonbasis", parents=[_globals(True)], description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("word", parents=[common], help="the reduced word i(Q)")
    sub.add_parser("slices", parents=[common], help="slice partition of the roots")
    sub.add_parser("dmap", parents=[common], help="the map D from PBW exponents to strings")
    sub.add_parser("emap", parents=[common], help="the inverse map E")
    p = sub.add_parser("string", parents=[common], help="string of a triangle along i(Q) or --word")
    p.add_argument("values", help="comma-separated triangle entries c_1_1,c_1_2,c_2_2,...")
    p.add_argument("--word", help="comma-separated reduced word instead of i(Q)")
    p = sub.add_parser("monomial", parents=[common], help="triangle reached by a monomial along i(Q) or --word")
    p.add_argument("values", help="comma-separated exponents a_1,...,a_N")
    p.add_argument("--word", help="comma-separated reduced word instead of i(Q)")
    p = sub.add_parser("cone", parents=[common], help="inequalities of a cone")
    p.add_argument("kind", choices=["lusztig", "cpbw", "lpbw"])
    p = sub.add_parser("verify", parents=[common], help="bounded verification sweeps")
    p.add_argument("which", choices=[*SWEEPS, "crystal", "all"])
    p.add_argument("--samples", type=int, default=0, help="random triangles for the crystal suite")
    p.add_argument("--table", action="store_true", help="print the correspondence table for each quiver")
    p = sub.add_parser("render", parents=[common], help="draw a triangle, slices, component views or a cone")
    p.add_argument("artifact", choices=["triangle", "slices", "components", "cone"])
    p.add_argument("values", nargs="?", help="triangle entries (for triangle) or lusztig/cpbw/lpbw (for cone)")
    p.add_argument("--format", default="text", help=f"one of {', '.join(FORMATS)}")
    return parser


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _quivers(args) -> list[QuiverA]:
    if args.quiver:
        try:
            q = QuiverA.parse(args.quiver)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.n is not None and args.n != q.n:
            raise UsageError(f"--n {args.n} disagrees with quiver {q.edges} of rank {q.n}")
        return [q]
    if args.n is None:
        raise UsageError("give --quiver or --n")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    return QuiverA.all_quivers(args.n)


def _one_quiver(args) -> QuiverA:
    qs = _quivers(args)
    if len(qs) != 1:
        raise UsageError("this command needs a single --quiver")
    return qs[0]


def _word(args, n_hint: int | None) -> ReducedWord:
    if getattr(args, "word", None):
        letters = _ints(args.word)
        try:
            return ReducedWord(n_hint or max(letters), letters)
        except InvalidWordError as exc:
            raise UsageError(str(exc)) from None
    return word_for_quiver(_one_quiver(args))


def _emit(args, payload, text: str) -> None:
    print(json.dumps(payload, sort_keys=False) if args.json else text)


def _cmd_word(args) -> int:
    data, lines = [], []
    for q in _quivers(args):
        w = word_for_quiver(q)
        data.append({"quiver": q.edges, "word": list(w.letters)})
        lines.append(f"{q.edges}: {' '.join(map(str, w.letters))}")
    _emit(args, data if len(data) > 1 else data[0], "\n".join(lines))
    return EXIT_OK


def _cmd_slices(args) -> int:
    q = _one_quiver(args)
    p = slices_for(q)
    text = render(p) + "\n\n" + "\n".join(
        f"slice {z}: " + " ".join(str(r) for r in p.slice(z)) + f"   letters {''.join(map(str, p.letters(z)))}"
        for z in range(1, p.num_slices + 1)
    )
    _emit(args, {"quiver": q.edges, "slices": p.to_json()}, text)
    return EXIT_OK


def _cmd_map(args, which) -> int:
    q = _one_quiver(args)
    m = which(q)
    _emit(args, m.to_json(), "\n".join(f"{r} = {m.expression(r)}" for r in m.row_names))
    return EXIT_OK


def _cmd_string(args) -> int:
    word = _word(args, args.n)
    vals = _ints(args.values)
    if len(vals) != num_roots(word.n):
        raise UsageError(f"expected {num_roots(word.n)} triangle entries, got {len(vals)}")
    try:
        t = Triangle(word.n, vals)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    s = string_of(word, t)
    _emit(args, s.to_json(), " ".join(map(str, s.a)))
    return EXIT_OK


def _cmd_monomial(args) -> int:
    word = _word(args, args.n)
    vals = _ints(args.values)
    try:
        t = apply_monomial(word, StringVector(word, vals))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, t.to_json(), str(t))
    return EXIT_OK


def _cone_for(kind: str, q: QuiverA):
    if kind == "lusztig":
        return lusztig_cone(word_for_quiver(q))
    return {"cpbw": c_pbw_cone, "lpbw": l_pbw_cone}[kind](q)


def _cmd_cone(args) -> int:
    q = _one_quiver(args)
    cone = _cone_for(args.kind, q)
    _emit(args, cone.to_json(), render(cone))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.bound is not None and args.bound < 0:
        raise UsageError("--bound must be nonnegative")
    reports = []
    if args.which == "crystal":
        n = args.n if args.n is not None else _one_quiver(args).n
        reports.append(verify_crystal(n, args.bound or 0, args.samples, args.seed))
    else:
        names = list(SWEEPS) if args.which == "all" else [args.which]
        for q in _quivers(args):
            for name in names:
                fn, default = SWEEPS[name]
                rep = fn(q, default if args.bound is None else args.bound)
                reports.append(rep)
                if not args.json:
                    print(rep.summary(), flush=True)
                if args.table and name == "correspondence" and not args.json:
                    for left, right in correspondence_table(q):
                        print(f"    {left:<32} {right}")
    failed = [r for r in reports if not r.passed]
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=1))
    else:
        if args.which == "crystal":
            print(reports[0].summary())
        for r in failed:
            print(json.dumps(r.to_json()["failures"]))
        print(f"{len(reports) - len(failed)}/{len(reports)} passed")
    return EXIT_FAIL if failed else EXIT_OK


def _cmd_render(args) -> int:
    fmt = args.format
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    if args.artifact == "triangle":
        if not args.values:
            raise UsageError("render triangle needs comma-separated entries")
        vals = _ints(args.values)
        n = args.n
        if n is None:
            n = next((m for m in range(1, 64) if num_roots(m) == len(vals)), None)
            if n is None:
                raise UsageError(f"{len(vals)} is not a triangular number")
        try:
            out = render(Triangle(n, vals), fmt)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.artifact == "slices":
        out = render(slices_for(_one_quiver(args)), fmt)
    elif args.artifact == "components":
        views = render_components(slices_for(_one_quiver(args)), fmt)
        if fmt == "text":
            comps = components_of(_one_quiver(args))
            out = "\n\n".join(f"component {c.index}\n{v}" for c, v in zip(comps, views))
        else:
            out = "".join(views)
    else:
        kind = args.values or "lpbw"
        if kind not in ("lusztig", "cpbw", "lpbw"):
            raise UsageError(f"unknown cone {kind!r}")
        out = render(_cone_for(kind, _one_quiver(args)), fmt)
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return EXIT_OK


COMMANDS = {
    "word": _cmd_word,
    "slices": _cmd_slices,
    "dmap": lambda a: _cmd_map(a, d_map),
    "emap": lambda a: _cmd_map(a, e_map),
    "string": _cmd_string,
    "monomial": _cmd_monomial,
    "cone": _cmd_cone,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
