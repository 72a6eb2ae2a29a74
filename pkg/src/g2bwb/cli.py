"""Command-line front end.

Subcommands: bott, ext, tensor, restrict, report, modchar.  Weights are two
integers in fundamental-weight coordinates.  Exit codes: 0 success, 2 usage
error, 3 ambiguous-but-valid, 4 verification failure.  Set G2BWB_LOG for
audit output on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .rootdata import ParabolicId, Weight
from .charring import restrict_to_P, tensor, weyl_character, decompose_costandard
from .cohomology import DEFAULT_P, bott_line
from .extcollection import (
    ext_table,
    filtration_to_latex,
    frobenius_report,
    full_collection_report,
    object_by_name,
)
from .karoubi import verify_generation
from .modchar import Undecided, rank_identity_check, resolved_oracle, weyl_dim
from .chevalley import chevalley_verify
from .rootdata import ZERO, restricted_split
from . import weyl

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_AMBIGUOUS = 3
EXIT_FAILED = 4


def _audit_enabled() -> bool:
    return bool(os.environ.get("G2BWB_LOG"))


def _parabolic(name: str) -> ParabolicId:
    return ParabolicId.SHORT if name == "short" else ParabolicId.LONG


class _NoLatex(Exception):
    pass


def _emit(args, payload_json: dict, payload_text: str, payload_latex: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(payload_json, sort_keys=True))
    elif args.format == "latex":
        if payload_latex is None:
            raise _NoLatex
        print(payload_latex)
    else:
        print(payload_text)


def _cmd_bott(args) -> int:
    r = bott_line(Weight(args.a, args.b), args.p)
    if r.vanishes:
        _emit(args, {"vanishes": True}, "VANISHES")
    else:
        _emit(
            args,
            {"vanishes": False, "degree": r.degree, "weight": [r.weight.a, r.weight.b],
             "caveat": r.caveat},
            f"H^{r.degree} = nabla({r.weight.a},{r.weight.b})"
            + ("   [char-p caveat]" if r.caveat else ""),
        )
    return EXIT_OK


def _cmd_ext(args) -> int:
    par = _parabolic(args.parabolic)
    try:
        X = object_by_name(par, args.x)
        Y = object_by_name(par, args.y)
    except KeyError as e:
        print(f"unknown object: {e}", file=sys.stderr)
        return EXIT_USAGE
    t = ext_table(X, Y, args.p)
    latex_rows = []
    for d, entries in t.labelled():
        terms = " \\oplus ".join(
            ("L" if lbl == "L" else "\\nabla") + f"({w.a},{w.b})" for lbl, w in entries
        )
        latex_rows.append(f"\\mathrm{{Ext}}^{{{d}}} \\simeq {terms}")
    _emit(
        args,
        {"x": X.name, "y": Y.name, "p": args.p, **t.to_json()},
        f"Ext({X.name},{Y.name}) = {t.render()}",
        "\\\\\n".join(latex_rows) if latex_rows else "0",
    )
    return EXIT_OK if t.exact else EXIT_AMBIGUOUS


def _cmd_tensor(args) -> int:
    x = weyl_character(Weight(args.a, args.b))
    y = weyl_character(Weight(args.c, args.d))
    factors = decompose_costandard(tensor(x, y))
    text = " + ".join(
        (f"nabla({w.a},{w.b})" if m == 1 else f"{m}*nabla({w.a},{w.b})")
        for w, m in factors
    )
    latex = " \\oplus ".join(
        f"\\nabla({w.a},{w.b})" + (f"^{{\\oplus {m}}}" if m > 1 else "")
        for w, m in factors
    )
    _emit(args, {"factors": [[w.a, w.b, m] for w, m in factors]}, text, latex)
    return EXIT_OK


def _cmd_restrict(args) -> int:
    par = _parabolic(args.parabolic)
    lam = Weight(args.a, args.b)
    if not lam.is_dominant():
        print("the weight must be dominant", file=sys.stderr)
        return EXIT_USAGE
    mod = restrict_to_P(lam, par)
    names = []
    for s in mod.atoms:
        if par.pair(s.highest) == 0:
            names.append(f"({s.highest.a},{s.highest.b})")
        else:
            names.append(f"nablaP({s.highest.a},{s.highest.b})")
    _emit(
        args,
        {"parabolic": args.parabolic, "atoms": [[s.highest.a, s.highest.b] for s in mod.atoms]},
        " / ".join(names),
        filtration_to_latex(mod),
    )
    return EXIT_OK


def _cmd_report(args) -> int:
    kind = args.kind
    if kind == "collection":
        rep = full_collection_report(_parabolic(args.parabolic), args.p)
        _emit(args, rep.to_json(), rep.to_text())
        return EXIT_OK if rep.passed else EXIT_FAILED
    if kind == "frobenius":
        rep = frobenius_report(_parabolic(args.parabolic), args.p)
        _emit(args, rep.to_json(), rep.to_text())
        return EXIT_OK if rep.passed else EXIT_FAILED
    if kind == "karoubi":
        amax = args.box
        bmax = max(12, amax - 4)
        rep, kb = verify_generation(_parabolic(args.parabolic), amax=amax, bmax=bmax)
        if _audit_enabled():
            print(kb.audit_log(), file=sys.stderr)
        _emit(args, rep.to_json(), rep.to_text())
        return EXIT_OK if rep.complete else EXIT_FAILED
    if kind == "chevalley":
        reps = chevalley_verify()
        ok = all(r.passed for r in reps)
        _emit(
            args,
            {"reports": [r.to_json() for r in reps], "passed": ok},
            "\n\n".join(r.to_text() for r in reps),
        )
        return EXIT_OK if ok else EXIT_FAILED
    if kind == "rank":
        rep = rank_identity_check(args.p, _parabolic(args.parabolic))
        _emit(args, rep.to_json(), rep.to_text())
        return EXIT_OK if rep.passed else EXIT_FAILED
    print(f"unknown report kind {kind}", file=sys.stderr)
    return EXIT_USAGE


def _cmd_modchar(args) -> int:
    try:
        w = weyl.from_word(args.w if args.w != "e" else "")
    except ValueError:
        print(f"bad word {args.w}", file=sys.stderr)
        return EXIT_USAGE
    lam0, _ = restricted_split(weyl.dot(w, ZERO), args.p)
    try:
        oracle, decided_by, points = resolved_oracle(args.p)
        ch = oracle.simple(lam0)
    except Undecided as u:
        _emit(args, {"undecided": True, "certificate": str(u)},
              f"L({args.w}) = L({lam0.a},{lam0.b}): UNDECIDED ({u})")
        return EXIT_AMBIGUOUS
    _emit(
        args,
        {"w": args.w, "p": args.p, "weight": [lam0.a, lam0.b],
         "dim": ch.dimension(), "support": len(ch.mult),
         "costandard_dim": weyl_dim(lam0), "decided_by": decided_by},
        f"L({args.w}) = L({lam0.a},{lam0.b}): dim {ch.dimension()}, "
        f"support {len(ch.mult)} weights, inside nabla of dim {weyl_dim(lam0)} "
        f"[{decided_by}]",
    )
    if _audit_enabled() and points:
        for pt in points:
            print(f"resolved: {pt}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2bwb",
        description="Exact cohomology, Ext tables and matrix checks for the G2 flag varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, parabolic=True, prime=True):
        if parabolic:
            p.add_argument("--parabolic", choices=("short", "long"), default="short")
        if prime:
            p.add_argument("--p", type=int, default=DEFAULT_P)
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    b = sub.add_parser("bott", help="cohomology of one line bundle on the flag variety")
    b.add_argument("a", type=int)
    b.add_argument("b", type=int)
    common(b, parabolic=False)
    b.set_defaults(func=_cmd_bott)

    e = sub.add_parser("ext", help="Ext table between two collection objects")
    e.add_argument("x")
    e.add_argument("y")
    common(e)
    e.set_defaults(func=_cmd_ext)

    t = sub.add_parser("tensor", help="decompose a product of two costandard characters")
    for name in "abcd":
        t.add_argument(name, type=int)
    common(t, parabolic=False, prime=False)
    t.set_defaults(func=_cmd_tensor)

    r = sub.add_parser("restrict", help="parabolic string filtration of a costandard module")
    r.add_argument("a", type=int)
    r.add_argument("b", type=int)
    common(r, prime=False)
    r.set_defaults(func=_cmd_restrict)

    rep = sub.add_parser("report", help="aggregated verification reports")
    rep.add_argument("kind", choices=("collection", "frobenius", "karoubi", "chevalley", "rank"))
    rep.add_argument("--box", type=int, default=16)
    common(rep)
    rep.set_defaults(func=_cmd_report)

    m = sub.add_parser("modchar", help="simple character attached to a Weyl word")
    m.add_argument("--w", required=True)
    common(m, parabolic=False)
    m.set_defaults(func=_cmd_modchar)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _NoLatex:
        print("latex output is not available for this command", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
