"""Command-line entry point.

Exit status: 0 on success, 1 if a verification fails, 2 on usage errors.
With ``--json`` every command writes exactly one JSON document to stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import cohomology, intlinalg, kring, lens, repring, symchars
from .claims import run_checks
from .poly import ParseError

SCHEMA = 1


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2))
    else:
        print(text)


def _even_degree(value: str) -> int:
    d = int(value)
    if d < 0 or d % 2:
        raise argparse.ArgumentTypeError(f"degree must be a nonnegative even integer, got {value}")
    return d


def _truncation(degree: int, flag: int | None) -> int:
    """Truncation degree 2N; the flag wins over KRING_TRUNCATION, default degree + 4."""
    if flag is not None:
        return flag
    env = os.environ.get("KRING_TRUNCATION")
    if env:
        try:
            return _even_degree(env)
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise UsageError(f"bad KRING_TRUNCATION: {exc}") from None
    return degree + 4


def cmd_chartab(args) -> int:
    try:
        t = symchars.character_table(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        d = t.as_dict()
        d.pop("n")
        _emit(args, {"n": t.n, **d}, "")
        return 0
    labels = [str(c) for c in t.classes]
    width = max(6, *(len(s) for s in labels), *(len(str(v)) for r in t.values for v in r)) + 1
    lines = [f"character table of S{t.n}; classes and irreducibles in reverse-lexicographic order"]
    lines.append("irrep".ljust(12) + "".join(s.rjust(width) for s in labels))
    lines.append("size".ljust(12) + "".join(str(s).rjust(width) for s in t.class_sizes))
    for p, row, hook in zip(t.irreps, t.values, t.hooks):
        name = str(p) + ("*" if hook else "")
        lines.append(name.ljust(12) + "".join(str(v).rjust(width) for v in row))
    lines.append("(* = hook partition)")
    print("\n".join(lines))
    return 0


def cmd_restrict(args) -> int:
    rep = repring.s4_irreducibles()[args.rep]
    dec = repring.restrict_to_cyclic(rep, repring.S4_CYCLIC[args.to])
    _emit(
        args,
        {"group": "S4", "subgroup": args.to, "rep": args.rep, "n": dec.n, "multiplicities": list(dec.multiplicities)},
        f"res({args.rep}) to Z{dec.n} = {dec}    multiplicities {list(dec.multiplicities)}",
    )
    return 0


def _relation_rows(relations):
    el = repring.s4_elements()
    return [
        {"lhs": lhs, "rhs": rhs, "status": "pass" if repring.verify_relation(lhs, rhs, el) else "fail"}
        for lhs, rhs in relations
    ]


def cmd_verify_rring(args) -> int:
    rows = _relation_rows(repring.S4_RELATIONS) + _relation_rows(repring.S4_REDUCED_RELATIONS)
    ok = all(r["status"] == "pass" for r in rows)
    text = "\n".join(f"{r['status'].upper()}  {r['lhs']} = {r['rhs']}" for r in rows)
    _emit(args, {"relations": rows, "ok": ok}, text)
    return 0 if ok else 1


def cmd_verify_theorem1(args) -> int:
    results = kring.verify_theorem1()
    rows = [
        {"relation": rel, "status": "pass" if ok else "fail", "character": list(kring.to_character(rel).values)}
        for rel, ok in results.items()
    ]
    ok = all(results.values())
    text = "\n".join(f"{r['status'].upper()}  {r['relation']} -> {tuple(r['character'])}" for r in rows)
    _emit(args, {"relations": rows, "ok": ok}, text)
    return 0 if ok else 1


def cmd_order(args) -> int:
    N = args.skeleton // 2
    order = kring.element_order_in_skeleton(args.element, N)
    out = "infinite" if order == intlinalg.INFINITY else order
    _emit(args, {"element": args.element, "skeleton": args.skeleton, "order": out}, str(out))
    return 0


def cmd_einf(args) -> int:
    if args.degree < 2:
        raise UsageError("degree must be at least 2")
    trunc = _truncation(args.degree, args.truncation)
    if trunc < args.degree:
        raise UsageError(f"truncation {trunc} is below degree {args.degree}")
    q = kring.einfinity(args.degree // 2, trunc // 2)
    payload = {
        "degree": q.degree,
        "truncation": trunc,
        "summands": [{"order": s.order, "generator": s.generator} for s in q.summands],
    }
    text = str(q)
    if args.verbose:
        text += "\n" + "\n".join(f"  Z{s.order}({s.generator})" for s in q.summands)
    _emit(args, payload, text)
    return 0


def cmd_lens(args) -> int:
    if args.skeleton < 2:
        raise UsageError("skeleton must be at least 2")
    m = args.skeleton // 2
    e = lens.pullback_from_s4(args.pullback, args.n, m)
    ring = e.ring
    red = e.reduced()
    payload = {
        "n": args.n,
        "skeleton": args.skeleton,
        "group": list(ring.structure()),
        "pullback": args.pullback,
        "raw": list(e.coeffs),
        "reduced": list(red.coeffs),
        "order": e.order(),
    }
    shown = e if args.form == "raw" else red
    group = " + ".join(f"Z{o}" for o in ring.structure()) or "0"
    text = f"K(BZ{args.n}^({args.skeleton})) = {group}\n{args.pullback} -> {shown}    order {e.order()}"
    _emit(args, payload, text)
    return 0


def cmd_cohomology(args) -> int:
    j = args.degree // 2
    summands = cohomology.even_cohomology(j)
    payload = {
        "degree": args.degree,
        "summands": [{"order": s.order, "generator": s.label} for s in summands],
    }
    _emit(args, payload, cohomology.format_summands(summands))
    return 0


def cmd_survive(args) -> int:
    j = args.degree // 2
    if not 1 <= j:
        raise UsageError("degree must be at least 2")
    trunc = _truncation(args.degree, args.truncation)
    if trunc // 2 < j + 2:
        raise UsageError(f"truncation must be at least {args.degree + 4}")
    r = cohomology.survival_compare(j, trunc // 2)
    payload = {
        "degree": r.degree,
        "surviving": [str(s) for s in r.surviving],
        "dying": [str(s) for s in r.dying],
        "einf_orders": list(r.einf_orders),
        "einf_match": r.einf_match,
    }
    text = "\n".join([
        f"surviving: {cohomology.format_summands(r.surviving)}",
        f"dying:     {cohomology.format_summands(r.dying)}",
        f"E_inf:     {' + '.join(f'Z{o}' for o in r.einf_orders)}",
        f"match:     {'yes' if r.einf_match else 'no'}",
    ])
    _emit(args, payload, text)
    return 0 if r.einf_match else 1


def cmd_snf(args) -> int:
    text = sys.stdin.read() if args.file in (None, "-") else open(args.file).read()
    try:
        a = intlinalg.IntMatrix.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad matrix: {exc}") from None
    dec = intlinalg.smith_normal_form(a)
    p = intlinalg.AbelianGroupPresentation(a.cols, a)
    payload = {
        "d": list(dec.d),
        "left": dec.left.to_rows(),
        "right": dec.right.to_rows(),
        "cokernel": list(intlinalg.group_structure(p)),
    }
    coker = " + ".join("Z" if o == 0 else f"Z{o}" for o in payload["cokernel"]) or "0"
    text = "d = " + " ".join(map(str, dec.d)) + f"\ncokernel = {coker}"
    if args.transforms:
        text += "\nleft\n" + dec.left.format() + "right\n" + dec.right.format().rstrip("\n")
    _emit(args, payload, text)
    return 0


def cmd_verify_all(args) -> int:
    report = run_checks()
    lines = [f"{c.status.upper()}  {c.name}: {c.detail}" for c in report.checks]
    lines.append(f"{report.passed} passed, {report.failed} failed")
    _emit(args, report.as_dict(), "\n".join(lines))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kbs4", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="emit one JSON document")
        sp.set_defaults(func=func)
        return sp

    sp = add("chartab", cmd_chartab, "character table of S_n")
    sp.add_argument("n", type=int)

    sp = add("restrict", cmd_restrict, "restrict an S4 irreducible to a cyclic subgroup")
    sp.add_argument("--group", choices=["S4"], default="S4")
    sp.add_argument("--to", choices=sorted(repring.S4_CYCLIC), required=True)
    sp.add_argument("--rep", choices=["d1", "d2", "d3", "d1d3"], required=True)

    add("verify-rring", cmd_verify_rring, "check the relations of R(S4)")
    add("verify-theorem1", cmd_verify_theorem1, "check the presentation of K(BS4) on characters")

    sp = add("order", cmd_order, "order of a class over a skeleton")
    sp.add_argument("--element", required=True, help="polynomial in v, phi, x, delta")
    sp.add_argument("--skeleton", type=_even_degree, required=True, help="skeleton dimension 2N")

    sp = add("einf", cmd_einf, "E_infinity on the diagonal in a given degree")
    sp.add_argument("--degree", type=_even_degree, required=True)
    sp.add_argument("--truncation", type=_even_degree)
    sp.add_argument("-v", "--verbose", action="store_true", help="list generators")

    sp = add("lens", cmd_lens, "pull an S4 class back to a lens space skeleton")
    sp.add_argument("--n", type=int, choices=[2, 3, 4], required=True)
    sp.add_argument("--skeleton", type=_even_degree, required=True)
    sp.add_argument("--pullback", required=True, help="polynomial in v, phi, x, delta")
    form = sp.add_mutually_exclusive_group()
    form.add_argument("--raw", dest="form", action="store_const", const="raw")
    form.add_argument("--reduced", dest="form", action="store_const", const="reduced")
    sp.set_defaults(form="reduced")

    sp = add("cohomology", cmd_cohomology, "H^2j(BS4)")
    sp.add_argument("--degree", type=_even_degree, required=True)

    sp = add("survive", cmd_survive, "compare H^2j(BS4) with E_infinity")
    sp.add_argument("--degree", type=_even_degree, required=True)
    sp.add_argument("--truncation", type=_even_degree)

    sp = add("snf", cmd_snf, "Smith normal form of a matrix file ('rows cols' header)")
    sp.add_argument("file", nargs="?", help="matrix file; '-' or omitted reads stdin")
    sp.add_argument("--transforms", action="store_true", help="also print left and right transforms")

    add("verify-all", cmd_verify_all, "run every check")
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, kring.NotReduced, intlinalg.DimensionError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
