"""Command-line front end.

Exit codes: 0 on success, 1 on usage errors, 2 on domain errors.  Every
failure writes exactly one JSON diagnostic object to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters as ch
from . import index as ix
from . import repring as rr
from .errors import DomainError, ParseError
from .rootdata import GroupSpec, atypical_roots
from .superpoly import format_poly, specialize


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _coeff_json(c):
    return {"even": c.even, "odd": c.odd}


def _series_json(series: rr.FormalSeries) -> dict:
    g = series.group
    return {
        "box": series.box.bound,
        "group": str(g),
        "terms": [{"atypical": rr.is_atypical_class(g, w), "coeff_even": c.even, "coeff_odd": c.odd,
                   "weight": g.format_weight(w)} for w, c in series.items()],
    }


def _module_json(v: rr.VirtualModule) -> dict:
    g = v.group
    return {"group": str(g),
            "terms": [{"coeff_even": c.even, "coeff_odd": c.odd, "weight": g.format_weight(w)}
                      for w, c in v.items()]}


def build_parser() -> _Parser:
    parser = _Parser(prog="superindex", description="Representation rings and equivariant indices for U(p|q).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help, weight=False, levi=False, box=False):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("group", help='e.g. "gl(1|2)" or "gl(1|1)xgl(0|1)"')
        if weight:
            sp.add_argument("weight", help='e.g. "1,0|0"')
        if levi:
            sp.add_argument("--levi", required=True, help='subgroup, e.g. "gl(1|0)xgl(0|1)"')
        if box:
            sp.add_argument("--box", type=int, required=True, help="weight box bound B >= 1")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        return sp

    add("char", "character of the irreducible module", weight=True)
    add("dims", "dimension in Z[e] and superdimension", weight=True)
    add("typical", "typicality test", weight=True)
    t = add("tensor", "tensor product of two virtual modules")
    t.add_argument("left")
    t.add_argument("right")
    r = add("restrict", "restriction to a Levi subgroup", levi=True)
    r.add_argument("module")
    i = add("induce", "formal induction of a subgroup class", levi=True, box=True)
    i.add_argument("--symbol", required=True)
    i = add("index", "refined and numeric index of a symbol", levi=True, box=True)
    i.add_argument("--symbol", required=True)
    add("bott-verify", "classical Bott/Weyl check", weight=True, levi=True, box=True)
    f = add("find-symbol", "integer search for a symbol inducing a module", levi=True, box=True)
    f.add_argument("--module", required=True)
    f.add_argument("--box-h", type=int, default=None)
    rp = add("report", "index table over all basis subgroup classes", levi=True, box=True)
    rp.add_argument("--box-h", type=int, default=None)
    return parser


def _run(args) -> tuple[str, dict]:
    group = GroupSpec.parse(args.group)
    cmd = args.command
    if cmd in ("char", "dims", "typical", "bott-verify"):
        w = group.parse_weight(args.weight)
    if cmd == "char":
        c = ch.irr_char(w, group)
        return format_poly(c), {"character": format_poly(c), "group": str(group),
                                "weight": group.format_weight(w)}
    if cmd == "dims":
        d = specialize(ch.irr_char(w, group))
        return f"dim = {d}, sdim = {d.super_value()}", {"dim": _coeff_json(d), "sdim": d.super_value(),
                                                         "weight": group.format_weight(w)}
    if cmd == "typical":
        if not group.is_dominant(w):
            raise ch.NotDominant(f"{group.format_weight(w)} is not dominant", weight=group.format_weight(w))
        roots = [(b, r) for b, part in enumerate(group.split(w)) for r in atypical_roots(part)]
        pairs = [list(r) for _, r in roots]
        text = "typical" if not roots else "atypical at " + ", ".join(f"({i},{j})" for _, (i, j) in roots)
        return text, {"atypical_roots": pairs, "typical": not roots, "weight": group.format_weight(w)}
    if cmd == "tensor":
        v = rr.tensor(rr.VirtualModule.parse(group, args.left), rr.VirtualModule.parse(group, args.right))
        return str(v), _module_json(v)
    e = rr.LeviEmbedding.parse(group, args.levi)
    if cmd == "restrict":
        v = rr.restrict(rr.VirtualModule.parse(group, args.module), e)
        return str(v), _module_json(v)
    box = rr.TruncationBox(args.box)
    if cmd == "induce":
        s = rr.induce(rr.VirtualModule.parse(e.sub, args.symbol), e, box)
        return str(s), _series_json(s)
    if cmd == "index":
        rep = ix.numeric_index(ix.Symbol(e, rr.VirtualModule.parse(e.sub, args.symbol)), box)
        text = f"chi = {rep.chi}\nindex = {rep.index} (stable at boxes {rep.boxes[0]} and {rep.boxes[1]})"
        return text, rep.to_json()
    if cmd == "bott-verify":
        ok = ix.bott_verify(w, e, box)
        return ("true" if ok else "false"), {"verified": ok, "weight": group.format_weight(w)}
    box_h = rr.TruncationBox(args.box_h) if args.box_h is not None else box
    if cmd == "find-symbol":
        s = ix.find_symbol_for_module(rr.VirtualModule.parse(group, args.module), e, box_h, box)
        return str(s.cls), {"symbol": _module_json(s.cls)}
    if cmd == "report":
        rows = ix.atypical_report(e, box_h, box)
        doc = ix.report_to_json(e, rows, box_h, box)
        lines = []
        for r in rows:
            carriers = ", ".join(f"[{group.format_weight(w)}]:{v}" for w, v in r.carriers) or "-"
            idx = r.index if r.stable else f"unstable {r.values[0]}/{r.values[1]}"
            lines.append(f"[{e.sub.format_weight(r.symbol)}]\tindex {idx}\tcarried by {carriers}")
        return "\n".join(lines), doc
    raise UsageError(f"unknown command {cmd}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, doc = _run(args)
    except UsageError as exc:
        print(_dump({"error": "UsageError", "message": str(exc)}), file=sys.stderr)
        return 1
    except ParseError as exc:
        print(_dump(exc.to_json()), file=sys.stderr)
        return 1
    except DomainError as exc:
        print(_dump(exc.to_json()), file=sys.stderr)
        return 2
    print(_dump(doc) if args.json else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
