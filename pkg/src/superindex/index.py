"""Homogeneous symbols, the refined index ``chi = i_*(s)``, its numeric value,
and the classical/super verification routines built on top of them."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import (NoSolutionInBox, OddCosetUnsupported, UnstableTruncation,
                     UnsupportedAtypical)
from .intsolve import solve_integer
from .repring import (FormalSeries, LeviEmbedding, TruncationBox, VirtualModule, dims,
                      from_char, induce, is_atypical_class, restrict, tensor)
from .rootdata import GroupSpec, Weight
from .superpoly import EPS, ONE, ZERO, EpsInt, LaurentPoly


@dataclass(frozen=True)
class Symbol:
    """Homogeneous symbol ``[K] - [L]`` as a virtual module over the subgroup."""

    embedding: LeviEmbedding
    cls: VirtualModule

    def __post_init__(self):
        if self.cls.group != self.embedding.sub:
            raise ValueError(f"symbol class lives over {self.cls.group}, expected {self.embedding.sub}")

    def __add__(self, other: Symbol) -> Symbol:
        return Symbol(self.embedding, self.cls + other.cls)

    def scale(self, c) -> Symbol:
        return Symbol(self.embedding, self.cls.scale(c))


@dataclass(frozen=True)
class IndexReport:
    chi: FormalSeries
    numeric: EpsInt
    index: int
    boxes: tuple[int, int]
    stable: bool
    atypical_support: list[tuple[Weight, EpsInt, bool]] = field(default_factory=list)
    index_at_larger_box: int | None = None

    def to_json(self) -> dict:
        g = self.chi.group
        return {
            "boxes": list(self.boxes),
            "chi": [
                {"atypical": atyp, "coeff_even": c.even, "coeff_odd": c.odd,
                 "weight": g.format_weight(w)}
                for w, c, atyp in self.atypical_support
            ],
            "group": str(g),
            "index": self.index,
            "numeric": {"even": self.numeric.even, "odd": self.numeric.odd},
            "stable": self.stable,
        }


def refined_index(s: Symbol, box: TruncationBox) -> FormalSeries:
    return induce(s.cls, s.embedding, box)


def _irr_dims(group: GroupSpec, w: Weight) -> EpsInt:
    return dims(VirtualModule.irreducible(group, w))


def series_dimension(chi: FormalSeries) -> EpsInt:
    """``sum coeff * dims(L(w))`` over the support of a truncated series."""
    total = ZERO
    for w, c in chi.coeffs.items():
        total = total + c * _irr_dims(chi.group, w)
    return total


def numeric_index(s: Symbol, box: TruncationBox) -> IndexReport:
    """Superdimension of the refined index, checked at the box and the box
    grown by 2; raises :class:`UnstableTruncation` when the two disagree."""
    chi = refined_index(s, box)
    chi_big = refined_index(s, box.grow(2))
    numeric = series_dimension(chi)
    value, value_big = numeric.super_value(), series_dimension(chi_big).super_value()
    support = [(w, c, is_atypical_class(chi.group, w)) for w, c in chi.items()]
    report = IndexReport(chi, numeric, value, (box.bound, box.bound + 2), value == value_big,
                         support, value_big)
    if not report.stable:
        raise UnstableTruncation(
            f"index {value} at box {box.bound} but {value_big} at box {box.bound + 2}",
            boxes=[box.bound, box.bound + 2], values=[value, value_big])
    return report


def euler_symbol(e: LeviEmbedding) -> Symbol:
    """``prod (1 - e^{-alpha})`` over the positive roots of the parent that are
    not roots of the subgroup, written as a virtual subgroup module."""
    if e.parent.q or e.sub.q:
        raise OddCosetUnsupported(f"coset of {e} has odd directions; its Euler class is an infinite sum")
    group = e.sub
    block_of = {}
    for k, xs in enumerate(group.x_slices()):
        for i in xs:
            block_of[i] = k
    poly = LaurentPoly.constant(group)
    for i, j in combinations(range(group.p), 2):
        if block_of[i] == block_of[j]:
            continue
        root = [0] * group.nvars
        root[i] -= 1
        root[j] += 1
        poly = poly * (LaurentPoly.constant(group) - LaurentPoly.monomial(group, root))
    return Symbol(e, from_char(poly, group))


def bott_verify(lam: Weight, e: LeviEmbedding, box: TruncationBox) -> bool:
    """Check ``i_*(restrict L(lam) * euler) == [L(lam)]`` inside the box."""
    target = VirtualModule.irreducible(e.parent, lam)
    s = Symbol(e, tensor(restrict(target, e), euler_symbol(e).cls))
    chi = refined_index(s, box)
    expected = {w: c for w, c in target.coeffs.items() if box.contains(w)}
    return dict(chi.coeffs) == expected


def _basis(group: GroupSpec, box: TruncationBox) -> list[Weight]:
    return box.weights(group)


def find_symbol_for_module(m: VirtualModule, e: LeviEmbedding, box_h: TruncationBox,
                           box_g: TruncationBox) -> Symbol:
    """Search for a symbol whose refined index equals ``m`` inside ``box_g``,
    by an integer linear solve over the basis classes of ``box_h``."""
    if m.group != e.parent:
        raise ValueError(f"module over {m.group}, embedding parent {e.parent}")
    if not m:
        return Symbol(e, VirtualModule(e.sub))
    outside = [w for w in m.coeffs if not box_g.contains(w)]
    if outside:
        raise NoSolutionInBox("target has classes outside box_G", weights=[str(w) for w in outside])
    basis = _basis(e.sub, box_h)
    columns = []
    for nu in basis:
        chi = refined_index(Symbol(e, VirtualModule.irreducible(e.sub, nu)), box_g)
        columns.append(dict(chi.coeffs))
        # the e-shifted class: coefficients multiplied by e
        columns.append({w: c * EPS for w, c in chi.coeffs.items()})
    rows = sorted({w for col in columns for w in col} | set(m.coeffs), key=lambda w: (w.degree, w.exps), reverse=True)
    A, b = [], []
    for w in rows:
        for part in ("even", "odd"):
            A.append([getattr(col.get(w, ZERO), part) for col in columns])
            b.append(getattr(m.coeffs.get(w, ZERO), part))
    # unknowns are integer pairs (even, odd) per column; an EpsInt unknown
    # on the e^nu column equals even*col + odd*(e*col)
    sol = solve_integer(A, b) if columns else None
    if sol is None:
        raise NoSolutionInBox("no integral symbol in box_H induces the target within box_G",
                              box_h=box_h.bound, box_g=box_g.bound)
    coeffs = {}
    for k, nu in enumerate(basis):
        c = EpsInt(sol[2 * k], sol[2 * k + 1])
        if c:
            coeffs[nu] = c
    s = Symbol(e, VirtualModule(e.sub, coeffs))
    if dict(refined_index(s, box_g).coeffs) != dict(m.coeffs):
        raise NoSolutionInBox("re-induction check failed", box_h=box_h.bound, box_g=box_g.bound)
    return s


@dataclass
class ReportRow:
    symbol: Weight
    index: int | None
    stable: bool
    values: tuple[int, int]
    support: list[tuple[Weight, EpsInt, bool]]
    carriers: list[tuple[Weight, int]]
    typical_contribution: int


def atypical_report(e: LeviEmbedding, box_h: TruncationBox, box_g: TruncationBox) -> list[ReportRow]:
    """Numeric index of every basis subgroup class in ``box_h`` with the
    parent classes that carry it.  Instabilities are recorded per row."""
    for p, q in e.parent.blocks:
        if min(p, q) > 1:
            raise UnsupportedAtypical(f"{e.parent} has a block with p, q >= 2")
    rows = []
    for nu in _basis(e.sub, box_h):
        s = Symbol(e, VirtualModule.irreducible(e.sub, nu))
        try:
            rep = numeric_index(s, box_g)
            stable, values = True, (rep.index, rep.index)
        except UnstableTruncation as exc:
            stable = False
            values = tuple(exc.details["values"])
            chi = refined_index(s, box_g)
            numeric = series_dimension(chi)
            rep = IndexReport(chi, numeric, numeric.super_value(), (box_g.bound, box_g.bound + 2), False,
                              [(w, c, is_atypical_class(chi.group, w)) for w, c in chi.items()], values[1])
        carriers, typical = [], 0
        for w, c, atyp in rep.atypical_support:
            contrib = (c * _irr_dims(e.parent, w)).super_value()
            if atyp:
                if contrib:
                    carriers.append((w, contrib))
            else:
                typical += contrib
        rows.append(ReportRow(nu, rep.index if stable else None, stable, values,
                              rep.atypical_support, carriers, typical))
    return rows


def report_to_json(e: LeviEmbedding, rows: list[ReportRow], box_h: TruncationBox, box_g: TruncationBox) -> dict:
    g, h = e.parent, e.sub
    return {
        "box_g": box_g.bound,
        "box_h": box_h.bound,
        "group": str(g),
        "levi": str(h),
        "rows": [
            {
                "carriers": [{"sdim_contribution": v, "weight": g.format_weight(w)} for w, v in r.carriers],
                "chi": [{"atypical": a, "coeff_even": c.even, "coeff_odd": c.odd, "weight": g.format_weight(w)}
                        for w, c, a in r.support],
                "index": r.index,
                "stable": r.stable,
                "symbol": h.format_weight(r.symbol),
                "typical_contribution": r.typical_contribution,
                "values": list(r.values),
            }
            for r in rows
        ],
    }
