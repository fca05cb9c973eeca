"""The ring R(G) of virtual modules, restriction to Levi subgroups, the
pairing, and formal induction into box-truncated series."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .characters import decompose, irr_char, is_supported, is_typical_weight
from .errors import GroupMismatch, ParseError, UnsupportedAtypical
from .rootdata import GroupSpec, Weight, atypical_roots, dominant_weights
from .superpoly import EPS, ONE, ZERO, EpsInt, LaurentPoly, format_coeff, order_key, parse_coeff, specialize


def _weight_key(w: Weight):
    return order_key(w.exps)


class VirtualModule:
    """Finitely supported ``EpsInt``-combination of irreducible classes [L(w)]."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: GroupSpec, coeffs: Mapping[Weight, EpsInt] | None = None):
        clean = {}
        for w, c in (coeffs or {}).items():
            c = EpsInt.coerce(c)
            if not c:
                continue
            group.check_weight(w)
            if not group.is_dominant(w):
                raise ParseError(f"class [{group.format_weight(w)}] is not dominant for {group}")
            clean[w] = clean.get(w, ZERO) + c
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "coeffs", {w: c for w, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("VirtualModule is immutable")

    @classmethod
    def irreducible(cls, group: GroupSpec, w: Weight, c=ONE) -> VirtualModule:
        return cls(group, {w: c})

    @classmethod
    def trivial(cls, group: GroupSpec) -> VirtualModule:
        return cls(group, {group.zero_weight(): ONE})

    @classmethod
    def parse(cls, group: GroupSpec, text: str) -> VirtualModule:
        """Parse ``coeff*[w] + coeff*[w] - [w]``; a missing coefficient means 1."""
        s = text.strip()
        if s in ("", "0"):
            return cls(group)
        coeffs: dict = {}
        pos = 0
        pattern = re.compile(r"\s*([+-]?)\s*(?:(\(?[^\[\]*]*?\)?)\s*\*)?\s*\[([^\]]*)\]\s*")
        while pos < len(s):
            m = pattern.match(s, pos)
            if m is None or m.end() == pos:
                raise ParseError(f"cannot parse virtual module {text!r} near {s[pos:]!r}")
            sign, ctext, wtext = m.groups()
            c = parse_coeff(ctext) if ctext else ONE
            if sign == "-":
                c = -c
            w = group.parse_weight(wtext)
            coeffs[w] = coeffs.get(w, ZERO) + c
            pos = m.end()
        return cls(group, coeffs)

    def items(self) -> list[tuple[Weight, EpsInt]]:
        """Support in graded-lex descending order of weights."""
        return sorted(self.coeffs.items(), key=lambda t: _weight_key(t[0]), reverse=True)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, VirtualModule):
            return NotImplemented
        return self.group == other.group and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.group, frozenset(self.coeffs.items())))

    def _check(self, other: VirtualModule):
        if self.group != other.group:
            raise GroupMismatch(f"{self.group} vs {other.group}")

    def __add__(self, other: VirtualModule) -> VirtualModule:
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, ZERO) + c
        return VirtualModule(self.group, out)

    def __neg__(self):
        return VirtualModule(self.group, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: VirtualModule) -> VirtualModule:
        return self + (-other)

    def scale(self, c) -> VirtualModule:
        c = EpsInt.coerce(c)
        return VirtualModule(self.group, {w: v * c for w, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, VirtualModule):
            return tensor(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __str__(self):
        return format_module(self.group, self.items())

    def __repr__(self):
        return f"VirtualModule({self.group}, {str(self)!r})"


def format_module(group: GroupSpec, items) -> str:
    if not items:
        return "0"
    out = []
    for i, (w, c) in enumerate(items):
        sign = "+"
        if c.even <= 0 and c.odd <= 0:
            sign, c = "-", -c
        cs = format_coeff(c)
        body = f"[{group.format_weight(w)}]" if cs == "1" else f"{cs}*[{group.format_weight(w)}]"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


@dataclass(frozen=True)
class LeviEmbedding:
    """Block-diagonal subgroup ``sub`` of ``parent``; each parent block is cut
    into consecutive sub-blocks, which take contiguous slices of the parent's
    even and odd variables in order."""

    parent: GroupSpec
    sub: GroupSpec

    def __post_init__(self):
        blocks = list(self.sub.blocks)
        for p, q in self.parent.blocks:
            sp = sq = 0
            while blocks and (sp < p or sq < q):
                bp, bq = blocks.pop(0)
                sp += bp
                sq += bq
            if (sp, sq) != (p, q):
                raise ParseError(f"{self.sub} is not a Levi subgroup of {self.parent}")
        if blocks:
            raise ParseError(f"{self.sub} is not a Levi subgroup of {self.parent}")

    @classmethod
    def parse(cls, parent: GroupSpec, text: str) -> LeviEmbedding:
        return cls(parent, GroupSpec.parse(text))

    @classmethod
    def torus(cls, parent: GroupSpec) -> LeviEmbedding:
        blocks = []
        for p, q in parent.blocks:
            blocks += [(1, 0)] * p + [(0, 1)] * q
        return cls(parent, GroupSpec(tuple(blocks)))

    @classmethod
    def identity(cls, parent: GroupSpec) -> LeviEmbedding:
        return cls(parent, parent)

    def __str__(self):
        return f"{self.sub} < {self.parent}"


@dataclass(frozen=True)
class TruncationBox:
    """Dominant weights with every entry in ``[-bound, bound]`` (optionally a
    single total degree)."""

    bound: int
    degree: int | None = None

    def __post_init__(self):
        if self.bound < 1:
            raise ParseError(f"box bound must be >= 1, got {self.bound}")

    def contains(self, w: Weight) -> bool:
        return all(abs(v) <= self.bound for v in w.exps) and (self.degree is None or w.degree == self.degree)

    def weights(self, group: GroupSpec, degree: int | None = None) -> list[Weight]:
        if self.degree is not None:
            if degree is not None and degree != self.degree:
                return []
            degree = self.degree
        return dominant_weights(group, self.bound, degree)

    def grow(self, by: int) -> TruncationBox:
        return TruncationBox(self.bound + by, self.degree)


@dataclass(frozen=True)
class FormalSeries:
    """Box-truncated element of the completed ring."""

    group: GroupSpec
    box: TruncationBox
    coeffs: Mapping[Weight, EpsInt] = field(default_factory=dict)

    def __post_init__(self):
        for w in self.coeffs:
            if not self.box.contains(w):
                raise ValueError(f"weight {w} lies outside {self.box}")

    def items(self) -> list[tuple[Weight, EpsInt]]:
        return sorted(self.coeffs.items(), key=lambda t: _weight_key(t[0]), reverse=True)

    def as_module(self) -> VirtualModule:
        return VirtualModule(self.group, self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return self.group == other.group and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.group, frozenset(self.coeffs.items())))

    def __add__(self, other: FormalSeries) -> FormalSeries:
        if self.group != other.group:
            raise GroupMismatch(f"{self.group} vs {other.group}")
        box = self.box if self.box.bound <= other.box.bound else other.box
        total = (self.as_module() + other.as_module()).coeffs
        return FormalSeries(self.group, box, {w: c for w, c in total.items() if box.contains(w)})

    def __str__(self):
        return f"{format_module(self.group, self.items())} @box={self.box.bound}"


def char_of(v: VirtualModule) -> LaurentPoly:
    """Character of a virtual module; ``e`` in a coefficient multiplies in."""
    total = LaurentPoly.zero(v.group)
    for w, c in v.coeffs.items():
        total = total + irr_char(w, v.group) * c
    return total


def from_char(c: LaurentPoly, group: GroupSpec | None = None) -> VirtualModule:
    group = group or c.group
    return VirtualModule(group, dict(decompose(c, group)))


def tensor(v: VirtualModule, w: VirtualModule) -> VirtualModule:
    v._check(w)
    return from_char(char_of(v) * char_of(w), v.group)


def parity_shift(v: VirtualModule) -> VirtualModule:
    return v.scale(EPS)


def dims(v: VirtualModule) -> EpsInt:
    return specialize(char_of(v))


def super_dim(v: VirtualModule) -> int:
    return dims(v).super_value()


@lru_cache(maxsize=None)
def _restricted_irreducible(parent: GroupSpec, sub: GroupSpec, w: Weight) -> VirtualModule:
    return from_char(irr_char(w, parent).with_group(sub), sub)


def restrict(v: VirtualModule, e: LeviEmbedding) -> VirtualModule:
    """Restriction along a Levi embedding (block-wise peeling over the subgroup)."""
    if v.group != e.parent:
        raise GroupMismatch(f"module over {v.group}, embedding parent {e.parent}")
    out = VirtualModule(e.sub)
    for w, c in v.coeffs.items():
        out = out + _restricted_irreducible(e.parent, e.sub, w).scale(c)
    return out


def pair(a, b) -> EpsInt:
    """``<[L(w)], [L(w')]> = delta``, extended e-bilinearly."""
    if a.group != b.group:
        raise GroupMismatch(f"{a.group} vs {b.group}")
    total = ZERO
    small, big = (a, b) if len(a.coeffs) <= len(b.coeffs) else (b, a)
    for w, c in small.coeffs.items():
        d = big.coeffs.get(w)
        if d is not None:
            total = total + c * d
    return total


def _require_supported(group: GroupSpec, w: Weight):
    if not is_supported(w, group):
        raise UnsupportedAtypical(
            f"[{group.format_weight(w)}] is an atypical weight of a gl(p|q) block with p, q >= 2",
            weight=group.format_weight(w))


def induce(a: VirtualModule, e: LeviEmbedding, box: TruncationBox) -> FormalSeries:
    """Formal induction ``[A] -> sum_lambda <restrict L(lambda), [A]> [L(lambda)]``
    over the dominant weights of the box.  Restriction preserves total degree,
    so only weights whose degree occurs in ``a`` are visited."""
    if a.group != e.sub:
        raise GroupMismatch(f"module over {a.group}, embedding subgroup {e.sub}")
    by_degree: dict[int, dict] = {}
    for w, c in a.coeffs.items():
        by_degree.setdefault(w.degree, {})[w] = c
    out = {}
    for d in sorted(by_degree):
        part = VirtualModule(e.sub, by_degree[d])
        for lam in box.weights(e.parent, degree=d):
            _require_supported(e.parent, lam)
            c = pair(_restricted_irreducible(e.parent, e.sub, lam), part)
            if c:
                out[lam] = c
    return FormalSeries(e.parent, box, out)


def is_atypical_class(group: GroupSpec, w: Weight) -> bool:
    return not is_typical_weight(w, group)


__all__ = [
    "VirtualModule", "LeviEmbedding", "TruncationBox", "FormalSeries", "char_of", "from_char",
    "tensor", "parity_shift", "dims", "super_dim", "restrict", "pair", "induce", "format_module",
    "is_atypical_class", "atypical_roots",
]
