"""Groups U(p|q), their products, weights and typicality for gl(p|q).

Conventions: distinguished Borel (all even indices before all odd ones).
A weight of a product group stores the concatenation of the blocks' even
entries in ``lam`` and of their odd entries in ``mu``; the matching
polynomial variables are laid out the same way (``x1..xP, y1..yQ``), so a
Levi subgroup shares its parent's variables verbatim.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .errors import ParseError


@dataclass(frozen=True)
class GroupSpec:
    """A product ``gl(p1|q1) x gl(p2|q2) x ...`` of general linear supergroups."""

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.blocks:
            raise ParseError("group needs at least one block")
        for p, q in self.blocks:
            if p < 0 or q < 0 or p + q < 1:
                raise ParseError(f"invalid block gl({p}|{q})")

    @classmethod
    def gl(cls, p: int, q: int = 0) -> GroupSpec:
        return cls(((p, q),))

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        blocks = []
        for part in text.replace(" ", "").split("x"):
            m = re.fullmatch(r"(?:gl|u|U)\((\d+)\|(\d+)\)", part)
            if m is None:
                raise ParseError(f"cannot parse group block {part!r}")
            blocks.append((int(m.group(1)), int(m.group(2))))
        return cls(tuple(blocks))

    def __str__(self):
        return "x".join(f"gl({p}|{q})" for p, q in self.blocks)

    @property
    def p(self) -> int:
        return sum(b[0] for b in self.blocks)

    @property
    def q(self) -> int:
        return sum(b[1] for b in self.blocks)

    @property
    def nvars(self) -> int:
        return self.p + self.q

    @property
    def is_simple(self) -> bool:
        return len(self.blocks) == 1

    def x_slices(self) -> list[range]:
        out, start = [], 0
        for p, _ in self.blocks:
            out.append(range(start, start + p))
            start += p
        return out

    def y_slices(self) -> list[range]:
        """Slices of the odd variables, as offsets into the full exponent vector."""
        out, start = [], self.p
        for _, q in self.blocks:
            out.append(range(start, start + q))
            start += q
        return out

    def block_groups(self) -> list[GroupSpec]:
        return [GroupSpec.gl(p, q) for p, q in self.blocks]

    def split(self, w: Weight) -> list[Weight]:
        """Cut a weight into per-block weights."""
        self.check_weight(w)
        out, i, j = [], 0, 0
        for p, q in self.blocks:
            out.append(Weight(w.lam[i:i + p], w.mu[j:j + q]))
            i += p
            j += q
        return out

    def join(self, parts: list[Weight]) -> Weight:
        lam = tuple(v for w in parts for v in w.lam)
        mu = tuple(v for w in parts for v in w.mu)
        w = Weight(lam, mu)
        self.check_weight(w)
        return w

    def check_weight(self, w: Weight) -> None:
        if len(w.lam) != self.p or len(w.mu) != self.q:
            raise ParseError(f"weight {w} does not fit group {self}")

    def is_dominant(self, w: Weight) -> bool:
        return all(is_dominant(b) for b in self.split(w))

    def weight_from_exps(self, exps: tuple[int, ...]) -> Weight:
        return Weight(tuple(exps[: self.p]), tuple(exps[self.p:]))

    def zero_weight(self) -> Weight:
        return Weight((0,) * self.p, (0,) * self.q)

    def format_weight(self, w: Weight) -> str:
        return ";".join(str(b) for b in self.split(w))

    def parse_weight(self, text: str) -> Weight:
        """Parse ``"l1,..|m1,.."``; product weights either per block joined by
        ``";"`` or as one concatenated ``lam|mu``."""
        text = text.strip().strip("[]")
        if ";" in text:
            parts = text.split(";")
            if len(parts) != len(self.blocks):
                raise ParseError(f"weight {text!r} has {len(parts)} blocks, group {self} has {len(self.blocks)}")
            return self.join([Weight.parse(s) for s in parts])
        w = Weight.parse(text)
        self.check_weight(w)
        return w


@dataclass(frozen=True, order=True)
class Weight:
    lam: tuple[int, ...]
    mu: tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> Weight:
        text = text.replace(" ", "")
        if "|" not in text:
            text += "|"
        if text.count("|") != 1:
            raise ParseError(f"weight {text!r} must contain exactly one '|'")
        left, right = text.split("|")
        try:
            lam = tuple(int(v) for v in left.split(",")) if left else ()
            mu = tuple(int(v) for v in right.split(",")) if right else ()
        except ValueError as exc:
            raise ParseError(f"non-integer entry in weight {text!r}") from exc
        return cls(lam, mu)

    def __str__(self):
        return ",".join(map(str, self.lam)) + "|" + ",".join(map(str, self.mu))

    @property
    def exps(self) -> tuple[int, ...]:
        return self.lam + self.mu

    @property
    def degree(self) -> int:
        return sum(self.lam) + sum(self.mu)

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.lam, other.lam)),
                      tuple(a + b for a, b in zip(self.mu, other.mu)))


def is_dominant(w: Weight) -> bool:
    """Both entry vectors non-increasing (single block)."""
    return all(a >= b for a, b in zip(w.lam, w.lam[1:])) and all(
        a >= b for a, b in zip(w.mu, w.mu[1:]))


def atypicality_values(w: Weight) -> dict[tuple[int, int], int]:
    """``a_ij = lam_i + mu_j + p + 1 - i - j`` (1-based i, j): the pairing of
    the rho-shifted weight with the odd root eps_i - delta_j."""
    p = len(w.lam)
    return {(i, j): w.lam[i - 1] + w.mu[j - 1] + p + 1 - i - j
            for i in range(1, p + 1) for j in range(1, len(w.mu) + 1)}


def atypical_roots(w: Weight) -> list[tuple[int, int]]:
    """Odd roots (i, j) orthogonal to the rho-shifted weight; empty iff typical."""
    return [ij for ij, a in atypicality_values(w).items() if a == 0]


def is_typical(w: Weight) -> bool:
    return not atypical_roots(w)


@dataclass(frozen=True)
class RootSystem:
    p: int
    q: int

    @property
    def even_positive(self) -> list[tuple[int, ...]]:
        n = self.p + self.q
        out = []
        for lo, hi in ((0, self.p), (self.p, n)):
            for i, j in combinations(range(lo, hi), 2):
                out.append(_root(n, i, j))
        return out

    @property
    def odd_positive(self) -> list[tuple[int, ...]]:
        n = self.p + self.q
        return [_root(n, i, self.p + j) for i in range(self.p) for j in range(self.q)]

    @property
    def delta_x(self) -> tuple[int, ...]:
        return tuple(range(self.p - 1, -1, -1))

    @property
    def delta_y(self) -> tuple[int, ...]:
        return tuple(range(self.q - 1, -1, -1))


def _root(n: int, i: int, j: int) -> tuple[int, ...]:
    v = [0] * n
    v[i] += 1
    v[j] -= 1
    return tuple(v)


def dominant_weights(group: GroupSpec, bound: int, degree: int | None = None):
    """All dominant weights of ``group`` with entries in ``[-bound, bound]``,
    optionally of a fixed total degree; sorted graded-lex descending."""
    per_block = [_dominant_block(p, q, bound) for p, q in group.blocks]
    out = []

    def rec(k, parts):
        if k == len(per_block):
            w = group.join(parts)
            if degree is None or w.degree == degree:
                out.append(w)
            return
        for b in per_block[k]:
            rec(k + 1, parts + [b])

    rec(0, [])
    out.sort(key=lambda w: (w.degree, w.exps), reverse=True)
    return out


def _nonincreasing(n: int, bound: int):
    if n == 0:
        yield ()
        return

    def rec(prefix, hi, left):
        if left == 0:
            yield tuple(prefix)
            return
        for v in range(hi, -bound - 1, -1):
            yield from rec(prefix + [v], v, left - 1)

    yield from rec([], bound, n)


def _dominant_block(p: int, q: int, bound: int) -> list[Weight]:
    return [Weight(lam, mu) for lam in _nonincreasing(p, bound) for mu in _nonincreasing(q, bound)]
