"""Characters of gl(p|q)-modules and their decomposition into irreducibles.

Every alternant uses the integral shift ``delta = (n-1, ..., 0)``; highest
weight vectors are even and each odd root factor carries one ``e``.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations, product

from .errors import (NegativeCoefficient, NonDominantLeadingTerm, NonTermination,
                     NotDominant, NotSinglyAtypical, UnsupportedAtypical)
from .rootdata import GroupSpec, Weight, atypical_roots, is_dominant
from .superpoly import EPS, ONE, EpsInt, LaurentPoly, exact_div, order_key


class CharKind(Enum):
    TYPICAL = "Typical"
    ATYPICAL_BL = "AtypicalBL"
    UNSUPPORTED_ATYPICAL = "UnsupportedAtypical"


def _perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _signed_perms(n: int):
    return [(perm, _perm_sign(perm)) for perm in permutations(range(n))]


def _group_for(w: Weight, group: GroupSpec | None) -> GroupSpec:
    if group is None:
        return GroupSpec.gl(len(w.lam), len(w.mu))
    group.check_weight(w)
    return group


# -- even blocks ---------------------------------------------------------

@lru_cache(maxsize=None)
def _schur_terms(w: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Rational Schur polynomial for a non-increasing integer vector, as
    ``{exponents: multiplicity}`` in ``len(w)`` variables."""
    n = len(w)
    if n == 0:
        return {(): 1}
    m = w[-1]
    shape = tuple(v - m for v in w)
    g = GroupSpec.gl(n)
    delta = tuple(range(n - 1, -1, -1))
    top = tuple(a + d for a, d in zip(shape, delta))
    num, vdm = {}, {}
    for perm, sign in _signed_perms(n):
        mono_num = [0] * n
        mono_vdm = [0] * n
        for k in range(n):
            mono_num[perm[k]] = top[k]
            mono_vdm[perm[k]] = delta[k]
        num[tuple(mono_num)] = sign
        vdm[tuple(mono_vdm)] = sign
    s = exact_div(LaurentPoly(g, num), LaurentPoly(g, vdm))
    return {tuple(e + m for e in exps): c.even for exps, c in s.terms.items()}


def schur_char(n: int, w, block: str = "x") -> LaurentPoly:
    """Character of the even irreducible gl(n)-module with highest weight ``w``
    in the variables ``x1..xn`` (``block="x"``) or ``y1..yn`` (``block="y"``)."""
    w = tuple(w)
    if len(w) != n:
        raise ValueError(f"weight {w} has length {len(w)}, expected {n}")
    if any(a < b for a, b in zip(w, w[1:])):
        raise NotDominant(f"{w} is not non-increasing", weight=list(w))
    group = GroupSpec.gl(n, 0) if block == "x" else GroupSpec.gl(0, n)
    return LaurentPoly(group, _schur_terms(w))


# -- single-block super characters (local coordinates x1..xp, y1..yq) -----

def _mul_terms(a: dict, b: dict) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(u + v for u, v in zip(m1, m2))
            out[m] = out[m] + c1 * c2 if m in out else c1 * c2
    return {m: c for m, c in out.items() if c}


def _odd_factor(p: int, q: int, i: int, j: int) -> dict:
    """``1 + e*y_j/x_i`` in local coordinates."""
    one = (0,) * (p + q)
    shifted = [0] * (p + q)
    shifted[i] -= 1
    shifted[p + j] += 1
    return {one: ONE, tuple(shifted): EPS}


def _even_part(p: int, q: int, lam, mu) -> dict:
    sx = _schur_terms(tuple(lam))
    sy = _schur_terms(tuple(mu))
    return {ex + ey: EpsInt(cx * cy, 0) for ex, cx in sx.items() for ey, cy in sy.items()}


@lru_cache(maxsize=None)
def _kac_block(p: int, q: int, lam: tuple, mu: tuple) -> dict:
    terms = _even_part(p, q, lam, mu)
    for i in range(p):
        for j in range(q):
            terms = _mul_terms(terms, _odd_factor(p, q, i, j))
    return terms


@lru_cache(maxsize=None)
def _bl_block(p: int, q: int, lam: tuple, mu: tuple) -> dict:
    w = Weight(lam, mu)
    roots = atypical_roots(w)
    if len(roots) != 1 or min(p, q) != 1:
        raise NotSinglyAtypical(f"{w} is not a singly atypical gl({p}|{q}) weight",
                                weight=str(w), atypical_roots=roots)
    i0, j0 = roots[0]
    g = GroupSpec.gl(p, q)
    n = p + q
    if p == 1:
        # Alternate over the odd variables; the x-block is one variable.
        k, offset, excluded = q, p, j0 - 1
        head = (lam[0],) + tuple(v + d for v, d in zip(mu, range(q - 1, -1, -1)))
        factors = [_odd_factor(p, q, 0, j) for j in range(q) if j != excluded]
    else:
        k, offset, excluded = p, 0, i0 - 1
        head = tuple(v + d for v, d in zip(lam, range(p - 1, -1, -1))) + (mu[0],)
        factors = [_odd_factor(p, q, i, 0) for i in range(p) if i != excluded]
    seed = {head: ONE}
    for f in factors:
        seed = _mul_terms(seed, f)
    num: dict = {}
    vdm: dict = {}
    for perm, sign in _signed_perms(k):
        full = list(range(n))
        for a in range(k):
            full[offset + a] = offset + perm[a]
        for exps, c in seed.items():
            new = [0] * n
            for a, e in enumerate(exps):
                new[full[a]] = e
            new = tuple(new)
            v = num.get(new, EpsInt()) + c * sign
            if v:
                num[new] = v
            else:
                num.pop(new, None)
        mono = [0] * n
        for a in range(k):
            mono[offset + perm[a]] = k - 1 - a
        vdm[tuple(mono)] = EpsInt(sign)
    quot = exact_div(LaurentPoly(g, num), LaurentPoly(g, vdm))
    bad = [m for m, c in quot.terms.items() if not c.is_nonnegative()]
    if bad:
        raise NegativeCoefficient(f"atypical alternant for {w} produced negative coefficients",
                                  weight=str(w), monomials=[list(m) for m in bad[:5]])
    return dict(quot.terms)


def char_kind(w: Weight) -> CharKind:
    roots = atypical_roots(w)
    if not roots:
        return CharKind.TYPICAL
    if min(len(w.lam), len(w.mu)) <= 1:
        return CharKind.ATYPICAL_BL
    return CharKind.UNSUPPORTED_ATYPICAL


def _irr_block(p: int, q: int, lam: tuple, mu: tuple) -> dict:
    w = Weight(lam, mu)
    kind = char_kind(w)
    if kind is CharKind.TYPICAL:
        return _kac_block(p, q, lam, mu)
    if kind is CharKind.ATYPICAL_BL:
        return _bl_block(p, q, lam, mu)
    raise UnsupportedAtypical(f"atypical gl({p}|{q}) weight {w} with p, q >= 2 has no supported character formula",
                              weight=str(w), atypical_roots=atypical_roots(w))


def _assemble(group: GroupSpec, w: Weight, block_fn) -> LaurentPoly:
    """Product over blocks of ``block_fn`` placed on the blocks' variable slices."""
    if not group.is_dominant(w):
        raise NotDominant(f"{group.format_weight(w)} is not dominant for {group}", weight=group.format_weight(w))
    n = group.nvars
    total = {(0,) * n: ONE}
    for (p, q), part, xs, ys in zip(group.blocks, group.split(w), group.x_slices(), group.y_slices()):
        local = block_fn(p, q, part.lam, part.mu)
        places = list(xs) + list(ys)
        placed = {}
        for exps, c in local.items():
            g = [0] * n
            for k, e in zip(places, exps):
                g[k] = e
            placed[tuple(g)] = c
        total = _mul_terms(total, placed)
    return LaurentPoly(group, total)


def kac_char(w: Weight, group: GroupSpec | None = None) -> LaurentPoly:
    """Kac-module character: even character times ``prod (1 + e*y_j/x_i)``."""
    group = _group_for(w, group)
    return _assemble(group, w, _kac_block)


def bl_char(w: Weight, group: GroupSpec | None = None) -> LaurentPoly:
    """Atypical alternant for a singly atypical gl(1|n) or gl(n|1) weight:
    the Kac alternant with the atypical odd-root factor removed before the
    Weyl-group sum, divided exactly by the Vandermonde alternant."""
    group = _group_for(w, group)
    return _assemble(group, w, _bl_block)


def irr_char(w: Weight, group: GroupSpec | None = None) -> LaurentPoly:
    """Character of the irreducible module L(w): Kac for typical weights,
    the atypical alternant for singly atypical ones."""
    group = _group_for(w, group)
    return _assemble(group, w, _irr_block)


def is_supported(w: Weight, group: GroupSpec | None = None) -> bool:
    group = _group_for(w, group)
    return all(char_kind(b) is not CharKind.UNSUPPORTED_ATYPICAL for b in group.split(w))


def is_typical_weight(w: Weight, group: GroupSpec | None = None) -> bool:
    group = _group_for(w, group)
    return all(not atypical_roots(b) for b in group.split(w))


def decompose(c: LaurentPoly, group: GroupSpec | None = None) -> list[tuple[Weight, EpsInt]]:
    """Write a virtual character as ``sum coeff * irr_char(weight)`` by peeling
    graded-lex leading terms."""
    group = group or c.group
    if c.group != group:
        c = c.with_group(group)
    out = []
    limit = c.max_abs_exponent() + group.p * group.q
    rem = c
    while rem:
        lead, coeff = rem.leading_term()
        w = group.weight_from_exps(lead)
        if not group.is_dominant(w):
            raise NonDominantLeadingTerm(f"leading weight {group.format_weight(w)} is not dominant",
                                         weight=group.format_weight(w))
        out.append((w, coeff))
        rem = rem - irr_char(w, group) * coeff
        if rem.max_abs_exponent() > limit:
            raise NonTermination("remainder exponents keep growing; input is not a virtual character",
                                 weight=group.format_weight(w))
    return out


def compose(parts, group: GroupSpec) -> LaurentPoly:
    total = LaurentPoly.zero(group)
    for w, coeff in parts:
        total = total + irr_char(w, group) * coeff
    return total


# -- independent oracles --------------------------------------------------

def _ssyt(shape: tuple[int, ...], n: int):
    """Yield the content vector of every semistandard tableau of ``shape``
    with entries in ``1..n``."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: dict = {}

    def rec(k):
        if k == len(cells):
            content = [0] * n
            for v in filling.values():
                content[v - 1] += 1
            yield tuple(content)
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            filling[(r, c)] = v
            yield from rec(k + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def ssyt_oracle(n: int, partition) -> LaurentPoly:
    """Schur polynomial by enumerating semistandard Young tableaux."""
    shape = tuple(v for v in partition if v > 0)
    terms: dict = {}
    if len(shape) <= n:
        for content in _ssyt(shape, n):
            terms[content] = terms.get(content, 0) + 1
    return LaurentPoly(GroupSpec.gl(n), terms)


def _even_weights_oracle(w: tuple[int, ...]) -> dict:
    if not w:
        return {(): 1}
    m = w[-1]
    poly = ssyt_oracle(len(w), [v - m for v in w])
    return {tuple(e + m for e in exps): c.even for exps, c in poly.terms.items()}


def kac_weights_oracle(w: Weight, group: GroupSpec | None = None) -> LaurentPoly:
    """Kac character by brute force: every subset of odd positive roots applied
    to every weight of the even highest-weight module."""
    group = _group_for(w, group)
    if not group.is_dominant(w):
        raise NotDominant(f"{w} is not dominant", weight=str(w))
    n = group.nvars
    odd_roots = []
    for xs, ys in zip(group.x_slices(), group.y_slices()):
        for i in xs:
            for j in ys:
                odd_roots.append((i, j))
    even = [{}]
    for part in group.split(w):
        lam_w = _even_weights_oracle(part.lam)
        mu_w = _even_weights_oracle(part.mu)
        even.append({a + b: ca * cb for a, ca in lam_w.items() for b, cb in mu_w.items()})
    # Reassemble block-local weights into global (x..., y...) positions.
    blocks = even[1:]
    terms: dict = {}
    for combo in product(*[list(b.items()) for b in blocks]):
        exps = [0] * n
        mult = 1
        for (local, c), (p, q), xs, ys in zip(combo, group.blocks, group.x_slices(), group.y_slices()):
            for k, pos in enumerate(list(xs) + list(ys)):
                exps[pos] = local[k]
            mult *= c
        for size in range(len(odd_roots) + 1):
            for subset in combinations(odd_roots, size):
                e = list(exps)
                for i, j in subset:
                    e[i] -= 1
                    e[j] += 1
                key = tuple(e)
                terms[key] = terms.get(key, EpsInt()) + EpsInt(0 if size % 2 else mult, mult if size % 2 else 0)
    return LaurentPoly(group, terms)


def leading_coefficient_is_one(c: LaurentPoly, w: Weight) -> bool:
    return c.coeff(w.exps) == ONE and c.leading_term()[0] == w.exps


__all__ = [
    "CharKind", "char_kind", "schur_char", "kac_char", "bl_char", "irr_char", "decompose",
    "compose", "ssyt_oracle", "kac_weights_oracle", "is_supported", "is_typical_weight",
    "order_key",
]
