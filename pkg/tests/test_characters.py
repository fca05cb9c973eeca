from itertools import permutations
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from explicit_modules import irreducible_character
from superindex.characters import (CharKind, bl_char, char_kind, compose, decompose, irr_char, kac_char,
                                   kac_weights_oracle, schur_char, ssyt_oracle)
from superindex.errors import (NonDominantLeadingTerm, NonTermination, NotDominant, NotSinglyAtypical,
                               UnsupportedAtypical)
from superindex.rootdata import GroupSpec, Weight, atypical_roots, dominant_weights
from superindex.superpoly import (EPS, ONE, EpsInt, LaurentPoly, parse_poly, permute_vars, specialize,
                                  super_eval)

W = Weight.parse
G11, G12, G21, G22 = (GroupSpec.gl(1, 1), GroupSpec.gl(1, 2), GroupSpec.gl(2, 1), GroupSpec.gl(2, 2))
GOLDEN = Path(__file__).parent / "golden" / "characters.tsv"


def P(group, text):
    return parse_poly(group, text)


def as_pairs(poly):
    return {m: (c.even, c.odd) for m, c in poly.terms.items()}


def partitions(max_boxes, max_parts):
    out = []

    def rec(prefix, left, cap):
        if len(prefix) <= max_parts:
            out.append(tuple(prefix))
        if len(prefix) == max_parts:
            return
        for v in range(min(left, cap), 0, -1):
            rec(prefix + [v], left - v, v)

    rec([], max_boxes, max_boxes)
    return out


# -- even characters --------------------------------------------------------

def test_schur_examples():
    assert schur_char(2, (1, 0)) == P(GroupSpec.gl(2), "x1 + x2")
    assert schur_char(2, (1, 1)) == P(GroupSpec.gl(2), "x1*x2")
    assert specialize(schur_char(3, (2, 1, 0))) == EpsInt(8, 0)
    assert schur_char(2, (1, 0), block="y") == P(GroupSpec.gl(0, 2), "y1 + y2")


def test_schur_rational_weights():
    # dual of the standard gl(2) module
    assert schur_char(2, (0, -1)) == P(GroupSpec.gl(2), "x1^-1 + x2^-1")
    with pytest.raises(NotDominant):
        schur_char(2, (0, 1))


def test_ssyt_oracle_examples():
    assert ssyt_oracle(2, (1,)) == P(GroupSpec.gl(2), "x1 + x2")
    assert ssyt_oracle(2, (2, 1)) == P(GroupSpec.gl(2), "x1^2*x2 + x1*x2^2")
    assert len(list(ssyt_oracle(3, (2, 1)).terms)) == 7


@pytest.mark.parametrize("n", [1, 2, 3])
def test_schur_matches_tableaux(n):
    for lam in partitions(4, n):
        padded = lam + (0,) * (n - len(lam))
        assert schur_char(n, padded) == ssyt_oracle(n, lam), lam


# -- Kac characters ---------------------------------------------------------

def test_kac_examples():
    assert kac_char(W("1|0")) == P(G11, "x1 + e*y1")
    assert kac_char(W("0|0")) == P(G11, "1 + e*x1^-1*y1")


@pytest.mark.parametrize("group", [G11, G12, G21, G22])
def test_kac_dimensions(group):
    p, q = group.p, group.q
    for w in dominant_weights(group, 2):
        d = specialize(kac_char(w))
        even_dim = specialize(schur_char(p, w.lam)).even * specialize(schur_char(q, w.mu, "y")).even
        assert d == EpsInt(2 ** (p * q - 1) * even_dim, 2 ** (p * q - 1) * even_dim)
        assert super_eval(kac_char(w)) == 0
        assert kac_char(w).leading_term() == (w.exps, ONE)


def test_kac_weights_oracle_examples():
    assert kac_weights_oracle(W("1|0")) == P(G11, "x1 + e*y1")
    expected = P(G12, "1 + e*x1^-1*y1") * P(G12, "1 + e*x1^-1*y2")
    assert kac_weights_oracle(W("0|0,0")) == expected
    assert len(expected) == 4


@pytest.mark.parametrize("group", [G11, G12, G21])
def test_kac_matches_subset_oracle(group):
    for w in dominant_weights(group, 2):
        assert kac_char(w) == kac_weights_oracle(w), w


# -- irreducible characters ---------------------------------------------------

def test_irr_examples():
    for a in range(-3, 4):
        assert irr_char(Weight((a,), (-a,))) == LaurentPoly.monomial(G11, (a, -a))
    assert irr_char(W("0|0,0")) == LaurentPoly.constant(G12)
    assert irr_char(W("1|0,0")) == P(G12, "x1 + e*y1 + e*y2")
    assert irr_char(W("1,0|0")) == P(G21, "x1 + x2 + e*y1")


def test_bl_examples():
    assert bl_char(W("0|0,0")) == LaurentPoly.constant(G12)
    assert bl_char(W("1|0,0")) == P(G12, "x1 + e*y1 + e*y2")
    assert bl_char(W("2|-2")) == P(G11, "x1^2*y1^-2")
    with pytest.raises(NotSinglyAtypical):
        bl_char(W("1|0"))


@pytest.mark.parametrize("a", range(-3, 4))
def test_bl_calibration_identity(a):
    lhs = kac_char(Weight((a,), (-a,)))
    rhs = bl_char(Weight((a,), (-a,))) + bl_char(Weight((a - 1,), (1 - a,))) * EPS
    assert lhs == rhs


def test_unsupported_atypical():
    with pytest.raises(UnsupportedAtypical):
        irr_char(W("0,0|0,0"))
    assert char_kind(W("0,0|0,0")) is CharKind.UNSUPPORTED_ATYPICAL
    assert char_kind(W("1,0|0")) is CharKind.ATYPICAL_BL
    assert char_kind(W("3,2|0,0")) is CharKind.TYPICAL


def test_not_dominant():
    with pytest.raises(NotDominant):
        irr_char(W("0,1|0"))
    with pytest.raises(NotDominant):
        kac_char(W("0|0,1"))


def supported_box(group, bound):
    return [w for w in dominant_weights(group, bound)
            if not (min(group.p, group.q) >= 2 and atypical_roots(w))]


@pytest.mark.parametrize("group,bound", [(G11, 3), (G12, 3), (G21, 3), (G22, 2)])
def test_irr_matches_explicit_module(group, bound):
    """Kac module built from matrix units, irreducible quotient by the radical."""
    for w in supported_box(group, bound):
        assert as_pairs(irr_char(w)) == irreducible_character(w.lam, w.mu), w


@pytest.mark.parametrize("group,bound", [(G11, 3), (G12, 3), (G22, 1)])
def test_typicality_matches_kac_irreducibility(group, bound):
    # typical <=> the explicitly constructed Kac module is already irreducible
    for w in dominant_weights(group, bound):
        kac_is_simple = as_pairs(kac_char(w)) == irreducible_character(w.lam, w.mu)
        assert kac_is_simple == (not atypical_roots(w)), w


@pytest.mark.parametrize("group", [G11, G12, G21, GroupSpec.gl(1, 3), GroupSpec.gl(3, 1)])
def test_atypical_kac_has_two_factors(group):
    for w in dominant_weights(group, 2):
        if not atypical_roots(w):
            continue
        parts = decompose(kac_char(w))
        assert len(parts) == 2 and parts[0] == (w, ONE)
        assert parts[1][1] in (ONE, EPS)


@pytest.mark.parametrize("group", [G11, G12, G21, G22])
def test_supersymmetry_positivity_and_typical_sdim(group):
    p, q = group.p, group.q
    perms = [tuple(a) + tuple(b) for a in permutations(range(p)) for b in permutations(range(p, p + q))]
    for w in supported_box(group, 2):
        c = irr_char(w)
        assert all(permute_vars(c, s) == c for s in perms)
        assert all(v.is_nonnegative() for v in c.terms.values())
        assert c.leading_term() == (w.exps, ONE)
        if not atypical_roots(w):
            assert super_eval(c) == 0


@pytest.mark.parametrize("group", [G11, G12, G21])
def test_berezinian_twist(group):
    for w in dominant_weights(group, 2):
        for t in (-1, 2):
            tw = Weight(tuple(v + t for v in w.lam), tuple(v - t for v in w.mu))
            mono = LaurentPoly.monomial(group, (t,) * group.p + (-t,) * group.q)
            assert irr_char(tw) == mono * irr_char(w)


def test_atypical_superdimensions_nonzero():
    assert super_eval(irr_char(W("0|0"))) == 1
    assert super_eval(irr_char(W("1|0,0"))) == -1
    assert super_eval(irr_char(W("0|0,-1"))) == 1


# -- decomposition --------------------------------------------------------------

def test_decompose_square_of_standard():
    std = P(G11, "x1 + e*y1")
    assert decompose(std * std) == [(W("2|0"), ONE), (W("1|1"), EPS)]


def test_decompose_zero():
    assert decompose(LaurentPoly.zero(G12)) == []


def test_self_decomposition():
    ws = [w for g in (G11, G12, G21) for w in dominant_weights(g, 1)][:30]
    assert len(ws) == 30
    for w in ws:
        assert decompose(irr_char(w)) == [(w, ONE)]


def test_decompose_rejects_non_characters():
    with pytest.raises(NonDominantLeadingTerm):
        decompose(P(GroupSpec.gl(2), "x2"))
    with pytest.raises(NonTermination):
        decompose(P(G11, "x1"))


weights_12 = dominant_weights(G12, 1)


@settings(max_examples=200, deadline=None)
@given(st.dictionaries(st.sampled_from(weights_12),
                       st.builds(EpsInt, st.integers(-3, 3), st.integers(-3, 3)), max_size=4))
def test_decompose_compose_identity(combo):
    combo = {w: c for w, c in combo.items() if c}
    got = decompose(compose(combo.items(), G12))
    assert dict(got) == combo


def test_golden_characters():
    for line in GOLDEN.read_text().splitlines():
        if line.startswith("#"):
            continue
        gtext, wtext, ctext = line.split("\t")
        g = GroupSpec.parse(gtext)
        w = g.parse_weight(wtext)
        assert str(irr_char(w, g)) == ctext
        assert as_pairs(parse_poly(g, ctext)) == irreducible_character(w.lam, w.mu)
