from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from krfusion import weight as W
from krfusion.cartan import root_system

RS = [root_system(*t) for t in (("A", 1), ("A", 2), ("A", 3), ("D", 4))]


def weights(rs, lo=-3, hi=3):
    return st.builds(
        W.AffineWeight,
        st.tuples(*[st.integers(lo, hi)] * rs.rank),
        st.integers(-2, 3),
        st.fractions(max_denominator=4).map(W.rational),
    )


def test_base_pairings():
    rs = root_system("A", 2)
    L0, d = W.Lambda0(rs), W.delta_weight(rs)
    assert W.bilinear(rs, L0, L0) == 0
    assert W.bilinear(rs, L0, d) == 1
    assert W.bilinear(rs, d, d) == 0
    a0 = W.simple_root(rs, 0)
    assert a0 == W.AffineWeight((-1, -1), 0, 1)
    assert W.bilinear(rs, a0, a0) == 2
    assert [W.pair_coroot(rs, L0, i) for i in rs.nodes] == [1, 0, 0]


@pytest.mark.parametrize("rs", RS, ids=lambda r: r.name)
def test_affine_cartan_from_pairings(rs):
    for i in rs.nodes:
        for j in rs.nodes:
            assert W.pair_coroot(rs, W.simple_root(rs, j), i) == rs.affine_cartan[i][j]


def test_translation_example():
    rs = root_system("A", 1)
    out = W.translate(rs, (-1,), W.Lambda0(rs))
    assert out == W.AffineWeight((-1,), 1, Fraction(-1, 4))


@pytest.mark.parametrize("rs", RS, ids=lambda r: r.name)
def test_reflections_are_isometric_involutions(rs):
    @settings(max_examples=60, deadline=None)
    @given(weights(rs), weights(rs), st.sampled_from(rs.nodes))
    def check(lam, mu, i):
        r = W.reflect(rs, i, lam)
        assert W.reflect(rs, i, r) == lam
        assert W.bilinear(rs, r, W.reflect(rs, i, mu)) == W.bilinear(rs, lam, mu)
        # s_i(lam) = lam - <lam, alpha_i^vee> alpha_i and delta is fixed
        assert r.level == lam.level
        d = W.delta_weight(rs)
        assert W.reflect(rs, i, d) == d

    check()


@pytest.mark.parametrize("rs", RS, ids=lambda r: r.name)
def test_translations_form_a_group(rs):
    vec = st.tuples(*[st.integers(-3, 3)] * rs.rank)

    @settings(max_examples=60, deadline=None)
    @given(weights(rs), vec, vec)
    def check(lam, mu, nu):
        both = W.translate(rs, mu, W.translate(rs, nu, lam))
        summed = tuple(a + b for a, b in zip(mu, nu))
        assert both == W.translate(rs, summed, lam)
        back = W.translate(rs, tuple(-x for x in mu), W.translate(rs, mu, lam))
        assert back == lam
        t_lam = W.translate(rs, mu, lam)
        assert W.bilinear(rs, t_lam, t_lam) == W.bilinear(rs, lam, lam)

    check()


@pytest.mark.parametrize("rs", RS, ids=lambda r: r.name)
def test_format_parse_roundtrip(rs):
    @settings(max_examples=80, deadline=None)
    @given(weights(rs))
    def check(lam):
        assert W.parse_weight(rs, W.format_weight(lam)) == lam

    check()


def test_format_text():
    rs = root_system("A", 2)
    lam = W.AffineWeight((1, 0), 2, Fraction(-3, 2))
    assert W.format_weight(lam) == "1*w1+0*w2 + 2*L0 + (-3/2)*delta"
    assert W.format_finite((1, 0)) == "1*w1+0*w2"
    assert W.parse_finite(rs, "1*w1+1*w2") == (1, 1)
    with pytest.raises(ValueError):
        W.parse_finite(rs, "1*L0")
    with pytest.raises(ValueError):
        W.parse_weight(rs, "1*w3")
