import random

import pytest

from krfusion import weight as W
from krfusion.cartan import root_system
from krfusion.weyl import (
    DiagramAutomorphism,
    DomainError,
    FiniteWeylElement,
    decompose_reduced,
    diagram_automorphisms,
    identity,
    longest_element,
    simple_reflection,
    translation_of,
    translation_word,
)

RS = [root_system(*t) for t in (("A", 1), ("A", 2), ("A", 3), ("D", 4))]
N_POS = {"A1": 1, "A2": 3, "A3": 6, "D4": 12}


def compose(rs, word, sigma):
    w = identity(rs)
    for i in word:
        w = w * simple_reflection(rs, i)
    return w * sigma.element


def probes(rs):
    out = [W.Lambda0(rs), W.delta_weight(rs)]
    out += [W.simple_root(rs, i) for i in rs.nodes]
    out += [W.fundamental(rs, i) for i in rs.classical_nodes]
    return out


def same_map(rs, a, b):
    return all(a(x) == b(x) for x in probes(rs))


def affine_length_of_translation(rs, mu):
    return sum(abs(rs.form(mu, rs.to_weight(b))) for b in rs.positive_roots)


def test_a1_translation_word():
    rs = root_system("A", 1)
    word, sigma = decompose_reduced(translation_of(rs, (-1,)))
    assert word == (1,)
    assert sigma.perm == (1, 0)


def test_a2_translation_word():
    rs = root_system("A", 2)
    word, sigma = translation_word(rs, 1)
    assert longest_element(rs)(W.fundamental(rs, 1).classical) == (0, -1)
    assert word == (2, 1)
    assert sigma.perm[0] == 1


@pytest.mark.parametrize("rs", RS, ids=lambda r: r.name)
def test_longest_element(rs):
    w0 = longest_element(rs)
    assert len(w0.word) == N_POS[rs.name]
    rho = (1,) * rs.rank
    assert w0(rho) == tuple(-x for x in rho)
    assert w0 * w0 == FiniteWeylElement(rs, ())


@pytest.mark.parametrize("rs", RS, ids=lambda r: r.name)
def test_s0_matches_reflection(rs):
    s0 = simple_reflection(rs, 0)
    for x in probes(rs):
        assert s0(x) == W.reflect(rs, 0, x)


@pytest.mark.parametrize("rs", RS, ids=lambda r: r.name)
def test_translation_words_recompose(rs):
    for r in rs.classical_nodes:
        mu = longest_element(rs)(W.fundamental(rs, r).classical)
        t = translation_of(rs, mu)
        word, sigma = translation_word(rs, r)
        assert len(word) == affine_length_of_translation(rs, mu)
        assert same_map(rs, compose(rs, word, sigma), t)
        # tau_bar(mu_tau) recovers the fundamental weight of sigma(0)
        assert sigma.bar_tau(sigma.mu_tau) == W.fundamental(rs, sigma.perm[0]).classical


@pytest.mark.parametrize("rs", RS, ids=lambda r: r.name)
def test_random_translations(rs):
    rng = random.Random(7)
    for _ in range(15):
        mu = tuple(rng.randint(-2, 2) for _ in range(rs.rank))
        t = translation_of(rs, mu)
        word, sigma = decompose_reduced(t)
        assert len(word) == affine_length_of_translation(rs, mu)
        assert same_map(rs, compose(rs, word, sigma), t)
        w2, s2 = decompose_reduced(t, choose=max)
        assert len(w2) == len(word) and s2.perm == sigma.perm


@pytest.mark.parametrize("rs", RS, ids=lambda r: r.name)
def test_sigma_permutes_simple_roots(rs):
    for sigma in diagram_automorphisms(rs):
        for i in rs.nodes:
            assert sigma(W.simple_root(rs, i)) == W.simple_root(rs, sigma.perm[i])
        assert sigma(W.delta_weight(rs)) == W.delta_weight(rs)
    assert len(diagram_automorphisms(rs)) == sum(1 for m in rs.marks if m == 1)


def test_level_zero_translation_action():
    # on level 0, t_mu(beta) = beta - (beta, mu) delta
    rs = root_system("A", 2)
    for beta in (W.simple_root(rs, 1), W.simple_root(rs, 2)):
        out = translation_of(rs, (1, -1))(beta)
        assert out.classical == beta.classical
        assert out.delta == beta.delta - rs.form(beta.classical, (1, -1))


def test_bad_inputs():
    rs = root_system("A", 2)
    with pytest.raises(DomainError):
        translation_of(rs, (1,))
    with pytest.raises(DomainError):
        DiagramAutomorphism(rs, (0, 0, 1))
    with pytest.raises(DomainError):
        DiagramAutomorphism(root_system("D", 4), (2, 1, 0, 3, 4))
