"""Sparse exact arithmetic in the group ring Z[P] and Demazure operators.

A :class:`CharacterPoly` maps exponents (:class:`~krfusion.weight.AffineWeight`)
to nonzero integers.  ``q = e^{-delta}``, so a monomial ``e^{lam + c delta}``
carries the q-power ``-c``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from .cartan import RootSystemData
from . import weight as W
from .weight import AffineWeight
from .weyl import (
    DomainError,
    ExtendedWeylElement,
    decompose_reduced,
    longest_element,
    sigma_act,
)

__all__ = [
    "CharacterPoly",
    "LaurentPoly",
    "NotACharacterError",
    "BudgetExceeded",
    "demazure_step",
    "demazure_word",
    "demazure_extended",
    "classical_character",
    "cl_project",
    "decompose_classical",
    "reconstruct",
]


class NotACharacterError(ArithmeticError):
    """The input to a character decomposition is not a sum of irreducibles."""


class BudgetExceeded(RuntimeError):
    """A computation grew past the configured monomial / element budget."""


def _num(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


class LaurentPoly:
    """Finitely supported map from rational exponents of q to integers."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                if c:
                    e = _num(Fraction(e))
                    clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, exponent=0, coeff=1):
        return cls({exponent: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[_num(e1 + e2)] += c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k):
        return LaurentPoly({_num(e + k): c for e, c in self.terms.items()})

    def __call__(self, q):
        return sum(c * q ** e for e, c in self.terms.items())

    def items(self):
        return sorted(self.terms.items())

    def max_exponent(self):
        return max(self.terms)

    def min_exponent(self):
        return min(self.terms)

    def in_q_inverse_ring(self):
        """True if every exponent is an integer <= 0 (the ring Z[q^-1])."""
        return all(isinstance(e, int) and e <= 0 for e in self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            parts.append(f"{c}*q^{W.format_rational(e)}" if e else f"{c}")
        return " + ".join(parts)


class CharacterPoly:
    """Element of Z[P]: a finitely supported map AffineWeight -> int."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def monomial(cls, lam: AffineWeight, coeff=1):
        return cls({lam: coeff})

    @classmethod
    def one(cls, rs: RootSystemData):
        return cls({W.zero(rs): 1})

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, CharacterPoly) and self.terms == other.terms

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, lam):
        return self.terms.get(lam, 0)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return CharacterPoly(out)

    def __neg__(self):
        return CharacterPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CharacterPoly({k: v * other for k, v in self.terms.items()})
        out = defaultdict(int)
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[W.add(k1, k2)] += v1 * v2
        return CharacterPoly(out)

    __rmul__ = __mul__

    def shift(self, lam: AffineWeight):
        """Multiply by the monomial e^lam."""
        return CharacterPoly({W.add(k, lam): v for k, v in self.terms.items()})

    def map_exponents(self, fn):
        out = defaultdict(int)
        for k, v in self.terms.items():
            out[fn(k)] += v
        return CharacterPoly(out)

    def levels(self):
        return {k.level for k in self.terms}

    def total(self):
        return sum(self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].level, kv[0].delta, kv[0].classical))

    def __repr__(self):
        return " + ".join(f"{v}*e^[{W.format_weight(k)}]" for k, v in self.sorted_terms()) or "0"


def demazure_step(rs: RootSystemData, i: int, f: CharacterPoly) -> CharacterPoly:
    """D_i(f) = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}), monomial by monomial."""
    alpha = W.simple_root(rs, i).classical
    da = 1 if i == 0 else 0
    marks = rs.marks[1:]
    out = defaultdict(int)
    for (c, lev, d), coeff in f.terms.items():
        if i == 0:
            m = lev - sum(a * x for a, x in zip(marks, c))
        else:
            m = c[i - 1]
        if m >= 0:
            out[AffineWeight(c, lev, d)] += coeff
            cur, dd = c, d
            for _ in range(m):
                cur = tuple(x - y for x, y in zip(cur, alpha))
                dd = dd - da
                out[AffineWeight(cur, lev, dd)] += coeff
        elif m <= -2:
            cur, dd = c, d
            for _ in range(-m - 1):
                cur = tuple(x + y for x, y in zip(cur, alpha))
                dd = dd + da
                out[AffineWeight(cur, lev, dd)] -= coeff
    return CharacterPoly(out)


def demazure_word(rs: RootSystemData, word, f: CharacterPoly, budget=None) -> CharacterPoly:
    """Apply D_{i_k} ... D_{i_1} for ``word = (i_k, ..., i_1)``."""
    for i in reversed(tuple(word)):
        f = demazure_step(rs, i, f)
        if budget is not None and len(f) > budget:
            raise BudgetExceeded(
                f"Demazure intermediate has {len(f)} monomials (budget {budget}); "
                "raise --budget or shrink the input"
            )
    return f


def apply_sigma(sigma, f: CharacterPoly) -> CharacterPoly:
    if sigma.is_identity():
        return f
    return f.map_exponents(lambda k: sigma_act(sigma, k))


def demazure_extended(w: ExtendedWeylElement, f: CharacterPoly, budget=None, factorization=None):
    """D_{w sigma} = D_{i_k} ... D_{i_1} o sigma; sigma is applied first."""
    word, sigma = factorization or decompose_reduced(w)
    return demazure_word(w.rs, word, apply_sigma(sigma, f), budget=budget)


def cl_project(f: CharacterPoly) -> CharacterPoly:
    return f.map_exponents(lambda k: AffineWeight(k.classical, k.level, 0))


@lru_cache(maxsize=4096)
def _classical_character(rs, mu):
    w0 = longest_element(rs)
    return demazure_word(rs, w0.word, CharacterPoly.monomial(W.finite(mu)))


def classical_character(rs: RootSystemData, mu) -> CharacterPoly:
    """ch V_{g_0}(mu) = D_{w_0}(e^mu)."""
    mu = tuple(mu)
    if len(mu) != rs.rank or any(x < 0 for x in mu):
        raise DomainError(f"{mu!r} is not a dominant weight of {rs.name}")
    return _classical_character(rs, mu)


def _slices(f: CharacterPoly):
    """Group a character by classical weight into q-Laurent polynomials."""
    levels = f.levels()
    if len(levels) > 1:
        raise NotACharacterError(f"mixed levels {sorted(levels)} in one character")
    out = defaultdict(dict)
    for k, v in f.terms.items():
        e = _num(-Fraction(k.delta))
        out[k.classical][e] = out[k.classical].get(e, 0) + v
    return {mu: LaurentPoly(p) for mu, p in out.items()}


def decompose_classical(rs: RootSystemData, f: CharacterPoly):
    """Write f as sum_mu coeff_mu(q) ch V(mu); returns ``{mu: LaurentPoly}``.

    The level of f is ignored (every exponent must share it).
    """
    rem = {mu: p for mu, p in _slices(f).items() if p}
    heights = {}
    result = {}
    while rem:
        for mu in rem:
            if mu not in heights:
                heights[mu] = rs.height(mu)
        top = max(rem, key=lambda m: (heights[m], m))
        if not rs.is_dominant(top):
            raise NotACharacterError(
                f"leading weight {W.format_finite(top)} of the remainder is not dominant"
            )
        coeff = rem[top]
        result[top] = coeff
        for lam, mult in classical_character(rs, top).terms.items():
            p = rem.get(lam.classical, LaurentPoly()) - coeff * mult
            if p:
                rem[lam.classical] = p
            else:
                rem.pop(lam.classical, None)
    return dict(sorted(result.items(), key=lambda kv: (-heights[kv[0]], kv[0])))


def reconstruct(rs: RootSystemData, decomposition, level=0) -> CharacterPoly:
    """Inverse of :func:`decompose_classical`: sum_mu coeff_mu(q) ch V(mu)."""
    out = defaultdict(int)
    for mu, poly in decomposition.items():
        ch = classical_character(rs, mu)
        for e, c in poly.terms.items():
            for lam, m in ch.terms.items():
                out[AffineWeight(lam.classical, level, _num(-Fraction(e)))] += c * m
    return CharacterPoly(out)
