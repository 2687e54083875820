"""Iterated affine Demazure operators applied to powers of e^{Lambda_0}.

X_1 = D_{t_{w_0(varpi_{r_1})}}(e^{l_1 Lambda_0}) and
X_j = D_{t_{w_0(varpi_{r_j})}}(e^{(l_j - l_{j-1}) Lambda_0} X_{j-1}).
"""

from __future__ import annotations

import logging
from fractions import Fraction

from .cartan import RootSystemData
from . import weight as W
from .groupring import (
    CharacterPoly,
    apply_sigma,
    decompose_classical,
    demazure_word,
)
from .nu import NuSequence, highest_weight, validate_nu
from .weyl import translation_word

__all__ = ["UnsortedLevelsError", "dside_raw", "dside_normalized"]

log = logging.getLogger(__name__)


class UnsortedLevelsError(ValueError):
    """Levels of nu must weakly increase for the Demazure side."""


def dside_raw(rs: RootSystemData, nu: NuSequence, budget=None, trace=None) -> CharacterPoly:
    nu = validate_nu(rs, nu)
    levels = [l for _, l in nu]
    if levels != sorted(levels):
        raise UnsortedLevelsError(
            f"levels {levels} are not weakly increasing; sort nu by level first "
            "(the fermionic side is reorder-invariant)"
        )
    f = CharacterPoly.one(rs)
    prev = 0
    for r, l in nu:
        f = f.shift(W.Lambda0(rs, l - prev))
        word, sigma = translation_word(rs, r)
        f = demazure_word(rs, word, apply_sigma(sigma, f), budget=budget)
        log.debug("after (%d,%d): %d monomials", r, l, len(f))
        if trace is not None:
            trace.append(f)
        prev = l
    return f


def dside_normalized(rs: RootSystemData, nu: NuSequence, budget=None):
    """Strip e^{l_p Lambda_0} q^C and decompose into classical characters.

    Returns ``(decomposition, C)`` where C is the rational constant making the
    coefficient of e^{lambda_nu} exactly 1.
    """
    raw = dside_raw(rs, nu, budget=budget)
    top = highest_weight(rs, nu)
    level = nu[-1][1] if nu else 0
    anchor = [(k, v) for k, v in raw.terms.items() if k.classical == top]
    if len(anchor) != 1 or anchor[0][1] != 1:
        raise ArithmeticError(
            f"coefficient of e^lambda_nu is not a single q-power: {anchor!r}"
        )
    # q^C = e^{-C delta} is the anchor monomial's delta part
    C = W.rational(-Fraction(anchor[0][0].delta))
    shifted = raw.map_exponents(
        lambda k: W.AffineWeight(k.classical, k.level - level, W.rational(k.delta + C))
    )
    return decompose_classical(rs, shifted), C
