"""Exact arithmetic on the affine weight lattice.

An affine weight is stored as ``(classical, level, delta)``: the Dynkin labels
of its finite part, its level ``<lam, K>`` and the exact rational coefficient
of the null root.  The degree operator is never stored; ``Lambda_0`` is
``((0,...,0), 1, 0)`` and ``alpha_0 = delta - theta`` is ``(-theta, 0, 1)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from .cartan import RootSystemData

__all__ = [
    "AffineWeight",
    "zero",
    "Lambda0",
    "fundamental",
    "delta_weight",
    "finite",
    "simple_root",
    "pair_coroot",
    "bilinear",
    "reflect",
    "translate",
    "add",
    "neg",
    "scale",
    "format_weight",
    "format_finite",
    "parse_weight",
    "parse_finite",
    "format_rational",
    "rational",
]


def rational(x):
    """Normalize an exact rational: integral Fractions become ints."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    return x


class AffineWeight(NamedTuple):
    classical: tuple
    level: int = 0
    delta: Fraction | int = 0

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, neg(other))

    def __neg__(self):
        return neg(self)


def zero(rs: RootSystemData) -> AffineWeight:
    return AffineWeight((0,) * rs.rank, 0, 0)


def Lambda0(rs: RootSystemData, k: int = 1) -> AffineWeight:
    return AffineWeight((0,) * rs.rank, k, 0)


def fundamental(rs: RootSystemData, i: int) -> AffineWeight:
    """Finite fundamental weight varpi_i (level 0); varpi_0 = 0."""
    c = [0] * rs.rank
    if i:
        c[i - 1] = 1
    return AffineWeight(tuple(c), 0, 0)


def delta_weight(rs: RootSystemData, c=1) -> AffineWeight:
    return AffineWeight((0,) * rs.rank, 0, rational(Fraction(c)))


def finite(weight) -> AffineWeight:
    """Embed Dynkin labels of a finite weight at level 0, delta 0."""
    return AffineWeight(tuple(weight), 0, 0)


def simple_root(rs: RootSystemData, i: int) -> AffineWeight:
    if i == 0:
        return AffineWeight(tuple(-x for x in rs.highest_root_weight), 0, 1)
    return AffineWeight(rs.simple_root_weights[i - 1], 0, 0)


def add(a: AffineWeight, b: AffineWeight) -> AffineWeight:
    return AffineWeight(
        tuple(x + y for x, y in zip(a.classical, b.classical)),
        a.level + b.level,
        rational(a.delta + b.delta),
    )


def neg(a: AffineWeight) -> AffineWeight:
    return AffineWeight(tuple(-x for x in a.classical), -a.level, rational(-a.delta))


def scale(a: AffineWeight, k) -> AffineWeight:
    return AffineWeight(tuple(k * x for x in a.classical), k * a.level, rational(k * a.delta))


def pair_coroot(rs: RootSystemData, lam: AffineWeight, i: int) -> int:
    """<lam, alpha_i^vee>; for i = 0 this is level - <lam_bar, theta^vee>."""
    if i == 0:
        return lam.level - sum(a * c for a, c in zip(rs.marks[1:], lam.classical))
    return lam.classical[i - 1]


def bilinear(rs: RootSystemData, lam: AffineWeight, mu: AffineWeight):
    """The invariant form with (Lambda_0, Lambda_0) = 0 and (Lambda_0, delta) = 1."""
    return rational(
        Fraction(rs.form(lam.classical, mu.classical))
        + lam.level * mu.delta
        + mu.level * lam.delta
    )


def reflect(rs: RootSystemData, i: int, lam: AffineWeight) -> AffineWeight:
    m = pair_coroot(rs, lam, i)
    if m == 0:
        return lam
    return add(lam, scale(simple_root(rs, i), -m))


def translate(rs: RootSystemData, mu, lam: AffineWeight) -> AffineWeight:
    """t_mu(lam) = lam + k mu - ((lam, mu) + (mu, mu) k / 2) delta, k the level of lam."""
    mu = tuple(mu)
    k = lam.level
    shift = Fraction(rs.form(lam.classical, mu)) + Fraction(rs.form(mu, mu)) * k / 2
    return AffineWeight(
        tuple(x + k * y for x, y in zip(lam.classical, mu)),
        k,
        rational(lam.delta - shift),
    )


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_finite(weight) -> str:
    return "+".join(f"{c}*w{i}" for i, c in enumerate(weight, start=1))


def format_weight(lam: AffineWeight) -> str:
    """Render as ``a1*w1+...+an*wn + k*L0 + (p/q)*delta``."""
    return (
        f"{format_finite(lam.classical)} + {lam.level}*L0 + "
        f"({format_rational(lam.delta)})*delta"
    )


_TERM = re.compile(r"^\(?\s*([+-]?\d+(?:/\d+)?)\s*\)?\s*\*\s*(w\d+|L0|delta)$")


def _terms(text: str):
    # split on '+' not inside parentheses
    depth, cur, out = 0, [], []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [t.strip() for t in out if t.strip()]


def parse_weight(rs: RootSystemData, text: str) -> AffineWeight:
    """Inverse of :func:`format_weight` (missing terms default to zero)."""
    classical = [0] * rs.rank
    level, delta = 0, Fraction(0)
    for term in _terms(text):
        m = _TERM.match(term.replace(" ", ""))
        if not m:
            raise ValueError(f"cannot parse weight term {term!r}")
        coeff, sym = Fraction(m.group(1)), m.group(2)
        if sym == "L0":
            level += int(coeff)
        elif sym == "delta":
            delta += coeff
        else:
            idx = int(sym[1:])
            if not 1 <= idx <= rs.rank:
                raise ValueError(f"weight index out of range in {term!r}")
            classical[idx - 1] += int(coeff)
    return AffineWeight(tuple(classical), level, rational(delta))


def parse_finite(rs: RootSystemData, text: str) -> tuple:
    lam = parse_weight(rs, text)
    if lam.level or lam.delta:
        raise ValueError(f"{text!r} is not a finite weight")
    return lam.classical
