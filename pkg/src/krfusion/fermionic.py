"""Fermionic forms M(nu, mu, q) for simply-laced types.

With the form (alpha_a, alpha_b) given by the Cartan matrix,

    p_i^(a) = sum_{j: r_j = a} min(i, l_j) - sum_{b, j} (alpha_a, alpha_b) min(i, j) m_j^(b)
    cc(m)   = 1/2 sum (alpha_a, alpha_b) min(i, j) m_i^(a) m_j^(b)
              - sum_{a, i} sum_{j: r_j = a} min(i, l_j) m_i^(a)
    M       = sum_m q^{cc(m)} prod_{a, i} [p_i^(a) + m_i^(a), m_i^(a)]_q

summed over configurations of weight lambda_nu - mu with all vacancies >= 0.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .cartan import RootSystemData
from .groupring import LaurentPoly
from .nu import NuSequence, highest_weight, validate_nu

__all__ = [
    "Configuration",
    "q_binomial",
    "vacancy",
    "cocharge",
    "enumerate_configs",
    "fermionic_form",
    "mside",
]

# (a, i) -> m_i^(a), zero entries omitted
Configuration = dict


@lru_cache(maxsize=None)
def _q_binomial(n, k):
    if k < 0 or n < k:
        return {}
    # Pascal recursion [n,k] = [n-1,k-1] + q^k [n-1,k]
    if k == 0 or k == n:
        return {0: 1}
    out = dict(_q_binomial(n - 1, k - 1))
    for e, c in _q_binomial(n - 1, k).items():
        out[e + k] = out.get(e + k, 0) + c
    return out


def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial [n choose k]_q; zero unless 0 <= k <= n."""
    return LaurentPoly(_q_binomial(n, k))


def _vacancy_part(nu, a, i):
    return sum(min(i, l) for r, l in nu if r == a)


def vacancy(rs: RootSystemData, m: Configuration, nu: NuSequence, a: int, i: int) -> int:
    total = _vacancy_part(nu, a, i)
    for (b, j), mult in m.items():
        if mult:
            total -= rs.cartan[a - 1][b - 1] * min(i, j) * mult
    return total


def cocharge(rs: RootSystemData, m: Configuration, nu: NuSequence) -> int:
    support = [(key, v) for key, v in m.items() if v]
    quad = 0
    for (a, i), x in support:
        for (b, j), y in support:
            quad += rs.cartan[a - 1][b - 1] * min(i, j) * x * y
    if quad % 2:
        raise ArithmeticError("odd quadratic term in cocharge")
    lin = sum(_vacancy_part(nu, a, i) * x for (a, i), x in support)
    return quad // 2 - lin


def _partitions(k, max_part=None):
    """Partitions of k as tuples of multiplicities (m_1, m_2, ...), colex order."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield {}
        return
    if max_part == 0:
        return
    for mult in range(k // max_part, -1, -1):
        rest = k - mult * max_part
        for sub in _partitions(rest, max_part - 1):
            out = dict(sub)
            if mult:
                out[max_part] = mult
            yield out


def _root_excess(rs, nu, mu):
    """lambda_nu - mu in simple-root coordinates, or None if not in Q_0^+."""
    diff = tuple(a - b for a, b in zip(highest_weight(rs, nu), mu))
    coords = rs.to_root(diff)
    if any(not isinstance(c, int) or c < 0 for c in coords):
        return None
    return coords


def enumerate_configs(rs: RootSystemData, nu: NuSequence, mu) -> list:
    """All admissible configurations (nonnegative vacancies) of weight lambda_nu - mu."""
    nu = validate_nu(rs, nu)
    coords = _root_excess(rs, nu, tuple(mu))
    if coords is None:
        return []
    per_node = [list(_partitions(k)) for k in coords]
    out = []

    def rec(a, acc):
        if a > rs.rank:
            if _admissible(rs, acc, nu):
                out.append(dict(acc))
            return
        for part in per_node[a - 1]:
            nxt = dict(acc)
            for i, x in part.items():
                nxt[(a, i)] = x
            rec(a + 1, nxt)

    rec(1, {})
    return out


def _admissible(rs, m, nu):
    # vacancies are piecewise linear in i with breaks at the parts of m and at
    # the l_j, and constant beyond the largest of them
    top = max([i for (_, i) in m] + [l for _, l in nu] + [1])
    return all(
        vacancy(rs, m, nu, a, i) >= 0
        for a in rs.classical_nodes
        for i in range(1, top + 1)
    )


def fermionic_form(rs: RootSystemData, nu: NuSequence, mu) -> LaurentPoly:
    nu = validate_nu(rs, nu)
    total = LaurentPoly()
    for m in enumerate_configs(rs, nu, mu):
        term = LaurentPoly.monomial(cocharge(rs, m, nu))
        for (a, i), x in m.items():
            p = vacancy(rs, m, nu, a, i)
            term = term * q_binomial(p + x, x)
            if not term:
                break
        total = total + term
    return total


def _dominant_candidates(rs, nu):
    """Dominant mu with lambda_nu - mu in Q_0^+.

    For dominant mu the root coordinates of lambda_nu - mu are bounded by
    those of lambda_nu (the inverse Cartan matrix is entrywise positive).
    """
    top = highest_weight(rs, nu)
    bounds = [int(x) for x in rs.to_root(top)]
    out = []
    for k in product(*(range(b + 1) for b in bounds)):
        mu = tuple(a - b for a, b in zip(top, rs.to_weight(k)))
        if rs.is_dominant(mu):
            out.append(mu)
    return sorted(out, key=lambda m: (-rs.height(m), m))


def mside(rs: RootSystemData, nu: NuSequence) -> dict:
    """{mu: M(nu, mu, q)} over dominant mu with nonzero fermionic form."""
    nu = validate_nu(rs, nu)
    out = {}
    for mu in _dominant_candidates(rs, nu):
        poly = fermionic_form(rs, nu, mu)
        if poly:
            out[mu] = poly
    return out
