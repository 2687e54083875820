"""Finite, affine and extended affine Weyl groups of simply-laced types.

Elements of the extended affine Weyl group are kept in the normal form
``u . t_mu`` (finite part first as a word, then a translation); the
factorization ``w . sigma`` into an affine reduced word and a diagram
automorphism is produced on demand by :func:`decompose_reduced`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .cartan import RootSystemData, mat_inverse, mat_mul, mat_vec
from . import weight as W
from .weight import AffineWeight

__all__ = [
    "FiniteWeylElement",
    "ExtendedWeylElement",
    "DiagramAutomorphism",
    "DomainError",
    "longest_element",
    "finite_act",
    "translation_of",
    "simple_reflection",
    "decompose_reduced",
    "sigma_act",
    "reflection_matrix",
    "is_positive_affine_root",
]


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


def reflection_matrix(rs: RootSystemData, i: int):
    """Matrix of s_i (i in I_0) on Dynkin labels."""
    n = rs.rank
    alpha = rs.simple_root_weights[i - 1]
    return tuple(
        tuple(int(r == c) - (alpha[r] if c == i - 1 else 0) for c in range(n))
        for r in range(n)
    )


def _identity(n):
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


@dataclass(frozen=True)
class FiniteWeylElement:
    """Element of W_0 given by a word ``(i_k, ..., i_1)``; ``i_1`` acts first."""

    rs: RootSystemData = field(repr=False)
    word: tuple = ()

    @cached_property
    def matrix(self):
        m = _identity(self.rs.rank)
        for i in self.word:
            m = mat_mul(m, reflection_matrix(self.rs, i))
        return m

    def __call__(self, lam):
        return mat_vec(self.matrix, lam)

    def __mul__(self, other):
        return FiniteWeylElement(self.rs, self.word + other.word)

    def inverse(self):
        return FiniteWeylElement(self.rs, tuple(reversed(self.word)))

    def reduced(self):
        return FiniteWeylElement.from_matrix(self.rs, self.matrix)

    def __len__(self):
        return len(self.reduced().word)

    def __eq__(self, other):
        return isinstance(other, FiniteWeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    @classmethod
    def from_matrix(cls, rs, matrix, choose=min):
        """Recover a reduced word from the matrix of a Weyl group element."""
        n = rs.rank
        m = tuple(tuple(row) for row in matrix)
        word = []
        while True:
            inv = _int_matrix(mat_inverse(m))
            descents = [
                i for i in rs.classical_nodes
                if _is_negative(rs.to_root(mat_vec(inv, rs.simple_root_weights[i - 1])))
            ]
            if not descents:
                break
            i = choose(descents)
            word.append(i)
            m = mat_mul(reflection_matrix(rs, i), m)
            if len(word) > len(rs.positive_roots):
                raise DomainError("matrix is not a Weyl group element")
        if m != _identity(n):
            raise DomainError("matrix is not a Weyl group element")
        return cls(rs, tuple(word))


def _int_matrix(m):
    return tuple(tuple(int(x) for x in row) for row in m)


def _is_negative(coords):
    return all(c <= 0 for c in coords) and any(c < 0 for c in coords)


def longest_element(rs: RootSystemData) -> FiniteWeylElement:
    """Reduced word of w_0, found by driving rho to the antidominant chamber."""
    v = [1] * rs.rank
    word = []
    while True:
        i = next((j for j in range(rs.rank) if v[j] > 0), None)
        if i is None:
            break
        v = list(mat_vec(reflection_matrix(rs, i + 1), v))
        word.append(i + 1)
    return FiniteWeylElement(rs, tuple(reversed(word)))


def finite_act(w: FiniteWeylElement, lam):
    return w(lam)


def _theta_reflection_word(rs):
    """A word for s_theta: conjugate a simple reflection by a chain down to theta."""
    beta = rs.highest_root_weight
    chain = []
    while True:
        root = rs.to_root(beta)
        if sum(root) == 1:
            j = root.index(1) + 1
            break
        i = next(k for k in range(rs.rank) if beta[k] > 0) + 1
        beta = mat_vec(reflection_matrix(rs, i), beta)
        chain.append(i)
    # theta = s_{c1} ... s_{cm} alpha_j
    return tuple(chain) + (j,) + tuple(reversed(chain))


@dataclass(frozen=True)
class ExtendedWeylElement:
    """The map ``lam -> u(t_mu(lam))`` with u in W_0 and mu in the weight lattice."""

    finite: FiniteWeylElement
    translation: tuple

    @property
    def rs(self):
        return self.finite.rs

    def __call__(self, lam: AffineWeight) -> AffineWeight:
        lam = W.translate(self.rs, self.translation, lam)
        return AffineWeight(self.finite(lam.classical), lam.level, lam.delta)

    def __mul__(self, other: "ExtendedWeylElement") -> "ExtendedWeylElement":
        # u t_mu u' t_mu' = u u' t_{u'^{-1} mu + mu'}
        u_inv = other.finite.inverse()
        shifted = u_inv(self.translation)
        return ExtendedWeylElement(
            self.finite * other.finite,
            tuple(a + b for a, b in zip(shifted, other.translation)),
        )

    def inverse(self) -> "ExtendedWeylElement":
        return ExtendedWeylElement(
            self.finite.inverse(), tuple(-x for x in self.finite(self.translation))
        )

    def normalized(self) -> "ExtendedWeylElement":
        return ExtendedWeylElement(self.finite.reduced(), self.translation)

    def __eq__(self, other):
        return (
            isinstance(other, ExtendedWeylElement)
            and self.finite == other.finite
            and tuple(self.translation) == tuple(other.translation)
        )

    def __hash__(self):
        return hash((self.finite, tuple(self.translation)))


def identity(rs) -> ExtendedWeylElement:
    return ExtendedWeylElement(FiniteWeylElement(rs, ()), (0,) * rs.rank)


def translation_of(rs: RootSystemData, mu) -> ExtendedWeylElement:
    mu = tuple(mu)
    if len(mu) != rs.rank or not all(isinstance(x, int) for x in mu):
        raise DomainError(f"{mu!r} is not in the translation lattice of {rs.name}")
    return ExtendedWeylElement(FiniteWeylElement(rs, ()), mu)


def simple_reflection(rs: RootSystemData, i: int) -> ExtendedWeylElement:
    """s_i as an extended element; s_0 = s_theta . t_{-theta}."""
    if i == 0:
        theta = rs.highest_root_weight
        return ExtendedWeylElement(
            FiniteWeylElement(rs, _theta_reflection_word(rs)), tuple(-x for x in theta)
        )
    return ExtendedWeylElement(FiniteWeylElement(rs, (i,)), (0,) * rs.rank)


def is_positive_affine_root(rs: RootSystemData, beta: AffineWeight) -> bool:
    """Sign of a real affine root alpha + k delta (level 0, alpha != 0)."""
    if beta.level != 0:
        raise DomainError("affine roots have level zero")
    if beta.delta != 0:
        return beta.delta > 0
    return not _is_negative(rs.to_root(beta.classical))


@dataclass(frozen=True)
class DiagramAutomorphism:
    """Length-zero element of the extended affine Weyl group.

    ``perm[i] = sigma(i)`` with ``sigma(alpha_i) = alpha_sigma(i)``.  As a
    map on weights it equals ``bar_tau . t_{mu_tau}``.
    """

    rs: RootSystemData = field(repr=False)
    perm: tuple
    bar_tau: FiniteWeylElement = field(init=False, repr=False, compare=False)
    mu_tau: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rs, perm = self.rs, tuple(self.perm)
        n = rs.rank
        if sorted(perm) != list(range(n + 1)):
            raise DomainError(f"{perm!r} is not a permutation of the affine nodes")
        a = rs.affine_cartan
        if any(a[i][j] != a[perm[i]][perm[j]] for i in range(n + 1) for j in range(n + 1)):
            raise DomainError(f"{perm!r} is not a Dynkin diagram automorphism")
        if perm[0] != 0 and rs.marks[perm[0]] != 1:
            raise DomainError(f"{perm!r} does not come from the extended affine Weyl group")
        theta_root = rs.highest_root
        # columns: simple-root coordinates of bar_tau(alpha_i)
        cols = []
        for i in range(1, n + 1):
            j = perm[i]
            if j == 0:
                cols.append(tuple(-x for x in theta_root))
            else:
                cols.append(tuple(int(k == j - 1) for k in range(n)))
        t_root = tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))
        t_wt = mat_mul(mat_mul(rs.root_to_weight, t_root), rs.weight_to_root)
        t_wt = _int_matrix(t_wt)
        bar_tau = FiniteWeylElement.from_matrix(rs, t_wt)
        target = W.fundamental(rs, perm[0]).classical
        mu_tau = bar_tau.inverse()(target)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "bar_tau", bar_tau)
        object.__setattr__(self, "mu_tau", tuple(mu_tau))

    def __call__(self, lam: AffineWeight) -> AffineWeight:
        return sigma_act(self, lam)

    @property
    def element(self) -> ExtendedWeylElement:
        return ExtendedWeylElement(self.bar_tau, self.mu_tau)

    def is_identity(self):
        return self.perm == tuple(range(len(self.perm)))


def sigma_act(sigma: DiagramAutomorphism, lam: AffineWeight) -> AffineWeight:
    lam = W.translate(sigma.rs, sigma.mu_tau, lam)
    return AffineWeight(sigma.bar_tau(lam.classical), lam.level, lam.delta)


def _length_bound(t: ExtendedWeylElement):
    rs = t.rs
    mu = t.translation
    bound = len(t.finite.word)
    for beta in rs.positive_roots:
        bound += abs(rs.form(mu, rs.to_weight(beta)))
    return bound


def decompose_reduced(t: ExtendedWeylElement, choose=min):
    """Factor ``t = s_{i_k} ... s_{i_1} . sigma`` with the word reduced.

    Returns ``(word, sigma)`` where ``word = (i_k, ..., i_1)``; ``i_1`` is the
    operator applied first after sigma.  ``choose`` picks among the
    admissible descents at each peel (any choice yields a reduced word).
    """
    rs = t.rs
    simple = [W.simple_root(rs, i) for i in rs.nodes]
    bound = _length_bound(t)
    word = []
    cur = t.normalized()
    while True:
        inv = cur.inverse()
        images = [inv(a) for a in simple]
        descents = [i for i in rs.nodes if not is_positive_affine_root(rs, images[i])]
        if not descents:
            break
        i = choose(descents)
        word.append(i)
        cur = (simple_reflection(rs, i) * cur).normalized()
        if len(word) > bound:
            raise RuntimeError("reduced-word peel exceeded its length bound")
    # cur^{-1}(alpha_i) = alpha_{sigma^{-1}(i)}
    perm = [None] * (rs.rank + 1)
    for i, img in enumerate(images):
        j = simple.index(img)
        perm[j] = i
    sigma = DiagramAutomorphism(rs, tuple(perm))
    return tuple(word), sigma


@lru_cache(maxsize=None)
def translation_word(rs: RootSystemData, r: int):
    """Reduced factorization of t_{w_0(varpi_r)}."""
    w0 = longest_element(rs)
    mu = w0(W.fundamental(rs, r).classical)
    return decompose_reduced(translation_of(rs, mu))


def diagram_automorphisms(rs: RootSystemData):
    """All elements of Sigma (one for each node of mark 1)."""
    out = []
    for j in rs.nodes:
        if rs.marks[j] != 1:
            continue
        if j == 0:
            out.append(DiagramAutomorphism(rs, tuple(rs.nodes)))
            continue
        t = translation_of(rs, W.fundamental(rs, j).classical)
        out.append(decompose_reduced(t)[1])
    return out
