"""Root-system data for the simply-laced finite types and their untwisted
affinizations.

Node labels follow Kac's tables:

* ``A_n``: chain ``1 - 2 - ... - n``.
* ``D_n``: chain ``1 - 2 - ... - (n-2)`` with ``n-1`` and ``n`` both attached
  to ``n-2``.
* ``E_6``: chain ``1 - 2 - 3 - 4 - 5`` with ``6`` attached to ``3``.
* ``E_7``: chain ``1 - ... - 6`` with ``7`` attached to ``4``.
* ``E_8``: chain ``1 - ... - 7`` with ``8`` attached to ``5``.

The affine node ``0`` is attached wherever ``-theta`` pairs nontrivially with the
simple coroots; it is derived, not tabulated.

Weights are stored in fundamental-weight coordinates (Dynkin labels) and
roots are additionally available in simple-root coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "ConfigurationError",
    "RootSystemData",
    "root_system",
    "mat_inverse",
    "mat_vec",
    "mat_mul",
]


class ConfigurationError(ValueError):
    """Raised for an unsupported Cartan type or rank."""


def mat_vec(m, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def mat_mul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_inverse(m):
    """Exact inverse of a square integer/rational matrix (Gauss-Jordan)."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _edges(family, n):
    if family == "A":
        return [(i, i + 1) for i in range(1, n)]
    if family == "D":
        return [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
    if family == "E":
        branch = {6: 3, 7: 4, 8: 5}[n]
        return [(i, i + 1) for i in range(1, n - 1)] + [(branch, n)]
    raise ConfigurationError(family)


def _check_type(family, rank):
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise ConfigurationError(f"rank must be an integer, got {rank!r}")
    ok = (
        (family == "A" and rank >= 1)
        or (family == "D" and rank >= 4)
        or (family == "E" and rank in (6, 7, 8))
    )
    if not ok:
        raise ConfigurationError(
            f"unsupported Cartan type {family}_{rank}; "
            "supported: A_n (n>=1), D_n (n>=4), E_6, E_7, E_8"
        )


def _positive_roots(cartan):
    """Close the simple roots under the root-string rule (simple-root coords)."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                # r = how far the alpha_i-string extends below beta
                r = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        r += 1
                    else:
                        break
                if r - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(roots, key=lambda b: (sum(b), b)))


def _kernel_vector(m):
    """Minimal positive integer vector v with m v = 0 (1-dim kernel)."""
    size = len(m)
    # solve with v_0 = 1 against the remaining rows/columns
    sub = [[m[i][j] for j in range(1, size)] for i in range(1, size)]
    rhs = [-m[i][0] for i in range(1, size)]
    inv = mat_inverse(sub)
    rest = [sum(inv[i][j] * rhs[j] for j in range(size - 1)) for i in range(size - 1)]
    vec = [Fraction(1)] + rest
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class RootSystemData:
    family: str
    rank: int
    cartan: tuple
    affine_cartan: tuple
    marks: tuple
    comarks: tuple
    positive_roots: tuple
    highest_root: tuple
    # conversions: weight = root_to_weight . root ; root = weight_to_root . weight
    root_to_weight: tuple
    weight_to_root: tuple
    # (varpi_i, varpi_j) in the normalization (alpha_i, alpha_i) = 2
    weight_form: tuple
    simple_root_weights: tuple = field(repr=False)

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    @property
    def nodes(self):
        """Affine index set I = {0, ..., n}."""
        return tuple(range(self.rank + 1))

    @property
    def classical_nodes(self):
        return tuple(range(1, self.rank + 1))

    def to_weight(self, root_coords):
        return mat_vec(self.root_to_weight, root_coords)

    def to_root(self, weight_coords):
        """Simple-root coordinates (exact rationals; integral on Q_0)."""
        return tuple(_normalize(x) for x in mat_vec(self.weight_to_root, weight_coords))

    def form(self, lam, mu):
        """Bilinear form on finite weights given in fundamental-weight coordinates."""
        lam = tuple(lam)
        return _normalize(sum(
            lam[i] * self.weight_form[i][j] * mu[j]
            for i in range(self.rank) for j in range(self.rank)
            if lam[i] and mu[j]
        ))

    @property
    def highest_root_weight(self):
        return self.to_weight(self.highest_root)

    def height(self, weight):
        """Height of a weight: sum of its simple-root coordinates (rational)."""
        return _normalize(sum(self.to_root(weight)))

    def is_dominant(self, weight):
        return all(x >= 0 for x in weight)

    def __hash__(self):
        return hash((self.family, self.rank))

    def __eq__(self, other):
        return (
            isinstance(other, RootSystemData)
            and (self.family, self.rank) == (other.family, other.rank)
        )


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@lru_cache(maxsize=None)
def root_system(family: str, rank: int) -> RootSystemData:
    """Build the root data for ``family_rank`` (``family`` in A, D, E)."""
    family = str(family).upper()
    _check_type(family, rank)
    n = rank
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in _edges(family, n):
        cartan[a - 1][b - 1] = cartan[b - 1][a - 1] = -1
    cartan = tuple(tuple(row) for row in cartan)

    roots = _positive_roots(cartan)
    theta = max(roots, key=lambda b: sum(b))
    # theta pairs with alpha_j^vee as (A theta)_j
    theta_pair = mat_vec(cartan, theta)
    affine = [[2] + [-x for x in theta_pair]]
    for i in range(n):
        affine.append([-theta_pair[i]] + list(cartan[i]))
    affine = tuple(tuple(row) for row in affine)
    marks = _kernel_vector(affine)
    comarks = _kernel_vector(tuple(zip(*affine)))

    root_to_weight = cartan  # symmetric: column j of A is alpha_j in Dynkin labels
    weight_to_root = mat_inverse(cartan)
    simple = tuple(tuple(cartan[i]) for i in range(n))
    return RootSystemData(
        family=family,
        rank=n,
        cartan=cartan,
        affine_cartan=affine,
        marks=marks,
        comarks=comarks,
        positive_roots=roots,
        highest_root=theta,
        root_to_weight=root_to_weight,
        weight_to_root=weight_to_root,
        weight_form=weight_to_root,
        simple_root_weights=simple,
    )


def parse_type(text: str):
    """Parse ``"A2"``, ``"D_4"``, ``"E8"`` into (family, rank)."""
    text = text.strip().replace("_", "")
    if not text or text[0].upper() not in "ADE" or not text[1:].isdigit():
        raise ConfigurationError(f"cannot parse Cartan type {text!r}")
    return text[0].upper(), int(text[1:])
