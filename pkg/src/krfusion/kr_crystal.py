"""Type A_n^(1) Kirillov-Reshetikhin crystals and one-dimensional sums.

Elements of B^{r,s} are r x s semistandard tableaux in the letters
1..n+1, stored as a tuple of rows.  Classical operators use the signature
rule on the column reading word (each column bottom to top, columns left to
right), in which a letter ``i+1`` followed later by a letter ``i`` cancels.
The affine operators are ``e_0 = pr^-1 . e_1 . pr`` with Schuetzenberger
promotion ``pr``.

Tensor products follow Kashiwara's convention: a :class:`TensorElement`
``(b_p, ..., b_1)`` is the element b_p (x) ... (x) b_1, and e_i acts on the
left factor b (x) c when phi_i(b) >= eps_i(c).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product

from .cartan import root_system
from .groupring import BudgetExceeded, LaurentPoly
from .nu import NuSequence, highest_weight, validate_nu
from .weyl import DomainError

__all__ = [
    "UnsupportedTypeError",
    "KRCrystal",
    "kr_crystal",
    "kr_elements",
    "promotion",
    "promotion_inverse",
    "TensorElement",
    "crystal_step",
    "combinatorial_R",
    "local_H",
    "energy_D",
    "one_dim_sum",
    "tensor_weight",
    "is_classically_highest",
]

RAISE, LOWER = "raise", "lower"


class UnsupportedTypeError(ValueError):
    """The crystal side is only implemented in type A."""


# ---------------------------------------------------------------- tableaux


def reading_word(t):
    rows, cols = len(t), len(t[0])
    return [t[r][c] for c in range(cols) for r in reversed(range(rows))]


def _reading_positions(rows, cols):
    return [(r, c) for c in range(cols) for r in reversed(range(rows))]


def _signature(word, i):
    """Unmatched positions after cancelling each ``i+1`` against a later ``i``.

    Returns (unmatched i positions, unmatched i+1 positions).
    """
    open_ = []  # positions of i+1 waiting for an i
    free_i = []
    for pos, x in enumerate(word):
        if x == i + 1:
            open_.append(pos)
        elif x == i:
            if open_:
                open_.pop()
            else:
                free_i.append(pos)
    return free_i, open_


def _classical_step(t, i, direction):
    word = reading_word(t)
    free_i, free_ip1 = _signature(word, i)
    if direction == LOWER:
        if not free_i:
            return None
        pos, new = free_i[-1], i + 1
    else:
        if not free_ip1:
            return None
        pos, new = free_ip1[0], i
    r, c = _reading_positions(len(t), len(t[0]))[pos]
    rows = [list(row) for row in t]
    rows[r][c] = new
    return tuple(tuple(row) for row in rows)


def _row_insert(rows, x):
    rows = [list(r) for r in rows]
    for row in rows:
        bump = next((k for k, y in enumerate(row) if y > x), None)
        if bump is None:
            row.append(x)
            return rows
        row[bump], x = x, row[bump]
    rows.append([x])
    return rows


def _rectify(cells):
    """Rectify a skew tableau given as {(r, c): value} via Schensted insertion
    of its row reading word (rows bottom to top, left to right)."""
    rows = []
    for r in sorted({r for r, _ in cells}, reverse=True):
        for c in sorted(c for rr, c in cells if rr == r):
            rows = _row_insert(rows, cells[(r, c)])
    return rows


def promotion(t, n):
    """Schuetzenberger promotion on an r x s rectangle with letters 1..n+1."""
    R, S = len(t), len(t[0])
    top = n + 1
    kept = {(r, c): t[r][c] + 1 for r in range(R) for c in range(S) if t[r][c] != top}
    # slide the remaining straight-shape tableau to the south-east corner:
    # rotate by 180 degrees with complemented letters, rectify, rotate back
    comp = n + 3
    rotated = {(R - 1 - r, S - 1 - c): comp - v for (r, c), v in kept.items()}
    rect = _rectify(rotated)
    out = [[1] * S for _ in range(R)]
    for r, row in enumerate(rect):
        for c, v in enumerate(row):
            out[R - 1 - r][S - 1 - c] = comp - v
    return tuple(tuple(row) for row in out)


def promotion_inverse(t, n):
    R, S = len(t), len(t[0])
    kept = {(r, c): t[r][c] - 1 for r in range(R) for c in range(S) if t[r][c] != 1}
    rect = _rectify(kept)
    out = [[n + 1] * S for _ in range(R)]
    for r, row in enumerate(rect):
        for c, v in enumerate(row):
            out[r][c] = v
    return tuple(tuple(row) for row in out)


def kr_elements(r: int, s: int, n: int):
    """All r x s semistandard tableaux with letters 1..n+1."""
    if not 1 <= r <= n:
        raise DomainError(f"B^{{{r},{s}}} needs 1 <= r <= n = {n}")
    if s < 1:
        raise DomainError(f"column count s = {s} must be positive")
    columns = list(combinations(range(1, n + 2), r))
    out = []

    def rec(prefix):
        if len(prefix) == s:
            out.append(tuple(tuple(col[k] for col in prefix) for k in range(r)))
            return
        for col in columns:
            if not prefix or all(a <= b for a, b in zip(prefix[-1], col)):
                rec(prefix + [col])

    rec([])
    return sorted(out)


class KRCrystal:
    """B^{r,s} of type A_n^(1) with cached e_i / f_i tables for i in {0..n}."""

    def __init__(self, r, s, n):
        self.r, self.s, self.n = r, s, n
        self.elements = kr_elements(r, s, n)
        self.index = {b: k for k, b in enumerate(self.elements)}
        self._e = {}
        self._f = {}
        for i in range(n + 1):
            self._e[i] = [self._index_or_none(self._step(b, i, RAISE)) for b in self.elements]
            self._f[i] = [self._index_or_none(self._step(b, i, LOWER)) for b in self.elements]
        self.eps = {i: [self._string(k, self._e[i]) for k in range(len(self.elements))]
                    for i in range(n + 1)}
        self.phi = {i: [self._string(k, self._f[i]) for k in range(len(self.elements))]
                    for i in range(n + 1)}

    def __repr__(self):
        return f"B^{{{self.r},{self.s}}}(A_{self.n}^(1))"

    def __len__(self):
        return len(self.elements)

    def _index_or_none(self, b):
        return None if b is None else self.index[b]

    def _step(self, b, i, direction):
        if i == 0:
            c = _classical_step(promotion(b, self.n), 1, direction)
            return None if c is None else promotion_inverse(c, self.n)
        return _classical_step(b, i, direction)

    @staticmethod
    def _string(k, table):
        count = 0
        while table[k] is not None:
            k = table[k]
            count += 1
        return count

    def e(self, i, k):
        return self._e[i][k]

    def f(self, i, k):
        return self._f[i][k]

    @cached_property
    def highest(self):
        """Index of u: row k filled with the letter k."""
        return self.index[tuple(tuple([k + 1] * self.s) for k in range(self.r))]

    def weight(self, k):
        """Classical weight in Dynkin labels: #i - #(i+1)."""
        b = self.elements[k]
        counts = [0] * (self.n + 2)
        for row in b:
            for x in row:
                counts[x] += 1
        return tuple(counts[i] - counts[i + 1] for i in range(1, self.n + 1))

    @property
    def key(self):
        return (self.r, self.s, self.n)


@lru_cache(maxsize=None)
def kr_crystal(r: int, s: int, n: int) -> KRCrystal:
    return KRCrystal(r, s, n)


# ------------------------------------------------------------ tensor products


@dataclass(frozen=True)
class TensorElement:
    """Kashiwara-ordered factors (b_p, ..., b_1), each an index into its crystal."""

    crystals: tuple
    factors: tuple

    def tableaux(self):
        return tuple(B.elements[k] for B, k in zip(self.crystals, self.factors))

    def __repr__(self):
        return " (x) ".join(str(t) for t in self.tableaux())


def _acting_factor(crystals, factors, i, direction):
    """Position (0 = leftmost) of the factor acted on, or None.

    Each factor contributes ``phi`` brackets ``)`` then ``eps`` brackets ``(``
    when read right to left; a ``(`` left of a ``)`` cancels.
    """
    seq = []  # read from the rightmost factor: b_1 first
    for pos in reversed(range(len(factors))):
        B, k = crystals[pos], factors[pos]
        seq.extend([(pos, ")")] * B.phi[i][k])
        seq.extend([(pos, "(")] * B.eps[i][k])
    opens = []
    free_close = []
    for pos, br in seq:
        if br == "(":
            opens.append(pos)
        elif opens:
            opens.pop()
        else:
            free_close.append(pos)
    if direction == RAISE:
        return opens[0] if opens else None
    return free_close[-1] if free_close else None


def _tensor_step(crystals, factors, i, direction):
    pos = _acting_factor(crystals, factors, i, direction)
    if pos is None:
        return None, None
    B = crystals[pos]
    new = B.e(i, factors[pos]) if direction == RAISE else B.f(i, factors[pos])
    return factors[:pos] + (new,) + factors[pos + 1:], pos


def crystal_step(i: int, direction: str, x):
    """e_i (direction ``"raise"``) or f_i (``"lower"``) on a TensorElement, or
    on a bare (crystal, index) pair.  Returns None for the null element."""
    if isinstance(x, TensorElement):
        out, _ = _tensor_step(x.crystals, x.factors, i, direction)
        return None if out is None else TensorElement(x.crystals, out)
    B, k = x
    k2 = B.e(i, k) if direction == RAISE else B.f(i, k)
    return None if k2 is None else (B, k2)


def tensor_weight(x: TensorElement):
    w = None
    for B, k in zip(x.crystals, x.factors):
        wt = B.weight(k)
        w = wt if w is None else tuple(a + b for a, b in zip(w, wt))
    return w


def is_classically_highest(x: TensorElement) -> bool:
    n = x.crystals[0].n
    return all(
        _acting_factor(x.crystals, x.factors, i, RAISE) is None for i in range(1, n + 1)
    )


# ------------------------------------------------------- R-matrix and energy


class _PairData:
    """Combinatorial R : B2 (x) B1 -> B1 (x) B2 and the local energy H on B2 (x) B1."""

    def __init__(self, B2: KRCrystal, B1: KRCrystal):
        self.B2, self.B1 = B2, B1
        n = B2.n
        src = (B2, B1)
        dst = (B1, B2)
        seed = (B2.highest, B1.highest)
        R = {seed: (B1.highest, B2.highest)}
        H = {seed: 0}
        queue = deque([seed])
        while queue:
            x = queue.popleft()
            y = R[x]
            for i in range(n + 1):
                for direction in (RAISE, LOWER):
                    x2, px = _tensor_step(src, x, i, direction)
                    y2, py = _tensor_step(dst, y, i, direction)
                    if (x2 is None) != (y2 is None):
                        raise RuntimeError(f"R fails to intertwine e/f_{i} at {x}")
                    if x2 is None:
                        continue
                    h = H[x]
                    if i == 0:
                        if direction == RAISE:
                            h += _h_shift(px, py)
                        else:
                            # x = e_0 x2; the shift is read off e_0 acting on x2
                            _, qx = _tensor_step(src, x2, 0, RAISE)
                            _, qy = _tensor_step(dst, y2, 0, RAISE)
                            h -= _h_shift(qx, qy)
                    if x2 in R:
                        if R[x2] != y2 or H[x2] != h:
                            raise RuntimeError(f"inconsistent R/H propagation at {x2}")
                        continue
                    R[x2] = y2
                    H[x2] = h
                    queue.append(x2)
        if len(R) != len(B2) * len(B1):
            raise RuntimeError(
                f"R propagation reached {len(R)} of {len(B2) * len(B1)} elements"
            )
        self.R = R
        self.H = H


def _h_shift(px, py):
    # e_0 on the left factor in both x and R(x): +1; on the right in both: -1
    if px == 0 and py == 0:
        return 1
    if px == 1 and py == 1:
        return -1
    return 0


@lru_cache(maxsize=None)
def _pair(B2: KRCrystal, B1: KRCrystal) -> _PairData:
    return _PairData(B2, B1)


def _check_pair(x):
    if not isinstance(x, TensorElement) or len(x.factors) != 2:
        raise ValueError("expected a two-factor TensorElement")


def combinatorial_R(x: TensorElement) -> TensorElement:
    _check_pair(x)
    B2, B1 = x.crystals
    y = _pair(B2, B1).R[x.factors]
    return TensorElement((B1, B2), y)


def local_H(x: TensorElement) -> int:
    _check_pair(x)
    B2, B1 = x.crystals
    return _pair(B2, B1).H[x.factors]


def _apply_R(crystals, factors, pos):
    """Swap positions pos, pos+1 through the R-matrix."""
    B2, B1 = crystals[pos], crystals[pos + 1]
    y = _pair(B2, B1).R[(factors[pos], factors[pos + 1])]
    crystals = crystals[:pos] + (B1, B2) + crystals[pos + 2:]
    factors = factors[:pos] + y + factors[pos + 2:]
    return crystals, factors


def energy_D(x: TensorElement, transport="right") -> int:
    """Sum over factor pairs of H after bringing the pair adjacent with R.

    ``transport="right"`` moves the right factor of each pair leftwards;
    ``"left"`` moves the left factor rightwards.  The two are different
    statistics (already on B^{1,1} (x) B^{1,1} (x) B^{1,1}, where R is the
    identity, they weight the adjacent H values differently).  Both are
    R-invariant and constant on classical components, and both produce the
    same one-dimensional sums.
    """
    if transport not in ("right", "left"):
        raise ValueError(f"transport must be 'right' or 'left', not {transport!r}")
    crystals, factors = x.crystals, x.factors
    p = len(factors)
    total = 0
    for a in range(p):
        for b in range(a + 1, p):
            cs, fs = crystals, factors
            if transport == "right":
                for pos in range(b - 1, a, -1):
                    cs, fs = _apply_R(cs, fs, pos)
                left = a
            else:
                for pos in range(a, b - 1):
                    cs, fs = _apply_R(cs, fs, pos)
                left = b - 1
            total += _pair(cs[left], cs[left + 1]).H[(fs[left], fs[left + 1])]
    return total


def _crystals_for(n, nu):
    # Kashiwara order: B^{r_p,l_p} (x) ... (x) B^{r_1,l_1}
    return tuple(kr_crystal(r, l, n) for r, l in reversed(nu))


def highest_element(n, nu) -> TensorElement:
    crystals = _crystals_for(n, nu)
    return TensorElement(crystals, tuple(B.highest for B in crystals))


def tensor_elements(n, nu, budget=None):
    crystals = _crystals_for(n, nu)
    size = 1
    for B in crystals:
        size *= len(B)
    if budget is not None and size > budget:
        raise BudgetExceeded(
            f"tensor product has {size} elements (budget {budget}); "
            "raise --budget or shrink nu"
        )
    for factors in product(*(range(len(B)) for B in crystals)):
        yield TensorElement(crystals, factors)


def one_dim_sum(family: str, n: int, nu: NuSequence, budget=None, transport="right") -> dict:
    """{mu: q^{-D(u(B))} X(B, mu, q)} for B = B^{r_p,l_p} (x) ... (x) B^{r_1,l_1}."""
    if str(family).upper() != "A":
        raise UnsupportedTypeError(
            f"one-dimensional sums are implemented for type A only, not {family}"
        )
    rs = root_system("A", n)
    nu = validate_nu(rs, nu)
    if not nu:
        return {(0,) * n: LaurentPoly.monomial(0)}
    u = highest_element(n, nu)
    d0 = energy_D(u, transport)
    out = {}
    for x in tensor_elements(n, nu, budget=budget):
        if not is_classically_highest(x):
            continue
        mu = tensor_weight(x)
        out[mu] = out.get(mu, LaurentPoly()) + LaurentPoly.monomial(energy_D(x, transport) - d0)
    assert tensor_weight(u) == highest_weight(rs, nu)
    return dict(sorted(out.items(), key=lambda kv: (-rs.height(kv[0]), kv[0])))


def dump_crystal(r: int, s: int, n: int):
    """Affine crystal graph of B^{r,s} as (source word, i, target word) lowering edges."""
    B = kr_crystal(r, s, n)
    word = lambda k: "".join(map(str, reading_word(B.elements[k])))
    edges = []
    for k in range(len(B)):
        for i in range(n + 1):
            k2 = B.f(i, k)
            if k2 is not None:
                edges.append((word(k), i, word(k2)))
    return edges
