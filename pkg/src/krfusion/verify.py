"""Side-by-side checks of the Demazure, fermionic and crystal sides."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cartan import root_system
from .demazure_side import dside_normalized
from .fermionic import mside
from .kr_crystal import UnsupportedTypeError, one_dim_sum
from .nu import NuSequence, validate_nu

__all__ = ["VerificationReport", "verify_md", "verify_xm", "compare"]


@dataclass
class VerificationReport:
    check: str  # "md" or "xm"
    family: str
    rank: int
    nu: NuSequence
    sides: dict  # side name -> {mu: LaurentPoly}
    verdict: bool
    C: object = None
    timings: dict = field(default_factory=dict)
    diff: list = field(default_factory=list)


def compare(a: dict, b: dict):
    """Per-mu differences between two decompositions ([] iff identical)."""
    diff = []
    for mu in sorted(set(a) | set(b)):
        pa, pb = a.get(mu), b.get(mu)
        if pa != pb:
            diff.append((mu, pa, pb))
    return diff


def _sorted_nu(nu):
    return tuple(sorted(nu, key=lambda pair: pair[1]))


def verify_md(family: str, rank: int, nu: NuSequence, budget=None) -> VerificationReport:
    """Normalized Demazure side versus the fermionic side."""
    rs = root_system(family, rank)
    nu = validate_nu(rs, nu)
    t0 = time.perf_counter()
    dside, C = dside_normalized(rs, _sorted_nu(nu), budget=budget)
    t1 = time.perf_counter()
    m = mside(rs, nu)
    t2 = time.perf_counter()
    diff = compare(dside, m)
    return VerificationReport(
        check="md",
        family=rs.family,
        rank=rs.rank,
        nu=nu,
        sides={"dside": dside, "mside": m},
        verdict=not diff,
        C=C,
        timings={"dside": t1 - t0, "mside": t2 - t1},
        diff=diff,
    )


def verify_xm(family: str, rank: int, nu: NuSequence, budget=None) -> VerificationReport:
    """Normalized one-dimensional sum versus the fermionic side (type A)."""
    family = str(family).upper()
    if family != "A":
        raise UnsupportedTypeError(f"X = M checks need type A, got {family}")
    rs = root_system(family, rank)
    nu = validate_nu(rs, nu)
    t0 = time.perf_counter()
    x = one_dim_sum(family, rank, nu, budget=budget)
    t1 = time.perf_counter()
    m = mside(rs, nu)
    t2 = time.perf_counter()
    diff = compare(x, m)
    return VerificationReport(
        check="xm",
        family=rs.family,
        rank=rs.rank,
        nu=nu,
        sides={"xside": x, "mside": m},
        verdict=not diff,
        timings={"xside": t1 - t0, "mside": t2 - t1},
        diff=diff,
    )
