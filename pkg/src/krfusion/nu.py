"""Sequences nu = ((r_1, l_1), ..., (r_p, l_p)) of node/level pairs."""

from __future__ import annotations

import re

from .cartan import RootSystemData

__all__ = ["NuSequence", "parse_nu", "format_nu", "highest_weight", "validate_nu"]

NuSequence = tuple  # tuple of (r, l) pairs

_PAIR = re.compile(r"^\((\d+),(\d+)\)$")


def parse_nu(text: str) -> NuSequence:
    """Parse ``"(r,l);(r,l);..."`` (whitespace-insensitive); ``""`` is the empty sequence."""
    text = re.sub(r"\s+", "", text or "")
    if not text:
        return ()
    out = []
    for chunk in text.split(";"):
        if not chunk:
            continue
        m = _PAIR.match(chunk)
        if not m:
            raise ValueError(f"cannot parse nu entry {chunk!r}; expected '(r,l)'")
        out.append((int(m.group(1)), int(m.group(2))))
    return tuple(out)


def format_nu(nu: NuSequence) -> str:
    return ";".join(f"({r},{l})" for r, l in nu)


def validate_nu(rs: RootSystemData, nu: NuSequence) -> NuSequence:
    nu = tuple((int(r), int(l)) for r, l in nu)
    for r, l in nu:
        if not 1 <= r <= rs.rank:
            raise ValueError(f"node {r} is not in I_0 of {rs.name}")
        if l < 1:
            raise ValueError(f"level {l} must be a positive integer")
    return nu


def highest_weight(rs: RootSystemData, nu: NuSequence) -> tuple:
    """lambda_nu = sum_j l_j varpi_{r_j} in Dynkin labels."""
    lam = [0] * rs.rank
    for r, l in nu:
        lam[r - 1] += l
    return tuple(lam)
