"""Exact checks of the Demazure-operator, fermionic and one-dimensional-sum
expressions for graded characters of fusion products of Kirillov-Reshetikhin
modules."""

from .cartan import RootSystemData, root_system
from .demazure_side import dside_normalized, dside_raw
from .fermionic import fermionic_form, mside
from .groupring import CharacterPoly, LaurentPoly, classical_character, decompose_classical
from .kr_crystal import one_dim_sum
from .verify import verify_md, verify_xm

__version__ = "0.1.0"

__all__ = [
    "RootSystemData",
    "root_system",
    "dside_raw",
    "dside_normalized",
    "fermionic_form",
    "mside",
    "CharacterPoly",
    "LaurentPoly",
    "classical_character",
    "decompose_classical",
    "one_dim_sum",
    "verify_md",
    "verify_xm",
]
