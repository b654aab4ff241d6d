"""Exact combinatorics of Iwahori-Weyl groups, Hecke algebras and folded root systems."""
from __future__ import annotations

from .fixtures import Fixture, get_fixture, load_config, preset_names
from .hecke import AntisphericalElement, HeckeAlgebra, HeckeElement
from .iwahori_weyl import AffineSimpleSystem, FiniteWeylGroup, IWElement
from .laurent import LaurentPoly
from .rep import Character
from .root_datum import BasedRootDatum, EchelonnageData, PinnedAutomorphism, RootDatumError, fold

__all__ = [
    "AffineSimpleSystem",
    "AntisphericalElement",
    "BasedRootDatum",
    "Character",
    "EchelonnageData",
    "Fixture",
    "FiniteWeylGroup",
    "HeckeAlgebra",
    "HeckeElement",
    "IWElement",
    "LaurentPoly",
    "PinnedAutomorphism",
    "RootDatumError",
    "fold",
    "get_fixture",
    "load_config",
    "preset_names",
]
