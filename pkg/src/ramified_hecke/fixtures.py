"""Preset root data and JSON config loading."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Callable

from . import lattice as la
from .root_datum import BasedRootDatum, EchelonnageData, PinnedAutomorphism, RootDatumError, fold

CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -1, 2)),
    # alpha_2 long
    "C2": ((2, -1), (-2, 2)),
    "A6": tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(6)) for i in range(6)
    ),
}


def simply_connected(name: str, cartan) -> BasedRootDatum:
    """X = weight lattice (fundamental weights), Y = coroot lattice."""
    n = len(cartan)
    return BasedRootDatum(name, la.identity(n), tuple(tuple(r) for r in cartan), la.identity(n))


def adjoint(name: str, cartan) -> BasedRootDatum:
    """X = root lattice, Y = coweight lattice."""
    n = len(cartan)
    coroots = tuple(tuple(cartan[i][j] for i in range(n)) for j in range(n))
    return BasedRootDatum(name, la.identity(n), la.identity(n), coroots)


def diagram_flip(datum: BasedRootDatum) -> PinnedAutomorphism:
    """The order-two automorphism reversing a type A_n diagram.

    Only valid for presets whose pairing is the identity and whose simple
    roots or coroots are the standard basis; then the lattice map is the
    reversal permutation matrix on both sides.
    """
    n = datum.rank
    perm = tuple(reversed(range(n)))
    m = tuple(tuple(int(perm[j] == i) for j in range(n)) for i in range(n))
    return PinnedAutomorphism(2, m, perm)


@dataclass
class Fixture:
    name: str
    datum: BasedRootDatum
    automorphism: PinnedAutomorphism
    description: str = ""

    @cached_property
    def ech(self) -> EchelonnageData:
        return fold(self.datum, self.automorphism)

    @cached_property
    def system(self):
        from .iwahori_weyl import AffineSimpleSystem

        return AffineSimpleSystem(self.ech)

    @cached_property
    def hecke(self):
        from .hecke import HeckeAlgebra

        return HeckeAlgebra(self.system)

    @cached_property
    def unfolded(self) -> EchelonnageData:
        """Identity fold; its coordinates are the coordinates of Y."""
        if self.automorphism.is_identity():
            return self.ech
        return fold(self.datum, PinnedAutomorphism.identity(self.datum))

    @cached_property
    def memo(self) -> dict:
        """Per-fixture memo tables for derived data."""
        return {}


def _identity_fixture(name, datum, description) -> Fixture:
    return Fixture(name, datum, PinnedAutomorphism.identity(datum), description)


def _flip_fixture(name, datum, description) -> Fixture:
    return Fixture(name, datum, diagram_flip(datum), description)


_PRESETS: dict[str, tuple[str, Callable[[], Fixture]]] = {
    "A1": ("SL2, split", lambda: _identity_fixture("A1", simply_connected("A1", CARTAN["A1"]), "SL2, split")),
    "A1-adj": ("PGL2, split", lambda: _identity_fixture("A1-adj", adjoint("A1-adj", CARTAN["A1"]), "PGL2, split")),
    "A2": ("SL3, split", lambda: _identity_fixture("A2", simply_connected("A2", CARTAN["A2"]), "SL3, split")),
    "A2-fold": (
        "PU3, ramified by the diagram flip",
        lambda: _flip_fixture("A2-fold", adjoint("A2-fold", CARTAN["A2"]), "PU3, ramified by the diagram flip"),
    ),
    "A4-fold": (
        "PU5, ramified by the diagram flip",
        lambda: _flip_fixture("A4-fold", adjoint("A4-fold", CARTAN["A4"]), "PU5, ramified by the diagram flip"),
    ),
    "C2": ("Sp4, split", lambda: _identity_fixture("C2", simply_connected("C2", CARTAN["C2"]), "Sp4, split")),
}

_cache: dict[str, Fixture] = {}


def preset_names() -> list[str]:
    return list(_PRESETS)


def preset_descriptions() -> dict[str, str]:
    return {k: v[0] for k, v in _PRESETS.items()}


def build_fixture(name: str) -> Fixture:
    """A fresh, uncached preset instance."""
    if name not in _PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(_PRESETS)}")
    return _PRESETS[name][1]()


def get_fixture(name: str) -> Fixture:
    """Shared (cached) preset instance."""
    if name not in _cache:
        _cache[name] = build_fixture(name)
    return _cache[name]


def fixture_from_config(data: dict[str, Any]) -> Fixture:
    """Build a fixture from the JSON config schema.

    Keys: name, rank, pairing_matrix, simple_roots, simple_coroots, optional
    roots (checked against the reflection closure) and optional automorphism
    {order, lattice_map, permutation}.
    """
    try:
        name = str(data.get("name", "config"))
        rank = int(data["rank"])
        datum = BasedRootDatum(name, data["pairing_matrix"], data["simple_roots"], data["simple_coroots"])
    except (KeyError, TypeError) as exc:
        raise RootDatumError(f"malformed config: {exc}") from exc
    if datum.rank != rank:
        raise RootDatumError(f"rank {rank} does not match pairing matrix size {datum.rank}")
    if data.get("roots") is not None:
        given = {tuple(int(x) for x in r) for r in data["roots"]}
        if given != set(datum.roots):
            raise RootDatumError("listed roots differ from the reflection closure of the simple roots")
    auto_cfg = data.get("automorphism")
    if auto_cfg is None:
        auto = PinnedAutomorphism.identity(datum)
    else:
        try:
            auto = PinnedAutomorphism(
                int(auto_cfg["order"]),
                la.as_matrix(auto_cfg["lattice_map"]),
                tuple(int(i) for i in auto_cfg["permutation"]),
            )
        except (KeyError, TypeError) as exc:
            raise RootDatumError(f"malformed automorphism: {exc}") from exc
    auto.validate(datum)
    return Fixture(name, datum, auto, "user config")


def load_config(path: str | Path) -> Fixture:
    with open(path) as fh:
        data = json.load(fh)
    return fixture_from_config(data)
