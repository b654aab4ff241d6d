"""Central classes in the Hecke algebra and the identities they satisfy."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fixtures import Fixture
from .hecke import HeckeElement, _add_term
from .iwahori_weyl import IWElement
from .laurent import LaurentPoly, raw_add_into
from .rep import Character, classify, restrict_character, weight_multiplicities
from .root_datum import Vector


class DecatError(ValueError):
    pass


@dataclass(frozen=True)
class CentralClass:
    element: HeckeElement
    source: Vector
    restricted: Character

    def theta_expansion(self) -> dict[Vector, int]:
        return dict(self.restricted.mults)


def _dominant_source(fixture: Fixture, lam: Sequence[int]) -> Vector:
    lam = tuple(int(x) for x in lam)
    if len(lam) != fixture.datum.rank:
        raise DecatError(f"weight {lam} must have {fixture.datum.rank} coordinates")
    if not fixture.unfolded.is_dominant(lam):
        raise DecatError(f"{lam} is not dominant")
    return lam


def restricted_character(fixture: Fixture, lam: Sequence[int]) -> Character:
    """``Res V(lam)`` as a character on ``Y_I``."""
    lam = _dominant_source(fixture, lam)
    cache = fixture.memo.setdefault("restricted", {})
    out = cache.get(lam)
    if out is None:
        out = restrict_character(fixture.ech, weight_multiplicities(fixture.unfolded, lam))
        cache[lam] = out
    return out


def theta_combination(fixture: Fixture, mults: dict[Vector, int]) -> HeckeElement:
    A = fixture.hecke
    out: dict = {}
    for mu, k in mults.items():
        for w, p in A.bernstein(mu).terms.items():
            _add_term(out, w, p, k)
    return HeckeElement(A, out)


def central_class(fixture: Fixture, lam: Sequence[int]) -> CentralClass:
    """``sum_mu dim Res(V)_mu * theta_mu``."""
    lam = _dominant_source(fixture, lam)
    res = restricted_character(fixture, lam)
    return CentralClass(theta_combination(fixture, res.mults), lam, res)


def direct_weight_poly(fixture: Fixture, lam: Sequence[int]) -> LaurentPoly:
    res = restricted_character(fixture, lam)
    out: dict = {}
    for mu, k in res.mults.items():
        raw_add_into(out, {fixture.ech.pair_two_rho(mu): k})
    return LaurentPoly(out)


def weight_poly(fixture: Fixture, lam: Sequence[int]) -> LaurentPoly:
    """``m`` of the central class, checked against the direct weight sum."""
    z = central_class(fixture, lam)
    hecke_side = fixture.hecke.m(z.element)
    direct = direct_weight_poly(fixture, lam)
    if hecke_side != direct:
        raise AssertionError(f"m(central class) = {hecke_side} but weight sum = {direct}")
    return hecke_side


def ker_dim(fixture: Fixture, lam: Sequence[int]) -> int:
    p = weight_poly(fixture, lam)
    return p.coeff(0) + p.coeff(1)


def check_parity(fixture: Fixture, lam: Sequence[int]) -> bool:
    """All nonzero restricted weights pair evenly with ``2rho``; needs a quasi-minuscule image."""
    lam = _dominant_source(fixture, lam)
    ech = fixture.ech
    bar = ech.project(lam)
    kind = classify(ech, bar)
    if kind != "quasi-minuscule":
        raise DecatError(f"image {bar} of {lam} is {kind}, not quasi-minuscule")
    res = restricted_character(fixture, lam)
    return all(ech.pair_two_rho(mu) % 2 == 0 for mu in res.mults if mu != ech.zero)


def euler_vector(fixture: Fixture, lam: Sequence[int]) -> dict[Vector, int]:
    """``N_e * central class`` at ``v = 1``; magnitudes must be the restricted multiplicities."""
    z = central_class(fixture, lam)
    vec = fixture.hecke.unit_act(z.element).specialize_v1()
    res = z.restricted
    for mu in set(vec) | set(res.mults):
        if abs(vec.get(mu, 0)) != res.mults.get(mu, 0):
            raise AssertionError(
                f"Euler coefficient {vec.get(mu, 0)} at {mu} but multiplicity {res.mults.get(mu, 0)}"
            )
    return vec


def short_elements(fixture: Fixture, max_length: int) -> list[IWElement]:
    return fixture.system.elements_up_to(max_length)


def centrality_defects(fixture: Fixture, z: HeckeElement, max_length: int = 4) -> list[IWElement]:
    """Elements ``w`` with ``l(w) <= max_length`` and ``z H_w != H_w z``.

    Products are built along length-additive prefixes: ``z H_{ws} = (z H_w) H_s``
    and ``H_{sw} z = H_s (H_w z)``.
    """
    A = fixture.hecke
    W = fixture.system
    right: dict[IWElement, dict] = {}
    left: dict[IWElement, dict] = {}
    for om in W.omega:
        right[om] = A._right_omega(z.terms, om)
        left[om] = A._left_omega(z.terms, om)
    frontier_r = list(W.omega)
    frontier_l = list(W.omega)
    for length in range(1, max_length + 1):
        nxt_r = []
        for w in frontier_r:
            for i in W.indices:
                ws = W.mul(w, W.generators[i])
                if W.length(ws) == length and ws not in right:
                    right[ws] = A._right_s(right[w], i)
                    nxt_r.append(ws)
        nxt_l = []
        for w in frontier_l:
            for i in W.indices:
                sw = W.mul(W.generators[i], w)
                if W.length(sw) == length and sw not in left:
                    left[sw] = A._left_s(left[w], i)
                    nxt_l.append(sw)
        frontier_r, frontier_l = nxt_r, nxt_l
    if set(right) != set(left):
        raise AssertionError("left and right enumerations disagree")
    return sorted((w for w in right if right[w] != left[w]), key=lambda w: (W.length(w), w))


def tensor_defect(fixture: Fixture, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True if the product of central classes differs from the class of the tensor product."""
    a = central_class(fixture, lam)
    b = central_class(fixture, mu)
    prod = fixture.hecke.mult(a.element, b.element)
    tensor = weight_multiplicities(fixture.unfolded, lam).tensor(weight_multiplicities(fixture.unfolded, mu))
    res = restrict_character(fixture.ech, tensor)
    if res != a.restricted.tensor(b.restricted):
        return True
    return prod != theta_combination(fixture, res.mults)


def quasi_minuscule_sources(fixture: Fixture, bound: int = 12) -> list[Vector]:
    """Dominant ``lam`` in ``Y`` with quasi-minuscule image, of least ``<lam, 2rho>`` per image."""
    from .root_datum import dominant_elements

    ech = fixture.ech
    seen: dict[Vector, Vector] = {}
    for lam in dominant_elements(fixture.unfolded, bound):
        bar = ech.project(lam)
        if bar not in seen and bar != ech.zero and classify(ech, bar) == "quasi-minuscule":
            seen[bar] = lam
    return sorted(seen.values())


def verify_suite(fixture_name: str, max_length: int = 6, seed: int = 0) -> list[dict]:
    from .verify import run_suite

    return run_suite(fixture_name, max_length=max_length, seed=seed)
