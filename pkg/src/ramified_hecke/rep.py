"""Characters of the dual group, restriction along folding, decomposition.

The dual group attached to a folded system has roots the folded coroots
(elements of ``Y_I``) and coroots the folded root functionals, so the same
:class:`EchelonnageData` describes it.  Characters are finite maps from
``Y_I`` to nonnegative multiplicities.
"""
from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import lattice as la
from .root_datum import EchelonnageData, Vector


class CharacterError(ValueError):
    pass


class Character:
    """Immutable weight multiset over a folded (or identity-folded) system."""

    __slots__ = ("ambient", "mults")

    def __init__(self, ambient: EchelonnageData, mults: Mapping[Sequence[int], int]):
        self.ambient = ambient
        clean: dict[Vector, int] = {}
        for k, m in mults.items():
            if m < 0:
                raise CharacterError(f"negative multiplicity {m} at {tuple(k)}")
            if m:
                key = ambient.reduce(k)
                clean[key] = clean.get(key, 0) + m
        self.mults = clean

    def __getitem__(self, weight: Sequence[int]) -> int:
        return self.mults.get(self.ambient.reduce(weight), 0)

    def dim(self) -> int:
        return sum(self.mults.values())

    def weights(self) -> list[Vector]:
        return sorted(self.mults)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.ambient is other.ambient and self.mults == other.mults

    def __add__(self, other: "Character") -> "Character":
        out = dict(self.mults)
        for k, m in other.mults.items():
            out[k] = out.get(k, 0) + m
        return Character(self.ambient, out)

    def scaled(self, k: int) -> "Character":
        return Character(self.ambient, {w: k * m for w, m in self.mults.items()})

    def tensor(self, other: "Character") -> "Character":
        ech = self.ambient
        out: dict[Vector, int] = {}
        for a, m in self.mults.items():
            for b, n in other.mults.items():
                k = ech.add(a, b)
                out[k] = out.get(k, 0) + m * n
        return Character(ech, out)

    def is_weyl_invariant(self) -> bool:
        ech = self.ambient
        return all(
            self.mults.get(ech.reflect(i, w), 0) == m for w, m in self.mults.items() for i in range(ech.rank)
        )

    def format(self) -> str:
        return "\n".join(f"{','.join(map(str, w))} : {m}" for w, m in sorted(self.mults.items()))

    def __repr__(self) -> str:
        return f"Character({dict(sorted(self.mults.items()))})"


def _dual_rho2(ech: EchelonnageData) -> Vector:
    total = ech.zero
    for p in ech.positive:
        total = ech.add(total, p.coroot)
    return total


def _form(ech: EchelonnageData, x: Sequence[int], y: Sequence[int]) -> int:
    """Weyl-invariant integral form on the free part (torsion is ignored)."""
    return 2 * sum(ech.evaluate(p.root, x) * ech.evaluate(p.root, y) for p in ech.positive)


def weyl_dimension(ech: EchelonnageData, lam: Sequence[int]) -> int:
    rho2 = _dual_rho2(ech)
    num, den = 1, 1
    for p in ech.positive:
        num *= 2 * ech.evaluate(p.root, lam) + ech.evaluate(p.root, rho2)
        den *= ech.evaluate(p.root, rho2)
    out = Fraction(num, den)
    if out.denominator != 1:
        raise AssertionError("Weyl dimension is not an integer")
    return int(out)


def weight_support(ech: EchelonnageData, lam: Sequence[int]) -> set[Vector]:
    """All weights of the irreducible with highest weight ``lam``."""
    lam = ech.reduce(lam)
    if not ech.is_dominant(lam):
        raise CharacterError(f"{lam} is not dominant")
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for p in ech.simple:
            nu = ech.sub(mu, p.coroot)
            if nu not in seen and ech.coroot_leq(ech.dominant_rep(nu), lam):
                seen.add(nu)
                queue.append(nu)
    return seen


def weight_multiplicities(ech: EchelonnageData, lam: Sequence[int]) -> Character:
    """Character of the irreducible of highest weight ``lam`` (Freudenthal recursion)."""
    lam = ech.reduce(lam)
    support = weight_support(ech, lam)
    rho2 = _dual_rho2(ech)
    pos = [p.coroot for p in ech.positive]

    def norm_shift(x):
        return _form(ech, x, x) + _form(ech, x, rho2)

    top = norm_shift(lam)
    dominant = sorted(
        (w for w in support if ech.is_dominant(w)), key=lambda w: -ech.pair_two_rho(w)
    )
    mult: dict[Vector, int] = {}
    for mu in dominant:
        if mu == lam:
            mult[mu] = 1
            continue
        acc = 0
        for beta in pos:
            nu = ech.add(mu, beta)
            while nu in support:
                acc += _form(ech, nu, beta) * mult[ech.dominant_rep(nu)]
                nu = ech.add(nu, beta)
        den = top - norm_shift(mu)
        value = Fraction(2 * acc, den)
        if value.denominator != 1 or value < 0:
            raise AssertionError(f"Freudenthal gave {value} at {mu}")
        mult[mu] = int(value)
    return Character(ech, {w: mult[ech.dominant_rep(w)] for w in support})


def restrict_character(ech: EchelonnageData, c: Character) -> Character:
    """Push a character on ``Y`` forward along the projection to ``Y_I``."""
    out: dict[Vector, int] = {}
    for w, m in c.mults.items():
        k = ech.project(w)
        out[k] = out.get(k, 0) + m
    return Character(ech, out)


def decompose(c: Character) -> list[tuple[Vector, int]]:
    """Highest-weight peeling into irreducibles, highest first."""
    ech = c.ambient
    remaining = dict(c.mults)
    out = []
    while remaining:
        top = max(remaining, key=lambda w: (ech.pair_two_rho(w), w))
        if not ech.is_dominant(top):
            raise CharacterError(f"maximal weight {top} is not dominant; input is not Weyl invariant")
        k = remaining[top]
        irr = weight_multiplicities(ech, top)
        for w, m in irr.mults.items():
            x = remaining.get(w, 0) - k * m
            if x < 0:
                raise CharacterError(f"negative multiplicity at {w} while peeling {top}")
            if x:
                remaining[w] = x
            else:
                remaining.pop(w, None)
        out.append((top, k))
    return out


def character_from_decomposition(ech: EchelonnageData, pieces: Iterable[tuple[Sequence[int], int]]) -> Character:
    total = Character(ech, {})
    for lam, k in pieces:
        total = total + weight_multiplicities(ech, lam).scaled(k)
    return total


def dominant_weights_below(ech: EchelonnageData, lam: Sequence[int]) -> list[Vector]:
    return sorted(w for w in weight_support(ech, lam) if ech.is_dominant(w))


def is_minimal(ech: EchelonnageData, mu: Sequence[int]) -> bool:
    """Nonzero dominant and minimal among nonzero dominants in the coroot order."""
    mu = ech.reduce(mu)
    if mu == ech.zero or not ech.is_dominant(mu):
        return False
    return all(w in (mu, ech.zero) for w in dominant_weights_below(ech, mu))


def classify(ech: EchelonnageData, mu: Sequence[int]) -> str:
    mu = ech.reduce(mu)
    if not ech.is_dominant(mu):
        raise CharacterError(f"{mu} is not dominant")
    if mu == ech.zero:
        return "zero"
    if not is_minimal(ech, mu):
        return "neither"
    if all(ech.evaluate(p.root, mu) in (-1, 0, 1) for p in ech.roots):
        return "minuscule"
    return "quasi-minuscule"


def bruhat_weight_equivalence(system, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Quotient Bruhat comparison ``mu <= lam``, cross-checked against weights of ``V(lam)``."""
    ech = system.ech
    bru = system.quotient_bruhat_leq(mu, lam)
    wt = ech.reduce(mu) in weight_support(ech, lam)
    if bru != wt:
        raise AssertionError(f"Bruhat ({bru}) and weight ({wt}) answers differ for {mu} vs {lam}")
    return bru


def dominant_by_dimension(ech: EchelonnageData, max_dim: int) -> list[Vector]:
    """All dominant ``lam`` with ``dim V(lam) <= max_dim``, sorted by (``<lam, 2rho>``, lam).

    Requires the folded system to span the free part of ``Y_I``.
    """
    if ech.rank != ech.free_rank:
        raise CharacterError("dimension-bounded enumeration needs a semisimple system")
    r = ech.rank
    cartan = ech.cartan_matrix()
    inv = la.inverse(cartan)
    rho2 = _dual_rho2(ech)
    # Positive roots as nonnegative integer combinations of the simple ones.
    coeffs = [la.solve_rational([q.root for q in ech.simple], p.root) for p in ech.positive]
    heights = [ech.evaluate(p.root, rho2) for p in ech.positive]

    def dim_of(ns):
        num, den = Fraction(1), 1
        for k, h in zip(coeffs, heights):
            num *= 2 * sum(ki * ni for ki, ni in zip(k, ns)) + h
            den *= h
        return num / den

    # dim is increasing in each fundamental coordinate, so a box suffices.
    box = []
    for i in range(r):
        n = 0
        while dim_of([n if j == i else 0 for j in range(r)]) <= max_dim:
            n += 1
        box.append(n)
    out = []
    torsion_reps = list(itertools.product(*[range(d) for d in ech.torsion]))
    for ns in itertools.product(*[range(b) for b in box]):
        if dim_of(ns) > max_dim:
            continue
        x = [sum(inv[j][i] * ns[i] for i in range(r)) for j in range(r)]
        free = [sum(x[j] * ech.simple[j].coroot[k] for j in range(r)) for k in range(ech.free_rank)]
        if any(Fraction(v).denominator != 1 for v in free):
            continue
        for t in torsion_reps:
            out.append(tuple(int(v) for v in free) + tuple(t))
    return sorted(out, key=lambda w: (ech.pair_two_rho(w), w))
