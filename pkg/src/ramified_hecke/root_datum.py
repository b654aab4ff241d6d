"""Based root data, pinned automorphisms and the folded (échelonnage) system.

Conventions
-----------
``X`` is the character lattice and ``Y`` the cocharacter lattice, both
identified with ``Z^n`` by the chosen bases; ``pairing[i][j]`` is
``<e_i, f_j>`` for basis vectors ``e_i`` of ``X`` and ``f_j`` of ``Y``.

Folding by a pinned automorphism ``sigma`` produces the coinvariant lattice
``Y_I = Y / (1 - sigma^v) Y``.  Its elements are stored as integer tuples:
first the free coordinates, then one residue per cyclic torsion factor.
The folded root system lives on ``Y_I``: its *coroots* are elements of
``Y_I`` (images of coroots) and its *roots* are integer functionals on the
free part of ``Y_I``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from . import lattice as la
from .lattice import IntMatrix, Vector


class RootDatumError(ValueError):
    """Raised when an input root datum or automorphism fails validation."""


# --------------------------------------------------------------------------
# Cartan matrices


def _components(n: int, adjacent) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and adjacent(i, j):
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def cartan_components(cartan: IntMatrix) -> list[list[int]]:
    """Indices of the irreducible components, each sorted, ordered by first index."""
    n = len(cartan)
    return _components(n, lambda i, j: i != j and cartan[i][j] != 0)


def _classify_component(cartan: IntMatrix, nodes: list[int]) -> str | None:
    n = len(nodes)
    if n == 1:
        return "A1"
    nbrs = {i: [j for j in nodes if j != i and cartan[i][j] != 0] for i in nodes}
    edges = [(i, j) for i in nodes for j in nbrs[i] if i < j]
    if len(edges) != n - 1:
        return None
    bonds = {(i, j): cartan[i][j] * cartan[j][i] for i, j in edges}
    if any(b not in (1, 2, 3) for b in bonds.values()):
        return None
    if 3 in bonds.values():
        return "G2" if n == 2 else None
    doubles = [e for e, b in bonds.items() if b == 2]
    degree = {i: len(nbrs[i]) for i in nodes}
    if len(doubles) > 1:
        return None
    if doubles:
        if max(degree.values()) > 2:
            return None
        if n == 2:
            return "B2"
        end = next(i for i in nodes if degree[i] == 1)
        path = [end]
        while len(path) < n:
            path.append(next(j for j in nbrs[path[-1]] if j not in path))
        i, j = doubles[0]
        pos = sorted((path.index(i), path.index(j)))
        if pos == [0, 1]:
            tip, inner = path[0], path[1]
        elif pos == [n - 2, n - 1]:
            tip, inner = path[-1], path[-2]
        else:
            return "F4" if n == 4 and pos == [1, 2] else None
        # <tip, inner^v> == -2 means the tip is the long root.
        return f"C{n}" if cartan[tip][inner] == -2 else f"B{n}"
    if max(degree.values()) <= 2:
        return f"A{n}"
    branch = [i for i in nodes if degree[i] == 3]
    if len(branch) != 1 or max(degree.values()) > 3:
        return None
    b = branch[0]
    arms = []
    for start in nbrs[b]:
        length, prev, cur = 1, b, start
        while degree[cur] == 2:
            prev, cur = cur, next(j for j in nbrs[cur] if j != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{arms[2] + 3}"
    return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}.get(tuple(arms))


def cartan_type(cartan: IntMatrix) -> str:
    """Name the finite type of a Cartan matrix ``A[i][j] = <a_i, a_j^v>``.

    Rank-two doubly laced matrices are reported as ``B2`` (``B2 == C2``).
    Reducible matrices give names joined by ``x`` in component order.
    Raises :class:`RootDatumError` for anything that is not of finite type.
    """
    n = len(cartan)
    for i in range(n):
        if cartan[i][i] != 2:
            raise RootDatumError("Cartan matrix diagonal must be 2")
        for j in range(n):
            if i != j and (cartan[i][j] > 0 or (cartan[i][j] == 0) != (cartan[j][i] == 0)):
                raise RootDatumError(f"invalid off-diagonal Cartan entries at {(i, j)}")
    names = []
    for comp in cartan_components(cartan):
        name = _classify_component(cartan, comp)
        if name is None:
            raise RootDatumError(f"Cartan matrix component {comp} is not of finite type")
        names.append(name)
    return "x".join(names) if names else "trivial"


# --------------------------------------------------------------------------
# Based root datum


@dataclass(frozen=True)
class BasedRootDatum:
    name: str
    pairing: IntMatrix
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    roots: tuple[Vector, ...] = field(init=False)
    coroots: tuple[Vector, ...] = field(init=False)
    root_coefficients: tuple[Vector, ...] = field(init=False)
    two_rho: Vector = field(init=False)

    def __post_init__(self) -> None:
        pairing = la.as_matrix(self.pairing)
        object.__setattr__(self, "pairing", pairing)
        n = len(pairing)
        if n == 0 or any(len(r) != n for r in pairing):
            raise RootDatumError("pairing matrix must be square and nonempty")
        if abs(la.det(pairing)) != 1:
            raise RootDatumError("pairing matrix is not unimodular")
        sr = tuple(tuple(int(x) for x in v) for v in self.simple_roots)
        sc = tuple(tuple(int(x) for x in v) for v in self.simple_coroots)
        if len(sr) != len(sc):
            raise RootDatumError("need as many simple coroots as simple roots")
        if any(len(v) != n for v in sr + sc):
            raise RootDatumError("simple (co)roots must have length equal to the rank")
        object.__setattr__(self, "simple_roots", sr)
        object.__setattr__(self, "simple_coroots", sc)
        cartan = self.cartan_matrix()
        cartan_type(cartan)
        roots, coroots, coeffs = _reflection_closure(sr, sc, cartan)
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "coroots", coroots)
        object.__setattr__(self, "root_coefficients", coeffs)
        two_rho = [0] * n
        for r, c in zip(roots, coeffs):
            if sum(c) > 0:
                two_rho = [a + b for a, b in zip(two_rho, r)]
        object.__setattr__(self, "two_rho", tuple(two_rho))
        for r, c in zip(roots, coroots):
            if self.pair(r, c) != 2:
                raise RootDatumError(f"<root, coroot> != 2 for root {r}")

    @property
    def rank(self) -> int:
        return len(self.pairing)

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(x[i] * self.pairing[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j])

    def cartan_matrix(self) -> IntMatrix:
        return tuple(
            tuple(self.pair(a, c) for c in self.simple_coroots) for a in self.simple_roots
        )

    def cartan_type(self) -> str:
        return cartan_type(self.cartan_matrix())

    def positive_indices(self) -> list[int]:
        return [i for i, c in enumerate(self.root_coefficients) if sum(c) > 0]

    def is_dominant_coweight(self, y: Sequence[int]) -> bool:
        return all(self.pair(a, y) >= 0 for a in self.simple_roots)

    def reflect_x(self, i: int, x: Sequence[int]) -> Vector:
        k = self.pair(x, self.simple_coroots[i])
        return tuple(a - k * b for a, b in zip(x, self.simple_roots[i]))

    def reflect_y(self, i: int, y: Sequence[int]) -> Vector:
        k = self.pair(self.simple_roots[i], y)
        return tuple(a - k * b for a, b in zip(y, self.simple_coroots[i]))


def _reflection_closure(sr, sc, cartan):
    """All roots/coroots, generated in simple-root coordinates."""
    r = len(sr)
    n = len(sr[0]) if sr else 0
    seen: dict[Vector, Vector] = {}
    frontier = []
    for i in range(r):
        e = tuple(int(i == j) for j in range(r))
        seen[e] = e
        frontier.append((e, e))
    while frontier:
        nxt = []
        for c, d in frontier:
            for i in range(r):
                k = sum(c[j] * cartan[j][i] for j in range(r))
                kc = sum(d[j] * cartan[i][j] for j in range(r))
                c2 = tuple(c[j] - (k if j == i else 0) for j in range(r))
                d2 = tuple(d[j] - (kc if j == i else 0) for j in range(r))
                if c2 not in seen:
                    seen[c2] = d2
                    nxt.append((c2, d2))
                if len(seen) > 10000:
                    raise RootDatumError("root system is not finite")
        frontier = nxt
    order = sorted(seen, key=lambda c: (-sum(c) if sum(c) > 0 else 0, sum(c) < 0, abs(sum(c)), c))
    roots, coroots, coeffs = [], [], []
    for c in order:
        d = seen[c]
        roots.append(tuple(sum(c[j] * sr[j][k] for j in range(r)) for k in range(n)))
        coroots.append(tuple(sum(d[j] * sc[j][k] for j in range(r)) for k in range(n)))
        coeffs.append(c)
    for c in coeffs:
        if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            raise RootDatumError("generated root with mixed-sign coefficients")
    return tuple(roots), tuple(coroots), tuple(coeffs)


# --------------------------------------------------------------------------
# Pinned automorphisms


@dataclass(frozen=True)
class PinnedAutomorphism:
    order: int
    lattice_map: IntMatrix
    simple_root_permutation: tuple[int, ...]

    @classmethod
    def identity(cls, datum: BasedRootDatum) -> "PinnedAutomorphism":
        return cls(1, la.identity(datum.rank), tuple(range(datum.semisimple_rank)))

    def is_identity(self) -> bool:
        return self.lattice_map == la.identity(len(self.lattice_map))

    def apply_x(self, x: Sequence[int]) -> Vector:
        return la.matvec(self.lattice_map, x)

    def dual_map(self, datum: BasedRootDatum) -> IntMatrix:
        """The action on ``Y`` making the pairing invariant."""
        s_t_p = la.matmul(la.transpose(self.lattice_map), datum.pairing)
        return la.matmul(la.integer_inverse(s_t_p), datum.pairing)

    def validate(self, datum: BasedRootDatum) -> None:
        m = la.as_matrix(self.lattice_map)
        n = datum.rank
        if len(m) != n or any(len(r) != n for r in m):
            raise RootDatumError("automorphism matrix has the wrong size")
        if self.order < 1 or la.matpow(m, self.order) != la.identity(n):
            raise RootDatumError("lattice_map^order is not the identity")
        if abs(la.det(m)) != 1:
            raise RootDatumError("lattice_map is not invertible over Z")
        perm = self.simple_root_permutation
        if sorted(perm) != list(range(datum.semisimple_rank)):
            raise RootDatumError("simple_root_permutation is not a permutation")
        roots = set(datum.roots)
        if {self.apply_x(r) for r in roots} != roots:
            raise RootDatumError("automorphism does not preserve the root set")
        for i, a in enumerate(datum.simple_roots):
            if self.apply_x(a) != datum.simple_roots[perm[i]]:
                raise RootDatumError(f"simple root {i} is not sent to simple root {perm[i]}")
        dual = self.dual_map(datum)
        for i, c in enumerate(datum.simple_coroots):
            if la.matvec(dual, c) != datum.simple_coroots[perm[i]]:
                raise RootDatumError(f"simple coroot {i} is not sent to simple coroot {perm[i]}")
        if self.apply_x(datum.two_rho) != datum.two_rho:
            raise RootDatumError("automorphism does not fix two_rho")


# --------------------------------------------------------------------------
# Folding


class RootPair(NamedTuple):
    coroot: Vector  # element of Y_I
    root: Vector  # functional on the free coordinates of Y_I


class EchelonnageData:
    """Coinvariant lattice ``Y_I`` together with its folded root system.

    Instances are built by :func:`fold` and treated as immutable.
    """

    def __init__(
        self,
        datum: BasedRootDatum,
        automorphism: PinnedAutomorphism,
        projection: IntMatrix,
        moduli: tuple[int, ...],
        section: tuple[tuple[Fraction, ...], ...],
        positive: tuple[RootPair, ...],
        simple: tuple[RootPair, ...],
        two_rho: Vector,
        orbit_log: tuple[tuple[int, ...], ...],
    ):
        self.datum = datum
        self.automorphism = automorphism
        self.projection = projection
        self.moduli = moduli
        self._section = section
        self.positive = positive
        self.simple = simple
        self.two_rho = two_rho
        self.orbit_log = orbit_log
        self.free_rank = sum(1 for d in moduli if d == 0)
        self.torsion = tuple(d for d in moduli if d)
        self.dim = len(moduli)
        self.roots = positive + tuple(RootPair(self.neg(p.coroot), tuple(-x for x in p.root)) for p in positive)
        self.zero: Vector = (0,) * self.dim

    # -- lattice arithmetic on Y_I ------------------------------------------

    def reduce(self, v: Sequence[int]) -> Vector:
        return tuple(x % d if d else x for x, d in zip(v, self.moduli))

    def add(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        return tuple((x + y) % d if d else x + y for x, y, d in zip(a, b, self.moduli))

    def sub(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        return tuple((x - y) % d if d else x - y for x, y, d in zip(a, b, self.moduli))

    def neg(self, a: Sequence[int]) -> Vector:
        return tuple((-x) % d if d else -x for x, d in zip(a, self.moduli))

    def scale(self, k: int, a: Sequence[int]) -> Vector:
        return tuple((k * x) % d if d else k * x for x, d in zip(a, self.moduli))

    def evaluate(self, functional: Sequence[int], v: Sequence[int]) -> int:
        """Value of a functional on the free part at ``v``; torsion is ignored."""
        return sum(f * x for f, x in zip(functional, v))

    def project(self, y: Sequence[int]) -> Vector:
        return self.reduce(la.matvec(self.projection, y))

    def lift(self, v: Sequence[int]) -> Vector:
        """A preimage in ``Y`` of ``v``; a fixed section, not canonical."""
        out = []
        for row in self._section:
            s = sum(c * x for c, x in zip(row, v))
            out.append(int(s))
        y = tuple(out)
        if self.project(y) != self.reduce(v):
            raise AssertionError("section failed to lift")
        return y

    def kernel_basis(self) -> list[Vector]:
        """Generators of ``(1 - sigma^v) Y`` inside ``Y``."""
        dual = self.automorphism.dual_map(self.datum)
        n = self.datum.rank
        return [
            tuple(int(i == j) - dual[i][j] for i in range(n)) for j in range(n)
        ]

    # -- folded root system -------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.simple)

    def pair_two_rho(self, v: Sequence[int]) -> int:
        return self.evaluate(self.two_rho, v)

    def cartan_matrix(self) -> IntMatrix:
        """``A[i][j] = a_i(c_j)`` for the simple folded roots ``a`` and coroots ``c``."""
        return tuple(tuple(self.evaluate(p.root, q.coroot) for q in self.simple) for p in self.simple)

    def cartan_type(self) -> str:
        return cartan_type(self.cartan_matrix())

    def dual_cartan_type(self) -> str:
        """Type of the system with roots and coroots exchanged.

        With roots ``c`` (elements of ``Y_I``) this is the root system of the
        identity component of the fixed-point dual group.
        """
        return cartan_type(la.transpose(self.cartan_matrix()))

    def components(self) -> list[list[int]]:
        return cartan_components(self.cartan_matrix())

    def reflect(self, i: int, v: Sequence[int]) -> Vector:
        p = self.simple[i]
        k = self.evaluate(p.root, v)
        if k == 0:
            return tuple(v)
        return self.sub(v, self.scale(k, p.coroot))

    def is_dominant(self, v: Sequence[int]) -> bool:
        return all(self.evaluate(p.root, v) >= 0 for p in self.simple)

    def dominant_rep(self, v: Sequence[int]) -> Vector:
        v = self.reduce(v)
        changed = True
        while changed:
            changed = False
            for i, p in enumerate(self.simple):
                if self.evaluate(p.root, v) < 0:
                    v = self.reflect(i, v)
                    changed = True
        return v

    def simple_coroot_coefficients(self, v: Sequence[int]) -> tuple[int, ...] | None:
        """Integer coefficients of ``v`` in the simple coroots, or None."""
        free = self.free_rank
        cols = [p.coroot[:free] for p in self.simple]
        sol = la.solve_rational(cols, tuple(v[:free]))
        if sol is None or any(x.denominator != 1 for x in sol):
            return None
        coeffs = tuple(int(x) for x in sol)
        total = self.zero
        for k, p in zip(coeffs, self.simple):
            total = self.add(total, self.scale(k, p.coroot))
        if total != self.reduce(v):
            return None
        return coeffs

    def coroot_leq(self, mu: Sequence[int], lam: Sequence[int]) -> bool:
        coeffs = self.simple_coroot_coefficients(self.sub(lam, mu))
        return coeffs is not None and all(c >= 0 for c in coeffs)

    def dominance_leq(self, mu: Sequence[int], lam: Sequence[int]) -> bool:
        """``mu <| lam``: the difference ``lam - mu`` is dominant."""
        return self.is_dominant(self.sub(lam, mu))

    def check_root_system(self) -> None:
        """Raise :class:`RootDatumError` unless the folded system is a reduced root system."""
        coroots = {p.coroot for p in self.roots}
        roots = {p.root for p in self.roots}
        if len(coroots) != len(self.roots) or len(roots) != len(self.roots):
            raise RootDatumError("folded roots/coroots are not in bijection")
        for p in self.roots:
            if self.evaluate(p.root, p.coroot) != 2:
                raise RootDatumError(f"folded pair {p} does not pair to 2")
            for q in self.roots:
                k = self.evaluate(p.root, q.coroot)
                if self.sub(q.coroot, self.scale(k, p.coroot)) not in coroots:
                    raise RootDatumError("folded coroots are not reflection stable")
                m = self.evaluate(q.root, p.coroot)
                if tuple(a - m * b for a, b in zip(q.root, p.root)) not in roots:
                    raise RootDatumError("folded roots are not reflection stable")
            if self.scale(2, p.coroot) in coroots:
                raise RootDatumError("folded system is not reduced")
        self.cartan_type()

    def __repr__(self) -> str:
        return (
            f"EchelonnageData({self.datum.name!r}, free_rank={self.free_rank}, "
            f"torsion={self.torsion}, type={self.cartan_type()})"
        )


def _nice_free_basis(rows: list[Vector]) -> IntMatrix:
    """Change of basis ``C`` making the images of some standard basis vectors unit vectors."""
    r = len(rows)
    if r == 0:
        return ()
    n = len(rows[0])
    for cols in itertools.combinations(range(n), r):
        block = tuple(tuple(row[c] for c in cols) for row in rows)
        if abs(la.det(block)) == 1:
            return la.integer_inverse(block)
    return la.identity(r)


def _coinvariants(datum: BasedRootDatum, auto: PinnedAutomorphism):
    n = datum.rank
    dual = auto.dual_map(datum)
    m = tuple(tuple(int(i == j) - dual[i][j] for j in range(n)) for i in range(n))
    d, u, _ = la.smith(m)
    diag = [d[i][i] if i < len(d) else 0 for i in range(n)]
    free_rows = [u[i] for i in range(n) if diag[i] == 0]
    tors = [(u[i], abs(diag[i])) for i in range(n) if abs(diag[i]) > 1]
    change = _nice_free_basis(free_rows)
    free_rows = [tuple(x) for x in la.matmul(change, tuple(free_rows))] if free_rows else []
    projection = tuple(free_rows) + tuple(row for row, _ in tors)
    moduli = (0,) * len(free_rows) + tuple(k for _, k in tors)
    # Section: invert the full (free + torsion + trivial) coordinate change.
    full = list(free_rows) + [row for row, _ in tors] + [u[i] for i in range(n) if abs(diag[i]) == 1]
    inv = la.inverse(tuple(full))
    width = len(projection)
    section = tuple(tuple(inv[i][j] for j in range(width)) for i in range(n))
    return projection, moduli, section


def _functional(datum, projection, moduli, section, x: Vector) -> Vector:
    """Functional on the free part of Y_I induced by an invariant ``x`` in X."""
    free = sum(1 for d in moduli if d == 0)
    n = datum.rank
    out = []
    for k in range(free):
        unit = tuple(int(i == k) for i in range(len(moduli)))
        y = [sum(section[i][j] * unit[j] for j in range(len(unit))) for i in range(n)]
        if any(Fraction(v).denominator != 1 for v in y):
            raise RootDatumError("non-integral section")
        out.append(datum.pair(x, tuple(int(v) for v in y)))
    f = tuple(out)
    for j in range(n):
        e = tuple(int(i == j) for i in range(n))
        img = tuple(sum(row[i] * e[i] for i in range(n)) for row in projection)
        if sum(a * b for a, b in zip(f, img)) != datum.pair(x, e):
            raise RootDatumError(f"{x} does not descend to a functional on Y_I")
    return f


def _orbit(x: Vector, auto: PinnedAutomorphism) -> list[Vector]:
    out = [x]
    y = auto.apply_x(x)
    while y != x:
        out.append(y)
        y = auto.apply_x(y)
    return out


def fold(datum: BasedRootDatum, auto: PinnedAutomorphism | None = None) -> EchelonnageData:
    """Coinvariants of ``Y`` and the folded root system.

    Per orbit of roots the folded root is the orbit sum, doubled when the
    orbit contains two roots whose sum is a root; the folded coroot is the
    common image of the orbit's coroots.  Pairs whose coroot is twice another
    folded coroot are discarded so the result is reduced.
    """
    if auto is None:
        auto = PinnedAutomorphism.identity(datum)
    auto.validate(datum)
    projection, moduli, section = _coinvariants(datum, auto)

    def proj(y):
        return tuple(
            (sum(a * b for a, b in zip(row, y)) % d) if d else sum(a * b for a, b in zip(row, y))
            for row, d in zip(projection, moduli)
        )

    root_set = set(datum.roots)
    coroot_of = dict(zip(datum.roots, datum.coroots))
    positive = [datum.roots[i] for i in datum.positive_indices()]
    simple_index = {a: i for i, a in enumerate(datum.simple_roots)}
    seen: set[Vector] = set()
    candidates: list[tuple[RootPair, tuple[int, ...]]] = []
    orbit_log = []
    for a in positive:
        if a in seen:
            continue
        orbit = _orbit(a, auto)
        seen.update(orbit)
        total = tuple(sum(col) for col in zip(*orbit))
        doubled = any(
            tuple(p + q for p, q in zip(b, c)) in root_set for b, c in itertools.combinations(orbit, 2)
        )
        if doubled:
            total = tuple(2 * t for t in total)
        images = {proj(coroot_of[b]) for b in orbit}
        if len(images) != 1:
            raise RootDatumError("coroots of one orbit have different images in Y_I")
        pair = RootPair(images.pop(), _functional(datum, projection, moduli, section, total))
        if sum(p * q for p, q in zip(pair.root, pair.coroot)) != 2:
            raise RootDatumError(f"folded pair from orbit {orbit} does not pair to 2")
        simples = tuple(sorted(simple_index[b] for b in orbit if b in simple_index))
        candidates.append((pair, simples))
        orbit_log.append(tuple(datum.roots.index(b) for b in orbit))

    def twice(v):
        return tuple((2 * x) % d if d else 2 * x for x, d in zip(v, moduli))

    coroot_set = {p.coroot for p, _ in candidates}
    kept: dict[Vector, tuple[RootPair, tuple[int, ...]]] = {}
    for pair, simples in candidates:
        if any(twice(c) == pair.coroot for c in coroot_set if c != pair.coroot):
            continue
        if pair.coroot in kept and kept[pair.coroot][0] != pair:
            raise RootDatumError("two orbits give the same folded coroot with different roots")
        kept.setdefault(pair.coroot, (pair, simples))
    pos = tuple(p for p, _ in kept.values())
    simple = tuple(p for p, s in sorted((v for v in kept.values() if v[1]), key=lambda v: v[1]))
    two_rho = _functional(datum, projection, moduli, section, datum.two_rho)
    ech = EchelonnageData(datum, auto, projection, moduli, section, pos, simple, two_rho, tuple(orbit_log))
    ech.check_root_system()
    return ech


# Thin functional wrappers matching the operation names used elsewhere.


def project_coweight(ech: EchelonnageData, y: Sequence[int]) -> Vector:
    return ech.project(y)


def pair_two_rho(ech: EchelonnageData, v: Sequence[int]) -> int:
    return ech.pair_two_rho(v)


def coroot_leq(ech: EchelonnageData, mu: Sequence[int], lam: Sequence[int]) -> bool:
    return ech.coroot_leq(mu, lam)


def dominance_leq(ech: EchelonnageData, mu: Sequence[int], lam: Sequence[int]) -> bool:
    return ech.dominance_leq(mu, lam)


def is_dominant(ech: EchelonnageData, v: Sequence[int]) -> bool:
    return ech.is_dominant(v)


def dominant_rep(ech: EchelonnageData, v: Sequence[int]) -> Vector:
    return ech.dominant_rep(v)


def dominant_elements(ech: EchelonnageData, max_pairing: int) -> list[Vector]:
    """Dominant elements of ``Y_I`` with ``<v, 2rho> <= max_pairing``, sorted.

    Requires the folded system to span the free part (semisimple case).
    """
    if ech.rank != ech.free_rank:
        raise RootDatumError("dominant enumeration needs a semisimple folded system")
    # Dominant v has nonnegative coordinates in the fundamental coweights,
    # and <v, 2rho> = sum_i a_i(v) * <w_i, 2rho>, each <w_i, 2rho> > 0.
    cartan_t = [[Fraction(ech.evaluate(p.root, q.coroot)) for q in ech.simple] for p in ech.simple]
    n = ech.rank
    # Rational fundamental coweights expressed through the simple coroots.
    inv = la.inverse(tuple(tuple(int(x) for x in row) for row in cartan_t))
    fund = []
    for i in range(n):
        coeffs = [inv[j][i] for j in range(n)]
        fund.append(coeffs)
    weights_2rho = [sum(c * 2 for c in coeffs) for coeffs in fund]
    bounds = [int(max_pairing / w) for w in weights_2rho]
    out = []
    torsion_reps = list(itertools.product(*[range(d) for d in ech.torsion]))
    for ns in itertools.product(*[range(b + 1) for b in bounds]):
        coeffs = [sum(ns[i] * fund[i][j] for i in range(n)) for j in range(n)]
        free = [sum(coeffs[j] * ech.simple[j].coroot[k] for j in range(n)) for k in range(ech.free_rank)]
        if any(Fraction(x).denominator != 1 for x in free):
            continue
        free_int = tuple(int(x) for x in free)
        if ech.pair_two_rho(free_int + (0,) * len(ech.torsion)) > max_pairing:
            continue
        for t in torsion_reps:
            out.append(free_int + tuple(t))
    return sorted(out, key=lambda v: (ech.pair_two_rho(v), v))


def dominant_image_gaps(unfolded: EchelonnageData, ech: EchelonnageData, max_pairing: int) -> list[Vector]:
    """Dominant elements of ``Y_I`` not hit by any dominant element of ``Y``.

    ``unfolded`` is the identity fold of the same datum.  Since the pairing
    with ``2rho`` is lift independent, preimages up to the same bound suffice.
    """
    image = {ech.project(lam) for lam in dominant_elements(unfolded, max_pairing)}
    return [v for v in dominant_elements(ech, max_pairing) if v not in image]
