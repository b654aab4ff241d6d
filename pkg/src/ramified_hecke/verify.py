"""Cross-module verification suite producing a JSON-able report."""
from __future__ import annotations

import itertools
import random
import time
from typing import Callable

from . import rep
from .decat import (
    centrality_defects,
    check_parity,
    direct_weight_poly,
    euler_vector,
    central_class,
    ker_dim,
    quasi_minuscule_sources,
    restricted_character,
    tensor_defect,
)
from .fixtures import Fixture, get_fixture
from .hecke import HeckeElement
from .iwahori_weyl import IWElement
from .laurent import LaurentPoly
from .root_datum import dominant_elements


class CheckFailed(Exception):
    pass


def _fail(msg: str):
    raise CheckFailed(msg)


def subword_lower_set(W, w: IWElement) -> set[IWElement]:
    """Everything below ``w`` in Bruhat order, by the subword property."""
    word, om = W.reduced_word(w)
    out = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        x = W.identity
        for keep, i in zip(mask, word):
            if keep:
                x = W.mul(x, W.generators[i])
        out.add(W.mul(x, om))
    return out


class Context:
    def __init__(self, fixture: Fixture, max_length: int, seed: int):
        self.f = fixture
        self.L = max_length
        self.rng = random.Random(seed)
        self.W = fixture.system
        self.A = fixture.hecke
        self.ech = fixture.ech

    def elements(self, n: int) -> list[IWElement]:
        return self.W.elements_up_to(min(n, self.L))

    def dominants(self, bound: int):
        return dominant_elements(self.ech, bound)


CHECKS: list[tuple[str, str, Callable[[Context], None]]] = []


def check(check_id: str, description: str):
    def deco(fn):
        CHECKS.append((check_id, description, fn))
        return fn

    return deco


# -- root data ------------------------------------------------------------------


@check("root.axioms", "folded roots and coroots form a reduced root system")
def _(c: Context):
    c.ech.check_root_system()


@check("root.two_rho_lift", "<project(y), 2rho> equals <y, 2rho> on Y")
def _(c: Context):
    d = c.f.datum
    for _ in range(200):
        y = tuple(c.rng.randint(-6, 6) for _ in range(d.rank))
        if c.ech.pair_two_rho(c.ech.project(y)) != d.pair(d.two_rho, y):
            _fail(f"y={y}")
        for k in c.ech.kernel_basis():
            if c.ech.project(k) != c.ech.zero:
                _fail(f"kernel generator {k} does not project to 0")


@check("root.coroot_order", "coroot order is a partial order on a box")
def _(c: Context):
    ech = c.ech
    box = sorted({ech.reduce(v) for v in itertools.product(range(-2, 3), repeat=ech.dim)})
    leq = {(a, b): ech.coroot_leq(a, b) for a in box for b in box}
    for a in box:
        if not leq[a, a]:
            _fail(f"not reflexive at {a}")
    for a, b in itertools.combinations(box, 2):
        if leq[a, b] and leq[b, a]:
            _fail(f"not antisymmetric at {a}, {b}")
    for a in box:
        for b in box:
            if leq[a, b]:
                for d in box:
                    if leq[b, d] and not leq[a, d]:
                        _fail(f"not transitive at {a}, {b}, {d}")


@check("root.projection_orders", "projection preserves coroot order and dominance")
def _(c: Context):
    u, ech = c.f.unfolded, c.ech
    r = 2 if u.dim <= 2 else 1
    box = list(itertools.product(range(-r, r + 1), repeat=u.dim))
    for a in box:
        if u.is_dominant(a) and not ech.is_dominant(ech.project(a)):
            _fail(f"dominant {a} projects to non-dominant")
        for b in box:
            if u.coroot_leq(a, b) and not ech.coroot_leq(ech.project(a), ech.project(b)):
                _fail(f"{a} <= {b} not preserved")
            if u.dominance_leq(a, b) and not ech.dominance_leq(ech.project(a), ech.project(b)):
                _fail(f"{a} dominance-below {b} not preserved")


# -- Iwahori-Weyl group ---------------------------------------------------------


@check("weyl.length_bfs", "closed-form length equals Cayley-graph distance")
def _(c: Context):
    for w, dist in c.W.bfs(c.L):
        if c.W.length(w) != dist:
            _fail(f"{w}: formula {c.W.length(w)}, BFS {dist}")


@check("weyl.omega", "Omega has length zero and permutes the simple reflections")
def _(c: Context):
    W = c.W
    for k, om in enumerate(W.omega):
        if W.length(om) != 0:
            _fail(f"{om} has positive length")
        if sorted(W.omega_action[k].values()) != W.indices:
            _fail(f"conjugation by {om} is not a permutation")


@check("weyl.group_axioms", "inverse, subadditivity and Omega-invariance of length")
def _(c: Context):
    W = c.W
    els = c.elements(6)
    for _ in range(300):
        a, b = c.rng.choice(els), c.rng.choice(els)
        if W.mul(W.inverse(a), a) != W.identity:
            _fail(f"inverse of {a}")
        if W.length(W.mul(a, b)) > W.length(a) + W.length(b):
            _fail(f"subadditivity at {a}, {b}")
        for om in W.omega:
            if W.length(W.mul(om, a)) != W.length(a) or W.length(W.mul(a, om)) != W.length(a):
                _fail(f"Omega changes length of {a}")


@check("weyl.translation_length", "l(t^lam) = <lam, 2rho> for dominant lam")
def _(c: Context):
    for lam in c.dominants(c.L + 4):
        if c.W.length(c.W.translation(lam)) != c.ech.pair_two_rho(lam):
            _fail(f"lam={lam}")


@check("weyl.dominant_additivity", "l(t^(mu+lam)) = l(t^mu) + l(t^lam) for dominant mu, lam")
def _(c: Context):
    W, ech = c.W, c.ech
    doms = c.dominants(c.L + 2)
    for mu in doms:
        for lam in doms:
            if W.length(W.translation(ech.add(mu, lam))) != W.length(W.translation(mu)) + W.length(
                W.translation(lam)
            ):
                _fail(f"mu={mu}, lam={lam}")


@check("weyl.dominant_bruhat", "t^mu <= t^lam iff mu <= lam in coroot order, for dominant mu, lam")
def _(c: Context):
    W, ech = c.W, c.ech
    doms = c.dominants(c.L + 2)
    for mu in doms:
        for lam in doms:
            if W.bruhat_leq(W.translation(mu), W.translation(lam)) != ech.coroot_leq(mu, lam):
                _fail(f"mu={mu}, lam={lam}")
            if W.double_quotient_bruhat_leq(mu, lam) != ech.coroot_leq(mu, lam):
                _fail(f"double coset order at mu={mu}, lam={lam}")


@check("weyl.bruhat_subword", "Bruhat order agrees with the subword property")
def _(c: Context):
    W = c.W
    els = c.elements(min(c.L, 5))
    for w in els:
        below = subword_lower_set(W, w)
        for v in els:
            if W.bruhat_leq(v, w) != (v in below):
                _fail(f"v={v}, w={w}")


@check("weyl.min_coset", "min_coset_rep is the unique shortest element of W_fin w")
def _(c: Context):
    W = c.W
    for w in c.elements(c.L):
        orbit = [W.mul(IWElement(c.ech.zero, u), w) for u in W.fin.elements]
        best = min(W.length(x) for x in orbit)
        shortest = [x for x in orbit if W.length(x) == best]
        rep_ = W.min_coset_rep(w)
        if len(shortest) != 1 or shortest[0] != rep_:
            _fail(f"w={w}")
        if W.coset_class(rep_) != W.coset_class(w):
            _fail(f"class changed for {w}")


# -- Hecke algebra ----------------------------------------------------------------


@check("hecke.quadratic", "(H_s + v)(H_s - v^-1) = 0 for every simple s")
def _(c: Context):
    A, W = c.A, c.W
    v = LaurentPoly.monomial(1)
    for i in W.indices:
        hs = A.H(W.s(i))
        if A.mult(hs + A.one() * v, hs - A.one() * LaurentPoly.monomial(-1)):
            _fail(f"s{i}")


@check("hecke.associativity", "(ab)c = a(bc) on random basis triples")
def _(c: Context):
    A = c.A
    els = c.elements(6)
    for _ in range(100):
        a, b, d = (A.H(c.rng.choice(els)) for _ in range(3))
        if A.mult(A.mult(a, b), d) != A.mult(a, A.mult(b, d)):
            _fail(f"{a}, {b}, {d}")


@check("hecke.bar", "bar is an involutive ring map")
def _(c: Context):
    A = c.A
    els = c.elements(5)
    for _ in range(60):
        a, b = A.H(c.rng.choice(els)), A.H(c.rng.choice(els))
        if A.bar(A.bar(a)) != a:
            _fail(f"bar(bar({a}))")
        if A.bar(A.mult(a, b)) != A.mult(A.bar(a), A.bar(b)):
            _fail(f"bar({a} * {b})")


@check("hecke.kl", "KL elements are bar invariant with off-diagonal coefficients in vZ[v]")
def _(c: Context):
    A, W = c.A, c.W
    for w in c.elements(c.L):
        C = A.kl_basis(w)
        if A.bar(C) != C:
            _fail(f"not bar invariant at {w}")
        if C.terms.get(w) != {0: 1}:
            _fail(f"leading coefficient at {w}")
        for y, p in C.terms.items():
            if y != w and (min(p) < 1 or not W.bruhat_leq(y, w)):
                _fail(f"coefficient of {y} in C_{w}")


@check("hecke.bernstein", "theta is independent of the dominant element and additive")
def _(c: Context):
    A, ech = c.A, c.ech
    box = sorted({ech.reduce(v) for v in itertools.product(range(-1, 2), repeat=ech.dim)})
    for mu in box:
        theta = A.bernstein(mu)
        admissible = [lam for lam in c.dominants(12) if ech.is_dominant(ech.sub(lam, mu))][:2]
        for lam in admissible:
            if A.bernstein(mu, lam) != theta:
                _fail(f"mu={mu}, lam={lam}")
    for mu in box:
        for lam in box:
            prod = A.mult(A.bernstein(mu), A.bernstein(lam))
            if prod != A.bernstein(ech.add(mu, lam)) or prod != A.mult(A.bernstein(lam), A.bernstein(mu)):
                _fail(f"theta_{mu} theta_{lam}")


@check("hecke.m", "m is multiplicative, m(theta_mu) = v^<mu,2rho>, m(C_w) = [l(w) = 0]")
def _(c: Context):
    A, W, ech = c.A, c.W, c.ech
    els = c.elements(c.L)
    for _ in range(100):
        a, b = A.H(c.rng.choice(els)), A.H(c.rng.choice(els))
        if A.m(A.mult(a, b)) != A.m(a) * A.m(b):
            _fail(f"m({a} * {b})")
    for mu in itertools.product(range(-2, 3), repeat=ech.dim):
        if A.m(A.bernstein(mu)) != LaurentPoly.monomial(ech.pair_two_rho(ech.reduce(mu))):
            _fail(f"m(theta_{mu})")
    for w in els:
        if A.m(A.kl_basis(w)) != LaurentPoly(1 if W.length(w) == 0 else 0):
            _fail(f"m(C_{w})")


@check("hecke.antispherical", "module axioms, standard images and KL annihilation")
def _(c: Context):
    A, W = c.A, c.W
    els = c.elements(c.L)
    unit = A.asph_unit()
    for w in els:
        n = A.asph_act(unit, A.H(w))
        if n != A.unit_act(A.H(w)):
            _fail(f"closed form for N_e H_{w}")
        if W.is_min_coset_rep(w) and n != A.asph_basis(W.coset_class(w)):
            _fail(f"N_e H_{w} is not N_w")
        annihilated = not A.asph_act(unit, A.kl_basis(w))
        if annihilated == W.is_min_coset_rep(w):
            _fail(f"annihilation at {w}")
    short = c.elements(3)
    for _ in range(40):
        a, b = A.H(c.rng.choice(short)), A.H(c.rng.choice(short))
        n = A.asph_basis(W.coset_class(c.rng.choice(short)))
        if A.asph_act(A.asph_act(n, a), b) != A.asph_act(n, A.mult(a, b)):
            _fail(f"module axiom at {a}, {b}")


# -- representations -------------------------------------------------------------


def _small_dominants(c: Context, limit: int = 60):
    return rep.dominant_by_dimension(c.f.unfolded, limit)


@check("rep.dimension", "Freudenthal characters have the Weyl dimension and are Weyl invariant")
def _(c: Context):
    for ech in (c.f.unfolded, c.ech):
        for lam in rep.dominant_by_dimension(ech, 80):
            ch = rep.weight_multiplicities(ech, lam)
            if ch.dim() != rep.weyl_dimension(ech, lam):
                _fail(f"dimension at {lam}")
            if not ch.is_weyl_invariant():
                _fail(f"not invariant at {lam}")


@check("rep.decompose", "decomposition reconstructs the character")
def _(c: Context):
    ech = c.ech
    doms = rep.dominant_by_dimension(ech, 30)
    for _ in range(20):
        pieces = [(c.rng.choice(doms), c.rng.randint(1, 3)) for _ in range(c.rng.randint(1, 4))]
        ch = rep.character_from_decomposition(ech, pieces)
        back = rep.character_from_decomposition(ech, rep.decompose(ch))
        if back != ch:
            _fail(f"pieces={pieces}")


@check("rep.restriction_top", "restriction has top piece of multiplicity one, others strictly lower")
def _(c: Context):
    ech = c.ech
    for lam in dominant_elements(c.f.unfolded, c.L + 4):
        bar = ech.project(lam)
        pieces = dict(rep.decompose(restricted_character(c.f, lam)))
        if pieces.get(bar) != 1:
            _fail(f"top multiplicity at {lam}")
        for mu in pieces:
            if mu != bar and not (ech.coroot_leq(mu, bar) and mu != bar):
                _fail(f"piece {mu} not below {bar}")


@check("rep.bruhat_weights", "quotient Bruhat order equals weight nonvanishing")
def _(c: Context):
    doms = c.dominants(c.L)
    for lam in doms:
        for mu in doms:
            rep.bruhat_weight_equivalence(c.W, mu, lam)


@check("rep.classify", "every minimal nonzero dominant is minuscule or quasi-minuscule")
def _(c: Context):
    ech = c.ech
    kinds = {}
    for lam in c.dominants(c.L + 4):
        kinds[lam] = rep.classify(ech, lam)
        if rep.is_minimal(ech, lam) != (kinds[lam] in ("minuscule", "quasi-minuscule")):
            _fail(f"lam={lam}")
    if not any(k in ("minuscule", "quasi-minuscule") for k in kinds.values()):
        _fail("no minimal dominant found")


# -- central classes ------------------------------------------------------------


@check("decat.weight_poly", "m(central class) equals the weight sum, and its value at 1 is dim V")
def _(c: Context):
    A = c.A
    for lam in _small_dominants(c):
        z = central_class(c.f, lam)
        p = A.m(z.element)
        if p != direct_weight_poly(c.f, lam):
            _fail(f"lam={lam}")
        if p.evaluate(1) != rep.weyl_dimension(c.f.unfolded, lam):
            _fail(f"dimension at lam={lam}")


@check("decat.euler", "|N_e * central class| at v=1 gives restricted multiplicities")
def _(c: Context):
    for lam in _small_dominants(c):
        euler_vector(c.f, lam)


@check("decat.centrality", "central classes commute with H_w for l(w) <= 4")
def _(c: Context):
    for lam in _small_dominants(c, 30):
        bad = centrality_defects(c.f, central_class(c.f, lam).element, min(4, c.L))
        if bad:
            _fail(f"lam={lam}, w={bad[0]}")


@check("decat.tensor", "product of central classes is the class of the tensor product")
def _(c: Context):
    doms = _small_dominants(c, 10)[:3]
    for lam in doms:
        for mu in doms:
            if tensor_defect(c.f, lam, mu):
                _fail(f"lam={lam}, mu={mu}")


@check("decat.quasi_minuscule", "parity and ker_dim = dim Res(V)_0 for quasi-minuscule images")
def _(c: Context):
    srcs = quasi_minuscule_sources(c.f)
    if not srcs:
        _fail("no quasi-minuscule image found")
    for lam in srcs:
        if not check_parity(c.f, lam):
            _fail(f"parity at {lam}")
        if ker_dim(c.f, lam) != restricted_character(c.f, lam)[c.ech.zero]:
            _fail(f"ker_dim at {lam}")


def run_fixture(fixture: Fixture, max_length: int = 6, seed: int = 0) -> list[dict]:
    report = []
    try:
        ctx = Context(fixture, max_length, seed)
    except Exception as exc:  # construction failures are report entries
        return [
            {
                "check_id": "construction",
                "paper_ref": "fixture builds and passes structural checks",
                "status": "fail",
                "counterexample": f"{type(exc).__name__}: {exc}",
                "elapsed_ms": 0,
            }
        ]
    for check_id, description, fn in sorted(CHECKS, key=lambda t: t[0]):
        t0 = time.perf_counter()
        entry = {"check_id": check_id, "paper_ref": description}
        try:
            fn(ctx)
            entry["status"] = "pass"
        except CheckFailed as exc:
            entry["status"] = "fail"
            entry["counterexample"] = str(exc)
        except Exception as exc:
            entry["status"] = "fail"
            entry["counterexample"] = f"{type(exc).__name__}: {exc}"
        entry["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 1)
        report.append(entry)
    return report


def run_suite(fixture_name: str, max_length: int = 6, seed: int = 0) -> list[dict]:
    try:
        fixture = get_fixture(fixture_name)
    except Exception as exc:
        return [
            {
                "check_id": "construction",
                "paper_ref": "fixture builds and passes structural checks",
                "status": "fail",
                "counterexample": f"{type(exc).__name__}: {exc}",
                "elapsed_ms": 0,
            }
        ]
    return run_fixture(fixture, max_length, seed)
