from __future__ import annotations

import itertools
import random

import pytest

from oracles import dihedral_kl
from ramified_hecke.fixtures import get_fixture, preset_names
from ramified_hecke.hecke import AntisphericalElement, HeckeElement, bar, m_morphism, mult, specialize_v1
from ramified_hecke.laurent import ONE, V, V_INV, LaurentPoly

PRESETS = preset_names()
Q = V_INV - V  # v^-1 - v


def alg(name):
    return get_fixture(name).hecke


def random_element(A, rng, max_length=3, terms=3):
    elems = A.W.elements_up_to(max_length)
    out = A.zero()
    for _ in range(terms):
        p = LaurentPoly({rng.randint(-2, 2): rng.choice([-2, -1, 1, 3])})
        out = out + A.scale(A.H(rng.choice(elems)), p)
    return out


def test_quadratic_examples():
    A = alg("A1")
    s = A.W.s(1)
    Hs = A.H(s)
    assert mult(Hs, Hs) == A.one() + A.scale(Hs, Q)
    assert Hs * Hs * Hs == A.scale(Hs, ONE + Q * Q) + A.scale(A.one(), Q)
    s0s1 = A.W.mul(A.W.s(0), s)
    assert A.H(A.W.s(0)) * Hs == A.H(s0s1)


@pytest.mark.parametrize("name", PRESETS)
def test_quadratic_relation_every_generator(name):
    A = alg(name)
    for i, s in A.W.generators.items():
        Hs = A.H(s)
        lhs = (Hs + A.scale(A.one(), V)) * (Hs - A.scale(A.one(), V_INV))
        assert lhs == A.zero()


@pytest.mark.parametrize("name", PRESETS)
def test_specialization_at_one_is_group_algebra(name):
    # at v = 1 the basis multiplies like the group itself
    A = alg(name)
    W = A.W
    rng = random.Random(3)
    elems = W.elements_up_to(4)
    for _ in range(60):
        x, y = rng.choice(elems), rng.choice(elems)
        assert specialize_v1(A.H(x) * A.H(y)) == {W.mul(x, y): 1}


@pytest.mark.parametrize("name", PRESETS)
def test_associativity_and_distributivity(name):
    A = alg(name)
    rng = random.Random(4)
    for _ in range(25):
        a, b, c = (random_element(A, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("name", PRESETS)
def test_length_additive_products(name):
    A = alg(name)
    W = A.W
    rng = random.Random(5)
    elems = W.elements_up_to(4)
    for _ in range(100):
        x, y = rng.choice(elems), rng.choice(elems)
        xy = W.mul(x, y)
        if W.length(xy) == W.length(x) + W.length(y):
            assert A.H(x) * A.H(y) == A.H(xy)


def test_bar_examples():
    A = alg("A1")
    s = A.W.s(1)
    assert bar(A.one()) == A.one()
    assert bar(A.H(s)) == A.H(s) + A.scale(A.one(), V - V_INV)
    s0s1 = A.W.mul(A.W.s(0), s)
    assert bar(bar(A.H(s0s1))) == A.H(s0s1)


@pytest.mark.parametrize("name", PRESETS)
def test_bar_is_involutive_ring_map(name):
    A = alg(name)
    rng = random.Random(6)
    for _ in range(25):
        a, b = random_element(A, rng), random_element(A, rng)
        assert A.bar(A.bar(a)) == a
        assert A.bar(a * b) == A.bar(a) * A.bar(b)
        assert A.bar(a + b) == A.bar(a) + A.bar(b)


@pytest.mark.parametrize("name", PRESETS)
def test_inverse_basis(name):
    A = alg(name)
    for w in A.W.elements_up_to(4):
        inv = A.inverse_basis(w)
        assert A.H(w) * inv == A.one() == inv * A.H(w)


def test_kl_examples():
    A = alg("A1")
    W = A.W
    assert A.kl_basis(W.identity) == A.one()
    for i in W.indices:
        assert A.kl_basis(W.s(i)) == A.H(W.s(i)) + A.scale(A.one(), V)
    s0s1 = W.mul(W.s(0), W.s(1))
    expected = A.H(s0s1) + A.scale(A.H(W.s(0)) + A.H(W.s(1)), V) + A.scale(A.one(), V * V)
    assert A.kl_basis(s0s1) == expected


@pytest.mark.parametrize("name", ["A1", "A2-fold"])
def test_kl_matches_dihedral_oracle(name):
    A = alg(name)
    for w in A.W.elements_up_to(7):
        expected = A.from_terms({y: LaurentPoly(p) for y, p in dihedral_kl(A.W, w).items()})
        assert A.kl_basis(w) == expected


@pytest.mark.parametrize("name", PRESETS)
def test_kl_basis_properties(name):
    A = alg(name)
    W = A.W
    for w in W.elements_up_to(5):
        c = A.kl_basis(w)
        assert A.bar(c) == c
        assert c.coeff(w) == ONE
        for y, p in c.items():
            if y != w:
                lo, _ = p.degrees()
                assert lo >= 1
                assert W.bruhat_leq(y, w)
                assert W.length(y) < W.length(w)


def test_bernstein_examples():
    A = alg("A1")
    W = A.W
    s0, s1 = W.s(0), W.s(1)
    assert A.bernstein((1,)) == A.H(W.translation((1,))) == A.H(W.mul(s0, s1))
    d = V - V_INV
    expected = A.H(W.mul(s1, s0)) + A.scale(A.H(s1) + A.H(s0), d) + A.scale(A.one(), d * d)
    assert A.bernstein((-1,)) == expected
    # independent route: invert H_{s0} H_{s1} factor by factor
    inv = (A.H(s1) + A.scale(A.one(), d)) * (A.H(s0) + A.scale(A.one(), d))
    assert A.bernstein((-1,)) == inv
    assert A.bernstein((0,)) == A.one()


@pytest.mark.parametrize("name", PRESETS)
def test_bernstein_is_independent_of_choice(name):
    A = alg(name)
    ech = A.W.ech
    nu = A.regular_dominant()
    for mu in itertools.product(range(-1, 2), repeat=ech.dim):
        mu = ech.reduce(mu)
        lam = ech.dominant_rep(mu)
        while not ech.is_dominant(ech.sub(lam, mu)):
            lam = ech.add(lam, nu)
        assert A.bernstein(mu, lam) == A.bernstein(mu) == A.bernstein(mu, ech.add(lam, nu))


def test_bernstein_rejects_bad_choice():
    A = alg("A1")
    with pytest.raises(ValueError):
        A.bernstein((1,), (0,))


@pytest.mark.parametrize("name", PRESETS)
def test_bernstein_elements_multiply_like_translations(name):
    A = alg(name)
    ech = A.W.ech
    box = [ech.reduce(v) for v in itertools.product(range(-1, 2), repeat=ech.dim)]
    rng = random.Random(7)
    for _ in range(12):
        a, b = rng.choice(box), rng.choice(box)
        ab = A.bernstein(a) * A.bernstein(b)
        assert ab == A.bernstein(ech.add(a, b)) == A.bernstein(b) * A.bernstein(a)


def test_m_examples():
    A = alg("A1")
    W = A.W
    assert m_morphism(A.H(W.s(1))) == -V
    assert m_morphism(A.bernstein((-1,))) == LaurentPoly.monomial(-2)
    assert A.m(A.kl_basis(W.s(0))) == 0
    adj = alg("A1-adj")
    assert adj.m(adj.kl_basis(adj.W.omega[1])) == 1


@pytest.mark.parametrize("name", PRESETS)
def test_m_is_multiplicative(name):
    A = alg(name)
    rng = random.Random(8)
    for _ in range(30):
        a, b = random_element(A, rng), random_element(A, rng)
        assert A.m(a * b) == A.m(a) * A.m(b)


def test_antispherical_examples():
    A = alg("A1")
    W = A.W
    n = A.asph_unit()
    Hs = A.H(W.s(1))
    assert A.asph_act(n, Hs) == AntisphericalElement({(0,): {1: -1}})
    assert not A.asph_act(n, A.kl_basis(W.s(1)))
    assert A.asph_act(n, A.H(W.s(0))) == A.asph_basis((-1,))
    assert W.is_min_coset_rep(W.s(0))


@pytest.mark.parametrize("name", PRESETS)
def test_antispherical_module_axioms(name):
    A = alg(name)
    W = A.W
    rng = random.Random(9)
    classes = [W.coset_class(w) for w in W.elements_up_to(3)]
    for _ in range(20):
        n = A.asph_basis(rng.choice(classes))
        a, b = random_element(A, rng, 2, 2), random_element(A, rng, 2, 2)
        assert A.asph_act(A.asph_act(n, a), b) == A.asph_act(n, a * b)
    for w in W.elements_up_to(5):
        assert A.unit_act(A.H(w)) == A.asph_act(A.asph_unit(), A.H(w))
        if W.is_min_coset_rep(w):
            assert A.unit_act(A.H(w)) == A.asph_basis(W.coset_class(w))
    for i in W.finite_indices:
        kl = A.kl_basis(W.s(i))
        assert not A.asph_act(A.asph_unit(), kl)


def test_specialize_examples():
    A = alg("A1")
    W = A.W
    s = W.s(1)
    assert specialize_v1(A.kl_basis(s)) == {s: 1, W.identity: 1}
    assert specialize_v1(A.zero()) == {}
    at_one = specialize_v1(A.bernstein((-1,)))
    assert at_one == {W.mul(W.s(1), W.s(0)): 1}


@pytest.mark.parametrize("name", PRESETS)
def test_serialization_round_trip(name):
    A = alg(name)
    rng = random.Random(10)
    for _ in range(30):
        a = random_element(A, rng, 4, 4)
        text = A.format(a)
        assert A.parse(text) == a
        assert A.format(A.parse(text)) == text
    assert A.parse(A.format(A.zero())) == A.zero()


def test_parse_rejects_garbage():
    A = alg("A1")
    for bad in ["(1)*[0 0|0]", "(1)*[7|0]", "(1)*[|3]", "(v^(1)*[0|0]", "1*[0|0]"]:
        with pytest.raises(ValueError):
            A.parse(bad)


def test_elements_are_values():
    A = alg("A2")
    a = A.kl_basis(A.W.s(1))
    b = A.kl_basis(A.W.s(1))
    assert a == b and hash(a) == hash(b)
    assert isinstance(a, HeckeElement)
