from __future__ import annotations

import pytest

from ramified_hecke.decat import (
    DecatError,
    central_class,
    centrality_defects,
    check_parity,
    direct_weight_poly,
    euler_vector,
    ker_dim,
    quasi_minuscule_sources,
    tensor_defect,
    weight_poly,
)
from ramified_hecke.fixtures import get_fixture, preset_names
from ramified_hecke.laurent import LaurentPoly
from ramified_hecke.root_datum import dominant_elements

PRESETS = preset_names()
V2 = LaurentPoly({2: 1, 0: 1, -2: 1})


def test_central_class_examples():
    f = get_fixture("A1")
    A = f.hecke
    z = central_class(f, (1,))
    assert z.element == A.bernstein((1,)) + A.bernstein((0,)) + A.bernstein((-1,))
    assert z.theta_expansion() == {(1,): 1, (0,): 1, (-1,): 1}
    assert central_class(f, (0,)).element == A.one()
    g = get_fixture("A2-fold")
    w = g.ech.project((1, 0))
    B = g.hecke
    assert central_class(g, (1, 0)).element == B.bernstein(w) + B.one() + B.bernstein(g.ech.neg(w))


def test_weight_poly_examples():
    assert weight_poly(get_fixture("A1"), (1,)) == V2
    assert weight_poly(get_fixture("A1"), (0,)) == 1
    assert weight_poly(get_fixture("A2-fold"), (1, 0)) == V2


def test_ker_dim_examples():
    assert ker_dim(get_fixture("A1"), (1,)) == 1
    assert ker_dim(get_fixture("A1"), (0,)) == 1
    f = get_fixture("A4-fold")
    for lam in quasi_minuscule_sources(f):
        res = central_class(f, lam).restricted
        assert ker_dim(f, lam) == res[f.ech.zero]


def test_parity_examples():
    assert check_parity(get_fixture("A1"), (1,))
    f = get_fixture("A2-fold")
    (lam,) = quasi_minuscule_sources(f)
    assert check_parity(f, lam)
    with pytest.raises(DecatError):
        check_parity(get_fixture("A1-adj"), (1,))  # minuscule image
    with pytest.raises(DecatError):
        check_parity(get_fixture("A1"), (2,))


def test_euler_examples():
    e = euler_vector(get_fixture("A1"), (1,))
    assert set(e) == {(1,), (0,), (-1,)}
    assert all(abs(x) == 1 for x in e.values())
    assert euler_vector(get_fixture("A1"), (0,)) == {(0,): 1}
    f = get_fixture("A2-fold")
    w = f.ech.project((1, 0))
    e = euler_vector(f, (1, 0))
    assert {k: abs(x) for k, x in e.items()} == {w: 1, f.ech.zero: 1, f.ech.neg(w): 1}


def test_non_dominant_rejected():
    with pytest.raises(DecatError):
        central_class(get_fixture("A1"), (-1,))
    with pytest.raises(DecatError):
        central_class(get_fixture("A1"), (1, 0))


@pytest.mark.parametrize("name", PRESETS)
def test_weight_poly_at_one_is_dimension(name):
    f = get_fixture(name)
    for lam in dominant_elements(f.unfolded, 6)[:8]:
        p = weight_poly(f, lam)
        assert p == direct_weight_poly(f, lam)
        assert p.evaluate(1) == central_class(f, lam).restricted.dim()
        assert all(c > 0 for c in p.terms.values())
        assert p == p.bar()


@pytest.mark.parametrize("name", PRESETS)
def test_centrality(name):
    f = get_fixture(name)
    for lam in dominant_elements(f.unfolded, 4)[:4]:
        assert centrality_defects(f, central_class(f, lam).element, 3) == []


def test_centrality_detects_non_central():
    f = get_fixture("A1")
    assert centrality_defects(f, f.hecke.bernstein((1,)), 2)


@pytest.mark.parametrize("name", PRESETS)
def test_tensor_shadow(name):
    f = get_fixture(name)
    dom = dominant_elements(f.unfolded, 4)[:3]
    for lam in dom:
        for mu in dom:
            assert not tensor_defect(f, lam, mu)


@pytest.mark.parametrize("name", PRESETS)
def test_quasi_minuscule_sources(name):
    f = get_fixture(name)
    sources = quasi_minuscule_sources(f)
    assert sources
    for lam in sources:
        assert check_parity(f, lam)
        assert ker_dim(f, lam) == central_class(f, lam).restricted[f.ech.zero]
