from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramified_hecke.laurent import ONE, V, V_INV, LaurentParseError, LaurentPoly, parse_laurent

polys = st.dictionaries(st.integers(-6, 6), st.integers(-20, 20), max_size=5).map(LaurentPoly)


@given(polys, polys, polys)
@settings(max_examples=80, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()
    assert a * ONE == a


@given(polys)
@settings(max_examples=80, deadline=None)
def test_no_zero_coefficients_stored_and_text_round_trip(a):
    assert 0 not in a.terms.values()
    assert parse_laurent(str(a)) == a
    assert a.bar().bar() == a


def test_formatting():
    assert str(V**2 + ONE + V_INV**2) == "v^(2) + 1 + v^(-2)"
    assert str(LaurentPoly.monomial(3, -2)) == "-2*v^(3)"
    assert str(LaurentPoly()) == "0"
    assert str(V_INV - V) == "-v^(1) + v^(-1)"


def test_big_coefficients_do_not_overflow():
    p = LaurentPoly({0: 1, 1: 1}) ** 80
    assert p.coeff(40) == 107507208733336176461620


def test_parse_errors_carry_position():
    with pytest.raises(LaurentParseError) as exc:
        parse_laurent("v + * 2")
    assert exc.value.position == 4
