from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpasr.laurent import (
    ONE,
    Z,
    Inconclusive,
    Irreducible,
    LaurentError,
    LaurentPoly,
    Reducible,
    bezout,
    divide_exact,
    is_unit,
    parse_laurent,
    reduction_witness,
    verify_irreducible,
)

P = parse_laurent


def test_arith_examples():
    assert P("1+z") * P("1-z") == P("1-z^2")
    assert Z ** -1 * Z == ONE
    assert P("1+z") + P("1+z^2") * ONE == P("2+z+z^2")
    assert -P("z") + P("z") == LaurentPoly()


def test_parse_and_str():
    assert P("3*z^-2") == LaurentPoly({-2: 3})
    assert P("-1/2*z^(3) + z") == LaurentPoly({3: Fraction(-1, 2), 1: 1})
    assert str(P("1/2 - 1/2*z")) == "1/2 - 1/2*z"
    assert str(LaurentPoly()) == "0"
    for bad in ("1+", "z^", "y", "2**z"):
        with pytest.raises(LaurentError):
            P(bad)


def test_is_unit():
    assert is_unit(P("3*z^-2"))
    assert not is_unit(P("1+z"))
    assert not is_unit(LaurentPoly())


def test_bezout_examples():
    a, b = bezout(P("1+z"), P("1+z^2"))
    assert a == P("1/2 - 1/2*z") and b == P("1/2")
    assert a * P("1+z") + b * P("1+z^2") == ONE
    assert bezout(P("1+z"), P("1+z")) is None
    a, b = bezout(Z, ONE)
    assert a * Z + b * ONE == ONE


def test_negative_exponents_in_bezout():
    f, g = P("z^-3 + z^-1"), P("z^2 - 2")
    a, b = bezout(f, g)
    assert a * f + b * g == ONE


def test_reduction_witness_examples():
    proof = reduction_witness(P("1+z"), P("1+z^2"))
    assert isinstance(proof, Irreducible)
    assert proof.proof.period == 4
    assert proof.proof.to_json()["residues"] == ["1", "z", "-1", "-z"]
    assert verify_irreducible(P("1+z"), P("1+z^2"), proof.proof)

    r = reduction_witness(ONE, P("1+z+z^5"))
    assert isinstance(r, Reducible) and r.v == LaurentPoly()
    r = reduction_witness(Z, ONE)
    assert isinstance(r, Reducible) and is_unit(Z + r.v * ONE)


def test_reducible_found_by_residues():
    f, g = P("1+z"), P("2+z")
    r = reduction_witness(f, g)
    assert isinstance(r, Reducible) and is_unit(f + r.v * g)


def test_multiple_of_g_is_irreducible():
    f, g = P("(1+z^2)") if False else P("z+z^3"), P("1+z^2")
    r = reduction_witness(f, g)
    assert isinstance(r, Irreducible) and r.proof.period is None
    assert verify_irreducible(f, g, r.proof)


def test_infinite_order_is_inconclusive_or_reducible():
    f, g = P("1+z"), P("1-2*z+z^3")
    r = reduction_witness(f, g, window=3)
    assert isinstance(r, (Inconclusive, Reducible))
    if isinstance(r, Reducible):
        assert is_unit(f + r.v * g)


def test_tampered_proof_rejected():
    from dataclasses import replace

    proof = reduction_witness(P("1+z"), P("1+z^2")).proof
    assert not verify_irreducible(P("1+z"), P("1+z^2"), replace(proof, period=3))
    assert not verify_irreducible(P("1+z"), P("1+z^3"), proof)


def test_zero_modulus_error():
    with pytest.raises(LaurentError):
        reduction_witness(ONE + Z, LaurentPoly())


def test_divide_exact():
    assert divide_exact(P("1-z^2"), P("1+z")) == P("1-z")
    with pytest.raises(LaurentError):
        divide_exact(P("1+z^2"), P("1+z"))


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(st.integers(-5, 5), coeffs, max_size=4).map(LaurentPoly)
units = st.tuples(coeffs.filter(bool), st.integers(-5, 5)).map(lambda t: LaurentPoly.monomial(*t))


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == LaurentPoly()


@settings(max_examples=100, deadline=None)
@given(units, units)
def test_units_compose(u, w):
    assert is_unit(u * w)
    assert u * u ** -1 == ONE


@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_bezout_remultiplies(f, g):
    pair = bezout(f, g) if (f or g) else None
    if pair is not None:
        a, b = pair
        assert a * f + b * g == ONE


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_reducible_is_sound(f, g):
    if not g:
        return
    r = reduction_witness(f, g)
    if isinstance(r, Reducible):
        assert is_unit(f + r.v * g)
    elif isinstance(r, Irreducible):
        assert verify_irreducible(f, g, r.proof)
