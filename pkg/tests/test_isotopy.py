import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from canonical_arcs.elliptic import lattice_from_roots, wp_eval
from canonical_arcs.errors import InvalidInput, NotPrimitive
from canonical_arcs.isotopy import (
    IsotopyClass,
    Pairing,
    canonical_class,
    class_pairing,
    companion_coefficients,
    companion_period,
    enumerate_classes,
    parse_class,
)

from conftest import stock_root_triples

BASES = [lattice_from_roots(t) for t in stock_root_triples().values()]


def test_canonical_class_examples():
    assert canonical_class(-1, 0) == IsotopyClass(1, 0)
    assert canonical_class(3, -2) == IsotopyClass(-3, 2)
    assert canonical_class(0, -1) == IsotopyClass(0, 1)
    with pytest.raises(NotPrimitive):
        canonical_class(2, 4)
    with pytest.raises(InvalidInput):
        canonical_class(0, 0)
    with pytest.raises(InvalidInput):
        IsotopyClass(-1, 0)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_canonical_class_properties(r, s):
    if (r, s) == (0, 0) or math.gcd(r, s) != 1:
        with pytest.raises(InvalidInput):
            canonical_class(r, s)
        return
    c = canonical_class(r, s)
    assert (c.r, c.s) in ((r, s), (-r, -s))
    assert c.s >= 0 and (c.s > 0 or c.r == 1)
    assert canonical_class(-r, -s) == c


def test_parse():
    assert parse_class("3/-2") == IsotopyClass(-3, 2)
    assert parse_class(" 1,2 ") == IsotopyClass(1, 2)
    with pytest.raises(InvalidInput):
        parse_class("1/2/3")
    assert Pairing.parse("0213") is Pairing.P02_13
    assert Pairing.parse("03-12") is Pairing.P03_12
    with pytest.raises(InvalidInput):
        Pairing.parse("01|32")


def test_pairing_table():
    assert class_pairing(IsotopyClass(1, 0)) is Pairing.P01_23
    assert class_pairing(IsotopyClass(0, 1)) is Pairing.P02_13
    assert class_pairing(IsotopyClass(1, 1)) is Pairing.P03_12
    assert Pairing.P02_13.pairs == ((0, 2), (1, 3))


@pytest.mark.parametrize("basis", BASES, ids=list(stock_root_triples()))
def test_pairing_matches_parity_oracle(basis):
    # p at omega1/2 is the root e_j, and a_0 = inf is paired with a_j
    e = basis.roots.as_array()
    for cls in enumerate_classes(6):
        p, _ = wp_eval((cls.r * basis.omega1_0 + cls.s * basis.omega2_0) / 2, basis)
        j = int(np.argmin(np.abs(e - p))) + 1
        assert abs(e[j - 1] - p) < 1e-8
        assert class_pairing(cls).pairs[0] == (0, j)


@pytest.mark.parametrize("basis", BASES, ids=list(stock_root_triples()))
def test_companion_unimodular_and_minimal(basis):
    for cls in enumerate_classes(8):
        p, q = companion_coefficients(cls, basis)
        assert cls.r * q - cls.s * p == 1
        om1 = cls.r * basis.omega1_0 + cls.s * basis.omega2_0
        om2 = companion_period(cls, basis)
        assert om2 == p * basis.omega1_0 + q * basis.omega2_0
        assert (om2 / om1).imag > 0
        for n in range(-3, 4):
            assert abs(om2) <= abs(om2 + n * om1) * (1 + 1e-12)


def test_companion_examples():
    # square lattice, omega2_0 = (1+i) omega1_0 for the lemniscatic labels
    b = lattice_from_roots(stock_root_triples()["lemniscatic"])
    assert companion_coefficients(IsotopyClass(1, 0), b) == (-1, 1)
    # extended Euclid gives (0, 1) for (1, 2); norm minimization then shifts by omega1
    p, q = companion_coefficients(IsotopyClass(1, 2), b)
    assert (p - 0) * 2 == (q - 1) * 1 and q - 2 * p == 1
    p, q = companion_coefficients(IsotopyClass(3, 2), b)
    assert 3 * q - 2 * p == 1 and (p - 1) * 2 == (q - 1) * 3


def test_enumerate():
    h1 = [(c.r, c.s) for c in enumerate_classes(1)]
    assert h1 == [(1, 0), (-1, 1), (0, 1), (1, 1)]
    h2 = [(c.r, c.s) for c in enumerate_classes(2)]
    assert set(h2) - set(h1) == {(-2, 1), (2, 1), (-1, 2), (1, 2)}
    assert h2 == sorted(h2, key=lambda c: (c[1], c[0]))
    with pytest.raises(InvalidInput):
        enumerate_classes(0)


@given(st.integers(1, 25))
def test_enumerate_is_exhaustive(H):
    got = [(c.r, c.s) for c in enumerate_classes(H)]
    want = [(1, 0)] + [
        (r, s) for s in range(1, H + 1) for r in range(-H, H + 1) if math.gcd(r, s) == 1
    ]
    assert got == want
    assert len(set(got)) == len(got)
