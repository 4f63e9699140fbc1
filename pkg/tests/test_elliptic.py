import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad
from scipy.special import elliprf

from canonical_arcs.elliptic import (
    LatticeBasis,
    carlson_rf,
    equianharmonic_roots,
    gauss_reduce,
    lattice_from_roots,
    reduce_mod_lattice,
    wp_eval,
    wp_invert,
)
from canonical_arcs.errors import InvalidArguments, LabelingFailure, RootsTooClose
from canonical_arcs.mobius import RootTriple
from canonical_arcs.sphere import INF, chordal

from conftest import random_root_triples, stock_root_triples

# R_F(0, 1, 2) from scipy.special.elliprf, an independent implementation
RF_012 = 1.3110287771460598
TRIPLES = list(stock_root_triples().values()) + random_root_triples(20)


def ode_residual(p, pp, e):
    return abs(pp**2 - 4 * (p - e[0]) * (p - e[1]) * (p - e[2])) / (1 + abs(p) ** 3)


# --- Carlson R_F ---------------------------------------------------------------


def test_rf_trivial_values():
    assert carlson_rf(2, 2, 2) == pytest.approx(2**-0.5, rel=1e-14)
    assert carlson_rf(0, 3, 3) == pytest.approx(math.pi / (2 * math.sqrt(3)), rel=1e-14)


def test_rf_against_quadrature():
    mp.mp.dps = 30
    val = mp.quad(lambda t: 0.5 / mp.sqrt(t * (t + 1) * (t + 2)), [0, 1, mp.inf])
    assert abs(carlson_rf(0, 1, 2) - float(val)) < 1e-14
    assert carlson_rf(0, 1, 2) == pytest.approx(RF_012, rel=1e-14)


cplx = st.complex_numbers(min_magnitude=1e-3, max_magnitude=1e3, allow_nan=False, allow_infinity=False)


@settings(max_examples=300)
@given(cplx, cplx, cplx)
def test_rf_matches_scipy(x, y, z):
    # keep clear of the cut where arguments straddle the negative axis
    args = [complex(abs(v.real), v.imag) for v in (x, y, z)]
    ours = carlson_rf(*args)
    ref = complex(elliprf(*args))
    assert abs(ours - ref) <= 1e-12 * abs(ref)


@given(cplx, cplx, cplx, st.floats(0.01, 100))
def test_rf_homogeneity(x, y, z, lam):
    args = [complex(abs(v.real), v.imag) for v in (x, y, z)]
    lhs = carlson_rf(*(lam * a for a in args))
    assert abs(lhs - carlson_rf(*args) / math.sqrt(lam)) <= 1e-12 * abs(lhs)


def test_rf_vectorized():
    out = carlson_rf(np.array([0, 1]), np.array([1, 1]), np.array([2, 1]))
    np.testing.assert_allclose(out, [RF_012, 1.0], rtol=1e-14)


def test_rf_argument_errors():
    with pytest.raises(InvalidArguments):
        carlson_rf(0, 0, 1)
    with pytest.raises(InvalidArguments):
        carlson_rf(float("nan"), 1, 2)


# --- lattice construction ----------------------------------------------------------


def test_lemniscatic_lattice():
    b = lattice_from_roots(RootTriple(1, 0, -1))
    assert b.tau == pytest.approx(1j, abs=1e-14)
    assert b.omega1_0 / 2 == pytest.approx(RF_012, rel=1e-14)
    # independent period: integral of dt / sqrt(4 t (t^2 - 1)) over [1, inf)
    half, _ = quad(lambda t: 1 / math.sqrt(4 * t * (t * t - 1)), 1, np.inf, epsabs=1e-13, epsrel=1e-13)
    assert abs(b.omega1_0 / 2 - half) < 1e-10
    # the square lattice: w2 = i w1 for the reduced basis
    assert b.w2 / b.w1 == pytest.approx(1j, abs=1e-14)
    assert abs(wp_eval(b.omega2_0 / 2, b)[0]) < 1e-9


def test_equianharmonic_lattice():
    b = lattice_from_roots(equianharmonic_roots())
    assert b.tau == pytest.approx(cmath.exp(1j * math.pi / 3), abs=1e-13)


@pytest.mark.parametrize("roots", TRIPLES)
def test_half_period_table(roots):
    b = lattice_from_roots(roots)
    for zh, ej in zip(b.half_periods(), roots):
        p, pp = wp_eval(zh, b)
        assert abs(p - ej) < 1e-9
        assert abs(pp) < 1e-6
    assert (b.omega2_0 / b.omega1_0).imag > 0
    assert b.tau.imag > 0 and -0.5 < b.tau.real <= 0.5 and abs(b.tau) >= 1 - 1e-12


@pytest.mark.parametrize("roots", TRIPLES)
def test_ode_periodicity_evenness(roots):
    b = lattice_from_roots(roots)
    rng = np.random.default_rng(7)
    z = (rng.uniform(-1, 1, 50) * b.w1 + rng.uniform(-1, 1, 50) * b.w2) * 0.999
    p, pp = wp_eval(z, b)
    e = roots.as_array()
    assert np.max(ode_residual(p, pp, e)) < 1e-9
    for om in (b.omega1_0, b.omega2_0, b.omega3_0):
        p2, pp2 = wp_eval(z + om, b)
        assert np.max(np.abs(p2 - p) / (1 + np.abs(p))) < 1e-9
    pm, ppm = wp_eval(-z, b)
    assert np.max(np.abs(pm - p) / (1 + np.abs(p))) < 1e-9
    assert np.max(np.abs(ppm + pp) / (1 + np.abs(pp))) < 1e-9


def test_double_pole():
    b = lattice_from_roots(RootTriple(1, 0, -1))
    for z in (1e-4, 1e-4j, 1e-4 * cmath.exp(0.3j)):
        assert wp_eval(z, b)[0] * z * z == pytest.approx(1, abs=1e-7)
    assert wp_eval(0, b) == (INF, INF)
    assert wp_eval(b.omega1_0, b)[0] == INF


def test_quarter_period_duplication():
    # p(omega1/4) = e1 + sqrt((e1 - e2)(e1 - e3)), real branch for real roots
    for roots in (RootTriple(1, 0, -1), RootTriple(1, -0.3, -0.7)):
        b = lattice_from_roots(roots)
        e1, e2, e3 = roots
        expected = e1 + cmath.sqrt((e1 - e2) * (e1 - e3))
        assert abs(wp_eval(b.omega1_0 / 4, b)[0] - expected) < 1e-12


def test_real_inverse_against_quadrature():
    # for real w > e1, z = int_w^inf dt / sqrt(4 prod(t - e)) has p(z) = w
    roots = RootTriple(1, -0.3, -0.7)
    b = lattice_from_roots(roots)
    e = roots.as_array().real
    for w in (1.5, 3.0, 40.0):
        z, _ = quad(lambda t: 1 / math.sqrt(4 * np.prod(t - e)), w, np.inf, epsabs=1e-13, epsrel=1e-13)
        assert abs(wp_eval(z, b)[0] - w) < 1e-9 * w


def test_labeling_failure_on_inconsistent_parts():
    b = lattice_from_roots(RootTriple(1, 0, -1))
    with pytest.raises(LabelingFailure):
        LatticeBasis.from_parts(b.omega1_0, 2 * b.omega1_0, b.roots, b.w1, b.w2)
    with pytest.raises(LabelingFailure):
        LatticeBasis.from_parts(b.omega1_0, b.omega2_0 + 0.3, b.roots, b.w1, b.w2)
    with pytest.raises(LabelingFailure):
        LatticeBasis.from_parts(b.omega2_0, b.omega1_0, b.roots, b.w1, b.w2)


def test_roots_too_close():
    with pytest.raises(RootsTooClose):
        lattice_from_roots(RootTriple(1, -0.5 + 1e-8, -0.5 - 1e-8))


def test_from_parts_roundtrip():
    b = lattice_from_roots(RootTriple(0.9 + 0.1j, -0.2 + 0.5j, -0.7 - 0.6j))
    c = LatticeBasis.from_parts(b.omega1_0, b.omega2_0, b.roots, b.w1, b.w2)
    assert c == b


def test_gauss_reduce_is_reduced():
    w1, w2 = gauss_reduce(1 + 0j, 7.3 + 0.2j)
    assert abs(w1) <= abs(w2) and abs((w2 / w1).real) <= 0.5 + 1e-12


# --- reduction and inversion ----------------------------------------------------------


def test_reduce_mod_lattice_examples():
    b = lattice_from_roots(RootTriple(1, -0.3, -0.7))
    z = 0.1 + 0.05j
    assert reduce_mod_lattice(z + 3 * b.omega1_0 + 2 * b.omega2_0, b) == pytest.approx(z, abs=1e-13)
    assert reduce_mod_lattice(0, b) == 0
    assert abs(reduce_mod_lattice(b.omega1_0, b)) < 1e-13


@pytest.mark.parametrize("roots", TRIPLES)
def test_inversion_roundtrip(roots):
    b = lattice_from_roots(roots)
    rng = np.random.default_rng(11)
    w = rng.normal(size=100) * 3 + 1j * rng.normal(size=100) * 3
    z = wp_invert(w, b)
    assert np.max(chordal(wp_eval(z, b)[0], w)) < 1e-9


def test_inversion_examples():
    b = lattice_from_roots(RootTriple(1, 0, -1))
    assert wp_invert(INF, b) == 0
    assert wp_invert(1.0, b) == pytest.approx(RF_012, rel=1e-13)
    assert wp_invert(0.0, b) == pytest.approx(b.omega2_0 / 2, abs=1e-12)


@pytest.mark.parametrize("roots", TRIPLES[:6])
def test_inversion_of_roots_hits_half_periods(roots):
    b = lattice_from_roots(roots)
    for zh, ej in zip(b.half_periods(), roots):
        d = wp_invert(ej, b) - zh
        # equal modulo the lattice (half-periods are their own negatives)
        x, y = b.coords(d)
        assert abs(x - round(x)) < 1e-6 and abs(y - round(y)) < 1e-6


def test_inversion_half_domain_rule():
    b = lattice_from_roots(RootTriple(0.9 + 0.1j, -0.2 + 0.5j, -0.7 - 0.6j))
    rng = np.random.default_rng(3)
    w = rng.normal(size=200) + 1j * rng.normal(size=200)
    z = wp_invert(w, b)
    t = b.w2 / b.w1
    r = z / b.w1
    y = r.imag / t.imag
    assert np.all(y >= -1e-12)
