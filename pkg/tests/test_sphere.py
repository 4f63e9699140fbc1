import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from canonical_arcs.sphere import INF, as_points, chordal, format_point, from_sphere, parse_point, to_sphere

finite = st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False)


def test_chordal_examples():
    assert chordal(0, INF) == pytest.approx(2.0)
    assert chordal(0, 1) == pytest.approx(math.sqrt(2))
    assert chordal(INF, INF) == 0.0


@given(finite, finite)
def test_chordal_matches_closed_form(p, q):
    expected = 2 * abs(p - q) / math.sqrt((1 + abs(p) ** 2) * (1 + abs(q) ** 2))
    assert chordal(p, q) == pytest.approx(expected, rel=1e-9, abs=1e-12)


@given(finite)
def test_sphere_roundtrip(p):
    x = to_sphere(p)
    assert np.linalg.norm(x) == pytest.approx(1.0)
    back = complex(from_sphere(x))
    assert chordal(back, p) < 1e-12


def test_huge_values_do_not_overflow():
    x = to_sphere(np.array([1e300 + 1e300j, INF]))
    assert np.all(np.isfinite(x))
    np.testing.assert_allclose(x[1], [0, 0, 1])


def test_nan_rejected():
    with pytest.raises(ValueError):
        as_points([complex(float("nan"), 0)])


@pytest.mark.parametrize(
    "text, value",
    [("inf", INF), ("1", 1), ("-2.5", -2.5), ("3+4i", 3 + 4j), ("0.5-1e-3i", 0.5 - 1e-3j), ("-2i", -2j)],
)
def test_parse_point(text, value):
    assert parse_point(text) == value


def test_parse_point_rejects_garbage():
    with pytest.raises(ValueError):
        parse_point("one")


@given(finite)
def test_format_parse_roundtrip(p):
    assert parse_point(format_point(p)) == p
