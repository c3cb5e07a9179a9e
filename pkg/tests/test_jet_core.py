import cmath

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from concavity.models import ComplexPoint, GeneralizedKoebe, SeriesFunction
from concavity.services.catalog import evaluate
from concavity.services.jet_core import (
    Jet2, eval_series, jet_divide, jet_multiply, jet_power_int, jet_power_real,
)
from concavity.utils.errors import BranchCut, NearPole, OutsideValidityDisk

disk_points = st.builds(
    lambda r, t: r * cmath.exp(1j * t),
    st.floats(min_value=0.0, max_value=0.9),
    st.floats(min_value=0.0, max_value=2 * np.pi),
)


def assert_jet_close(a: Jet2, b: Jet2, tol: float = 1e-12):
    for x, y in ((a.f, b.f), (a.df, b.df), (a.d2f, b.d2f)):
        assert np.allclose(x, y, rtol=tol, atol=tol)


def test_variable_is_identity_jet():
    jet = Jet2.variable(0.3)
    assert (jet.f, jet.df, jet.d2f) == (0.3, 1.0, 0.0)


def test_product_rule():
    Z = Jet2.variable(2.0)
    square = jet_multiply(Z, Z)
    assert (square.f, square.df, square.d2f) == (4.0, 4.0, 2.0)


def test_quotient_rule():
    inverse = 1.0 / Jet2.variable(2.0)
    assert inverse.f == pytest.approx(0.5)
    assert inverse.df == pytest.approx(-0.25)
    assert inverse.d2f == pytest.approx(0.25)


def test_negative_integer_power():
    jet = jet_power_int(Jet2.variable(2.0), -2)
    assert jet.f == pytest.approx(0.25)
    assert jet.df == pytest.approx(-0.25)
    assert jet.d2f == pytest.approx(0.375)


def test_divide_by_zero_raises_near_pole():
    with pytest.raises(NearPole):
        jet_divide(Jet2.constant(1.0), Jet2.variable(0.0))


@pytest.mark.parametrize('base', [-1.0, complex(-1.0, 1e-13), 0.0])
def test_real_power_on_cut_raises(base):
    with pytest.raises(BranchCut):
        jet_power_real(Jet2.variable(base), 0.5)


@given(disk_points)
@settings(max_examples=200)
def test_real_power_matches_integer_power(z):
    u = 1.0 - Jet2.variable(z)
    assert_jet_close(jet_power_real(u, -2.0), jet_power_int(u, -2), tol=1e-10)


@given(disk_points)
@settings(max_examples=200)
def test_cube_jet(z):
    Z = Jet2.variable(z)
    cube = Z * Z * Z
    assert cube.f == pytest.approx(z ** 3, abs=1e-14)
    assert cube.df == pytest.approx(3 * z ** 2, abs=1e-14)
    assert cube.d2f == pytest.approx(6 * z, abs=1e-14)


@given(disk_points)
@settings(max_examples=100)
def test_square_root_squares_back(z):
    u = 1.0 + Jet2.variable(z)
    root = u ** 0.5
    assert_jet_close(root * root, u, tol=1e-11)


def test_horner_with_derivatives():
    jet = eval_series(SeriesFunction((1, 2, 3)), 0.5)
    assert jet.f == pytest.approx(1.375)
    assert jet.df == pytest.approx(5.25)
    assert jet.d2f == pytest.approx(13.0)


def test_series_outside_validity_disk():
    with pytest.raises(OutsideValidityDisk):
        eval_series(SeriesFunction((1, 2, 3)), 0.96)


def test_series_vectorised_matches_pointwise():
    s = SeriesFunction((1, 0.5, -0.25j, 0.125))
    z = 0.6 * np.exp(1j * np.linspace(0.0, 2 * np.pi, 9))
    vector = eval_series(s, z)
    for i, point in enumerate(z):
        scalar = eval_series(s, complex(point))
        assert vector.f[i] == pytest.approx(scalar.f)
        assert vector.df[i] == pytest.approx(scalar.df)
        assert vector.d2f[i] == pytest.approx(scalar.d2f)


def test_series_requires_normalization():
    with pytest.raises(ValueError):
        SeriesFunction((2, 1))
    with pytest.raises(ValueError):
        SeriesFunction((1,))


def koebe_series(order: int = 64) -> SeriesFunction:
    return SeriesFunction(tuple(range(1, order + 1)))


jets = st.builds(
    lambda values: Jet2(*values),
    st.tuples(*[st.complex_numbers(max_magnitude=10.0, allow_nan=False, allow_infinity=False)] * 3),
)


@given(jets, jets)
def test_multiply_is_commutative(a, b):
    assert_jet_close(jet_multiply(a, b), jet_multiply(b, a))


@given(jets, jets, jets)
def test_multiply_is_associative(a, b, c):
    left = jet_multiply(jet_multiply(a, b), c)
    right = jet_multiply(a, jet_multiply(b, c))
    for x, y in ((left.f, right.f), (left.df, right.df), (left.d2f, right.d2f)):
        assert abs(x - y) <= 1e-9


def test_koebe_truncation_at_origin():
    jet = eval_series(koebe_series(), 0.0)
    assert (jet.f, jet.df, jet.d2f) == (0, 1, 4)


def test_koebe_truncation_at_half():
    # tail of sum k 2^-k beyond k = 64 is below 1e-16
    assert eval_series(koebe_series(), 0.5).f == pytest.approx(2.0, abs=1e-14)


@given(st.builds(
    lambda r, t: r * cmath.exp(1j * t),
    st.floats(min_value=0.0, max_value=0.5),
    st.floats(min_value=0.0, max_value=2 * np.pi),
))
@settings(max_examples=100)
def test_koebe_truncation_agrees_with_closed_form(z):
    series = eval_series(koebe_series(), z)
    closed = evaluate(GeneralizedKoebe(1), z)
    # remainder of sum k^3 |z|^(k-2) past k = 64 at |z| = 1/2
    assert_jet_close(series, closed, tol=1e-9)


def test_series_accepts_complex_points():
    s = SeriesFunction((1, 0.5, -0.25j))
    assert_jet_close(eval_series(s, ComplexPoint(0.3, -0.1)), eval_series(s, complex(0.3, -0.1)))


def test_tail_indicator_is_last_coefficient():
    assert koebe_series().tail_indicator == 64.0
    assert SeriesFunction.identity().tail_indicator == 0.0


def test_series_warns_near_validity_radius(caplog):
    eval_series(koebe_series(), 0.5)
    assert caplog.text == ''
    eval_series(koebe_series(), np.array([0.2, 0.92j]))
    assert 'Series evaluated near its validity radius' in caplog.text
    assert '"tail": 64.0' in caplog.text
    assert '"order": 64' in caplog.text
