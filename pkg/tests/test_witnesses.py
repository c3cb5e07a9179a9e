import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from concavity.models import CloseToStarExtremal, SchwarzFunction, SeriesFunction, WitnessP
from concavity.services.jet_core import eval_series
from concavity.services.subordination import eval_schwarz, make_p
from concavity.services.witnesses import (
    ROUND_TRIP_TOL, WitnessGenerator, close_to_star_distortion_violation, lemma_a_bound,
    lemmaA_order_alpha, lemmaA_violation, lemmaB_violation, p_coefficients, schwarz_pick_violation,
    starlike_from_p, verify_class_bound,
)
from concavity.utils.errors import InvalidParameter, TruncationOverflow

RADII = [0.25, 0.5, 0.75, 0.9]


def test_identity_schwarz_jet():
    jet = eval_schwarz(SchwarzFunction(), 0.3)
    assert (jet.f, jet.df, jet.d2f) == pytest.approx((0.3, 1.0, 0.0))


@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=1, max_value=3))
@settings(max_examples=50)
def test_schwarz_function_vanishes_to_its_order(seed, m):
    w = WitnessGenerator(seed=seed).schwarz(m)
    assert abs(eval_schwarz(w, 0j).f) == 0.0
    z = 0.6 * np.exp(1j * np.linspace(0.0, 2 * np.pi, 17))
    assert np.all(np.abs(eval_schwarz(w, z).f) <= np.abs(z) ** m + 1e-12)


@pytest.mark.parametrize('n', [1, 2, 3])
def test_extremal_p(n):
    z = 0.7 * np.exp(1j * np.linspace(0.0, 2 * np.pi, 13))
    p = make_p(WitnessP(1.0, -1.0, SchwarzFunction(n)), n, z).f
    np.testing.assert_allclose(p, (1 + z ** n) / (1 - z ** n), rtol=1e-12)
    assert make_p(WitnessP(1.0, -1.0, SchwarzFunction(n)), n, 0j).f == pytest.approx(1.0)


def test_make_p_requires_vanishing_order():
    with pytest.raises(InvalidParameter):
        make_p(WitnessP(1.0, -1.0, SchwarzFunction(1)), 2, 0.1)


@pytest.mark.parametrize('alpha', [0.0, 0.3, 0.8])
def test_order_alpha_witness_has_real_part_above_alpha(alpha):
    generator = WitnessGenerator(seed=11)
    z = generator.disk_points(200)
    for _ in range(5):
        witness = WitnessP.of_order(alpha, generator.schwarz(1))
        assert np.all(make_p(witness, 1, z).f.real > alpha)


def test_order_alpha_disk_matches_general_bound():
    assert lemmaA_order_alpha(0.25, 2, 0.5) == pytest.approx(lemma_a_bound(0.5, -1.0, 2, 0.5))


@pytest.mark.parametrize('n', [1, 2, 3])
@pytest.mark.parametrize('r', RADII)
def test_lemmas_are_sharp_for_power_witness(n, r):
    witness = WitnessP(1.0, -1.0, SchwarzFunction(n))
    assert lemmaA_violation(witness, n, r) == pytest.approx(0.0, abs=1e-9)
    assert lemmaB_violation(witness, n, r) == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize('n', [1, 2])
def test_lemmas_hold_for_random_witnesses(n):
    generator = WitnessGenerator(seed=3)
    for witness in generator.witnesses(n, 25):
        for r in RADII:
            assert lemmaA_violation(witness, n, r) <= 1e-9
            assert lemmaB_violation(witness, n, r) <= 1e-9


def test_lemma_a_for_general_parameters():
    generator = WitnessGenerator(seed=5)
    for witness in generator.witnesses(2, 10, a_param=0.5, b_param=-0.5):
        assert lemmaA_violation(witness, 2, 0.75) <= 1e-9


def test_lemma_b_needs_the_caratheodory_witness():
    with pytest.raises(InvalidParameter):
        lemmaB_violation(WitnessP(0.5, -1.0, SchwarzFunction()), 1, 0.5)


def test_schwarz_pick():
    z = np.array([0.0, 0.3, 0.5j, -0.8])
    assert schwarz_pick_violation(SchwarzFunction(), z) == pytest.approx(0.0, abs=1e-15)
    assert schwarz_pick_violation(SchwarzFunction(2), [0.0]) == pytest.approx(-1.0)
    generator = WitnessGenerator(seed=9)
    points = generator.disk_points(64)
    for _ in range(20):
        assert schwarz_pick_violation(generator.schwarz(1), points) <= 1e-10


def test_schwarz_pick_rejects_boundary_points():
    with pytest.raises(InvalidParameter):
        schwarz_pick_violation(SchwarzFunction(), [1.0])


def test_distortion_bound():
    assert close_to_star_distortion_violation(SeriesFunction.identity(), 0.2) < 0
    assert close_to_star_distortion_violation(CloseToStarExtremal(), 0.3) == pytest.approx(0.0, abs=1e-12)
    generator = WitnessGenerator(seed=13)
    for witness in generator.witnesses(1, 20):
        f = generator.close_to_star_member(witness)
        for r in (0.1, 0.2, 0.4):
            assert close_to_star_distortion_violation(f, r) <= 1e-9


def test_distortion_bound_radius_range():
    with pytest.raises(InvalidParameter):
        close_to_star_distortion_violation(CloseToStarExtremal(), 0.5)


def test_starlike_from_zero_series_is_identity():
    f = starlike_from_p([0.0] * 5, order=8)
    assert f.coefficients == (1,) + (0,) * 7


def test_starlike_from_constant_two_is_koebe():
    f = starlike_from_p([0.0] + [2.0] * 63, order=64)
    np.testing.assert_allclose(np.real(f.coefficients[:10]), np.arange(1, 11), atol=1e-9)


def test_starlike_from_even_twos_is_odd_koebe():
    c = np.zeros(64)
    c[2::2] = 2.0
    f = starlike_from_p(c, order=64)
    expected = np.zeros(64)
    expected[0::2] = 1.0
    np.testing.assert_allclose(np.real(f.coefficients), expected, atol=1e-9)


def test_fft_coefficients_of_caratheodory_witness():
    c = p_coefficients(WitnessP(1.0, -1.0, SchwarzFunction()), 1, 16)
    assert c[0] == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(c[1:], 2.0, atol=1e-10)


@pytest.mark.parametrize('p_series, order', [([0.0, 1.0], 200), ([0.5, 1.0], 8), ([0.0, 1.0], 1)])
def test_starlike_from_p_rejects_bad_input(p_series, order):
    with pytest.raises(InvalidParameter):
        starlike_from_p(p_series, order)


def test_starlike_from_p_detects_truncation_loss():
    with pytest.raises(TruncationOverflow):
        starlike_from_p([0.0] + [50.0] * 7, order=8)


def test_generator_is_deterministic():
    first = list(WitnessGenerator(seed=42).witnesses(2, 5))
    second = list(WitnessGenerator(seed=42).witnesses(2, 5))
    assert first == second
    assert all(w.schwarz.zero_order == 2 for w in first)
    assert all(len(w.schwarz.blaschke_zeros) <= 4 for w in first)


def test_starlike_member_round_trips(fast_settings):
    generator = WitnessGenerator(fast_settings, seed=1)
    witness = generator.witness(2)
    f = generator.starlike_member(witness, 2)
    assert f.order == fast_settings.truncation_order
    assert abs(f.coefficients[1]) <= 1e-10


@pytest.mark.parametrize('n', [1, 2, 3])
def test_starlike_member_recovers_p_on_half_circle(fast_settings, n):
    generator = WitnessGenerator(fast_settings, seed=5)
    z = 0.5 * np.exp(2j * np.pi * np.arange(64) / 64)
    for witness in generator.witnesses(n, 10):
        f = generator.starlike_member(witness, n)
        jet = eval_series(f, z, evaluation_radius=1.0)
        np.testing.assert_allclose(z * jet.df / jet.f, make_p(witness, n, z).f, rtol=0, atol=ROUND_TRIP_TOL)


def test_round_trip_tolerance():
    assert ROUND_TRIP_TOL == 1e-8
    with pytest.raises(TruncationOverflow):
        starlike_from_p([0.0] + [2.0] * 15, order=16)


@pytest.mark.parametrize('class_id, n', [('s0n', 1), ('s0n', 2), ('close_to_star', 1)])
def test_verify_class_bound_passes(fast_settings, class_id, n):
    generator = WitnessGenerator(fast_settings, seed=7)
    witnesses = list(generator.witnesses(n, 3))
    summary = verify_class_bound(class_id, witnesses, 2.0, n=n, generator=generator)
    assert summary.passed, summary.to_dict()
    assert summary.count == 3
    assert summary.min_margin >= -1e-6


def test_verify_class_bound_rejects_unknown_suite():
    with pytest.raises(InvalidParameter):
        verify_class_bound('kab', [], 2.0)
    with pytest.raises(InvalidParameter):
        verify_class_bound('close_to_star', [], 2.0, n=2)


@pytest.mark.slow
@pytest.mark.parametrize('n', [1, 2, 3])
def test_lemmas_on_thousand_witnesses(n):
    generator = WitnessGenerator(seed=2024)
    for witness in generator.witnesses(n, 1000):
        for r in RADII:
            assert lemmaA_violation(witness, n, r) <= 1e-9
            assert lemmaB_violation(witness, n, r) <= 1e-9


@pytest.mark.slow
@pytest.mark.parametrize('n', [1, 2, 3])
def test_lower_bound_on_two_hundred_members(n):
    generator = WitnessGenerator(seed=2024)
    summary = verify_class_bound('s0n', list(generator.witnesses(n, 200)), 2.0, n=n, generator=generator)
    assert summary.passed, summary.to_dict()
    assert not math.isnan(summary.min_margin)


@pytest.mark.slow
@pytest.mark.parametrize('n', [1, 2, 3])
def test_schwarz_pick_on_thousand_witnesses(n):
    generator = WitnessGenerator(seed=2025)
    points = generator.disk_points(128)
    for _ in range(1000):
        assert schwarz_pick_violation(generator.schwarz(n), points) <= 1e-10


@pytest.mark.slow
def test_distortion_on_thousand_witnesses():
    generator = WitnessGenerator(seed=2026)
    for witness in generator.witnesses(1, 1000):
        f = generator.close_to_star_member(witness)
        for r in (0.1, 0.2, 0.4):
            assert close_to_star_distortion_violation(f, r) <= 1e-9
