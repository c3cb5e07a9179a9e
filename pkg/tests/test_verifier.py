import math

import pytest

from concavity.models import (
    CloseToStarExtremal, GeneralizedKoebe, Monomial, PowerDistortion, RadiusQuery, RotatedFunction,
    RotatedKoebe, Schild, SeriesFunction,
)
from concavity.models.phi import Phi1, Phi2, Phi3, Phi4, Phi6
from concavity.services.verifier import RadiusVerifier, build_function, class_extremal, class_phi
from concavity.utils.config import Settings
from concavity.utils.errors import InvalidParameter

KOEBE_RADIUS = 7.0 - 4.0 * math.sqrt(3.0)


@pytest.fixture
def verifier(fast_settings):
    return RadiusVerifier(fast_settings)


@pytest.mark.parametrize('class_id, parameters, expected', [
    ('s0n', {'n': 2}, Phi1(2, 1.5)),
    ('kab', {'alpha': 0.0, 'beta': 2.0}, Phi2(0.0, 2.0, 1.5)),
    ('strongly_starlike', {'beta': 0.5}, Phi3(0.5, 1.5)),
    ('starlike_order', {'alpha': 0.75}, Phi4(0.75, 1.5)),
    ('close_to_star', {}, Phi6(1.5)),
])
def test_class_phi(class_id, parameters, expected):
    assert class_phi(class_id, parameters, 1.5) == expected


def test_class_phi_rejects_unknown_class():
    with pytest.raises(InvalidParameter):
        class_phi('univalent', {}, 1.5)


def test_class_extremals():
    assert isinstance(class_extremal('s0n', {'n': 1}), RotatedKoebe)
    assert class_extremal('s0n', {'n': 3}) == RotatedFunction(GeneralizedKoebe(3), math.pi)
    assert class_extremal('kab', {'alpha': 0.5, 'beta': 1.5}) == PowerDistortion(0.5, 1.5)
    assert class_extremal('strongly_starlike', {'beta': 0.5}) == Monomial(1.0, 1)
    assert class_extremal('starlike_order', {'alpha': 0.75}) == Schild(0.75, -1.0)
    assert isinstance(class_extremal('close_to_star', {}), CloseToStarExtremal)


def test_radius_record(verifier):
    record = verifier.radius(RadiusQuery('s0n', {'n': 1}, 2.0))
    assert record.solver_radius == pytest.approx(KOEBE_RADIUS, abs=1e-8)
    assert record.closed_form == pytest.approx(KOEBE_RADIUS, abs=1e-14)
    assert record.extremal_id == RotatedKoebe().function_id
    assert record.flags == []
    assert record.empirical is None


def test_radius_record_without_root(verifier):
    record = verifier.radius(RadiusQuery('starlike_order', {'alpha': 0.25}, 1.5))
    assert 'SOLVER_NO_ROOT' in record.flags
    assert not record.solver['converged']


def test_verify_rotated_koebe_matches():
    verifier = RadiusVerifier(Settings(circle_samples=512, rotation_count=1))
    record = verifier.verify(RadiusQuery('s0n', {'n': 1}, 2.0))
    assert 'MATCH' in record.flags
    assert record.empirical_radius == pytest.approx(KOEBE_RADIUS, abs=1e-5)
    assert record.argmin_angle == pytest.approx(math.pi, abs=1e-3)
    # the quoted expression leads with (1 - z)/(1 + z)
    assert 'PAPER_EXPR_MISMATCH' in record.flags


def test_verify_monomial_extremal_is_not_normalized(verifier):
    record = verifier.verify(RadiusQuery('strongly_starlike', {'beta': 0.5}, 2.0))
    assert 'NORMALIZATION_VIOLATION' in record.flags
    assert 'EXTREMAL_BELOW_BOUND' in record.flags
    assert record.empirical_radius == 0.0
    assert record.argmin_angle is None


def test_verify_close_to_star(verifier):
    record = verifier.verify(RadiusQuery('close_to_star', {}, 2.0))
    assert 0.0 < record.empirical_radius < math.sqrt(2.0) - 1.0
    assert record.argmin_angle is not None
    assert 0.0 <= record.argmin_angle < 2 * math.pi
    assert record.empirical_radius >= record.solver_radius - 1e-5


def test_verifier_shares_settings_with_its_analyzer(fast_settings):
    verifier = RadiusVerifier(fast_settings)
    assert verifier.analyzer.settings is fast_settings
    assert verifier.analyzer.scan(RotatedKoebe(), 2.0, 0.05).samples == fast_settings.circle_samples


def test_rotation_family(verifier):
    family = verifier.rotation_family(RotatedKoebe())
    assert len(family) == 2
    assert family[1] == RotatedFunction(RotatedKoebe(), math.pi)


def test_scan_rows_in_grid_order(verifier):
    rows, columns = verifier.scan('s0n', {'n': [1, 2, 3]}, [2.0, 1.5])
    assert columns == ['class', 'n', 'A', 'radius', 'converged', 'residual', 'iterations']
    assert [(row['n'], row['A']) for row in rows] == [
        (1, 1.5), (1, 2.0), (2, 1.5), (2, 2.0), (3, 1.5), (3, 2.0),
    ]
    assert all(row['converged'] for row in rows)
    assert rows[1]['radius'] == pytest.approx(KOEBE_RADIUS, abs=1e-8)


def test_scan_class_coincidence(verifier):
    strongly, _ = verifier.scan('strongly_starlike', {'beta': [1.0]}, [1.5], tol=1e-12)
    starlike, _ = verifier.scan('s0n', {'n': [1]}, [1.5], tol=1e-12)
    assert strongly[0]['radius'] == pytest.approx(starlike[0]['radius'], abs=1e-10)


def test_scan_keeps_failed_rows(verifier):
    rows, _ = verifier.scan('kab', {'alpha': [0.5], 'beta': [0.25, 1.0]}, [2.0])
    assert rows[0]['radius'] is None and not rows[0]['converged']
    assert rows[1]['converged']


def test_grid_layout(verifier):
    rows = verifier.grid(SeriesFunction.identity(), 2.0, 0.5, 3)
    assert len(rows) == 9
    assert (rows[0]['x'], rows[0]['y']) == (-0.5, -0.5)
    assert (rows[1]['x'], rows[1]['y']) == (0.0, -0.5)
    assert rows[4]['re_tf'] == pytest.approx(1.0)
    assert all(rows[i]['re_tf'] is None for i in (0, 2, 6, 8))
    assert rows[3]['re_tf'] is not None


def test_grid_shows_sign_change_of_rotated_koebe(verifier):
    rows = verifier.grid(RotatedKoebe(), 2.0, 0.2, 41)
    axis = {round(row['x'], 6): row['re_tf'] for row in rows if abs(row['y']) < 1e-12}
    assert axis[-0.05] > 0
    assert axis[-0.1] < 0
    assert axis[0.1] > 0


def test_build_function():
    assert build_function('identity', {}) == SeriesFunction.identity()
    assert build_function('generalized_koebe', {'n': 2.0}) == GeneralizedKoebe(2)


@pytest.mark.parametrize('function_id, parameters', [
    ('meromorphic_kp', {'p': 0.5}),
    ('bieberbach', {}),
    ('schild', {'gamma': 1.0}),
])
def test_build_function_errors(function_id, parameters):
    with pytest.raises(InvalidParameter):
        build_function(function_id, parameters)


def test_witness_test_summary(fast_settings):
    summary = RadiusVerifier(fast_settings).witness_test('s0n', 1, 2.0, 2, seed=5, lower_bound=False)
    assert summary.passed
    assert summary.seed == 5
    assert summary.min_margin is None
    assert {'lemma_a', 'lemma_b', 'schwarz_pick', 're_tf_lower_bound'} <= set(summary.checks)


def test_witness_test_needs_a_positive_count(verifier):
    with pytest.raises(InvalidParameter):
        verifier.witness_test('s0n', 1, 2.0, 0)
