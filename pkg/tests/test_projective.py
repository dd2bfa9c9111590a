"""Chart arithmetic, causal characters, and the light conic."""

import math

import numpy as np
import pytest

from limitroots import causal_character, chart_distance, light_conic, to_chart
from limitroots.projective import Causal, timelike_center


def test_chart_normalizes_height(sys_u1):
    p = to_chart(sys_u1, np.array([2.0, 2.0, 0.0]))
    assert not p.at_infinity
    np.testing.assert_allclose(p.coords, [0.5, 0.5, 0.0])
    assert p.bnorm == pytest.approx(0.0, abs=1e-12)


def test_chart_is_scale_invariant(sys_u1):
    a = to_chart(sys_u1, np.array([0.3, 0.5, 0.4]))
    b = to_chart(sys_u1, 17.0 * np.array([0.3, 0.5, 0.4]))
    assert chart_distance(a, b) < 1e-14


def test_zero_height_goes_to_infinity(sys_u1):
    p = to_chart(sys_u1, np.array([1.0, -1.0, 0.0]))
    assert p.at_infinity
    assert np.sum(p.coords) == pytest.approx(0.0, abs=1e-12)
    assert np.linalg.norm(p.coords) == pytest.approx(1.0)
    # Sign canonicalization: both representatives map to the same direction.
    q = to_chart(sys_u1, np.array([-1.0, 1.0, 0.0]))
    np.testing.assert_allclose(p.coords, q.coords)


def test_zero_vector_rejected(sys_u1):
    with pytest.raises(ValueError):
        to_chart(sys_u1, np.zeros(3))


def test_distance_across_chart_boundary_is_infinite(sys_u1):
    aff = to_chart(sys_u1, np.array([1.0, 1.0, 1.0]))
    inf_pt = to_chart(sys_u1, np.array([1.0, -1.0, 0.0]))
    assert chart_distance(aff, inf_pt) == math.inf
    assert chart_distance(inf_pt, inf_pt) == 0.0


def test_causal_characters(sys_u1):
    assert causal_character(sys_u1, np.array([1.0, 0.0, 0.0])) is Causal.SPACE_LIKE
    assert causal_character(sys_u1, np.array([1.0, 1.0, 0.0])) is Causal.LIGHT_LIKE
    assert causal_character(sys_u1, np.array([1.0, 1.0, 1.0])) is Causal.TIME_LIKE


def test_timelike_center(sys_u1):
    c = timelike_center(sys_u1)
    assert not c.at_infinity
    assert c.bnorm < 0
    np.testing.assert_allclose(c.coords, [1 / 3, 1 / 3, 1 / 3])


def test_light_conic_sits_on_the_cone(sys_u11):
    conic = light_conic(sys_u11, resolution=128)
    assert conic.vertices.shape == (128, 3)
    worst = max(abs(v @ sys_u11.form @ v) for v in conic.vertices)
    assert worst < 1e-10
    np.testing.assert_allclose(conic.vertices.sum(axis=1), 1.0, atol=1e-12)


def test_light_conic_rank_limits():
    from limitroots import make_system

    with pytest.raises(ValueError):
        light_conic(make_system("fig8"))
