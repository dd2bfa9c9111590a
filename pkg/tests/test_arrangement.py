"""Roots by depth, weights, codimension-2 intersections, and chamber descent."""

from collections import Counter

import numpy as np
import pytest

from limitroots import (
    codim2_spacelike,
    descend_to_fundamental,
    element_of,
    fundamental_weights,
    intersection_equals_unimodular,
    make_system,
    roots_by_depth,
    sign_vector,
    to_chart,
)
from limitroots.arrangement import IntersectionKind
from limitroots.projective import chart_distance


def test_root_counts_by_depth(sys_u1, sys_u11):
    for sys in (sys_u1, sys_u11):
        roots = roots_by_depth(sys, 3)
        assert Counter(r.depth for r in roots) == {1: 3, 2: 6, 3: 12}


def test_depth_one_roots_are_simple(sys_u1):
    roots = [r for r in roots_by_depth(sys_u1, 1)]
    assert len(roots) == 3
    assert {tuple(r.vector) for r in roots} == {
        (1.0, 0.0, 0.0),
        (0.0, 1.0, 0.0),
        (0.0, 0.0, 1.0),
    }


def test_all_roots_positive(sys_u11):
    for r in roots_by_depth(sys_u11, 4):
        assert np.min(r.vector) > -1e-9


def test_root_word_reproduces_vector(sys_u1):
    for r in roots_by_depth(sys_u1, 3):
        w = element_of(sys_u1, r.word)
        np.testing.assert_allclose(
            w.matrix @ np.eye(3)[r.base], r.vector, atol=1e-9
        )


def test_fundamental_weights_dual_basis():
    for name in ("fig1a", "fig1b", "fig8", "universal3:1", "universal3:1.1"):
        sys = make_system(name)
        W = np.column_stack([w.vector for w in fundamental_weights(sys)])
        np.testing.assert_allclose(sys.form @ W, np.eye(sys.rank), atol=1e-10)


def test_universal_weights_are_space_like(sys_u11):
    for w in fundamental_weights(sys_u11):
        bnorm = float(w.vector @ sys_u11.form @ w.vector)
        assert bnorm == pytest.approx(0.0396825396825, abs=1e-10)


def test_singular_form_has_no_weights():
    # The affine dihedral form (infinite label, c = 1) is singular.
    from limitroots import CoxeterGraph
    from limitroots.graphs import INF

    g = CoxeterGraph(rank=2, labels={(0, 1): INF}, cparams={(0, 1): 1.0})
    sys = make_system(g)
    with pytest.raises(ValueError):
        fundamental_weights(sys)


def test_simple_pair_intersections_space_like(sys_u11):
    cis = codim2_spacelike(sys_u11, roots_by_depth(sys_u11, 1))
    assert len(cis) == 3
    for ci in cis:
        assert ci.kind is IntersectionKind.SPACE_LIKE
        assert ci.pairing == pytest.approx(-1.1)
        # 1-dimensional space-like intersection, B-orthogonal to both roots.
        assert ci.basis.shape == (3, 1)
        v = ci.basis[:, 0]
        for r in ci.pair:
            assert abs(v @ sys_u11.form @ r.vector) < 1e-10
        assert v @ sys_u11.form @ v > 0


def test_marginal_pairs_are_light_like(sys_u1):
    cis = codim2_spacelike(sys_u1, roots_by_depth(sys_u1, 1))
    assert len(cis) == 3
    assert all(ci.kind is IntersectionKind.LIGHT_LIKE for ci in cis)


def test_intersection_equals_unimodular_subspace(sys_u11):
    cis = codim2_spacelike(sys_u11, roots_by_depth(sys_u11, 2))
    space_like = [ci for ci in cis if ci.kind is IntersectionKind.SPACE_LIKE]
    assert space_like
    for ci in space_like:
        assert intersection_equals_unimodular(sys_u11, ci)


def test_weights_sit_on_simple_pair_intersections(sys_u11):
    cis = codim2_spacelike(sys_u11, roots_by_depth(sys_u11, 1))
    for w in fundamental_weights(sys_u11):
        wpt = to_chart(sys_u11, w.vector)
        best = min(chart_distance(wpt, ci.chart_point(sys_u11)) for ci in cis)
        assert best < 1e-9


def test_sign_vector_symbols(sys_u11):
    roots = roots_by_depth(sys_u11, 1)
    center = to_chart(sys_u11, np.array([1.0, 1.0, 1.0]))
    assert sign_vector(sys_u11, center, roots) == "---"
    on_wall = to_chart(sys_u11, fundamental_weights(sys_u11)[0].vector)
    assert sign_vector(sys_u11, on_wall, roots)[1:] == "00"


def test_descent_recovers_the_acting_word(sys_u11):
    x0 = np.array([0.2, 0.3, 0.5])
    for word in [(0,), (0, 1, 0), (0, 1, 2, 0, 1)]:
        moved = to_chart(sys_u11, element_of(sys_u11, word).matrix @ x0)
        res = descend_to_fundamental(sys_u11, moved, 50)
        assert res.in_tits_cone
        assert tuple(reversed(res.word)) == tuple(
            element_of(sys_u11, tuple(reversed(word))).word
        )
        np.testing.assert_allclose(res.point.coords, x0, atol=1e-9)


def test_descent_gives_up_outside_budget(sys_u11):
    deep = element_of(sys_u11, (0, 1, 2) * 4)
    moved = to_chart(sys_u11, deep.matrix @ np.array([0.2, 0.3, 0.5]))
    res = descend_to_fundamental(sys_u11, moved, 3)
    assert not res.in_tits_cone
