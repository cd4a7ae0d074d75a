"""Basis evaluation, patch construction, and quadrature rules."""

import math

import numpy as np
import pytest

from fibershell.jit import JIT_ENABLED
from fibershell.splines import (
    KnotVector,
    SplinePatch,
    eval_basis,
    gauss_rule,
    line_patch,
    make_knots,
    make_patch,
    refine_patch,
)

RNG_SEED = 20260816


def test_bernstein_midpoint():
    kv = KnotVector(np.array([0.0, 0, 0, 1, 1, 1]), 2)
    ders, first = eval_basis(kv, 0.5, 0)
    assert first == 0
    np.testing.assert_allclose(ders[0], [0.25, 0.5, 0.25], atol=1e-15)


def test_partition_of_unity_and_derivative_sums():
    rng = np.random.default_rng(RNG_SEED)
    n = 10**6 if JIT_ENABLED else 10**4
    for p, n_el in [(2, 3), (4, 7)]:
        kv = make_knots(p, n_el)
        us = rng.uniform(0.0, 1.0, n // 2)
        worst0 = worst1 = worst2 = 0.0
        for u in us:
            ders, _ = eval_basis(kv, u, 2)
            worst0 = max(worst0, abs(ders[0].sum() - 1.0))
            worst1 = max(worst1, abs(ders[1].sum()))
            worst2 = max(worst2, abs(ders[2].sum()))
        assert worst0 <= 1e-13
        # derivative scales grow with n_el/p; normalize by magnitude
        assert worst1 <= 1e-13 * max(1.0, n_el * p * 10)
        assert worst2 <= 1e-13 * max(1.0, (n_el * p * 10) ** 2)


def test_one_sided_limits_at_triple_knot():
    kv = make_knots(4, 2)  # interior knot 0.5 with multiplicity 3
    assert np.count_nonzero(kv.values == 0.5) == 3

    def expand(u):
        ders, first = eval_basis(kv, u, 2)
        full = np.zeros((3, kv.n))
        full[:, first : first + 5] = ders
        return full

    eps = 1e-11
    below = expand(0.5 - eps)
    above = expand(0.5 + eps)
    np.testing.assert_allclose(below[0], above[0], atol=1e-9)
    np.testing.assert_allclose(below[1], above[1], atol=1e-6)
    assert np.max(np.abs(below[2] - above[2])) > 1.0


def test_domain_error():
    kv = make_knots(2, 2)
    with pytest.raises(ValueError):
        eval_basis(kv, -0.1, 0)
    with pytest.raises(ValueError):
        eval_basis(kv, 1.1, 0)


def test_make_patch_counts_and_knots():
    patch = make_patch(4, 2, dim=3)
    kv = patch.knots[0]
    np.testing.assert_allclose(
        kv.values, [0] * 5 + [0.5] * 3 + [1] * 5
    )
    assert kv.n == 8
    assert patch.coefs.shape == (8, 3)

    single = make_patch(4, 1, dim=3)
    assert single.knots[0].n == 5


def test_gauss_rule_basics():
    kv = KnotVector(np.array([-1.0, -1, 1, 1]), 1)
    rule = gauss_rule(kv, 0, 5)
    center = rule.weights[2]
    assert abs(center - 128.0 / 225.0) < 1e-14
    assert np.all(rule.weights > 0)
    assert abs(rule.weights.sum() - 2.0) < 1e-14

    kv01 = KnotVector(np.array([0.0, 0, 1, 1]), 1)
    one = gauss_rule(kv01, 0, 1)
    assert abs(one.points[0] - 0.5) < 1e-15 and abs(one.weights[0] - 1.0) < 1e-15


def test_gauss_exactness_degree_nine():
    kv = make_knots(4, 3)
    total = 0.0
    for e in range(kv.n_elements):
        rule = gauss_rule(kv, e, 5)
        total += np.sum(rule.weights * rule.points**9)
    assert abs(total - 0.1) <= 1e-13 * 0.1


def test_refinement_reproduces_geometry():
    rng = np.random.default_rng(RNG_SEED + 1)
    patch = line_patch(4, 5, np.zeros(3), np.array([2.0, 1.0, -0.5]))
    coefs = patch.coefs + 0.1 * rng.standard_normal(patch.coefs.shape)
    patch = SplinePatch(patch.knots, coefs)
    fine = refine_patch(patch, 2)
    assert fine.knots[0].n_elements == 10

    def position(p, u):
        ders, first = eval_basis(p.knots[0], u, 0)
        return ders[0] @ p.coefs[first : first + p.knots[0].degree + 1]

    for u in rng.uniform(0, 1, 100):
        np.testing.assert_allclose(
            position(patch, u), position(fine, u), atol=1e-12
        )


def test_quadrature_weight_sum_matches_element_measure():
    kv = make_knots(3, 4, 0.0, 2.0)
    for e in range(kv.n_elements):
        rule = gauss_rule(kv, e, 4)
        lo, hi = kv.element_span(e)
        assert abs(rule.weights.sum() - (hi - lo)) < 1e-14
