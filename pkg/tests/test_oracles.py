"""Reference potentials against brute-force quadrature and published
limit values."""

import math

import numpy as np
import pytest

from fibershell import oracles as oc
from fibershell.laws import dpt_potential, phs_potential
from fibershell.quadrature import ToleranceError, quad2d, quad_gk


def point_sphere_by_quadrature(D, R_S):
    """Axisymmetric 2D quadrature of r^-6 over the solid sphere."""

    def f(r, th):
        sep2 = D * D + r * r - 2 * D * r * np.cos(th)
        return 2 * math.pi * r * r * np.sin(th) * sep2**-3

    val, _ = quad2d(f, 0, R_S, 0, math.pi, rtol=1e-10, atol=1e-300)
    return val


def disk_sphere_by_quadrature(d, R_D, R_S):
    def f(rho, psi):
        D2 = d * d + rho * rho - 2 * d * rho * np.cos(psi)
        return rho * 4 * math.pi * R_S**3 / (3 * (D2 - R_S * R_S) ** 3)

    val, _ = quad2d(f, 0, R_D, 0, 2 * math.pi, rtol=1e-11, atol=1e-300)
    return val


def test_point_sphere_example_and_far_field():
    assert oc.point_sphere_potential(2.0, 1.0) == pytest.approx(4 * math.pi / 81, rel=1e-14)
    far = oc.point_sphere_potential(100.0, 1.0)
    assert far == pytest.approx(4 * math.pi / 3 * 1e-12, rel=1e-3)
    with pytest.raises(ValueError):
        oc.point_sphere_potential(0.9, 1.0)


def test_point_sphere_against_quadrature():
    rng = np.random.default_rng(4)
    for _ in range(10):
        R_S = rng.uniform(0.3, 2.0)
        D = R_S * rng.uniform(1.05, 5.0)
        cf = oc.point_sphere_potential(D, R_S)
        q = point_sphere_by_quadrature(D, R_S)
        assert abs(cf - q) <= 1e-6 * q


def test_disk_sphere_example_far_field_point_limit():
    cf = oc.disk_sphere_potential(2.5, 1.0, 1.0)
    q = disk_sphere_by_quadrature(2.5, 1.0, 1.0)
    assert abs(cf - q) <= 1e-8 * q
    far = oc.disk_sphere_potential(100.0, 1.0, 1.0)
    assert far == pytest.approx(math.pi * 4 * math.pi / 3 * 1e-12, rel=1e-3)
    tiny = oc.disk_sphere_potential(2.5, 1e-4, 1.0) / (math.pi * 1e-8)
    assert tiny == pytest.approx(oc.point_sphere_potential(2.5, 1.0), rel=1e-6)
    with pytest.raises(ValueError):
        oc.disk_sphere_potential(1.9, 1.0, 1.0)


def test_disk_spherical_shell_limits():
    # vanishing inner sphere: equals the comparable solid sphere
    v = oc.disk_spherical_shell(5.0, 1.0, 1.0, 2.0)
    assert v == pytest.approx(oc.disk_sphere_potential(5.0, 1.0, 2.0), rel=1e-14)
    # vanishing thickness
    assert oc.disk_spherical_shell(5.0, 1.0, 1.0, 0.0) == 0.0
    # shell approaches the comparable sphere as the gap closes
    R_SS, h, R_D = 10.0, 1.0, 1.0
    rel = []
    for g in (1.0, 0.1, 0.01, 0.001):
        dc = R_SS + h / 2 + R_D + g
        full = oc.disk_sphere_potential(dc, R_D, R_SS + h / 2)
        shell = oc.disk_spherical_shell(dc, R_D, R_SS, h)
        rel.append((shell - full) / shell)
    assert all(abs(r2) < abs(r1) for r1, r2 in zip(rel, rel[1:]))
    assert abs(rel[-1]) < 1e-2


def test_error_limit_values():
    assert oc.error_limit(1, 1, 10) == pytest.approx(1 - math.sqrt(23 / 21), rel=1e-14)
    prev = None
    for rss in (5.0, 10.0, 50.0, 100.0, 1000.0):
        val = oc.error_limit(1.0, 1.0, rss)
        assert -1.0 < val < 0.0
        if prev is not None:
            assert abs(val) < abs(prev)
        prev = val
    with pytest.raises(ValueError):
        oc.error_limit(-1.0, 1.0, 1.0)


def test_scaling_factor_power_laws():
    assert oc.scaling_factor(lambda p: p**-6.0, 3.1) == pytest.approx(6.0, abs=1e-8)
    assert oc.scaling_factor(lambda p: phs_potential(6, p), 1.3) == pytest.approx(
        3.0, abs=1e-8
    )
    probe = oc.ScalingProbe(lambda p: p**-2.0, 0.7)
    assert oc.scaling_factor(probe) == pytest.approx(2.0, abs=1e-8)
    with pytest.raises(ValueError):
        oc.scaling_factor(lambda p: -p, 1.0)


def test_point_cylshell_against_quadrature():
    def by_quad(s, RC, h):
        def f(r, th):
            rho2 = s * s + r * r - 2 * s * r * np.cos(th)
            return r * rho2**-2.5

        v, _ = quad2d(f, RC - h / 2, RC + h / 2, 0, 2 * math.pi, rtol=1e-10, atol=1e-300)
        return 3 * math.pi / 8 * v

    for s, RC, h in [(2.3, 1.0, 0.2), (1.2, 1.0, 0.1), (5.0, 2.0, 1.0)]:
        a = oc.point_cylshell_potential(s, RC, h)
        assert abs(a - by_quad(s, RC, h)) <= 1e-8 * a
    with pytest.raises(ValueError):
        oc.point_cylshell_potential(1.0, 1.0, 0.2)


def test_disk_cylshell_flat_limit_and_trends():
    R_D, h, g = 1.0, 1.0, 0.3
    plate = dpt_potential(6, g + R_D + h / 2, 1.0, h, R_D)
    for orient in ("parallel", "perpendicular"):
        v = oc.disk_cylshell_numeric(orient, g, R_D, 1e6, h)
        assert abs(v - plate) <= 1e-3 * plate

    R_C = 10.0
    errs_perp, errs_par = [], []
    for g in (1.0, 0.1, 0.01, 0.001):
        plate = dpt_potential(6, g + R_D + h / 2, 1.0, h, R_D)
        perp = oc.disk_cylshell_numeric("perpendicular", g, R_D, R_C, h)
        par = oc.disk_cylshell_numeric("parallel", g, R_D, R_C, h)
        errs_perp.append((perp - plate) / perp)
        errs_par.append((par - plate) / par)
    assert all(abs(b) < abs(a) for a, b in zip(errs_perp, errs_perp[1:]))
    assert abs(errs_perp[-1]) < 1e-3
    lim = oc.error_limit(R_D, h, R_C)
    assert abs(errs_par[-1] - lim) <= 0.1 * abs(lim)
    with pytest.raises(ValueError):
        oc.disk_cylshell_numeric("diagonal", 0.1, R_D, R_C, h)


def test_cyl_sphershell_modes_and_scaling():
    S = oc.scaling_factor(
        lambda p: oc.cyl_sphershell_sbs(p, 1.0, 10.0, 1.0, quantity="force"), 1e-3
    )
    assert S == pytest.approx(2.0, abs=0.1)
    exact = oc.cyl_sphershell_sbs(1e-2, 1.0, 10.0, 1.0, mode="exact-angle")
    unit = oc.cyl_sphershell_sbs(1e-2, 1.0, 10.0, 1.0, mode="unit-angle")
    assert exact != unit
    assert exact < unit  # tilt reduces the eclipsed area, hence the pull
    with pytest.raises(ValueError):
        oc.cyl_sphershell_sbs(-1.0, 1.0, 10.0, 1.0)


def test_closed_forms_against_quadrature_many_samples():
    rng = np.random.default_rng(11)
    checked = 0
    while checked < 50:
        R_S = rng.uniform(0.2, 2.0)
        R_D = rng.uniform(0.05, 1.5)
        d = (R_D + R_S) * rng.uniform(1.02, 3.0)
        cf = oc.disk_sphere_potential(d, R_D, R_S)
        q = disk_sphere_by_quadrature(d, R_D, R_S)
        assert abs(cf - q) <= 1e-6 * q
        checked += 1


def test_oracle_sweep_rows():
    gaps = [1.0, 0.1, 0.01]
    rows = oc.oracle_sweep("dss-dpt", gaps, R_ratio=10.0, h_ratio=1.0)
    assert len(rows) == 3
    grs, vals, errs = zip(*rows)
    assert grs == tuple(gaps)
    assert all(v > 0 for v in vals)
    assert all(abs(b) > abs(a) for a, b in zip(errs, errs[1:])) or all(
        abs(b) < 1 for b in errs
    )
    with pytest.raises(ValueError):
        oc.oracle_sweep("bogus", gaps)


def test_tolerance_error_carries_estimate():
    def noisy(x):
        rng = np.random.default_rng(np.int64(np.sum(x * 1e6)) % (2**31))
        return 1.0 + 0.5 * rng.standard_normal(x.shape)

    with pytest.raises(ToleranceError) as exc:
        quad_gk(noisy, 0.0, 1.0, rtol=1e-12, atol=1e-15, max_panels=64)
    assert exc.value.value is not None
    assert np.isfinite(exc.value.error)
