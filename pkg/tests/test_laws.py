"""Closed-form section-plate laws against quadrature twins and finite
differences."""

import math

import numpy as np
import pytest

from fibershell.laws import (
    LJParams,
    OverlapError,
    PointPairLaw,
    SurrogateLaw,
    dhs_potential,
    dpt_potential,
    dspt_eval,
    phs_potential,
    pp_potential,
)
from fibershell.quadrature import quad2d

LAW = SurrogateLaw(R_B=0.1, h=0.1, beta_B=2.3, beta_S=1.7, lj=LJParams(0.5, 0.37))


def dhs_by_quadrature(m, d, cos_a, R, rtol=1e-10):
    """Half-space law integrated over the tilted disk, in polar coordinates."""

    def f(rho, psi):
        z = d + rho * np.cos(psi) * cos_a
        return rho * 2 * math.pi * z ** (3.0 - m) / ((m - 2) * (m - 3))

    val, _ = quad2d(f, 0, R, 0, 2 * math.pi, rtol=rtol, atol=1e-300, max_panels=65536)
    return val


def test_lj_point_pair():
    lj = LAW.lj
    assert pp_potential(lj, lj.sigma) == 0.0
    rmin = 2 ** (1 / 6) * lj.sigma
    assert abs(pp_potential(lj, rmin) + lj.eps) < 1e-15
    assert pp_potential(lj, 0.9 * lj.sigma) > 0
    law = PointPairLaw(6, -2.0)
    assert abs(pp_potential(law, 2.0) + 2.0 / 64.0) < 1e-18
    with pytest.raises(ValueError):
        pp_potential(lj, 0.0)


def test_phs_values():
    assert abs(phs_potential(6, 2.0) - math.pi / 6 / 8) < 1e-17
    assert abs(phs_potential(12, 1.0) - math.pi / 45) < 1e-16
    with pytest.raises(ValueError):
        phs_potential(3, 1.0)
    with pytest.raises(ValueError):
        phs_potential(6, -1.0)


@pytest.mark.parametrize("m", [6, 12])
def test_dhs_matches_quadrature(m):
    gaps = np.geomspace(1e-3, 10.0, 5)
    alphas = np.linspace(0.0, math.pi / 2, 5)
    for g in gaps:
        for a in alphas:
            ca = math.cos(a)
            d = g + ca  # R_B = 1
            cf = dhs_potential(m, d, ca, 1.0)
            q = dhs_by_quadrature(m, d, ca, 1.0)
            assert abs(cf - q) <= 1e-8 * abs(q)


def test_dhs_reduces_to_phs_at_face_on():
    # cos(alpha) = 0: every disk point sits at distance d
    for m in (6, 12):
        v = dhs_potential(m, 0.7, 0.0, 0.25)
        assert abs(v - math.pi * 0.25**2 * phs_potential(m, 0.7)) < 1e-15 * abs(v)


def test_dpt_difference_identity_bitwise():
    for d, ca in [(0.3, 0.5), (0.9, 1.0), (0.2, 0.0), (5.0, 0.3)]:
        lhs = dpt_potential(6, d, ca, LAW.h, LAW.R_B)
        rhs = dhs_potential(6, d - LAW.h / 2, ca, LAW.R_B) - dhs_potential(
            6, d + LAW.h / 2, ca, LAW.R_B
        )
        assert lhs == rhs


def test_dspt_partials_match_finite_differences():
    # Relative to the local derivative scale: the derivatives themselves
    # cross zero inside the grid (adhesive well), where a pure-relative
    # comparison would divide by an arbitrarily small true value.
    worst = 0.0
    for d in np.geomspace(0.16, 2.0, 20):
        for ca in np.linspace(0.0, 1.0, 20):
            gap = d - LAW.h / 2 - LAW.R_B * ca
            if gap <= 1e-3:
                continue
            v = dspt_eval(LAW, d, ca)
            hd = 1e-5 * gap
            vp, vm = dspt_eval(LAW, d + hd, ca), dspt_eval(LAW, d - hd, ca)
            sc_d = max(abs(v.phi_d), abs(v.phi) / gap)
            sc_dd = max(abs(v.phi_dd), abs(v.phi_d) / gap)
            worst = max(worst, abs((vp.phi - vm.phi) / (2 * hd) - v.phi_d) / sc_d)
            worst = max(
                worst, abs((vp.phi_d - vm.phi_d) / (2 * hd) - v.phi_dd) / sc_dd
            )
            hc = min(1e-5 * gap / LAW.R_B, 1e-4)
            if hc < ca < 1.0 - hc:
                vpc = dspt_eval(LAW, d, ca + hc)
                vmc = dspt_eval(LAW, d, ca - hc)
                fd_c = (vpc.phi - vmc.phi) / (2 * hc)
                ref = v.phi_cos_r * ca
                sc_c = max(abs(ref), abs(v.phi))
                worst = max(worst, abs(fd_c - ref) / sc_c)
                fd_dc = (vpc.phi_d - vmc.phi_d) / (2 * hc)
                ref = v.phi_dcos_r * ca
                sc_dc = max(abs(ref), abs(v.phi_d), abs(v.phi) / gap)
                worst = max(worst, abs(fd_dc - ref) / sc_dc)
    assert worst <= 1e-7


def test_reduced_angle_derivative_consistency():
    # phi_cos_r * cos(a) equals the cos(a)-partial; Richardson FD cross-check
    for d, ca in [(0.3, 0.5), (0.5, 0.9), (0.25, 0.05), (0.4, 1e-3)]:
        v = dspt_eval(LAW, d, ca)
        h = 5e-4

        def central(step):
            return (dspt_eval(LAW, d, ca + step).phi - dspt_eval(LAW, d, ca - step).phi) / (
                2 * step
            )

        fd = (4 * central(h / 2) - central(h)) / 3
        ref = v.phi_cos_r * ca
        scale = max(abs(dspt_eval(LAW, d, ca).phi) / max(ca, h), abs(ref))
        assert abs(fd - ref) <= 1e-10 * scale


def test_dspt_finite_at_angle_extremes():
    for ca in (0.0, 1.0):
        v = dspt_eval(LAW, 0.5, ca)
        assert all(np.isfinite(x) for x in v)


def test_overlap_error_carries_gap():
    with pytest.raises(OverlapError) as exc:
        dspt_eval(LAW, 0.12, 1.0)
    assert exc.value.gap == pytest.approx(0.12 - 0.05 - 0.1, abs=1e-15)
    with pytest.raises(OverlapError):
        dhs_potential(6, 0.05, 1.0, 0.1)


def test_density_folding():
    R, h, c6, c12 = LAW.constants
    assert c6 == LAW.beta_B * LAW.beta_S * LAW.lj.k6
    assert c12 == LAW.beta_B * LAW.beta_S * LAW.lj.k12
    doubled = SurrogateLaw(LAW.R_B, LAW.h, 2 * LAW.beta_B, LAW.beta_S, LAW.lj)
    d, ca = 0.4, 0.7
    assert dspt_eval(doubled, d, ca).phi == pytest.approx(
        2 * dspt_eval(LAW, d, ca).phi, rel=1e-15
    )


def test_equilibrium_distance():
    z0 = LAW.equilibrium_distance(1.0)
    assert abs(dspt_eval(LAW, z0, 1.0).phi_d) < 1e-12
    assert dspt_eval(LAW, z0, 1.0).phi < 0  # adhesive well
    assert dspt_eval(LAW, z0, 1.0).phi_dd > 0
