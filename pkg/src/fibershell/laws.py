"""Coarse-grained adhesion laws for a rigid circular cross-section (disk)
against a half space / infinite plate, and the combined LJ disk-plate law
used by the beam-shell contact.

All closed forms are written in the cancellation-free grouping

    Pi(d, w) = K * d^-a * (1-q)^-b * P(q),   q = R^2 w / d^2,  w = cos^2(alpha)

with (a, b, P) = (3, 3/2, 1) for the inverse-6 kernel and
(9, 15/2, 64 + 240q + 120q^2 + 5q^3) for the inverse-12 kernel (the
latter re-derived by disk integration of the half-space law; see
tools/derive_laws.py). Angle derivatives are taken with respect to
w = cos^2(alpha), so the reduced derivatives (divided by cos(alpha))
stay analytic at alpha -> pi/2.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .jit import njit

__all__ = [
    "PointPairLaw",
    "LJParams",
    "SurrogateLaw",
    "OverlapError",
    "pp_potential",
    "phs_potential",
    "dhs_potential",
    "dpt_potential",
    "dspt_eval",
    "DsptValues",
]


class OverlapError(ValueError):
    """Disk touches or penetrates the plate; carries the violating gap."""

    def __init__(self, gap):
        super().__init__(f"disk overlaps the plate (gap {gap:.6e} <= 0)")
        self.gap = gap


@dataclass(frozen=True)
class PointPairLaw:
    """Inverse-power point pair potential k_m * r^-m."""

    m: int
    k_m: float


@dataclass(frozen=True)
class LJParams:
    eps: float
    sigma: float

    def __post_init__(self):
        if self.eps <= 0 or self.sigma <= 0:
            raise ValueError("eps and sigma must be positive")

    @property
    def k6(self):
        return -4.0 * self.eps * self.sigma**6

    @property
    def k12(self):
        return 4.0 * self.eps * self.sigma**12


@dataclass(frozen=True)
class SurrogateLaw:
    """Disk-plate LJ law: disk radius R_B, plate thickness h, number
    densities beta_B (fiber) and beta_S (substrate), LJ parameters."""

    R_B: float
    h: float
    beta_B: float
    beta_S: float
    lj: LJParams

    def __post_init__(self):
        if self.R_B <= 0 or self.h <= 0:
            raise ValueError("R_B and h must be positive")

    @property
    def constants(self):
        """(R_B, h, c6, c12) with densities folded into the prefactors."""
        b = self.beta_B * self.beta_S
        return self.R_B, self.h, b * self.lj.k6, b * self.lj.k12

    def equilibrium_distance(self, cos_a=1.0, bracket=None):
        """Root of phi_d in d (midsurface distance) at fixed cos(alpha)."""
        from scipy.optimize import brentq

        lo = self.h / 2 + self.R_B * abs(cos_a)
        if bracket is None:
            bracket = (lo + 1e-9 * self.lj.sigma, lo + 20.0 * self.lj.sigma)
        return brentq(lambda d: dspt_eval(self, d, cos_a).phi_d, *bracket, xtol=1e-15)


def pp_potential(law, r):
    """Point pair energy at separation r."""
    r = np.asarray(r, float)
    if np.any(r <= 0):
        raise ValueError("separation must be positive")
    if isinstance(law, LJParams):
        s6 = (law.sigma / r) ** 6
        return 4.0 * law.eps * (s6 * s6 - s6)
    return law.k_m * r ** (-float(law.m))


def phs_potential(m, z):
    """Point against half space: the point law integrated over z' <= 0."""
    z = np.asarray(z, float)
    if np.any(z <= 0):
        raise ValueError("distance must be positive")
    if m <= 3:
        raise ValueError("half-space integral needs m > 3")
    return 2.0 * math.pi * z ** (3.0 - m) / ((m - 2) * (m - 3))


@njit
def _dhs_core(m6, d, w, R):
    """Potential and partials for one kernel. Returns
    (pi, pi_d, pi_dd, pi_w, pi_dw); w = cos^2(alpha)."""
    q = R * R * w / (d * d)
    om = 1.0 - q
    if m6:
        a = 3.0
        b = 1.5
        K = math.pi**2 * R * R / 6.0
        P = 1.0 + 0.0 * q
        P1 = 0.0 * q
        P2 = 0.0 * q
    else:
        a = 9.0
        b = 7.5
        K = math.pi**2 * R * R / 2880.0
        P = 64.0 + q * (240.0 + q * (120.0 + 5.0 * q))
        P1 = 240.0 + q * (240.0 + 15.0 * q)
        P2 = 240.0 + 30.0 * q
    f = om**-b
    G = f * P
    G1 = f * (b * P / om + P1)
    G2 = f * (b * (b + 1.0) * P / (om * om) + 2.0 * b * P1 / om + P2)
    qd = -2.0 * q / d
    qdd = 6.0 * q / (d * d)
    qw = R * R / (d * d)
    qdw = -2.0 * R * R / (d * d * d)
    da = d**-a
    pi = K * da * G
    pi_d = K * (-a * da / d * G + da * G1 * qd)
    pi_dd = K * (
        a * (a + 1.0) * da / (d * d) * G
        - 2.0 * a * da / d * G1 * qd
        + da * (G2 * qd * qd + G1 * qdd)
    )
    pi_w = K * da * G1 * qw
    pi_dw = K * (-a * da / d * G1 * qw + da * (G2 * qd * qw + G1 * qdw))
    return pi, pi_d, pi_dd, pi_w, pi_dw


def dhs_potential(m, d_hs, cos_a, R_B):
    """Disk at centroid distance d_hs from a half-space surface, tilted by
    alpha (cos_a = cos(alpha)); closed form for m in {6, 12}.

    Accepts scalars or broadcast ndarrays for d_hs and cos_a.
    """
    if m not in (6, 12):
        raise ValueError("closed forms available for m in {6, 12}")
    d, c = np.broadcast_arrays(np.asarray(d_hs, float), np.asarray(cos_a, float))
    gap = d - R_B * np.abs(c)
    if np.any(gap <= 0):
        raise OverlapError(float(np.min(gap)))
    if d.ndim == 0:
        return _dhs_core(m == 6, float(d), float(c) ** 2, float(R_B))[0]
    return _dhs_core(m == 6, np.ascontiguousarray(d), np.ascontiguousarray(c * c), float(R_B))[0]


def dpt_potential(m, d_pt, cos_a, h, R_B):
    """Disk against an infinite plate of thickness h whose midplane lies at
    distance d_pt from the disk centroid: difference of two half spaces."""
    return dhs_potential(m, d_pt - h / 2.0, cos_a, R_B) - dhs_potential(
        m, d_pt + h / 2.0, cos_a, R_B
    )


class DsptValues(NamedTuple):
    phi: float
    phi_d: float
    phi_dd: float
    phi_cos_r: float  # phi_{,cos a} / cos a
    phi_dcos_r: float  # phi_{,d cos a} / cos a


@njit
def dspt_derivs(d, w, R, h, c6, c12):
    """Combined LJ disk-plate law and partials at midsurface distance d,
    w = cos^2(alpha). Returns (phi, phi_d, phi_dd, phi_w, phi_dw)."""
    dn = d - 0.5 * h
    df = d + 0.5 * h
    p6n = _dhs_core(True, dn, w, R)
    p6f = _dhs_core(True, df, w, R)
    p12n = _dhs_core(False, dn, w, R)
    p12f = _dhs_core(False, df, w, R)
    out = (
        c6 * (p6n[0] - p6f[0]) + c12 * (p12n[0] - p12f[0]),
        c6 * (p6n[1] - p6f[1]) + c12 * (p12n[1] - p12f[1]),
        c6 * (p6n[2] - p6f[2]) + c12 * (p12n[2] - p12f[2]),
        c6 * (p6n[3] - p6f[3]) + c12 * (p12n[3] - p12f[3]),
        c6 * (p6n[4] - p6f[4]) + c12 * (p12n[4] - p12f[4]),
    )
    return out


def dspt_eval(law: SurrogateLaw, d, cos_a) -> DsptValues:
    """Evaluate the disk-surrogate-plate law at midsurface distance d and
    disk tilt cos_a, with the derivatives the contact formulations need.

    The reduced angle derivatives (phi_cos_r = phi_{,cos a}/cos a and the
    mixed one) come out of the chain rule through w = cos^2 a, so they are
    exact at cos_a = 0 and 1 rather than a 0/0 division.
    """
    R, h, c6, c12 = law.constants
    gap = d - h / 2.0 - R * abs(cos_a)
    if gap <= 0:
        raise OverlapError(gap)
    phi, phi_d, phi_dd, phi_w, phi_dw = dspt_derivs(
        float(d), float(cos_a) ** 2, R, h, c6, c12
    )
    return DsptValues(phi, phi_d, phi_dd, 2.0 * phi_w, 2.0 * phi_dw)
