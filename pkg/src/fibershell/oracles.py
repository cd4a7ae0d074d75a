"""Reference solutions for the disk-plate approximation error analysis.

Closed-form potentials (point-sphere, disk-sphere in the edge-on
orientation, their shell differences, the flat-limit error bound) plus
brute-force quadrature references (disk against a cylindrical shell in
two orientations) and the section-by-section model of an infinite
cylinder against a spherical shell. Everything here integrates the pure
inverse-6 kernel with unit prefactor; LJ coefficients are folded in by
the caller when needed.

The printed source formulas for the point-sphere and disk-sphere cases
carry typos (wrong far field, a dropped square in a denominator
bracket); the forms here are symbolic re-derivations validated against
adaptive quadrature (see tools/derive_laws.py and the test suite).
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import ellipe, ellipkm1

from .laws import dpt_potential, phs_potential
from .quadrature import ToleranceError, quad2d, quad_gk

__all__ = [
    "SphereGeometry",
    "ScalingProbe",
    "dhs_quadrature",
    "point_sphere_potential",
    "disk_sphere_potential",
    "disk_spherical_shell",
    "error_limit",
    "scaling_factor",
    "point_cylshell_potential",
    "disk_cylshell_numeric",
    "cyl_sphershell_sbs",
    "oracle_sweep",
]


@dataclass(frozen=True)
class SphereGeometry:
    """Solid sphere (h = 0, R_S is the radius) or spherical shell
    (R_S is the midsurface radius R_SS, h the thickness)."""

    R_S: float
    h: float = 0.0

    def __post_init__(self):
        if self.R_S <= 0 or self.h < 0:
            raise ValueError("radius must be positive, thickness nonnegative")
        if self.h and self.R_S <= self.h / 2:
            raise ValueError("midsurface radius must exceed h/2")


@dataclass(frozen=True)
class ScalingProbe:
    """Positive potential (or force magnitude) as a function of gap p."""

    potential: Callable[[float], float]
    p: float


def dhs_quadrature(m, d_hs, cos_a, R_B, rtol=1e-10):
    """Disk against a half space by adaptive 2D quadrature over the disk
    area, in polar disk coordinates; reference for the closed forms.

    A disk point at radius r, angle t sits at height d_hs + r*cos_a*cos(t)
    above the half-space surface (|cos_a| = 1 puts the disk edge-on).
    """
    ca = abs(float(cos_a))
    gap = d_hs - R_B * ca
    if gap <= 0:
        raise ValueError(f"disk touches the half space (gap {gap:.3e})")

    def integrand(r, t):
        return r * phs_potential(m, d_hs + r * ca * np.cos(t))

    # Integrand is even about t = pi; the sharp corner (r = R_B, t = pi)
    # becomes a panel corner, which the refinement clusters on.
    val, _ = quad2d(integrand, 0.0, R_B, 0.0, math.pi, rtol=rtol, atol=0.0)
    return 2.0 * val


def point_sphere_potential(D, R_S):
    """Inverse-6 potential of a point at center distance D from a solid
    sphere of radius R_S: 4*pi*R_S^3 / (3*(D^2 - R_S^2)^3)."""
    D = np.asarray(D, float)
    if np.any(D <= R_S):
        raise ValueError("point must lie outside the sphere (D > R_S)")
    return 4.0 * math.pi * R_S**3 / (3.0 * (D * D - R_S * R_S) ** 3)


def disk_sphere_potential(d, R_D, R_S):
    """Inverse-6 potential of a disk (radius R_D) whose plane passes
    through the center of a solid sphere (radius R_S) at center-to-center
    distance d.

    Rationalized form of the definite integral in u = rho^2 of the
    point-sphere law over the disk: the naive antiderivative difference
    cancels four powers of d in the far field and dies at d ~ 1e4, this
    grouping stays at full precision for all admissible d.
    """
    if R_S == 0.0:
        return 0.0 if np.ndim(d) == 0 else np.zeros(np.shape(d))
    d = np.asarray(d, float)
    if np.any(d <= R_D + R_S):
        raise ValueError("disk edge must clear the sphere (d > R_D + R_S)")
    u = R_D * R_D
    dm = d - R_S
    dp = d + R_S
    a3 = (dm * dp) ** 3
    q = (dm - R_D) * (dm + R_D) * (dp - R_D) * (dp + R_D)
    q32 = q * np.sqrt(q)
    s2 = R_S * R_S
    d2 = d * d
    n = -a3 + u * (s2 * s2 + 3.0 * d2 * d2) - 3.0 * (s2 + d2) * u * u + u**3
    w = (2.0 * a3 + u * (5.0 * s2 * s2 - 6.0 * s2 * d2 - 3.0 * d2 * d2)
         - 4.0 * s2 * u * u + u**3)
    val = (4.0 * math.pi**2 / 3.0) * R_S**3 * u * w / (q32 * (q32 - n))
    return val if val.ndim else float(val)


def disk_spherical_shell(d, R_D, R_SS, h):
    """Disk against a spherical shell of midsurface radius R_SS and
    thickness h: difference of two solid-sphere results."""
    return disk_sphere_potential(d, R_D, R_SS + h / 2.0) - disk_sphere_potential(
        d, R_D, max(R_SS - h / 2.0, 0.0)
    )


def error_limit(R_D, h, R_SS):
    """Zero-gap limit of the relative error made by replacing a spherical
    shell with its tangent surrogate plate: 1 - sqrt(1 + 2 R_D/(h + 2 R_SS)).
    Always in (-1, 0); magnitude shrinks as the shell flattens."""
    if min(R_D, h, R_SS) <= 0:
        raise ValueError("all lengths must be positive")
    return 1.0 - math.sqrt(1.0 + 2.0 * R_D / (h + 2.0 * R_SS))


def scaling_factor(probe, p=None, rel_step=1e-3):
    """Local power-law exponent S(p) = -(p/Pi) dPi/dp of a positive
    potential, by Richardson-extrapolated central differences.

    Accepts a ScalingProbe, or a callable plus the gap p.
    """
    if p is not None:
        probe = ScalingProbe(probe, p)
    f, p = probe.potential, probe.p
    base = f(p)
    if base <= 0:
        raise ValueError("scaling factor needs a positive potential")
    h = rel_step * p

    def central(step):
        return (f(p + step) - f(p - step)) / (2.0 * step)

    deriv = (4.0 * central(h / 2.0) - central(h)) / 3.0
    return -p * deriv / base


def _i52(sig, r):
    """Integral over t of (sig^2 + r^2 - 2 sig r cos t)^(-5/2) over a full
    period, sig > r > 0, via complete elliptic integrals. Formed from the
    gap sig - r directly so the modulus stays accurate as it approaches 1."""
    S = (sig + r) ** 2
    D = (sig - r) ** 2
    mc = D / S
    E = ellipe(1.0 - mc)
    K = ellipkm1(mc)
    return 8.0 / (3.0 * D * np.sqrt(S)) * (E / D + (2.0 * E - K) / (2.0 * S))


def point_cylshell_potential(s, R_C, h, rtol=1e-10):
    """Inverse-6 potential of a point at distance s from the axis of an
    infinite cylindrical shell (midsurface radius R_C, thickness h).

    The axial direction integrates to (3 pi/8) rho^-5 per material line;
    the circumferential direction has an elliptic closed form, leaving a
    single radial quadrature across the wall. Vectorized over s.
    """
    s = np.atleast_1d(np.asarray(s, float))
    if np.any(s <= R_C + h / 2.0):
        raise ValueError("point must lie outside the shell")
    out = np.empty_like(s)
    for i, si in enumerate(s):
        def radial(r, si=si):
            return r * _i52(si, r)

        val, _ = quad_gk(radial, R_C - h / 2.0, R_C + h / 2.0, rtol=rtol, atol=0.0)
        out[i] = val
    out *= 3.0 * math.pi / 8.0
    return out if out.size > 1 else float(out[0])


def disk_cylshell_numeric(orientation, g, R_D, R_C, h, rtol=1e-6):
    """Inverse-6 potential of a disk near a cylindrical shell, by nested
    adaptive quadrature, at smallest surface gap g.

    orientation "parallel": the disk lies in a cross-section plane of the
    cylinder (it faces the curved section). orientation "perpendicular":
    the disk's plane contains the cylinder axis (it faces a flat
    section). In both the disk center sits at axis distance
    R_C + h/2 + R_D + g, with the disk's plane containing the radial
    direction, matching the surrogate-plate comparison at cos(alpha) = 1.
    """
    if g <= 0:
        raise ValueError("surface gap must be positive")
    s_c = R_C + h / 2.0 + R_D + g

    if orientation == "parallel":
        def integrand(phi):
            sig = s_c - R_D * np.cos(phi)
            arg = R_D * np.sin(phi) / (2.0 * np.sqrt(sig * s_c))
            gam = 2.0 * np.arcsin(np.clip(arg, 0.0, 1.0))
            vals = point_cylshell_potential(sig.ravel(), R_C, h)
            return 2.0 * sig * gam * np.reshape(vals, sig.shape) * R_D * np.sin(phi)

        val, _ = quad_gk(integrand, 0.0, math.pi, rtol=rtol, atol=0.0)
    elif orientation == "perpendicular":
        def integrand(tau):
            sig = s_c + R_D * np.sin(tau)
            vals = point_cylshell_potential(sig.ravel(), R_C, h)
            return 2.0 * R_D**2 * np.cos(tau) ** 2 * np.reshape(vals, sig.shape)

        val, _ = quad_gk(integrand, -math.pi / 2.0, math.pi / 2.0, rtol=rtol, atol=0.0)
    else:
        raise ValueError("orientation must be 'parallel' or 'perpendicular'")
    return val


def cyl_sphershell_sbs(
    g0,
    R_C,
    R_SS,
    h,
    mode="exact-angle",
    quantity="potential",
    window=None,
    rtol=1e-9,
    tail=1e-12,
):
    """Section-by-section potential (or force) of an infinite straight
    cylinder of radius R_C at smallest surface gap g0 from a spherical
    shell (midsurface R_SS, thickness h), integrating the disk-plate law
    along the cylinder axis.

    mode "exact-angle" uses the section tilt cos(alpha) from the local
    surface normal; "unit-angle" sets cos(alpha) = 1 everywhere. With
    window=None the axis integral is truncated adaptively once the
    integrand falls below `tail` times its peak; a finite window caps the
    half-length instead, modeling a fiber of length 2*window (at gaps far
    beyond the window this shifts the force decay exponent from 4 to 5).
    The force is the gap derivative of the potential by
    Richardson-extrapolated central differences.
    """
    if g0 <= 0:
        raise ValueError("gap must be positive")
    if mode not in ("exact-angle", "unit-angle"):
        raise ValueError("mode must be 'exact-angle' or 'unit-angle'")

    if quantity == "force":
        step = 1e-3 * g0

        def pot(g):
            return cyl_sphershell_sbs(
                g, R_C, R_SS, h, mode=mode, window=window, rtol=rtol, tail=tail
            )

        def central(s):
            return (pot(g0 + s) - pot(g0 - s)) / (2.0 * s)

        return -(4.0 * central(step / 2.0) - central(step)) / 3.0
    if quantity != "potential":
        raise ValueError("quantity must be 'potential' or 'force'")

    z_a = R_SS + h / 2.0 + R_C + g0

    def integrand(x):
        rr = np.hypot(x, z_a)
        dd = rr - R_SS
        ca = z_a / rr if mode == "exact-angle" else np.ones_like(rr)
        return dpt_potential(6, dd, ca, h, R_C)

    peak = float(integrand(np.array(0.0)))
    width = math.sqrt(2.0 * z_a * g0 + g0 * g0)
    edges = [0.0]
    step = width / 2.0
    for _ in range(200):
        nxt = edges[-1] + step
        if window is not None and nxt >= window:
            edges.append(window)
            break
        edges.append(nxt)
        step *= 1.5
        if float(integrand(np.array(edges[-1]))) < tail * peak:
            break
    else:
        raise ToleranceError(None, math.inf)

    val, _ = quad_gk(
        integrand, 0.0, edges[-1], points=edges[1:-1],
        rtol=rtol, atol=tail * peak * max(edges[-1], 1.0),
    )
    return 2.0 * val


def oracle_sweep(kind, gaps, R_ratio=10.0, h_ratio=1.0, R_D=1.0):
    """Error curve for one figure-style comparison over a gap grid
    (gap_ratio = g/R_D). Returns rows of (gap_ratio, value, relative_error).

    kinds: "ds-dss" (shell vs comparable solid sphere), "dss-dpt" (plate
    approximation of a spherical shell), "dc-parallel" / "dc-perpendicular"
    (plate approximation of a cylindrical shell), "ic-ss" (unit-angle vs
    exact-angle section-by-section cylinder-sphere force).
    """
    h = h_ratio * R_D
    R_big = R_ratio * R_D
    rows = []
    for gr in gaps:
        g = gr * R_D
        if kind == "ds-dss":
            dc = R_big + h / 2.0 + R_D + g
            full = disk_sphere_potential(dc, R_D, R_big + h / 2.0)
            shell = disk_spherical_shell(dc, R_D, R_big, h)
            rows.append((gr, shell, (shell - full) / shell))
        elif kind == "dss-dpt":
            dc = R_big + h / 2.0 + R_D + g
            shell = disk_spherical_shell(dc, R_D, R_big, h)
            plate = dpt_potential(6, dc - R_big, 1.0, h, R_D)
            rows.append((gr, shell, (shell - plate) / shell))
        elif kind in ("dc-parallel", "dc-perpendicular"):
            orient = kind.split("-")[1]
            ref = disk_cylshell_numeric(orient, g, R_D, R_big, h)
            plate = dpt_potential(6, g + R_D + h / 2.0, 1.0, h, R_D)
            rows.append((gr, ref, (ref - plate) / ref))
        elif kind == "ic-ss":
            exact = cyl_sphershell_sbs(g, R_D, R_big, h, mode="exact-angle",
                                       quantity="force")
            unit = cyl_sphershell_sbs(g, R_D, R_big, h, mode="unit-angle",
                                      quantity="force")
            rows.append((gr, exact, (unit - exact) / exact))
        else:
            raise ValueError(f"unknown sweep kind: {kind}")
    return rows
