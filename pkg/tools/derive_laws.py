"""Symbolic/numeric derivation of the closed-form adhesion laws.

Run offline; the simplified results below are frozen into
fibershell.laws and fibershell.oracles.  Kept in the repo so the
derivations can be repeated and audited.

Angular integrals use the classical reduction

    int_0^{2pi} (A - B cos t)^(-n) dt
        = 2 pi (A^2 - B^2)^(-n/2) P_{n-1}(A / sqrt(A^2 - B^2))

(P = Legendre polynomial); the remaining radial integrals are
elementary.  Everything is cross-checked against brute-force nested
quadrature at 25 digits.

Frozen results (q = (R c / d)^2, c = cos of the disk tilt angle):

  disk / half-space, inverse-6 kernel  (disk radius R, centroid height d)
      Pi6  = pi^2 R^2 / (6 d^3 (1-q)^(3/2))

  disk / half-space, inverse-12 kernel
      Pi12 = pi^2 R^2 (64 + 240 q + 120 q^2 + 5 q^3)
             / (2880 d^9 (1-q)^(15/2))

  point / solid sphere, inverse-6 (centre distance D, sphere radius S)
      Pi_ps = (4 pi / 3) S^3 / (D^2 - S^2)^3

  disk / solid sphere, inverse-6 (disk radius RD perpendicular to the
  centre line, centre distance d, sphere radius S); with
  a = d^2 - S^2, b = -(d^2 + S^2), Q(u) = u^2 + 2 b u + a^2:
      Pi_ds = (4 pi / 3) S^3 (Phi(RD^2) - Phi(0))
      Phi(u) = pi [ (u+b) / (4 S^4 sqrt(Q))
                    - 2 d^2 / Q^(3/2)
                    + b (u+b) / (2 S^2 Q^(3/2)) ]
"""

import mpmath as mp
import sympy as sp

mp.mp.dps = 25


def angular(n, A, B):
    x = A / sp.sqrt(A**2 - B**2)
    return 2 * sp.pi * (A**2 - B**2) ** sp.Rational(-n, 2) * sp.legendre(n - 1, x)


def derive_disk_half_space(m):
    """Radial integral done via u = r^2 and w = d^2 - u."""
    r, d, c, R, w = sp.symbols("r d c R w", positive=True)
    kern_coeff = sp.Rational(2, (m - 2) * (m - 3))  # 2 pi / ((m-2)(m-3)) / pi
    ang = sp.simplify(sp.expand(angular(m - 3, d, r * c)))
    num, den = sp.fraction(sp.cancel(ang / (2 * sp.pi)))
    # den is (d^2 - c^2 r^2)^((2m-7)/2) up to rational factor; rebuild in w
    numw = sp.expand(num.subs(r**2, (d**2 - w) / c**2))
    ratio = sp.simplify(den / (d**2 - c**2 * r**2) ** sp.Rational(2 * m - 7, 2))
    anti = sp.integrate(-numw * w ** sp.Rational(-(2 * m - 7), 2) / ratio, w)
    total = sp.pi * kern_coeff / (2 * c**2) * (
        anti.subs(w, d**2 - c**2 * R**2) - anti.subs(w, d**2)
    )
    return sp.simplify(sp.factor(sp.radsimp(total)))


def frozen_disk_half_space(m, d, c, R):
    q = (R * c / d) ** 2
    if m == 6:
        return mp.pi**2 * R**2 / (6 * d**3 * (1 - q) ** mp.mpf("1.5"))
    P = 64 + 240 * q + 120 * q**2 + 5 * q**3
    return mp.pi**2 * R**2 * P / (2880 * d**9 * (1 - q) ** mp.mpf("7.5"))


def frozen_disk_sphere(d, S, RD):
    a = d**2 - S**2
    b = -(d**2 + S**2)

    def Phi(u):
        Q = u**2 + 2 * b * u + a**2
        sQ = mp.sqrt(Q)
        return mp.pi * (
            (u + b) / (4 * S**4 * sQ)
            - 2 * d**2 / (sQ * Q)
            + b * (u + b) / (2 * S**2 * sQ * Q)
        )

    return mp.mpf(4) / 3 * mp.pi * S**3 * (Phi(RD**2) - Phi(0))


if __name__ == "__main__":
    for m in (6, 12):
        print(f"disk-half-space m={m}:", derive_disk_half_space(m))
        for dv, cv, Rv in [(1.5, 0.7, 1.0), (3.0, 0.2, 1.0), (1.2, 0.95, 1.0), (2.0, 0.0, 1.0)]:
            kern = lambda rr, tt: (
                2 * mp.pi / ((m - 2) * (m - 3)) * (dv - rr * cv * mp.cos(tt)) ** (3 - m) * rr
            )
            quad = mp.quad(
                lambda rr: mp.quad(lambda tt: kern(rr, tt), [0, mp.pi, 2 * mp.pi]),
                [0, Rv], maxdegree=8,
            )
            val = frozen_disk_half_space(m, mp.mpf(dv), mp.mpf(cv), mp.mpf(Rv))
            print(f"  d={dv} c={cv}: rel err vs quad = {mp.nstr(abs(val-quad)/abs(quad), 3)}")

    print("disk-sphere m=6 (frozen antiderivative):")
    for dv, sv, rdv in [(2.5, 1.0, 1.0), (10.0, 2.0, 1.0), (3.0, 1.0, 1.5)]:
        kern = lambda rr, tt: (
            mp.mpf(4) / 3 * mp.pi * sv**3
            * (dv**2 + rr**2 - 2 * dv * rr * mp.cos(tt) - sv**2) ** -3 * rr
        )
        quad = mp.quad(
            lambda rr: mp.quad(lambda tt: kern(rr, tt), [0, mp.pi, 2 * mp.pi]),
            [0, rdv], maxdegree=8,
        )
        val = frozen_disk_sphere(mp.mpf(dv), mp.mpf(sv), mp.mpf(rdv))
        print(f"  d={dv} S={sv} RD={rdv}: rel err vs quad = {mp.nstr(abs(val-quad)/abs(quad), 3)}")
