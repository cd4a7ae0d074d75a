"""Kirchhoff-Love shell patch: kinematics, section law, residual, tangent.

The shell energy is quadratic in the membrane strain E = (g - G)/2 and
the curvature change K = b - B with a plane-stress material built from
the reference metric. Residual and tangent are the exact first and
second variations of the discretized energy; the geometric part of the
tangent carries the full second variation of the unit normal.

DOF layout: control function (i1, i2) component c maps to global index
(i1 * n2 + i2) * 3 + c.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .jit import njit
from .splines import SplinePatch, eval_basis, gauss_rule


class GeometryError(RuntimeError):
    """Degenerate surface metric (det <= 0) at an evaluation point."""


@dataclass
class ShellPointState:
    """Surface kinematics at one parametric point.

    Covariant components carry lowered indices (g_ab), contravariant
    ones raised (g_con, g_ab_con). dg holds g_alpha,beta with shape
    (2, 2, 3), symmetric in the first two axes; gamma holds the
    Christoffel symbols gamma[c, a, b].
    """

    r: np.ndarray
    g: np.ndarray
    g_con: np.ndarray
    n: np.ndarray
    g_ab: np.ndarray
    g_ab_con: np.ndarray
    b_ab: np.ndarray
    gamma: np.ndarray
    j: float
    dg: np.ndarray


@dataclass
class ShellSection:
    """Strains with work-conjugate stress resultants and material tensor."""

    E: np.ndarray
    K: np.ndarray
    N: np.ndarray
    M: np.ndarray
    C: np.ndarray


def material_tensor(g_ab_con: np.ndarray, E_mod: float, nu: float) -> np.ndarray:
    """Plane-stress elasticity tensor from a contravariant metric.

    Minor and major symmetric; contraction with a symmetric strain
    matches 2*mu*(G^an G^bg + nu/(1-nu) G^ab G^ng).
    """
    G = g_ab_con
    mu = E_mod / (2.0 * (1.0 + nu))
    lam = 2.0 * mu * nu / (1.0 - nu)
    C = np.empty((2, 2, 2, 2))
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    C[a, b, c, d] = (
                        lam * G[a, b] * G[c, d]
                        + mu * (G[a, c] * G[b, d] + G[a, d] * G[b, c])
                    )
    return C


def _voigt_material(g_ab_con: np.ndarray, E_mod: float, nu: float) -> np.ndarray:
    """3x3 matrix mapping [e11, e22, 2 e12] to [s11, s22, s12]."""
    C = material_tensor(g_ab_con, E_mod, nu)
    idx = [(0, 0), (1, 1), (0, 1)]
    D = np.empty((3, 3))
    for P, (a, b) in enumerate(idx):
        for Q, (c, d) in enumerate(idx):
            D[P, Q] = C[a, b, c, d]
    return D


_DERIV_ROWS1 = np.array([0, 1, 0, 2, 0, 1])
_DERIV_ROWS2 = np.array([0, 0, 1, 0, 2, 1])


def _point_state_raw(X, kv1, kv2, u, v):
    d1, f1 = eval_basis(kv1, u, 2)
    d2, f2 = eval_basis(kv2, v, 2)
    p1, p2 = kv1.degree, kv2.degree
    Xe = X[f1 : f1 + p1 + 1, f2 : f2 + p2 + 1, :].reshape(-1, 3)
    W = (d1[_DERIV_ROWS1][:, :, None] * d2[_DERIV_ROWS2][:, None, :])
    D = W.reshape(6, -1) @ Xe
    r, g1, g2, r11, r22, r12 = D
    wx = g1[1] * g2[2] - g1[2] * g2[1]
    wy = g1[2] * g2[0] - g1[0] * g2[2]
    wz = g1[0] * g2[1] - g1[1] * g2[0]
    j2 = wx * wx + wy * wy + wz * wz
    a00, a01, a11 = g1 @ g1, g1 @ g2, g2 @ g2
    if j2 <= 0.0 or a00 * a11 - a01 * a01 <= 0.0:
        return None
    jac = math.sqrt(j2)
    n = np.array((wx / jac, wy / jac, wz / jac))
    a_ab = np.array(((a00, a01), (a01, a11)))
    b_ab = np.array(((r11 @ n, r12 @ n), (r12 @ n, r22 @ n)))
    dg = np.empty((2, 2, 3))
    dg[0, 0], dg[1, 1] = r11, r22
    dg[0, 1] = dg[1, 0] = r12
    return r, g1, g2, n, a_ab, b_ab, jac, dg


class ShellPatch:
    """Shell over a two-direction spline patch with thickness h.

    Reference quantities (metric, curvature, material matrix, mapping
    jacobian) are cached per quadrature point at construction.
    """

    def __init__(self, patch: SplinePatch, h: float, E: float, nu: float):
        if len(patch.knots) != 2 or patch.dim != 3:
            raise ValueError("shell needs a two-direction patch in 3 space dims")
        if h <= 0.0 or E <= 0.0:
            raise ValueError("thickness and modulus must be positive")
        if not 0.0 <= nu < 0.5:
            raise ValueError("Poisson ratio must lie in [0, 0.5)")
        self.patch = patch
        self.h = float(h)
        self.E = float(E)
        self.nu = float(nu)
        kv1, kv2 = patch.knots
        self.shape = (kv1.n, kv2.n)
        self.ndof = kv1.n * kv2.n * 3
        self._setup()

    def _setup(self):
        kv1, kv2 = self.patch.knots
        p1, p2 = kv1.degree, kv2.degree
        nloc = (p1 + 1) * (p2 + 1)
        ne1, ne2 = kv1.n_elements, kv2.n_elements
        n_el = ne1 * ne2
        ngp = n_el * (p1 + 1) * (p2 + 1)

        conn = np.empty((n_el, nloc), dtype=np.int64)
        gp_el = np.empty(ngp, dtype=np.int64)
        dN = np.empty((ngp, 2, nloc))
        ddN = np.empty((ngp, 3, nloc))
        Dm = np.empty((ngp, 3, 3))
        Db = np.empty((ngp, 3, 3))
        Arefv = np.empty((ngp, 3))
        Brefv = np.empty((ngp, 3))
        params = np.empty((ngp, 2))
        jw = np.empty(ngp)

        X = self.patch.coefs
        g = 0
        for e1 in range(ne1):
            r1 = gauss_rule(kv1, e1, p1 + 1)
            for e2 in range(ne2):
                r2 = gauss_rule(kv2, e2, p2 + 1)
                e = e1 * ne2 + e2
                filled = False
                for u, wu in zip(r1.points, r1.weights):
                    d1, f1 = eval_basis(kv1, u, 2)
                    for v, wv in zip(r2.points, r2.weights):
                        d2, f2 = eval_basis(kv2, v, 2)
                        if not filled:
                            loc = 0
                            for a in range(p1 + 1):
                                for b in range(p2 + 1):
                                    conn[e, loc] = (f1 + a) * kv2.n + (f2 + b)
                                    loc += 1
                            filled = True
                        dN[g, 0] = np.outer(d1[1], d2[0]).ravel()
                        dN[g, 1] = np.outer(d1[0], d2[1]).ravel()
                        ddN[g, 0] = np.outer(d1[2], d2[0]).ravel()
                        ddN[g, 1] = np.outer(d1[0], d2[2]).ravel()
                        ddN[g, 2] = np.outer(d1[1], d2[1]).ravel()
                        st = _point_state_raw(X, kv1, kv2, u, v)
                        if st is None:
                            raise GeometryError(
                                f"degenerate reference metric at ({u}, {v})"
                            )
                        _, _, _, _, a_ab, b_ab, jac, _ = st
                        a_con = np.linalg.inv(a_ab)
                        D = _voigt_material(a_con, self.E, self.nu)
                        w = wu * wv * jac
                        Dm[g] = self.h * D * w
                        Db[g] = self.h**3 / 12.0 * D * w
                        Arefv[g] = (a_ab[0, 0], a_ab[1, 1], a_ab[0, 1])
                        Brefv[g] = (b_ab[0, 0], b_ab[1, 1], b_ab[0, 1])
                        params[g] = (u, v)
                        jw[g] = w
                        gp_el[g] = e
                        g += 1
        self.conn = conn
        self.gp_el = gp_el
        self.dN, self.ddN = dN, ddN
        self.Dm, self.Db = Dm, Db
        self.Arefv, self.Brefv = Arefv, Brefv
        self.gp_params = params
        self.gp_weight = jw
        self.n_el = n_el
        self.nloc = nloc
        rows = (np.repeat(conn * 3, 3, axis=1)
                + np.tile(np.arange(3), nloc)[None, :])
        nd = 3 * nloc
        self._krows = np.repeat(rows, nd, axis=1).ravel()
        self._kcols = np.tile(rows, (1, nd)).ravel()

    def current_coefs(self, dofs: np.ndarray) -> np.ndarray:
        d = np.asarray(dofs, float)
        return self.patch.coefs + d.reshape(self.patch.coefs.shape)


def eval_shell_state(shell: ShellPatch, dofs: np.ndarray, th1: float,
                     th2: float) -> ShellPointState:
    """Current-configuration kinematics at parameters (th1, th2).

    dofs are control-point displacements, flat (ndof,) or shaped like
    the control net.
    """
    X = shell.current_coefs(dofs)
    st = _point_state_raw(X, *shell.patch.knots, th1, th2)
    if st is None:
        raise GeometryError(f"degenerate surface metric at ({th1}, {th2})")
    r, g1, g2, n, a_ab, b_ab, jac, dg = st
    a_con = np.linalg.inv(a_ab)
    g = np.stack([g1, g2])
    g_con = a_con @ g
    gamma = np.einsum("ci,abi->cab", g_con, dg)
    return ShellPointState(r=r, g=g, g_con=g_con, n=n, g_ab=a_ab,
                           g_ab_con=a_con, b_ab=b_ab, gamma=gamma, j=jac,
                           dg=dg)


def shell_strains(ref: ShellPointState, cur: ShellPointState):
    """Membrane strain E = (g - G)/2 and curvature change K = b - B."""
    E = 0.5 * (cur.g_ab - ref.g_ab)
    K = cur.b_ab - ref.b_ab
    return E, K


def shell_section(shell: ShellPatch, ref: ShellPointState, E: np.ndarray,
                  K: np.ndarray) -> ShellSection:
    """Stress resultants from strains on the reference metric:
    N = h C : E, M = h^3/12 C : K."""
    C = material_tensor(ref.g_ab_con, shell.E, shell.nu)
    N = shell.h * np.einsum("abcd,cd->ab", C, E)
    M = shell.h**3 / 12.0 * np.einsum("abcd,cd->ab", C, K)
    return ShellSection(E=E, K=K, N=N, M=M, C=C)


@njit
def _shell_kernel(x, conn, dN, ddN, Dm, Db, Arefv, Brefv, gp_el, nloc,
                  want_k, blocks, Rglob):
    """Energy, global residual and per-element tangent blocks.

    x: flat current control positions. Returns (energy, flag); a
    nonzero flag is 1 + index of the first GP with a degenerate metric.
    """
    energy = 0.0
    ngp = dN.shape[0]
    nd = 3 * nloc
    Bm = np.empty((3, nd))
    Bb = np.empty((3, nd))
    dw3 = np.empty((nd, 3))
    dn3 = np.empty((nd, 3))
    dj3 = np.empty(nd)
    xe = np.empty((nloc, 3))
    n = np.empty(3)
    for g in range(ngp):
        e = gp_el[g]
        for a in range(nloc):
            ia = conn[e, a] * 3
            xe[a, 0] = x[ia]
            xe[a, 1] = x[ia + 1]
            xe[a, 2] = x[ia + 2]
        d0 = dN[g, 0]
        d1 = dN[g, 1]
        g1 = d0 @ xe
        g2 = d1 @ xe
        r11 = ddN[g, 0] @ xe
        r22 = ddN[g, 1] @ xe
        r12 = ddN[g, 2] @ xe
        w0 = g1[1] * g2[2] - g1[2] * g2[1]
        w1 = g1[2] * g2[0] - g1[0] * g2[2]
        w2 = g1[0] * g2[1] - g1[1] * g2[0]
        j2 = w0 * w0 + w1 * w1 + w2 * w2
        if j2 <= 0.0:
            return energy, g + 1
        jac = np.sqrt(j2)
        n[0], n[1], n[2] = w0 / jac, w1 / jac, w2 / jac
        ev = np.empty(3)
        ev[0] = 0.5 * (g1 @ g1 - Arefv[g, 0])
        ev[1] = 0.5 * (g2 @ g2 - Arefv[g, 1])
        ev[2] = g1 @ g2 - Arefv[g, 2]
        kv = np.empty(3)
        kv[0] = r11 @ n - Brefv[g, 0]
        kv[1] = r22 @ n - Brefv[g, 1]
        kv[2] = 2.0 * (r12 @ n - Brefv[g, 2])
        Ns = Dm[g] @ ev
        Ms = Db[g] @ kv
        energy += 0.5 * (Ns @ ev + Ms @ kv)

        for a in range(nloc):
            for i in range(3):
                c = 3 * a + i
                Bm[0, c] = d0[a] * g1[i]
                Bm[1, c] = d1[a] * g2[i]
                Bm[2, c] = d0[a] * g2[i] + d1[a] * g1[i]
                if i == 0:
                    dwa0 = 0.0
                    dwa1 = -d0[a] * g2[2] + d1[a] * g1[2]
                    dwa2 = d0[a] * g2[1] - d1[a] * g1[1]
                elif i == 1:
                    dwa0 = d0[a] * g2[2] - d1[a] * g1[2]
                    dwa1 = 0.0
                    dwa2 = -d0[a] * g2[0] + d1[a] * g1[0]
                else:
                    dwa0 = -d0[a] * g2[1] + d1[a] * g1[1]
                    dwa1 = d0[a] * g2[0] - d1[a] * g1[0]
                    dwa2 = 0.0
                dw3[c, 0], dw3[c, 1], dw3[c, 2] = dwa0, dwa1, dwa2
                dj = n[0] * dwa0 + n[1] * dwa1 + n[2] * dwa2
                dj3[c] = dj
                dn0 = (dwa0 - dj * n[0]) / jac
                dn1 = (dwa1 - dj * n[1]) / jac
                dn2 = (dwa2 - dj * n[2]) / jac
                dn3[c, 0], dn3[c, 1], dn3[c, 2] = dn0, dn1, dn2
                Bb[0, c] = (ddN[g, 0, a] * n[i]
                            + r11[0] * dn0 + r11[1] * dn1 + r11[2] * dn2)
                Bb[1, c] = (ddN[g, 1, a] * n[i]
                            + r22[0] * dn0 + r22[1] * dn1 + r22[2] * dn2)
                Bb[2, c] = 2.0 * (ddN[g, 2, a] * n[i]
                                  + r12[0] * dn0 + r12[1] * dn1 + r12[2] * dn2)
        for a in range(nloc):
            ia = conn[e, a] * 3
            for i in range(3):
                c = 3 * a + i
                Rglob[ia + i] += (Ns[0] * Bm[0, c] + Ns[1] * Bm[1, c]
                                  + Ns[2] * Bm[2, c] + Ms[0] * Bb[0, c]
                                  + Ms[1] * Bb[1, c] + Ms[2] * Bb[2, c])
        if want_k:
            Ke = blocks[e]
            Ke += Bm.T @ (Dm[g] @ Bm) + Bb.T @ (Db[g] @ Bb)
            Pm = (Ns[0] * np.outer(d0, d0) + Ns[1] * np.outer(d1, d1)
                  + Ns[2] * (np.outer(d0, d1) + np.outer(d1, d0)))
            Am = np.outer(d0, d1) - np.outer(d1, d0)
            Bv = (Ms[0] * ddN[g, 0] + Ms[1] * ddN[g, 1]
                  + 2.0 * Ms[2] * ddN[g, 2])
            m0 = Ms[0] * r11 + Ms[1] * r22 + 2.0 * Ms[2] * r12
            mn = m0 @ n
            G1 = dn3 @ dw3.T
            mdn = dn3 @ m0
            Ke -= (mn / jac) * G1
            for c in range(nd):
                for d in range(nd):
                    Ke[c, d] -= (dj3[c] * mdn[d] + mdn[c] * dj3[d]) / jac
            # S - mn*T with S_ij = eps_ijk m_k, T_ij = eps_ijk n_k
            q2 = (m0[2] - mn * n[2]) / jac
            q1 = (m0[1] - mn * n[1]) / jac
            q0 = (m0[0] - mn * n[0]) / jac
            for a in range(nloc):
                for b in range(nloc):
                    pab = Pm[a, b]
                    aab = Am[a, b]
                    ca, cb = 3 * a, 3 * b
                    Ke[ca, cb] += pab
                    Ke[ca + 1, cb + 1] += pab
                    Ke[ca + 2, cb + 2] += pab
                    Ke[ca, cb + 1] += q2 * aab
                    Ke[ca + 1, cb] -= q2 * aab
                    Ke[ca, cb + 2] -= q1 * aab
                    Ke[ca + 2, cb] += q1 * aab
                    Ke[ca + 1, cb + 2] += q0 * aab
                    Ke[ca + 2, cb + 1] -= q0 * aab
            for i in range(3):
                for a in range(nloc):
                    c = 3 * a + i
                    bva = Bv[a]
                    for d in range(nd):
                        Ke[c, d] += bva * dn3[d, i]
                        Ke[d, c] += dn3[d, i] * bva
    return energy, 0


def _drive_kernel(shell: ShellPatch, dofs: np.ndarray, want_k: bool):
    x = shell.current_coefs(dofs).ravel()
    nd = 3 * shell.nloc
    nb = shell.n_el if want_k else 1
    blocks = np.zeros((nb, nd, nd))
    R = np.zeros(shell.ndof)
    energy, flag = _shell_kernel(
        x, shell.conn, shell.dN, shell.ddN, shell.Dm, shell.Db,
        shell.Arefv, shell.Brefv, shell.gp_el, shell.nloc, want_k, blocks, R)
    if flag:
        u, v = shell.gp_params[flag - 1]
        raise GeometryError(f"degenerate surface metric at ({u}, {v})")
    return energy, R, blocks


def shell_energy(shell: ShellPatch, dofs: np.ndarray) -> float:
    return _drive_kernel(shell, dofs, False)[0]


def shell_residual(shell: ShellPatch, dofs: np.ndarray) -> np.ndarray:
    """Gradient of the discrete strain energy in the control DOFs."""
    return _drive_kernel(shell, dofs, False)[1]


def shell_tangent(shell: ShellPatch, dofs: np.ndarray) -> sparse.csr_matrix:
    """Exact derivative of the residual, assembled sparse."""
    _, _, blocks = _drive_kernel(shell, dofs, True)
    K = sparse.coo_matrix(
        (blocks.ravel(), (shell._krows, shell._kcols)),
        shape=(shell.ndof, shell.ndof))
    return K.tocsr()
