"""Bernoulli-Euler fiber with rotation-free kinematics.

Cross-section directors follow the axis tangent through the smallest
rotation from a stored frame plus an independent twist field on the
same spline basis. Strains are measured against per-point reference
values; after a converged load increment the stored frames can be
rebased onto the current state (``rebase``) with the curvature
references shifted so strains stay measured from the initial
configuration, keeping the smallest-rotation map far from its
singularity during large cumulative rotations.

DOF layout for a beam with n control functions: axis displacements
3*i + c for function i, twist coefficients at 3*n + i; ndof = 4*n.
"""

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from ._beam_kernel import beam_gp, beam_k
from .jit import njit
from .splines import SplinePatch, eval_basis, gauss_rule

SR_TOL = 1e-6


class FrameSingularityError(RuntimeError):
    """Smallest-rotation map evaluated too close to t_T = 1 + T.t = 0."""


@dataclass(frozen=True)
class CircleSection:
    """Area and second moments of a solid circular cross-section."""

    F: float
    I_eta: float
    I_zeta: float
    I_t: float


def circle_section(R_B: float) -> CircleSection:
    if R_B <= 0.0:
        raise ValueError("section radius must be positive")
    F = np.pi * R_B**2
    I = np.pi * R_B**4 / 4.0
    return CircleSection(F=F, I_eta=I, I_zeta=I, I_t=2.0 * I)


def sr_frame(frame, t, phi: float = 0.0):
    """Directors at tangent t: smallest rotation from frame = (T, A2, A3),
    then a twist rotation phi about t."""
    T, A2, A3 = (np.asarray(v, float) for v in frame)
    t = np.asarray(t, float)
    t_T = 1.0 + T @ t
    if t_T <= SR_TOL:
        raise FrameSingularityError(
            f"tangent nearly opposite to stored frame (1 + T.t = {t_T:.2e})")
    tpT = t + T
    a2s = A2 - (A2 @ t) / t_T * tpT
    a3s = A3 - (A3 @ t) / t_T * tpT
    c, s = np.cos(phi), np.sin(phi)
    return c * a2s + s * a3s, -s * a2s + c * a3s


@dataclass
class BeamPointState:
    """Axis kinematics and curvature measures at one parameter value."""

    r: np.ndarray
    a1: np.ndarray
    a1_1: np.ndarray
    t: np.ndarray
    j: float
    a2: np.ndarray
    a3: np.ndarray
    k1: float
    k2: float
    k3: float
    gamma: float
    t_T: float


def beam_strains(ref: BeamPointState, cur: BeamPointState):
    """Axial Green-Lagrange strain of the axis and curvature changes:
    eps = (a - A)/2, kap1 = k1 - K1, kap_alpha = a (k_alpha - K_alpha)."""
    a = cur.j**2
    eps = 0.5 * (a - ref.j**2)
    return (eps, cur.k1 - ref.k1,
            a * (cur.k2 - ref.k2), a * (cur.k3 - ref.k3))


class BeamPatch:
    """Fiber over a one-direction spline patch with circular section.

    The twist field lives on the same knot vector as the axis. Stored
    per quadrature point: frame (T, A2, A3), frozen twist, reference
    metric and curvatures, and the material coefficients
    (EF, mu I_t, E I_zeta, E I_eta).
    """

    def __init__(self, axis: SplinePatch, R_B: float, E: float, mu: float):
        if len(axis.knots) != 1 or axis.dim != 3:
            raise ValueError("beam axis needs a one-direction patch in 3 dims")
        if E <= 0.0 or mu <= 0.0:
            raise ValueError("moduli must be positive")
        self.axis = axis
        self.R_B = float(R_B)
        self.E = float(E)
        self.mu = float(mu)
        self.section = circle_section(R_B)
        kv = axis.knots[0]
        self.n_fun = kv.n
        self.ndof = 4 * kv.n
        self._points = {}
        self._setup()

    # -- setup ---------------------------------------------------------

    def _ref_axis(self, xi: float):
        kv = self.axis.knots[0]
        d, f = eval_basis(kv, xi, 2)
        p = kv.degree
        Pe = self.axis.coefs[f : f + p + 1]
        return d[1] @ Pe, d[2] @ Pe

    def _setup(self):
        kv = self.axis.knots[0]
        p = kv.degree
        nloc = p + 1
        n_el = kv.n_elements
        ngp_el = p + 1
        ngp = n_el * ngp_el

        conn = np.empty((n_el, nloc), dtype=np.int64)
        Nv = np.empty((ngp, nloc))
        dN = np.empty((ngp, nloc))
        ddN = np.empty((ngp, nloc))
        gp_el = np.empty(ngp, dtype=np.int64)
        params = np.empty(ngp)
        wts = np.empty(ngp)

        g = 0
        for e in range(n_el):
            rule = gauss_rule(kv, e, ngp_el)
            for u, w in zip(rule.points, rule.weights):
                d, f = eval_basis(kv, u, 2)
                conn[e] = np.arange(f, f + nloc)
                Nv[g], dN[g], ddN[g] = d[0], d[1], d[2]
                gp_el[g] = e
                params[g] = u
                wts[g] = w
                g += 1
        self.conn = conn
        self.Nv, self.dN, self.ddN = Nv, dN, ddN
        self.gp_el = gp_el
        self.gp_params = params
        self.nloc = nloc
        self.n_el = n_el

        # reference frames: smallest-rotation transport station to station
        frames = np.empty((ngp, 3, 3))
        consts = np.empty((ngp, 9))
        sec = self.section
        cN = self.E * sec.F
        cT = self.mu * sec.I_t
        c2 = self.E * sec.I_zeta
        c3 = self.E * sec.I_eta
        a1_0, _ = self._ref_axis(params[0])
        T = a1_0 / np.linalg.norm(a1_0)
        k = np.argmin(np.abs(T))
        e = np.zeros(3)
        e[k] = 1.0
        A2 = e - (e @ T) * T
        A2 /= np.linalg.norm(A2)
        A3 = np.cross(T, A2)
        prev = (T, A2, A3)
        for g in range(ngp):
            a1, a11 = self._ref_axis(params[g])
            t = a1 / np.linalg.norm(a1)
            A2g, A3g = sr_frame(prev, t)
            frames[g, 0], frames[g, 1], frames[g, 2] = t, A2g, A3g
            prev = (t, A2g, A3g)
            q = np.concatenate([a1, a11, [0.0, 0.0]])
            a, k1, k2, k3 = beam_k(q, t, A2g, A3g)
            J = np.sqrt(a)
            consts[g] = (a, k1, k2, k3, cN, cT, c2, c3, J * wts[g])
        self.frames = frames
        self.consts = consts
        self.phi_frozen = np.zeros(ngp)

        n = self.n_fun
        ld = np.empty((n_el, 4 * nloc), dtype=np.int64)
        for e in range(n_el):
            for a in range(nloc):
                ld[e, 3 * a : 3 * a + 3] = 3 * conn[e, a] + np.arange(3)
                ld[e, 3 * nloc + a] = 3 * n + conn[e, a]
        self.elem_dofs = ld
        nd = 4 * nloc
        self._krows = np.repeat(ld, nd, axis=1).ravel()
        self._kcols = np.tile(ld, (1, nd)).ravel()

    # -- registered off-grid points (for point loads) -------------------

    def register_point(self, xi: float):
        """Track a frame at xi so point loads follow rebases."""
        if xi in self._points:
            return
        a1, _ = self._ref_axis(xi)
        t = a1 / np.linalg.norm(a1)
        g = int(np.argmin(np.abs(self.gp_params - xi)))
        A2, A3 = sr_frame(tuple(self.frames[g]), t)
        self._points[xi] = {"frame": np.array([t, A2, A3]), "phi": 0.0}

    # -- state evaluation ------------------------------------------------

    def split_dofs(self, dofs):
        d = np.asarray(dofs, float)
        n = self.n_fun
        return d[: 3 * n].reshape(n, 3), d[3 * n :]

    def current_axis(self, dofs):
        u, _ = self.split_dofs(dofs)
        return self.axis.coefs + u

    def _q_at(self, dofs, xi, frame_phi=None):
        kv = self.axis.knots[0]
        d, f = eval_basis(kv, xi, 2)
        p = kv.degree
        P = self.current_axis(dofs)[f : f + p + 1]
        u, phi_c = self.split_dofs(dofs)
        phis = phi_c[f : f + p + 1]
        r = d[0] @ P
        a1 = d[1] @ P
        a11 = d[2] @ P
        phi = d[0] @ phis
        phip = d[1] @ phis
        return r, a1, a11, phi, phip


def eval_beam_state(beam: BeamPatch, dofs, xi: float) -> BeamPointState:
    """Kinematic state at parameter xi, frames taken from the nearest
    stored quadrature point."""
    r, a1, a11, phi, phip = beam._q_at(dofs, xi)
    a = a1 @ a1
    if a <= 0.0:
        raise ValueError("degenerate axis metric")
    j = np.sqrt(a)
    t = a1 / j
    g = int(np.argmin(np.abs(beam.gp_params - xi)))
    frame = tuple(beam.frames[g])
    t_T = 1.0 + frame[0] @ t
    phi_loc = phi - beam.phi_frozen[g]
    a2, a3 = sr_frame(frame, t, phi_loc)
    q = np.concatenate([a1, a11, [phi_loc, phip]])
    _, k1, k2, k3 = beam_k(q, *frame)
    gamma = (a11 @ a1) / a
    return BeamPointState(r=r, a1=a1, a1_1=a11, t=t, j=j, a2=a2, a3=a3,
                          k1=k1, k2=k2, k3=k3, gamma=gamma, t_T=t_T)


def reference_state(beam: BeamPatch, xi: float) -> BeamPointState:
    return eval_beam_state(beam, np.zeros(beam.ndof), xi)


@njit
def _beam_kernel(x, phic, conn, Nv, dN, ddN, frames, consts, phi_frozen,
                 gp_el, nloc, want_k, blocks, Rglob, nfun):
    energy = 0.0
    ngp = Nv.shape[0]
    nd = 4 * nloc
    q = np.empty(8)
    g8 = np.empty(8)
    H8 = np.empty((8, 8))
    B = np.zeros((8, nd))
    for g in range(ngp):
        e = gp_el[g]
        a1x = 0.0
        a1y = 0.0
        a1z = 0.0
        b1x = 0.0
        b1y = 0.0
        b1z = 0.0
        phi = 0.0
        phip = 0.0
        for a in range(nloc):
            i = conn[e, a]
            dv = dN[g, a]
            dd = ddN[g, a]
            nv = Nv[g, a]
            a1x += dv * x[3 * i]
            a1y += dv * x[3 * i + 1]
            a1z += dv * x[3 * i + 2]
            b1x += dd * x[3 * i]
            b1y += dd * x[3 * i + 1]
            b1z += dd * x[3 * i + 2]
            phi += nv * phic[i]
            phip += dv * phic[i]
        q[0], q[1], q[2] = a1x, a1y, a1z
        q[3], q[4], q[5] = b1x, b1y, b1z
        q[6] = phi - phi_frozen[g]
        q[7] = phip
        tT = 1.0 + (frames[g, 0, 0] * a1x + frames[g, 0, 1] * a1y
                    + frames[g, 0, 2] * a1z) / np.sqrt(a1x * a1x + a1y * a1y
                                                       + a1z * a1z)
        if tT <= SR_TOL:
            return energy, g + 1
        energy += beam_gp(q, frames[g, 0], frames[g, 1], frames[g, 2],
                          consts[g], g8, H8)
        for a in range(nloc):
            i = conn[e, a]
            dv = dN[g, a]
            dd = ddN[g, a]
            nv = Nv[g, a]
            for c in range(3):
                Rglob[3 * i + c] += g8[c] * dv + g8[3 + c] * dd
            Rglob[3 * nfun + i] += g8[6] * nv + g8[7] * dv
        if want_k:
            Ke = blocks[e]
            for a in range(nloc):
                dv = dN[g, a]
                dd = ddN[g, a]
                nv = Nv[g, a]
                for c in range(3):
                    B[c, 3 * a + c] = dv
                    B[3 + c, 3 * a + c] = dd
                B[6, 3 * nloc + a] = nv
                B[7, 3 * nloc + a] = dv
            Ke += B.T @ (H8 @ B)
            for a in range(nloc):
                for c in range(3):
                    B[c, 3 * a + c] = 0.0
                    B[3 + c, 3 * a + c] = 0.0
                B[6, 3 * nloc + a] = 0.0
                B[7, 3 * nloc + a] = 0.0
    return energy, 0


def _drive(beam: BeamPatch, dofs, want_k: bool):
    u, phic = beam.split_dofs(dofs)
    x = (beam.axis.coefs + u).ravel()
    nd = 4 * beam.nloc
    nb = beam.n_el if want_k else 1
    blocks = np.zeros((nb, nd, nd))
    R = np.zeros(beam.ndof)
    energy, flag = _beam_kernel(
        x, phic, beam.conn, beam.Nv, beam.dN, beam.ddN, beam.frames,
        beam.consts, beam.phi_frozen, beam.gp_el, beam.nloc, want_k,
        blocks, R, beam.n_fun)
    if flag:
        raise FrameSingularityError(
            f"tangent nearly opposite to stored frame at "
            f"xi = {beam.gp_params[flag - 1]:.6g}; rebase more often")
    return energy, R, blocks


def beam_energy(beam: BeamPatch, dofs) -> float:
    return _drive(beam, dofs, False)[0]


def beam_residual(beam: BeamPatch, dofs) -> np.ndarray:
    """Gradient of the discrete strain energy in the DOFs."""
    return _drive(beam, dofs, False)[1]


def beam_tangent(beam: BeamPatch, dofs) -> sparse.csr_matrix:
    """Exact derivative of the residual, assembled sparse."""
    _, _, blocks = _drive(beam, dofs, True)
    K = sparse.coo_matrix((blocks.ravel(), (beam._krows, beam._kcols)),
                          shape=(beam.ndof, beam.ndof))
    return K.tocsr()


def rebase_frames(beam: BeamPatch, dofs) -> None:
    """Adopt the current per-point frames and twist as the stored ones,
    shifting curvature references so strains stay measured from the
    initial configuration."""
    u, phic = beam.split_dofs(dofs)
    X = beam.axis.coefs + u
    kv = beam.axis.knots[0]
    p = kv.degree

    def q_and_frame(xi, frame, phi_frozen):
        d, f = eval_basis(kv, xi, 2)
        Pe = X[f : f + p + 1]
        ph = phic[f : f + p + 1]
        a1 = d[1] @ Pe
        a11 = d[2] @ Pe
        phi = d[0] @ ph
        phip = d[1] @ ph
        t = a1 / np.linalg.norm(a1)
        phi_loc = phi - phi_frozen
        a2, a3 = sr_frame(frame, t, phi_loc)
        q_old = np.concatenate([a1, a11, [phi_loc, phip]])
        q_new = np.concatenate([a1, a11, [0.0, phip]])
        return q_old, q_new, (t, a2, a3), phi

    for g in range(len(beam.gp_params)):
        frame = tuple(beam.frames[g])
        q_old, q_new, new_frame, phi = q_and_frame(
            beam.gp_params[g], frame, beam.phi_frozen[g])
        _, k1o, k2o, k3o = beam_k(q_old, *frame)
        _, k1n, k2n, k3n = beam_k(q_new, *new_frame)
        beam.consts[g, 1] += k1n - k1o
        beam.consts[g, 2] += k2n - k2o
        beam.consts[g, 3] += k3n - k3o
        beam.frames[g] = np.array(new_frame)
        beam.phi_frozen[g] = phi
    for xi, rec in beam._points.items():
        _, _, new_frame, phi = q_and_frame(xi, tuple(rec["frame"]), rec["phi"])
        rec["frame"] = np.array(new_frame)
        rec["phi"] = phi


def point_moment(beam: BeamPatch, dofs, xi: float, M):
    """Residual and tangent contribution of a point moment M at xi.

    The moment acts on the section rotation; its virtual work couples
    to the twist variation through M.t and to the tangent variation
    through the smallest-rotation transport. Nonconservative: the
    returned tangent block is the exact (unsymmetric) linearization.
    """
    M = np.asarray(M, float)
    beam.register_point(xi)
    rec = beam._points[xi]
    T = rec["frame"][0]
    kv = beam.axis.knots[0]
    d, f = eval_basis(kv, xi, 1)
    p = kv.degree
    P = beam.current_axis(dofs)[f : f + p + 1]
    a1 = d[1] @ P
    a = a1 @ a1
    s = np.sqrt(a)
    t = a1 / s
    t_T = 1.0 + T @ t
    if t_T <= SR_TOL:
        raise FrameSingularityError("point moment at a frame singularity")
    Mt = M @ t
    u = np.cross(T, t)
    Mxt = np.cross(M, t)
    f_phi = Mt
    f_up = -Mt / (s * t_T) * u + Mxt / s

    # derivatives in a1
    Pm = (np.eye(3) - np.outer(t, t)) / s
    dMt = Pm @ M
    d_inv_s = -t / a  # gradient of 1/s
    dtT = Pm @ T
    Tx = np.array([[0.0, -T[2], T[1]], [T[2], 0.0, -T[0]], [-T[1], T[0], 0.0]])
    Mx = np.array([[0.0, -M[2], M[1]], [M[2], 0.0, -M[0]], [-M[1], M[0], 0.0]])
    du = Tx @ Pm
    dMxt = Mx @ Pm
    grad_coef = (dMt / (s * t_T) + Mt * d_inv_s / t_T
                 - Mt / (s * t_T**2) * dtT)
    df_up = (-np.outer(u, grad_coef) - Mt / (s * t_T) * du
             + np.outer(Mxt, d_inv_s) + dMxt / s)
    df_phi = dMt

    n = beam.n_fun
    R = np.zeros(beam.ndof)
    rows, cols, vals = [], [], []
    for aa in range(p + 1):
        ia = f + aa
        for c in range(3):
            R[3 * ia + c] -= f_up[c] * d[1][aa]
        R[3 * n + ia] -= f_phi * d[0][aa]
        for bb in range(p + 1):
            ib = f + bb
            for c in range(3):
                for cc in range(3):
                    rows.append(3 * ia + c)
                    cols.append(3 * ib + cc)
                    vals.append(-d[1][aa] * df_up[c, cc] * d[1][bb])
                rows.append(3 * n + ia)
                cols.append(3 * ib + c)
                vals.append(-d[0][aa] * df_phi[c] * d[1][bb])
    K = sparse.coo_matrix((vals, (rows, cols)),
                          shape=(beam.ndof, beam.ndof)).tocsr()
    return R, K
