"""Beam-shell adhesion: closest-point projection onto the shell and the
line-integrated disk-plate law with residual and tangent blocks.

Every beam quadrature point is tied to its closest point on the shell
midsurface; the disk-plate law is evaluated at the center distance d and
the section tilt cos(alpha) against the local surface. Three
formulations share this kinematic chain: FF carries the complete
variation including the angle forces, RF1 keeps only the distance force
but evaluates the law at the actual angle, RF2 evaluates the law at
cos(alpha) = 1. The FF residual is paired with the RF1 tangent, so
Newton is inexact for FF by construction.

Per-point residual and tangent blocks are ordered over the slots
[u_B, u_B,1, u_S, u_S,1, u_S,2]; the integration measure is the
reference arclength of the beam axis, which makes the FF residual the
exact gradient of the integrated energy.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .laws import dspt_eval
from .shell import ShellPatch, _point_state_raw
from .splines import eval_basis

FORMULATIONS = ("FF", "RF1", "RF2")

ORTHO_TOL = 1e-10


class ProjectionError(RuntimeError):
    """No admissible closest-point projection at a beam quadrature point."""


def _check_formulation(formulation):
    if formulation not in FORMULATIONS:
        raise ValueError(f"unknown formulation {formulation!r}; "
                         f"expected one of {FORMULATIONS}")


@dataclass(frozen=True)
class ClosestPointResult:
    """Projection foot point and the surface data the tangents need.

    n is the unit normal pointing from the surface to the beam point
    (n = d_vec / d) and b_ab is the curvature with respect to that
    normal, so the shift tensor is C_ab = g_ab - d b_ab regardless of
    which side of the surface the beam lies on. g_bar holds the shifted
    contravariant basis C^ab g_b.
    """

    theta1: float
    theta2: float
    x_S: np.ndarray
    d_vec: np.ndarray
    d: float
    n: np.ndarray
    g: np.ndarray
    g_con: np.ndarray
    b_ab: np.ndarray
    C_ab: np.ndarray
    C_con: np.ndarray
    g_bar: np.ndarray
    status: str


@dataclass(frozen=True)
class ContactKinematics:
    """Tilt measures and interaction force vectors at one beam point.

    w_c and w_d are the reduced angle-derivative weights; f acts on the
    displacement pair, f_CB on the beam tangent variation, f_C on the
    displacement pair through the normal variation, and f_CS[b] on the
    shell derivative variations.
    """

    t: np.ndarray
    t_n: float
    cos_a: float
    w_c: float
    w_d: float
    f: np.ndarray
    f_C: np.ndarray
    f_CB: np.ndarray
    f_CS: np.ndarray
    values: tuple


def closest_point_project(shell: ShellPatch, coefs, x_B, guess=None,
                          tol: float = 1e-12, max_iter: int = 50):
    """Unilateral closest-point projection of x_B onto the midsurface.

    coefs is the current control net (ShellPatch.current_coefs). A
    warm-start guess is tried first and wins immediately when it
    converges to a classifiable root (interior or boundary; feet move
    continuously with the state, so the tracked root stays the right
    one); otherwise a Greville-grid multi-start runs in fixed order and
    the converged root with the smallest distance is kept (interior
    preferred over boundary, first find wins ties).
    Newton iterates on the orthogonality residual with the shift tensor
    as matrix; when that loses positive definiteness the step falls
    back to a metric-preconditioned gradient, and every step is halved
    until the squared distance stops growing.
    """
    kv1, kv2 = shell.patch.knots
    x_B = np.asarray(x_B, float)
    lo1, hi1 = kv1.domain
    lo2, hi2 = kv2.domain

    def attempt(t1, t2):
        st = _point_state_raw(coefs, kv1, kv2, t1, t2)
        for _ in range(max_iter):
            if st is None:
                return t1, t2, False, None
            r, g1, g2, _, a_ab, _, _, dg = st
            dv = x_B - r
            h0 = dv @ g1
            h1 = dv @ g2
            c00 = a_ab[0, 0] - dv @ dg[0, 0]
            c01 = a_ab[0, 1] - dv @ dg[0, 1]
            c11 = a_ab[1, 1] - dv @ dg[1, 1]
            det = c00 * c11 - c01 * c01
            if c00 > 0.0 and det > 0.0:
                s0 = (c11 * h0 - c01 * h1) / det
                s1 = (c00 * h1 - c01 * h0) / det
            else:
                deta = a_ab[0, 0] * a_ab[1, 1] - a_ab[0, 1] ** 2
                s0 = (a_ab[1, 1] * h0 - a_ab[0, 1] * h1) / deta
                s1 = (a_ab[0, 0] * h1 - a_ab[0, 1] * h0) / deta
            f0 = dv @ dv
            lam = 1.0
            while True:
                u1 = min(max(t1 + lam * s0, lo1), hi1)
                u2 = min(max(t2 + lam * s1, lo2), hi2)
                st2 = _point_state_raw(coefs, kv1, kv2, u1, u2)
                if st2 is not None:
                    dv2 = x_B - st2[0]
                    if dv2 @ dv2 <= f0 * (1.0 + 1e-12):
                        break
                lam *= 0.5
                if lam < 1e-9:
                    return t1, t2, False, st
            step = math.hypot(u1 - t1, u2 - t2)
            t1, t2, st = u1, u2, st2
            if step <= tol * (1.0 + math.hypot(t1, t2)):
                return t1, t2, True, st
        return t1, t2, False, st

    def classify(t1, t2, st):
        if st is None:
            return None
        r, g1, g2, _, a_ab, _, _, dg = st
        dv = x_B - r
        d = float(np.linalg.norm(dv))
        if d <= 0.0:
            return None
        orth = max(abs(dv @ g1) / (d * np.linalg.norm(g1)),
                   abs(dv @ g2) / (d * np.linalg.norm(g2)))
        on_edge = t1 in (lo1, hi1) or t2 in (lo2, hi2)
        if orth <= ORTHO_TOL:
            status = "interior"
        elif on_edge:
            status = "boundary"
        else:
            return None
        nb = dv / d
        g = np.stack((g1, g2))
        b_ab = np.array([[dg[0, 0] @ nb, dg[0, 1] @ nb],
                         [dg[0, 1] @ nb, dg[1, 1] @ nb]])
        C_ab = a_ab - d * b_ab
        detc = C_ab[0, 0] * C_ab[1, 1] - C_ab[0, 1] ** 2
        if status == "interior" and detc <= 0.0:
            return None
        if detc != 0.0:
            C_con = np.array([[C_ab[1, 1], -C_ab[0, 1]],
                              [-C_ab[0, 1], C_ab[0, 0]]]) / detc
        else:
            C_con = np.zeros((2, 2))
        return ClosestPointResult(
            theta1=t1, theta2=t2, x_S=r, d_vec=dv, d=d, n=nb, g=g,
            g_con=np.linalg.inv(a_ab) @ g, b_ab=b_ab, C_ab=C_ab,
            C_con=C_con, g_bar=C_con @ g, status=status)

    best = None
    if guess is not None:
        t1, t2, ok, st = attempt(min(max(guess[0], lo1), hi1),
                                 min(max(guess[1], lo2), hi2))
        if ok:
            res = classify(t1, t2, st)
            if res is not None:
                return res
    for s1 in kv1.greville():
        for s2 in kv2.greville():
            t1, t2, ok, st = attempt(s1, s2)
            if not ok:
                continue
            res = classify(t1, t2, st)
            if res is None:
                continue
            if best is None or (res.status == "interior") > (
                    best.status == "interior") or (
                    res.status == best.status and res.d < best.d):
                best = res
    if best is not None:
        return best
    mid1, mid2 = 0.5 * (lo1 + hi1), 0.5 * (lo2 + hi2)
    st = _point_state_raw(coefs, kv1, kv2, mid1, mid2)
    r = st[0] if st is not None else np.zeros(3)
    dv = x_B - r
    d = float(np.linalg.norm(dv))
    z2, z23 = np.zeros((2, 2)), np.zeros((2, 3))
    return ClosestPointResult(
        theta1=mid1, theta2=mid2, x_S=r, d_vec=dv, d=d,
        n=dv / d if d > 0.0 else np.zeros(3), g=z23, g_con=z23, b_ab=z2,
        C_ab=z2, C_con=z2, g_bar=z23, status="failed")


def contact_kinematics(cpp: ClosestPointResult, a1, law,
                       formulation: str) -> ContactKinematics:
    """Tilt and force vectors at one beam point for a formulation.

    a1 is the current beam axis tangent vector (not normalized). The
    law is evaluated at cos(alpha) = 1 for RF2 and at the actual tilt
    otherwise; RF2 carries no angle forces by definition.
    """
    _check_formulation(formulation)
    a1 = np.asarray(a1, float)
    sj = math.sqrt(a1 @ a1)
    t = a1 / sj
    n = cpp.n
    t_n = float(min(max(t @ n, -1.0), 1.0))
    cos_a = math.sqrt(max(1.0 - t_n * t_n, 0.0))
    zero = np.zeros(3)
    if formulation == "RF2":
        vals = dspt_eval(law, cpp.d, 1.0)
        return ContactKinematics(
            t=t, t_n=t_n, cos_a=cos_a, w_c=0.0, w_d=0.0,
            f=vals.phi_d * n, f_C=zero, f_CB=zero, f_CS=np.zeros((2, 3)),
            values=vals)
    vals = dspt_eval(law, cpp.d, cos_a)
    w_c = -vals.phi_cos_r * t_n
    w_d = -vals.phi_dcos_r * t_n
    tg = cpp.g @ t
    f_C = (w_c / cpp.d) * (t - tg @ cpp.g_bar - t_n * n)
    f_CB = (w_c / sj) * (n - t_n * t)
    f_CS = w_c * np.outer(cpp.g_bar @ t, n)
    return ContactKinematics(t=t, t_n=t_n, cos_a=cos_a, w_c=w_c, w_d=w_d,
                             f=vals.phi_d * n, f_C=f_C, f_CB=f_CB,
                             f_CS=f_CS, values=vals)


def contact_point_residual(formulation: str, a1, cpp: ClosestPointResult,
                           law):
    """Force coefficients of the virtual work at one beam point.

    Returns (R, kin) where R has shape (5, 3) over the slots
    [u_B, u_B,1, u_S, u_S,1, u_S,2], unweighted. The beam and shell
    displacement rows are equal and opposite for the f and f_C parts.
    """
    kin = contact_kinematics(cpp, a1, law, formulation)
    R = np.zeros((5, 3))
    if formulation == "FF":
        fc = kin.f + kin.f_C
        R[0] = fc
        R[1] = kin.f_CB
        R[2] = -fc
        R[3] = -kin.f_CS[0]
        R[4] = -kin.f_CS[1]
    else:
        R[0] = kin.f
        R[2] = -kin.f
    return R, kin


def contact_point_tangent(formulation: str, a1, cpp: ClosestPointResult,
                          law) -> np.ndarray:
    """Tangent blocks (5, 5, 3, 3) over [u_B, u_B,1, u_S, u_S,1, u_S,2].

    Exact for RF1 and RF2; for FF the RF1 blocks are returned, leaving
    the linearization of the angle-variation forces out. The distance
    part is symmetric across the slot pairs; the angle part fills only
    the u_B and u_S rows, which is what breaks RF1 symmetry. The last
    shell block carries the d(n x n)C^ab shift scaled by phi_d, which
    the block-by-block derivation produces from phi_d (n x d_vec) C^ab.
    """
    kin = contact_kinematics(cpp, a1, law, formulation)
    vals = kin.values
    n = cpp.n
    d = cpp.d
    K = np.zeros((5, 5, 3, 3))
    nn = np.outer(n, n)
    proj = np.eye(3) - np.einsum("ai,aj->ij", cpp.g, cpp.g_bar) - nn
    k11 = vals.phi_dd * nn + (vals.phi_d / d) * proj
    K[0, 0] += k11
    K[0, 2] -= k11
    K[2, 0] -= k11
    K[2, 2] += k11
    for b in range(2):
        k13 = -vals.phi_d * np.outer(cpp.g_bar[b], n)
        K[0, 3 + b] += k13
        K[2, 3 + b] -= k13
        K[3 + b, 0] += k13.T
        K[3 + b, 2] -= k13.T
        for a in range(2):
            K[3 + a, 3 + b] -= vals.phi_d * d * cpp.C_con[a, b] * nn
    if formulation != "RF2":
        t, t_n, w_d = kin.t, kin.t_n, kin.w_d
        sj = math.sqrt(np.asarray(a1, float) @ np.asarray(a1, float))
        tg = cpp.g @ t
        k11t = (w_d / d) * (np.outer(n, t) - np.outer(n, tg @ cpp.g_bar)
                            - t_n * nn)
        k12t = (w_d / sj) * (nn - t_n * np.outer(n, t))
        K[0, 0] += k11t
        K[0, 1] += k12t
        K[0, 2] -= k11t
        K[2, 0] -= k11t
        K[2, 1] -= k12t
        K[2, 2] += k11t
        for b in range(2):
            k14 = -w_d * (t @ cpp.g_bar[b]) * nn
            K[0, 3 + b] += k14
            K[2, 3 + b] -= k14
    return K


class ProjectionTracker:
    """Per-Gauss-point store of last-converged projection parameters.

    Keys are beam quadrature point indices; entries never alias, so
    concurrent use across points needs no locking.
    """

    def __init__(self):
        self._theta = {}

    def get(self, key):
        return self._theta.get(key)

    def update(self, key, theta1: float, theta2: float):
        self._theta[key] = (theta1, theta2)

    def copy(self):
        t = ProjectionTracker()
        t._theta = dict(self._theta)
        return t


@dataclass
class SbsContribution:
    """Assembled interaction residual, tangent blocks and diagnostics.

    diagnostics rows hold (xi, d, cos_a, |f|) per beam quadrature
    point; dropped boundary points keep their distance with zero force.
    interior flags the points whose projection is orthogonal, whether
    or not they contributed under an active mask.
    """

    R_beam: np.ndarray
    R_shell: np.ndarray
    K_bb: sparse.csr_matrix
    K_bs: sparse.csr_matrix
    K_sb: sparse.csr_matrix
    K_ss: sparse.csr_matrix
    diagnostics: np.ndarray
    interior: np.ndarray
    n_dropped: int


def _shell_support(shell: ShellPatch, t1: float, t2: float):
    kv1, kv2 = shell.patch.knots
    d1, f1 = eval_basis(kv1, t1, 1)
    d2, f2 = eval_basis(kv2, t2, 1)
    p1, p2 = kv1.degree, kv2.degree
    nodes = ((f1 + np.arange(p1 + 1))[:, None] * kv2.n
             + (f2 + np.arange(p2 + 1))[None, :]).ravel()
    S = np.empty((3, nodes.size))
    S[0] = np.outer(d1[0], d2[0]).ravel()
    S[1] = np.outer(d1[1], d2[0]).ravel()
    S[2] = np.outer(d1[0], d2[1]).ravel()
    return nodes, S


def _beam_point(beam, x, g):
    e = beam.gp_el[g]
    idx = beam.conn[e]
    xe = x[idx]
    return idx, beam.Nv[g] @ xe, beam.dN[g] @ xe


def _project_gp(beam, shell, X_s, r_B, g, tracker):
    guess = tracker.get(g) if tracker is not None else None
    cpp = closest_point_project(shell, X_s, r_B, guess)
    if cpp.status == "failed":
        raise ProjectionError(
            f"projection failed at beam xi = {beam.gp_params[g]:.6g}")
    if tracker is not None:
        tracker.update(g, cpp.theta1, cpp.theta2)
    return cpp


def sbs_integrate(beam, shell, beam_dofs, shell_dofs, formulation: str,
                  law, tracker: ProjectionTracker = None,
                  want_k: bool = True, active=None) -> SbsContribution:
    """Integrate the interaction along the beam axis quadrature.

    Contributions are scaled by the reference arclength measure of each
    beam quadrature point. Boundary projections are dropped and
    counted; failed projections and law overlap raise, which callers
    treat as a step-size event. Points run in index order, so assembly
    is deterministic.

    An active mask (bool per quadrature point) pins the contributing
    set: masked-out points stay force free even when their foot turns
    interior, and masked-in points with a boundary foot are evaluated
    at the clamped edge parameters. Without the pin, a point whose
    orthogonal foot sits at the patch edge toggles a finite force
    between Newton iterates and locks the iteration in a two-cycle, so
    solvers freeze the mask per increment.
    """
    _check_formulation(formulation)
    x_b = beam.current_axis(beam_dofs)
    X_s = shell.current_coefs(shell_dofs)
    ngp = beam.gp_params.size
    R_beam = np.zeros(beam.ndof)
    R_shell = np.zeros(shell.ndof)
    diags = np.zeros((ngp, 4))
    interior = np.zeros(ngp, dtype=bool)
    coo = {key: ([], [], []) for key in ("bb", "bs", "sb", "ss")}
    dropped = 0
    for g in range(ngp):
        idx, r_B, a1 = _beam_point(beam, x_b, g)
        cpp = _project_gp(beam, shell, X_s, r_B, g, tracker)
        diags[g, 0] = beam.gp_params[g]
        diags[g, 1] = cpp.d
        interior[g] = cpp.status == "interior"
        keep = interior[g] if active is None else bool(active[g])
        if not keep:
            dropped += 1
            continue
        Rs, kin = contact_point_residual(formulation, a1, cpp, law)
        diags[g, 2] = kin.cos_a
        diags[g, 3] = float(np.linalg.norm(kin.f))
        scale = beam.consts[g, 8]
        Sb = np.vstack((beam.Nv[g], beam.dN[g]))
        s_nodes, Ss = _shell_support(shell, cpp.theta1, cpp.theta2)
        bdof = (3 * idx[:, None] + np.arange(3)).ravel()
        sdof = (3 * s_nodes[:, None] + np.arange(3)).ravel()
        R_beam[bdof] += scale * (Sb.T @ Rs[:2]).ravel()
        R_shell[sdof] += scale * (Ss.T @ Rs[2:]).ravel()
        if not want_k:
            continue
        Kb = contact_point_tangent(formulation, a1, cpp, law)
        b_slc, s_slc = slice(0, 2), slice(2, 5)
        for key, Sr, Sc, rows, cols, rs, cs in (
                ("bb", Sb, Sb, bdof, bdof, b_slc, b_slc),
                ("bs", Sb, Ss, bdof, sdof, b_slc, s_slc),
                ("sb", Ss, Sb, sdof, bdof, s_slc, b_slc),
                ("ss", Ss, Ss, sdof, sdof, s_slc, s_slc)):
            loc = scale * np.einsum("ri,rcab,cj->iajb", Sr, Kb[rs, cs], Sc)
            r, c, v = coo[key]
            r.append(np.repeat(rows, cols.size))
            c.append(np.tile(cols, rows.size))
            v.append(loc.reshape(rows.size, cols.size).ravel())

    def build(key, shape):
        r, c, v = coo[key]
        if not r:
            return sparse.csr_matrix(shape)
        return sparse.coo_matrix(
            (np.concatenate(v), (np.concatenate(r), np.concatenate(c))),
            shape=shape).tocsr()

    nb, ns = beam.ndof, shell.ndof
    return SbsContribution(
        R_beam=R_beam, R_shell=R_shell,
        K_bb=build("bb", (nb, nb)), K_bs=build("bs", (nb, ns)),
        K_sb=build("sb", (ns, nb)), K_ss=build("ss", (ns, ns)),
        diagnostics=diags, interior=interior, n_dropped=dropped)


def sbs_energy(beam, shell, beam_dofs, shell_dofs, formulation: str, law,
               tracker: ProjectionTracker = None) -> float:
    """Integrated interaction energy over the beam axis.

    The FF residual is the exact gradient of this value; RF2 matches
    its own residual with the law pinned at cos(alpha) = 1. RF1 is not
    a gradient of any potential, so this value is diagnostic only
    there (it evaluates the law at the actual angle, like FF).
    """
    _check_formulation(formulation)
    x_b = beam.current_axis(beam_dofs)
    X_s = shell.current_coefs(shell_dofs)
    total = 0.0
    for g in range(beam.gp_params.size):
        _, r_B, a1 = _beam_point(beam, x_b, g)
        cpp = _project_gp(beam, shell, X_s, r_B, g, tracker)
        if cpp.status == "boundary":
            continue
        if formulation == "RF2":
            cos_a = 1.0
        else:
            t = a1 / math.sqrt(a1 @ a1)
            t_n = float(min(max(t @ cpp.n, -1.0), 1.0))
            cos_a = math.sqrt(max(1.0 - t_n * t_n, 0.0))
        total += beam.consts[g, 8] * dspt_eval(law, cpp.d, cos_a).phi
    return total


def sbs_distribution(beam, shell, beam_dofs, shell_dofs, formulation: str,
                     law, tracker: ProjectionTracker = None) -> np.ndarray:
    """Per-quadrature-point interaction state, for reporting.

    Returns rows (xi, d, magnitude, normal): normalized axis parameter,
    midsurface distance, magnitude of the translational force line
    density on the beam, and its component along the surface normal
    (positive pushes the beam away from the shell, so repulsion is
    positive and attraction negative). Dropped boundary points keep
    their distance and carry zero force.
    """
    _check_formulation(formulation)
    x_b = beam.current_axis(beam_dofs)
    X_s = shell.current_coefs(shell_dofs)
    lo, hi = beam.axis.knots[0].domain
    ngp = beam.gp_params.size
    rows = np.zeros((ngp, 4))
    for g in range(ngp):
        _, r_B, a1 = _beam_point(beam, x_b, g)
        cpp = _project_gp(beam, shell, X_s, r_B, g, tracker)
        rows[g, 0] = (beam.gp_params[g] - lo) / (hi - lo)
        rows[g, 1] = cpp.d
        if cpp.status == "boundary":
            continue
        kin = contact_kinematics(cpp, a1, law, formulation)
        f_tot = kin.f + kin.f_C
        rows[g, 2] = float(np.linalg.norm(f_tot))
        rows[g, 3] = -float(f_tot @ cpp.n)
    return rows
