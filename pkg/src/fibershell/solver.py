"""Global system: DOF bookkeeping, assembly, Newton, continuation.

A model couples one fiber and one shell patch (either may be absent)
through the line-integrated interaction, plus ramped point loads. The
composite DOF vector stacks the beam block before the shell block;
constraints are eliminated, so the solved system contains free DOFs
only. Prescribed motion is a ramp u = rate * t on the constrained DOF.

The continuation loop is sequential and deterministic: assembly walks
elements and quadrature points in index order, failed increments roll
back the projection tracker, and checkpoints capture every piece of
mutable state (including beam frame rebasing) so a restart reproduces
the remaining trajectory bitwise.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse
from scipy.sparse import linalg as sla

from .beam import BeamPatch, beam_energy, beam_residual, beam_tangent, \
    point_moment, rebase_frames
from .contact import ProjectionTracker, sbs_energy, sbs_integrate
from .shell import ShellPatch, shell_energy, shell_residual, shell_tangent

CHECKPOINT_VERSION = 1


class LinearSolveError(RuntimeError):
    """Direct sparse solve failed (structural or numerical singularity)."""


class ConstraintError(ValueError):
    """Inconsistent constraint table (duplicate or chained entries)."""


class DofMap:
    """Composite DOF index space with eliminated constraints.

    Beam DOFs come first (3 displacements per control point, then the
    twist block), shell control point displacements follow. Constraint
    kinds: fixed (constant value), ramp (value = rate * t) and link
    (slave follows master, which must stay free).
    """

    def __init__(self, beam: BeamPatch = None, shell: ShellPatch = None):
        self.beam = beam
        self.shell = shell
        self.n_beam = beam.ndof if beam is not None else 0
        self.n_shell = shell.ndof if shell is not None else 0
        self.ndof = self.n_beam + self.n_shell
        self._fixed = {}
        self._ramp = {}
        self._link = {}
        self._P = None

    # -- index helpers ---------------------------------------------------

    def beam_u(self, node: int, comp: int) -> int:
        return 3 * node + comp

    def beam_twist(self, node: int) -> int:
        return 3 * self.beam.n_fun + node

    def shell_u(self, i1: int, i2: int, comp: int) -> int:
        n2 = self.shell.shape[1]
        return self.n_beam + 3 * (i1 * n2 + i2) + comp

    # -- constraint table ------------------------------------------------

    def _claim(self, dof: int):
        if not 0 <= dof < self.ndof:
            raise ConstraintError(f"dof {dof} outside [0, {self.ndof})")
        if dof in self._fixed or dof in self._ramp or dof in self._link:
            raise ConstraintError(f"dof {dof} constrained twice")
        if self._P is not None:
            raise ConstraintError("constraint added after finalize")

    def fix(self, dof: int, value: float = 0.0):
        self._claim(dof)
        self._fixed[dof] = float(value)

    def ramp(self, dof: int, rate: float):
        self._claim(dof)
        self._ramp[dof] = float(rate)

    def link(self, slave: int, master: int):
        self._claim(slave)
        self._link[slave] = master

    def finalize(self):
        """Freeze the table and build the free-DOF prolongation."""
        constrained = set(self._fixed) | set(self._ramp) | set(self._link)
        for master in self._link.values():
            if master in constrained:
                raise ConstraintError(
                    f"link master {master} is itself constrained")
        self.free = np.array(sorted(set(range(self.ndof)) - constrained),
                             dtype=np.int64)
        self.n_free = self.free.size
        pos = {int(d): i for i, d in enumerate(self.free)}
        rows = list(self.free) + list(self._link)
        cols = list(range(self.n_free)) + [pos[m] for m in
                                           self._link.values()]
        self._P = sparse.csr_matrix(
            (np.ones(len(rows)), (rows, cols)), shape=(self.ndof,
                                                       self.n_free))
        return self

    # -- mappings ----------------------------------------------------------

    def expand(self, t: float, u_free: np.ndarray) -> np.ndarray:
        """Full DOF vector from the free vector at quasi-time t."""
        u = np.zeros(self.ndof)
        u[self.free] = u_free
        for dof, value in self._fixed.items():
            u[dof] = value
        for dof, rate in self._ramp.items():
            u[dof] = rate * t
        for slave, master in self._link.items():
            u[slave] = u[master]
        return u

    def reduce_r(self, R: np.ndarray) -> np.ndarray:
        return self._P.T @ R

    def reduce_k(self, K) -> sparse.csr_matrix:
        return (self._P.T @ K @ self._P).tocsr()

    def split(self, u_full: np.ndarray):
        return u_full[: self.n_beam], u_full[self.n_beam:]


@dataclass
class AssembleInfo:
    """Side data of one assembly: full-system residual (for reactions),
    interaction force resultant on the beam, dropped projections, the
    per-point contact diagnostics and the interior-foot flags."""

    R_full: np.ndarray
    f_interaction: float
    n_dropped: int
    diagnostics: np.ndarray
    interior: np.ndarray


@dataclass
class SystemState:
    """Converged (or attempted) state of the reduced system."""

    t: float
    u: np.ndarray
    residual: np.ndarray
    tangent: sparse.csr_matrix
    record: list


@dataclass
class ContinuationConfig:
    """Quasi-static stepping control.

    Newton stops when the residual norm falls below rel_tol times the
    entry norm of the increment (with an absolute floor tied to the
    structural stiffness scale); steps halve on failure and double
    after convergence in at most fast_iters iterations.
    """

    t_end: float
    dt: float
    dt_min: float = 1e-6
    dt_max: float = 1.0
    rel_tol: float = 1e-8
    max_iter: int = 20
    fast_iters: int = 4

    def __post_init__(self):
        if not 0.0 < self.dt_min <= self.dt <= self.dt_max:
            raise ValueError("need 0 < dt_min <= dt <= dt_max")


class Model:
    """One fiber, one shell, their interaction and ramped point loads.

    moments holds (xi, M) pairs applied to the beam as M * t; forces
    holds (global dof, rate) nodal loads F = rate * t. The projection
    tracker is owned here so warm starts persist across iterations and
    increments. active, when set, pins the contributing interaction
    points for the span of one Newton loop (see sbs_integrate); it is
    None between increments, so classification is fresh per increment.
    """

    def __init__(self, beam: BeamPatch = None, shell: ShellPatch = None,
                 law=None, formulation: str = "FF",
                 dofmap: DofMap = None):
        if beam is None and shell is None:
            raise ValueError("model needs at least one patch")
        self.beam = beam
        self.shell = shell
        self.law = law
        self.formulation = formulation
        self.dofmap = dofmap if dofmap is not None else DofMap(
            beam, shell).finalize()
        self.tracker = ProjectionTracker()
        self.active = None
        self.moments = []
        self.forces = []
        self.has_contact = beam is not None and shell is not None \
            and law is not None

    @property
    def symmetric(self) -> bool:
        """Whether the assembled tangent is symmetric by construction."""
        if self.moments:
            return False
        return not self.has_contact or self.formulation == "RF2"

    def add_moment(self, xi: float, M):
        self.moments.append((float(xi), np.asarray(M, float)))
        self.beam.register_point(xi)

    def add_force(self, dof: int, rate: float):
        self.forces.append((int(dof), float(rate)))

    def assemble(self, t: float, u_free: np.ndarray, want_k: bool = True):
        """Reduced residual/tangent and assembly side data at (t, u).

        The residual is the gradient of the structural plus interaction
        energy minus the external load terms; element errors (overlap,
        failed projection, degenerate metric, frame singularity)
        propagate to the caller, which treats them as increment
        failure.
        """
        dm = self.dofmap
        u_full = dm.expand(t, u_free)
        q_b, q_s = dm.split(u_full)
        R = np.zeros(dm.ndof)
        nb = dm.n_beam
        blocks = [[None, None], [None, None]]
        if self.beam is not None:
            R[:nb] += beam_residual(self.beam, q_b)
            if want_k:
                blocks[0][0] = beam_tangent(self.beam, q_b)
        if self.shell is not None:
            R[nb:] += shell_residual(self.shell, q_s)
            if want_k:
                blocks[1][1] = shell_tangent(self.shell, q_s)
        f_int = 0.0
        dropped = 0
        diags = np.zeros((0, 4))
        interior = np.zeros(0, dtype=bool)
        if self.has_contact:
            out = sbs_integrate(self.beam, self.shell, q_b, q_s,
                                self.formulation, self.law,
                                tracker=self.tracker, want_k=want_k,
                                active=self.active)
            R[:nb] += out.R_beam
            R[nb:] += out.R_shell
            f_int = float(np.linalg.norm(
                out.R_beam[: 3 * self.beam.n_fun].reshape(-1, 3).sum(0)))
            dropped = out.n_dropped
            diags = out.diagnostics
            interior = out.interior
            if want_k:
                blocks[0][0] = blocks[0][0] + out.K_bb
                blocks[0][1] = out.K_bs
                blocks[1][0] = out.K_sb
                blocks[1][1] = blocks[1][1] + out.K_ss
        for xi, M in self.moments:
            Rm, Km = point_moment(self.beam, q_b, xi, M * t)
            R[:nb] += Rm
            if want_k:
                blocks[0][0] = blocks[0][0] + Km
        for dof, rate in self.forces:
            R[dof] -= rate * t
        K_red = None
        if want_k:
            if self.beam is not None and self.shell is not None:
                K = sparse.bmat(blocks, format="csr")
            elif self.beam is not None:
                K = blocks[0][0]
            else:
                K = blocks[1][1]
            K_red = dm.reduce_k(K)
        info = AssembleInfo(R_full=R, f_interaction=f_int,
                            n_dropped=dropped, diagnostics=diags,
                            interior=interior)
        return dm.reduce_r(R), K_red, info

    def energy(self, t: float, u_free: np.ndarray) -> float:
        """Structural plus interaction potential (loads excluded)."""
        u_full = self.dofmap.expand(t, u_free)
        q_b, q_s = self.dofmap.split(u_full)
        total = 0.0
        if self.beam is not None:
            total += beam_energy(self.beam, q_b)
        if self.shell is not None:
            total += shell_energy(self.shell, q_s)
        if self.has_contact:
            total += sbs_energy(self.beam, self.shell, q_b, q_s,
                                self.formulation, self.law,
                                tracker=self.tracker)
        return total

    def stiffness_scale(self) -> float:
        """Largest tangent diagonal at the reference state.

        Runs on a scratch copy of the projection tracker so probing the
        scale never disturbs warm starts (restart determinism).
        """
        saved = self.tracker
        self.tracker = saved.copy()
        try:
            _, K, _ = self.assemble(0.0, np.zeros(self.dofmap.n_free))
        finally:
            self.tracker = saved
        return float(np.abs(K.diagonal()).max())


def linear_solve(K, rhs: np.ndarray, symmetric: bool = False) -> np.ndarray:
    """Direct sparse solve; the symmetric path keeps diagonal pivoting.

    Raises LinearSolveError on exact or numerical singularity.
    """
    K = sparse.csc_matrix(K)
    if K.shape[0] != K.shape[1] or K.shape[0] != rhs.shape[0]:
        raise ValueError("system must be square and match the rhs")
    try:
        if symmetric:
            lu = sla.splu(K, diag_pivot_thresh=0.0,
                          options={"SymmetricMode": True})
        else:
            lu = sla.splu(K)
        x = lu.solve(rhs)
    except RuntimeError as exc:
        raise LinearSolveError(f"sparse factorization failed: {exc}") from exc
    if not np.all(np.isfinite(x)):
        raise LinearSolveError("numerically singular tangent (nan/inf in "
                               "the solution)")
    return x


def newton_solve(model: Model, t: float, u0: np.ndarray,
                 cfg: ContinuationConfig, floor: float):
    """Newton iteration at fixed quasi-time t.

    Returns (state, ok, info). The convergence test is a relative drop
    of the residual norm against the entry residual of the increment,
    with the absolute floor. The interaction active set is pinned from
    the entry assembly for the whole loop, so a foot crossing the patch
    edge cannot toggle its force between iterates; the pin is released
    on exit. Divergence is three consecutive norm increases, the
    iteration cap, a linear-solve failure or an element-level error;
    all yield ok = False with the entry state untouched.
    """
    u = u0.copy()
    record = []
    try:
        R, K, info = model.assemble(t, u)
        if model.has_contact:
            model.active = info.interior
        norm0 = float(np.linalg.norm(R))
        record.append(norm0)
        tol = max(cfg.rel_tol * norm0, floor)
        if norm0 <= floor:
            return SystemState(t=t, u=u, residual=R, tangent=K,
                               record=record), True, info
        grow = 0
        for _ in range(cfg.max_iter):
            du = linear_solve(K, -R, symmetric=model.symmetric)
            u += du
            R, K, info = model.assemble(t, u)
            nr = float(np.linalg.norm(R))
            record.append(nr)
            if nr <= tol:
                return SystemState(t=t, u=u, residual=R, tangent=K,
                                   record=record), True, info
            grow = grow + 1 if nr > record[-2] else 0
            if grow >= 3:
                break
    except (LinearSolveError, RuntimeError, ValueError):
        return SystemState(t=t, u=u0, residual=None, tangent=None,
                           record=record), False, None
    finally:
        model.active = None
    return SystemState(t=t, u=u0, residual=None, tangent=None,
                       record=record), False, None


@dataclass
class StepRecord:
    t: float
    dt: float
    iterations: int
    res_first: float
    res_last: float
    f_interaction: float
    n_dropped: int


@dataclass
class Trajectory:
    """Converged path of a continuation run."""

    steps: list = field(default_factory=list)
    events: dict = field(default_factory=dict)
    aborted: bool = False
    state: SystemState = None

    @property
    def t(self) -> float:
        return self.steps[-1].t if self.steps else 0.0


def save_checkpoint(path, model: Model, state: SystemState, dt: float,
                    events: dict):
    """Dump everything a bitwise restart needs into one npz file."""
    data = {
        "version": np.array([CHECKPOINT_VERSION]),
        "t": np.array([state.t]),
        "dt": np.array([dt]),
        "u": state.u,
        "f_max": np.array([events.get("f_max", 0.0)]),
        "pulloff_t": np.array([events.get("pulloff", np.nan)]),
    }
    keys = sorted(model.tracker._theta)
    data["tracker_keys"] = np.array(keys, dtype=np.int64)
    data["tracker_theta"] = np.array(
        [model.tracker._theta[k] for k in keys]).reshape(len(keys), 2)
    if model.beam is not None:
        data["beam_frames"] = model.beam.frames
        data["beam_consts"] = model.beam.consts
        data["beam_phi_frozen"] = model.beam.phi_frozen
        pts = sorted(model.beam._points)
        data["point_xis"] = np.array(pts)
        data["point_frames"] = np.array(
            [model.beam._points[x]["frame"] for x in pts]).reshape(
                len(pts), 3, 3)
        data["point_phis"] = np.array(
            [model.beam._points[x]["phi"] for x in pts])
    np.savez(path, **data)


def load_checkpoint(path, model: Model):
    """Restore model-side mutable state; returns (t, u, dt, events)."""
    with np.load(path) as z:
        if int(z["version"][0]) != CHECKPOINT_VERSION:
            raise ValueError(f"unsupported checkpoint version "
                             f"{int(z['version'][0])}")
        model.tracker._theta = {
            int(k): (float(th[0]), float(th[1]))
            for k, th in zip(z["tracker_keys"], z["tracker_theta"])}
        if model.beam is not None and "beam_frames" in z:
            model.beam.frames = z["beam_frames"].copy()
            model.beam.consts = z["beam_consts"].copy()
            model.beam.phi_frozen = z["beam_phi_frozen"].copy()
            model.beam._points = {
                float(x): {"frame": f.copy(), "phi": float(p)}
                for x, f, p in zip(z["point_xis"], z["point_frames"],
                                   z["point_phis"])}
        events = {"f_max": float(z["f_max"][0])}
        if not np.isnan(z["pulloff_t"][0]):
            events["pulloff"] = float(z["pulloff_t"][0])
        return float(z["t"][0]), z["u"].copy(), float(z["dt"][0]), events


PULLOFF_SEPARATION = 2.0


def continuation_run(model: Model, cfg: ContinuationConfig,
                     on_step=None, checkpoint=None, restart=None,
                     rebase: bool = True, t_stops=()) -> Trajectory:
    """March quasi-time to t_end with adaptive step halving/doubling.

    on_step(model, state, info, traj) runs after every accepted
    increment. checkpoint (a path) is rewritten after each accepted
    step; restart (a path) resumes from such a file. Failed attempts
    restore the projection tracker, so the accepted trajectory is
    independent of how many failures occurred. The pull-off event
    fires when contact is lost everywhere: every interaction
    quadrature point sits farther than PULLOFF_SEPARATION times the
    law's equilibrium distance (a force threshold would never trigger
    because the attraction tail decays only algebraically). t_stops
    are quasi-times the marcher must land on exactly (output
    schedules); steps are shortened to hit them.
    """
    traj = Trajectory()
    if restart is not None:
        t, u, dt, events = load_checkpoint(restart, model)
        traj.events.update(events)
    else:
        t, u, dt = 0.0, np.zeros(model.dofmap.n_free), cfg.dt
    floor = 1e-14 * model.stiffness_scale()
    d_off = None
    if model.has_contact:
        d_off = PULLOFF_SEPARATION * model.law.equilibrium_distance()
    f_max = traj.events.get("f_max", 0.0)
    eps = 1e-12 * max(1.0, abs(cfg.t_end))
    stops = sorted(s for s in t_stops if s < cfg.t_end - eps)
    while t < cfg.t_end - eps:
        dt_eff = min(dt, cfg.t_end - t)
        while stops and stops[0] <= t + eps:
            stops.pop(0)
        if stops:
            dt_eff = min(dt_eff, stops[0] - t)
        tracker_snapshot = model.tracker.copy()
        state, ok, info = newton_solve(model, t + dt_eff, u, cfg, floor)
        if not ok:
            model.tracker = tracker_snapshot
            dt = 0.5 * dt
            if dt < cfg.dt_min:
                traj.aborted = True
                break
            continue
        t = state.t
        u = state.u
        traj.steps.append(StepRecord(
            t=t, dt=dt_eff, iterations=len(state.record) - 1,
            res_first=state.record[0], res_last=state.record[-1],
            f_interaction=info.f_interaction, n_dropped=info.n_dropped))
        f_max = max(f_max, info.f_interaction)
        traj.events["f_max"] = f_max
        if ("pulloff" not in traj.events and d_off is not None
                and f_max > 0.0 and info.diagnostics.shape[0]
                and float(info.diagnostics[:, 1].min()) > d_off):
            traj.events["pulloff"] = t
        traj.state = state
        if on_step is not None:
            on_step(model, state, info, traj)
        if rebase and model.beam is not None:
            rebase_frames(model.beam, model.dofmap.split(
                model.dofmap.expand(t, u))[0])
        if checkpoint is not None:
            save_checkpoint(checkpoint, model, state, dt, traj.events)
        if len(state.record) - 1 <= cfg.fast_iters:
            dt = min(2.0 * dt, cfg.dt_max)
    return traj
