"""Peeling and bending scenarios: builders, runners, CSV outputs.

Both scenarios couple one fiber to one plate-like shell through the
line-integrated interaction and march quasi-time with the adaptive
continuation. Peeling lifts both fiber end points until the fiber
detaches; bending drives the fiber with an end moment while adhesion
holds it on the surface. The bending model exploits the two mirror
symmetries of that setup and discretizes a quarter of the shell and
half of the fiber.

Outputs are plain CSV (UTF-8, LF line ends, one header row, floats
written with repr so they round-trip exactly):

  reactions.csv     t, left_x, left_y, left_z, right_x, right_y,
                    right_z, total
  interaction.csv   t, xi, distance, magnitude, normal
  shell_fields.csv  t, theta1, theta2, N11, N22, N12, M11, M22, M12
  events.csv        event, t

Reaction components are the full-system residual at the reported end
DOFs, so a positive value is the force the constraint applies to the
structure along that axis; ``total`` sums the two vertical (z)
components. The interaction ``normal`` column is the component of the
force line density along the surface normal, positive when it pushes
the fiber away from the surface (repulsion) and negative under
adhesion; rows for quadrature points that project outside the shell
keep their distance and carry zero force. Shell section forces are
sampled at the element midpoints of the reference parameterization,
which covers the quarter patch in the bending scenario.
"""

import csv
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .beam import BeamPatch, eval_beam_state
from .config import ScenarioConfig, write_echo
from .contact import sbs_distribution
from .shell import ShellPatch, eval_shell_state, shell_section, shell_strains
from .solver import ConstraintError, DofMap, Model, continuation_run
from .splines import fiber_patch, rect_patch

REACTION_COLUMNS = ("t", "left_x", "left_y", "left_z",
                    "right_x", "right_y", "right_z", "total")
INTERACTION_COLUMNS = ("t", "xi", "distance", "magnitude", "normal")
SHELL_FIELD_COLUMNS = ("t", "theta1", "theta2", "N11", "N22", "N12",
                       "M11", "M22", "M12")
EVENT_COLUMNS = ("event", "t")


class ConstraintSet:
    """Fix/ramp/link requests with overlap resolution.

    Symmetry reductions reach the same DOF along several walks (cut
    rows, corners, link chains), so requests may repeat or chain.
    Repeated requests merge when they agree and raise when they
    contradict. apply() resolves link chains by equivalence class: a
    class containing a fixed (or ramped) DOF becomes entirely fixed
    (ramped), everything else links to the smallest DOF of its class.
    """

    def __init__(self):
        self._fix = {}
        self._ramp = {}
        self._pairs = []

    def fix(self, dof: int, value: float = 0.0):
        dof, value = int(dof), float(value)
        if dof in self._ramp:
            raise ConstraintError(f"dof {dof} both fixed and ramped")
        old = self._fix.setdefault(dof, value)
        if old != value:
            raise ConstraintError(
                f"dof {dof} fixed at both {old} and {value}")

    def ramp(self, dof: int, rate: float):
        dof, rate = int(dof), float(rate)
        if dof in self._fix:
            raise ConstraintError(f"dof {dof} both fixed and ramped")
        old = self._ramp.setdefault(dof, rate)
        if old != rate:
            raise ConstraintError(
                f"dof {dof} ramped at both {old} and {rate}")

    def link(self, a: int, b: int):
        self._pairs.append((int(a), int(b)))

    def apply(self, dm: DofMap) -> DofMap:
        """Resolve and install the constraints; dm is not finalized."""
        parent = {}

        def find(d):
            while parent[d] != d:
                parent[d] = parent[parent[d]]
                d = parent[d]
            return d

        for a, b in self._pairs:
            parent.setdefault(a, a)
            parent.setdefault(b, b)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups = {}
        for d in parent:
            groups.setdefault(find(d), []).append(d)
        fix = dict(self._fix)
        ramp = dict(self._ramp)
        links = {}
        for root in sorted(groups):
            members = sorted(groups[root])
            values = sorted({fix[d] for d in members if d in fix})
            rates = sorted({ramp[d] for d in members if d in ramp})
            if values and rates:
                raise ConstraintError(
                    f"linked dofs {members} mix fixed and ramped values")
            if len(values) > 1 or len(rates) > 1:
                raise ConstraintError(
                    f"linked dofs {members} carry contradictory values")
            for d in members:
                fix.pop(d, None)
                ramp.pop(d, None)
            if values:
                for d in members:
                    fix[d] = values[0]
            elif rates:
                for d in members:
                    ramp[d] = rates[0]
            else:
                for d in members[1:]:
                    links[d] = members[0]
        for d in sorted(fix):
            dm.fix(d, fix[d])
        for d in sorted(ramp):
            dm.ramp(d, ramp[d])
        for d in sorted(links):
            dm.link(d, links[d])
        return dm


@dataclass
class ScenarioModel:
    """Assembled model plus the bookkeeping the runners need."""

    model: Model
    cfg: ScenarioConfig
    left_dofs: tuple
    right_dofs: tuple
    field_points: list


@dataclass
class OutputBundle:
    """In-memory results of one scenario run.

    reactions has one row per accepted increment; interaction and
    shell_fields stack the snapshot blocks in time order. events holds
    (name, quasi-time) pairs ordered by time.
    """

    reactions: np.ndarray
    interaction: np.ndarray
    shell_fields: np.ndarray
    events: list
    snapshot_times: list
    aborted: bool
    trajectory: object
    extras: dict = field(default_factory=dict)


def _shear_modulus(E: float, nu: float) -> float:
    return E / (2.0 * (1.0 + nu))


def _field_points(shell: ShellPatch) -> list:
    """Element midpoints with their reference states, row-major."""
    kv1, kv2 = shell.patch.knots
    ref_dofs = np.zeros(shell.ndof)
    pts = []
    for e1 in range(kv1.n_elements):
        lo1, hi1 = kv1.element_span(e1)
        for e2 in range(kv2.n_elements):
            lo2, hi2 = kv2.element_span(e2)
            th1 = 0.5 * (lo1 + hi1)
            th2 = 0.5 * (lo2 + hi2)
            pts.append((th1, th2,
                        eval_shell_state(shell, ref_dofs, th1, th2)))
    return pts


def build_peeling(cfg: ScenarioConfig) -> ScenarioModel:
    """Fiber on a rectangular plate, both fiber ends pulled upward.

    The plate's two width-direction edge control rows are held in all
    components. The fiber runs along the plate's first axis at mid
    width, shifted by beam_offset so the two overhang lengths differ
    and the response loses its left/right mirror symmetry. Both fiber
    end control points are held in x and y, driven in z at pull_rate,
    and their twist is held.
    """
    g, m, me = cfg.geometry, cfg.materials, cfg.mesh
    shell = ShellPatch(
        rect_patch(me.degree, (me.n_el_shell_1, me.n_el_shell_2),
                   (0.0, 0.0, 0.0), (g.shell_length, g.shell_width)),
        h=g.thickness, E=m.E_shell, nu=m.nu_shell)
    z0 = cfg.z_init()
    y_mid = 0.5 * g.shell_width
    beam = BeamPatch(
        fiber_patch(me.degree, me.n_el_beam,
                    (g.beam_offset, y_mid, z0),
                    (g.beam_offset + g.beam_length, y_mid, z0)),
        R_B=g.beam_radius, E=m.E_beam,
        mu=_shear_modulus(m.E_beam, m.nu_beam))
    dm = DofMap(beam, shell)
    cs = ConstraintSet()
    n1, n2 = shell.shape
    for i1 in range(n1):
        for comp in range(3):
            cs.fix(dm.shell_u(i1, 0, comp))
            cs.fix(dm.shell_u(i1, n2 - 1, comp))
    last = beam.n_fun - 1
    for node in (0, last):
        cs.fix(dm.beam_u(node, 0))
        cs.fix(dm.beam_u(node, 1))
        cs.ramp(dm.beam_u(node, 2), cfg.loading.pull_rate)
        cs.fix(dm.beam_twist(node))
    cs.apply(dm).finalize()
    model = Model(beam=beam, shell=shell, law=cfg.law(),
                  formulation=cfg.formulation, dofmap=dm)
    return ScenarioModel(
        model=model, cfg=cfg,
        left_dofs=tuple(dm.beam_u(0, c) for c in range(3)),
        right_dofs=tuple(dm.beam_u(last, c) for c in range(3)),
        field_points=_field_points(shell))


def build_bending(cfg: ScenarioConfig) -> ScenarioModel:
    """Quarter shell and half fiber with two mirror symmetry planes.

    The full setup is a fiber across the middle of a plate, loaded by
    opposite end moments about the in-plane axis transverse to the
    fiber, with the plate corners held in y and z. Plane A contains
    the fiber (normal x), plane B cuts it in half (normal y); the
    model keeps the quarter x <= length/2, y <= width/2 with element
    counts halved, so element sizes match the full mesh. On each cut
    the out-of-plane displacement of the cut control row vanishes and
    the neighbor row follows the cut row in the other two components,
    which zeroes the normal slope of those fields across the plane.
    The fiber lies in plane A (all x displacements vanish) and its cut
    node is held along y with the neighbor slaved in z; the cut twist
    is held, which also removes the free constant-twist mode. The end
    moment bends the fiber toward the plate normal and is sized so a
    free fiber of the full length would turn moment_turns full circles
    at t = 1.
    """
    g, m, me = cfg.geometry, cfg.materials, cfg.mesh
    if g.beam_offset != 0.0:
        raise ValueError("bending assumes a centered fiber "
                         "(geometry.beam_offset = 0)")
    if g.beam_length > g.shell_width:
        raise ValueError("fiber must fit across the plate "
                         "(beam_length <= shell_width)")
    half = (max(1, me.n_el_shell_1 // 2), max(1, me.n_el_shell_2 // 2))
    shell = ShellPatch(
        rect_patch(me.degree, half, (0.0, 0.0, 0.0),
                   (0.5 * g.shell_length, 0.5 * g.shell_width)),
        h=g.thickness, E=m.E_shell, nu=m.nu_shell)
    z0 = cfg.z_init()
    x_mid = 0.5 * g.shell_length
    y0 = 0.5 * (g.shell_width - g.beam_length)
    beam = BeamPatch(
        fiber_patch(me.degree, max(1, me.n_el_beam // 2),
                    (x_mid, y0, z0), (x_mid, 0.5 * g.shell_width, z0)),
        R_B=g.beam_radius, E=m.E_beam,
        mu=_shear_modulus(m.E_beam, m.nu_beam))
    dm = DofMap(beam, shell)
    cs = ConstraintSet()
    nr, nc = shell.shape
    r0, r1 = nr - 1, nr - 2
    c0, c1 = nc - 1, nc - 2
    for j in range(nc):
        cs.fix(dm.shell_u(r0, j, 0))
        cs.link(dm.shell_u(r1, j, 1), dm.shell_u(r0, j, 1))
        cs.link(dm.shell_u(r1, j, 2), dm.shell_u(r0, j, 2))
    for i in range(nr):
        cs.fix(dm.shell_u(i, c0, 1))
        cs.link(dm.shell_u(i, c1, 0), dm.shell_u(i, c0, 0))
        cs.link(dm.shell_u(i, c1, 2), dm.shell_u(i, c0, 2))
    cs.fix(dm.shell_u(0, 0, 1))
    cs.fix(dm.shell_u(0, 0, 2))
    last = beam.n_fun - 1
    for node in range(beam.n_fun):
        cs.fix(dm.beam_u(node, 0))
    cs.fix(dm.beam_u(last, 1))
    cs.link(dm.beam_u(last - 1, 2), dm.beam_u(last, 2))
    cs.fix(dm.beam_twist(last))
    cs.apply(dm).finalize()
    model = Model(beam=beam, shell=shell, law=cfg.law(),
                  formulation=cfg.formulation, dofmap=dm)
    EI = m.E_beam * math.pi * g.beam_radius**4 / 4.0
    M_max = 2.0 * math.pi * cfg.loading.moment_turns * EI / g.beam_length
    model.add_moment(0.0, np.array([-M_max, 0.0, 0.0]))
    return ScenarioModel(
        model=model, cfg=cfg,
        left_dofs=tuple(dm.beam_u(0, c) for c in range(3)),
        right_dofs=tuple(dm.beam_u(last, c) for c in range(3)),
        field_points=_field_points(shell))


def turning_angle(beam: BeamPatch, dofs, n_samples: int = 200) -> float:
    """Total tangent rotation along the fiber in its bending plane.

    Samples the axis tangent, accumulates the unwrapped angle of its
    (y, z) projection and returns the absolute sweep from the first to
    the last sample.
    """
    lo, hi = beam.axis.knots[0].domain
    ang = []
    for x in np.linspace(lo, hi, n_samples):
        st = eval_beam_state(beam, dofs, x)
        ang.append(math.atan2(st.a1[2], st.a1[1]))
    unwrapped = np.unwrap(np.array(ang))
    return float(abs(unwrapped[-1] - unwrapped[0]))


def _peeling_events(reactions: np.ndarray, traj) -> list:
    """Peak, valley and detachment of the total pulling force.

    The peak is the largest total reaction before detachment and the
    valley the smallest one after the peak but before detachment; both
    need interior samples. Detachment is the continuation's
    force-collapse event.
    """
    events = []
    t_off = traj.events.get("pulloff")
    if reactions.shape[0] >= 3:
        t = reactions[:, 0]
        y = reactions[:, 7]
        hi = len(t)
        if t_off is not None:
            hi = int(np.searchsorted(t, t_off + 1e-15))
        if hi >= 3:
            k_peak = int(np.argmax(y[:hi]))
            if 0 < k_peak < hi - 1:
                events.append(("force_peak", float(t[k_peak])))
                tail = y[k_peak + 1: hi - 1]
                if tail.size:
                    k_min = k_peak + 1 + int(np.argmin(tail))
                    if y[k_min] < y[k_peak]:
                        events.append(("force_minimum", float(t[k_min])))
    if t_off is not None:
        events.append(("pulloff", float(t_off)))
    return events


def _bending_events(reactions: np.ndarray, traj) -> list:
    """Bending should stay adhered; report detachment if it happens."""
    t_off = traj.events.get("pulloff")
    return [] if t_off is None else [("pulloff", float(t_off))]


def _run(sm: ScenarioModel, detect, progress=None) -> OutputBundle:
    cfg = sm.cfg
    model = sm.model
    rows = []
    inter_blocks = []
    field_blocks = []
    captured = []
    stops = sorted(cfg.output.times)
    eps = 1e-12 * max(1.0, cfg.continuation.t_end)

    def capture(state):
        t = state.t
        if any(abs(t - s) <= eps for s in captured):
            return
        captured.append(t)
        u_full = model.dofmap.expand(t, state.u)
        q_b, q_s = model.dofmap.split(u_full)
        dist = sbs_distribution(model.beam, model.shell, q_b, q_s,
                                model.formulation, model.law,
                                tracker=model.tracker.copy())
        inter_blocks.append(
            np.column_stack([np.full(dist.shape[0], t), dist]))
        frows = np.zeros((len(sm.field_points), 9))
        for k, (th1, th2, ref) in enumerate(sm.field_points):
            cur = eval_shell_state(model.shell, q_s, th1, th2)
            E, K = shell_strains(ref, cur)
            sec = shell_section(model.shell, ref, E, K)
            frows[k] = (t, th1, th2, sec.N[0, 0], sec.N[1, 1],
                        sec.N[0, 1], sec.M[0, 0], sec.M[1, 1],
                        sec.M[0, 1])
        field_blocks.append(frows)

    def on_step(model_, state, info, traj):
        R = info.R_full
        lx, ly, lz = (float(R[d]) for d in sm.left_dofs)
        rx, ry, rz = (float(R[d]) for d in sm.right_dofs)
        rows.append((state.t, lx, ly, lz, rx, ry, rz, lz + rz))
        while stops and stops[0] <= state.t + eps:
            s = stops.pop(0)
            if abs(state.t - s) <= eps:
                capture(state)
        if progress is not None:
            progress(state.t, len(rows))

    traj = continuation_run(model, cfg.continuation, on_step=on_step,
                            t_stops=cfg.output.times)
    if traj.state is not None:
        capture(traj.state)
    reactions = np.array(rows) if rows else np.zeros((0, 8))
    interaction = np.vstack(inter_blocks) if inter_blocks \
        else np.zeros((0, 5))
    fields = np.vstack(field_blocks) if field_blocks else np.zeros((0, 9))
    return OutputBundle(reactions=reactions, interaction=interaction,
                        shell_fields=fields,
                        events=detect(reactions, traj),
                        snapshot_times=sorted(captured),
                        aborted=traj.aborted, trajectory=traj)


def run_peeling(cfg: ScenarioConfig, out_dir=None,
                progress=None) -> OutputBundle:
    """Run the peeling scenario; write CSVs when out_dir is given."""
    if cfg.scenario != "peeling":
        raise ValueError(f"config is for scenario {cfg.scenario!r}")
    sm = build_peeling(cfg)
    bundle = _run(sm, _peeling_events, progress)
    if out_dir is not None:
        write_outputs(cfg, bundle, out_dir)
    return bundle


def run_bending(cfg: ScenarioConfig, out_dir=None,
                progress=None) -> OutputBundle:
    """Run the bending scenario; write CSVs when out_dir is given.

    extras["turning_angle"] holds the final end-to-end tangent sweep
    of the full fiber (twice the modeled half).
    """
    if cfg.scenario != "bending":
        raise ValueError(f"config is for scenario {cfg.scenario!r}")
    sm = build_bending(cfg)
    bundle = _run(sm, _bending_events, progress)
    state = bundle.trajectory.state
    if state is not None:
        u_full = sm.model.dofmap.expand(state.t, state.u)
        q_b, _ = sm.model.dofmap.split(u_full)
        bundle.extras["turning_angle"] = \
            2.0 * turning_angle(sm.model.beam, q_b)
    if out_dir is not None:
        write_outputs(cfg, bundle, out_dir)
    return bundle


def run_scenario(cfg: ScenarioConfig, out_dir=None,
                 progress=None) -> OutputBundle:
    if cfg.scenario == "peeling":
        return run_peeling(cfg, out_dir, progress)
    return run_bending(cfg, out_dir, progress)


def _write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([v if isinstance(v, str) else repr(float(v))
                        for v in row])


def write_outputs(cfg: ScenarioConfig, bundle: OutputBundle,
                  out_dir) -> str:
    """Write the CSV set plus the resolved config; returns out_dir."""
    os.makedirs(out_dir, exist_ok=True)
    _write_csv(os.path.join(out_dir, "reactions.csv"),
               REACTION_COLUMNS, bundle.reactions)
    _write_csv(os.path.join(out_dir, "interaction.csv"),
               INTERACTION_COLUMNS, bundle.interaction)
    _write_csv(os.path.join(out_dir, "shell_fields.csv"),
               SHELL_FIELD_COLUMNS, bundle.shell_fields)
    _write_csv(os.path.join(out_dir, "events.csv"),
               EVENT_COLUMNS, bundle.events)
    write_echo(cfg, out_dir)
    return out_dir
