import numpy as np

from fibershell.splines import rect_patch, fiber_patch
from fibershell.shell import ShellPatch
from fibershell.beam import BeamPatch
from fibershell.laws import SurrogateLaw, LJParams, dspt_eval
from fibershell import solver as sv

rng = np.random.default_rng(3)

# -- linear_solve oracles ------------------------------------------------
from scipy import sparse
I = sparse.identity(5, format="csr")
b = rng.standard_normal(5)
assert np.allclose(sv.linear_solve(I, b), b, rtol=0, atol=0)
A = rng.standard_normal((40, 40))
S = sparse.csr_matrix(A @ A.T + 40 * np.eye(40))
b = rng.standard_normal(40)
x = sv.linear_solve(S, b, symmetric=True)
xd = np.linalg.solve(S.toarray(), b)
print("SPD solve rel err", np.linalg.norm(x - xd) / np.linalg.norm(xd))
assert np.linalg.norm(x - xd) / np.linalg.norm(xd) < 1e-10
try:
    sv.linear_solve(sparse.csr_matrix((3, 3)), np.ones(3))
    raise SystemExit("singular system did not raise")
except sv.LinearSolveError as e:
    print("singular ->", e)

# -- cantilever through the continuation path ----------------------------
E, R_B = 1.0e4, 0.05
bm = BeamPatch(fiber_patch(3, 8, (0, 0, 0), (2, 0, 0)), R_B=R_B, E=E, mu=4e3)
dm = sv.DofMap(beam=bm)
for node in (0, 1):
    for c in range(3):
        dm.fix(dm.beam_u(node, c))
dm.fix(dm.beam_twist(0))
dm.finalize()
model = sv.Model(beam=bm, dofmap=dm)
F = 1.0e-5
tip = dm.beam_u(bm.n_fun - 1, 2)
model.add_force(tip, F)
cfg = sv.ContinuationConfig(t_end=1.0, dt=0.25, dt_min=1e-4, dt_max=0.5)
traj = sv.continuation_run(model, cfg)
print("cantilever steps", [(s.t, s.iterations) for s in traj.steps])
u_full = dm.expand(traj.t, traj.state.u)
uz_tip = u_full[tip]
I_sec = np.pi * R_B**4 / 4
ref = F * 2.0**3 / (3 * E * I_sec)
print("tip uz", uz_tip, "ref", ref, "rel", abs(uz_tip - ref) / ref)
assert abs(uz_tip - ref) / ref < 1e-3
assert not traj.aborted

# -- contact equilibrium: beam settles at the law's equilibrium height ---
law = SurrogateLaw(R_B=0.02, h=0.05, beta_B=1.0, beta_S=1.0,
                   lj=LJParams(eps=1.0, sigma=0.08))
d_eq = law.equilibrium_distance()
sh = ShellPatch(rect_patch(2, (3, 3), (0.0, 0.0, 0.0), (2.0, 2.0)),
                h=0.05, E=100.0, nu=0.3)
z0 = 1.04 * d_eq
bm2 = BeamPatch(fiber_patch(2, 4, (0.5, 1.0, z0), (1.5, 1.0, z0)),
                R_B=0.02, E=100.0, mu=40.0)
dm2 = sv.DofMap(beam=bm2, shell=sh)
for i in range(sh.shape[0]):
    for j in range(sh.shape[1]):
        for c in range(3):
            dm2.fix(dm2.shell_u(i, j, c))
for node in range(bm2.n_fun):
    dm2.fix(dm2.beam_u(node, 0))
    dm2.fix(dm2.beam_u(node, 1))
    dm2.fix(dm2.beam_twist(node))
dm2.finalize()
model2 = sv.Model(beam=bm2, shell=sh, law=law, formulation="RF2", dofmap=dm2)
print("symmetric flag (RF2, no moments):", model2.symmetric)
assert model2.symmetric
floor = 1e-14 * model2.stiffness_scale()
state, ok, info = sv.newton_solve(model2, 1.0, np.zeros(dm2.n_free),
                                  sv.ContinuationConfig(t_end=1, dt=1), floor)
print("newton record", state.record, "ok", ok)
assert ok
u_full2 = dm2.expand(1.0, state.u)
z_now = z0 + u_full2[dm2.beam_u(2, 2)]
print("settled height", z_now, "equilibrium", d_eq, "diff", z_now - d_eq)
assert z_now > 0 and abs(z_now - d_eq) < 1e-8
# quadratic convergence: slope of log-residual drops
r = [x for x in state.record if x > 0]
if len(r) >= 4:
    import math
    slopes = [math.log(r[i + 1] / r[i]) for i in range(len(r) - 1)]
    print("ratio of successive log-drops",
          [slopes[i + 1] / slopes[i] for i in range(len(slopes) - 1)])

# -- assembled tangent vs FD on a coupled free system ---------------------
dm3 = sv.DofMap(beam=bm2, shell=sh)
for node in range(bm2.n_fun):
    dm3.fix(dm3.beam_twist(node))
dm3.finalize()
for form in ("RF2", "RF1"):
    m3 = sv.Model(beam=bm2, shell=sh, law=law, formulation=form, dofmap=dm3)
    u0 = 1e-3 * rng.standard_normal(dm3.n_free)
    m3.assemble(0.7, u0)  # warm the tracker
    R0, K0, _ = m3.assemble(0.7, u0)
    K0 = K0.toarray()
    h = 1e-6
    worst = 0.0
    for c in rng.choice(dm3.n_free, 10, replace=False):
        e = np.zeros(dm3.n_free)
        e[c] = h
        Rp, _, _ = m3.assemble(0.7, u0 + e, want_k=False)
        Rm, _, _ = m3.assemble(0.7, u0 - e, want_k=False)
        fd = (Rp - Rm) / (2 * h)
        worst = max(worst, np.abs(fd - K0[:, c]).max())
    print(form, "assembled tangent FD rel err", worst / np.abs(K0).max())
    assert worst / np.abs(K0).max() < 1e-5
    sym = np.abs(K0 - K0.T).max() / np.abs(K0).max()
    print(form, "assembled symmetry", sym, "flag", m3.symmetric)
    if form == "RF2":
        assert sym < 1e-12 and m3.symmetric
    else:
        assert not m3.symmetric

# -- checkpoint / restart bitwise -----------------------------------------
import os
cfg2 = sv.ContinuationConfig(t_end=0.5, dt=0.1, dt_min=1e-5, dt_max=0.2)


def fresh_model():
    bmx = BeamPatch(fiber_patch(2, 4, (0.5, 1.0, z0), (1.5, 1.0, z0)),
                    R_B=0.02, E=100.0, mu=40.0)
    dmx = sv.DofMap(beam=bmx, shell=sh)
    for i in range(sh.shape[0]):
        for j in range(sh.shape[1]):
            for c in range(3):
                dmx.fix(dmx.shell_u(i, j, c))
    for node in range(bmx.n_fun):
        dmx.fix(dmx.beam_u(node, 0))
        dmx.fix(dmx.beam_u(node, 1))
        dmx.fix(dmx.beam_twist(node))
    dmx.finalize()
    mx = sv.Model(beam=bmx, shell=sh, law=law, formulation="FF", dofmap=dmx)
    # gentle ramped pull on the beam mid node
    mx.add_force(dmx.beam_u(2, 2), 2e-6)
    return mx

ck = "/tmp/ck_test.npz"
mA = fresh_model()
tA = sv.continuation_run(mA, cfg2, checkpoint=ck)
assert not tA.aborted
cfg3 = sv.ContinuationConfig(t_end=1.0, dt=0.1, dt_min=1e-5, dt_max=0.2)
tA2 = sv.continuation_run(mA, cfg3, restart=ck)
mB = fresh_model()
tB = sv.continuation_run(mB, cfg3, restart=ck)
print("restart bitwise:", np.array_equal(tA2.state.u, tB.state.u),
      "steps A2", [(s.t, s.iterations) for s in tA2.steps][:3],
      "steps B", [(s.t, s.iterations) for s in tB.steps][:3])
assert np.array_equal(tA2.state.u, tB.state.u)
assert [s.t for s in tA2.steps] == [s.t for s in tB.steps]
os.remove(ck)

# reference config, no loads -> zero residual
mz = sv.Model(beam=bm2, shell=sh, law=None, formulation="RF2", dofmap=dm3)
Rz, _, _ = mz.assemble(0.0, np.zeros(dm3.n_free))
print("reference residual", np.abs(Rz).max())
assert np.abs(Rz).max() < 1e-12
print("all solver checks passed")
