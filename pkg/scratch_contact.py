import numpy as np

from fibershell.splines import rect_patch, fiber_patch
from fibershell.shell import ShellPatch
from fibershell.beam import BeamPatch
from fibershell.laws import SurrogateLaw, LJParams
from fibershell import contact as ct

rng = np.random.default_rng(7)

law = SurrogateLaw(R_B=0.02, h=0.05, beta_B=1.0, beta_S=1.0,
                   lj=LJParams(eps=1.0, sigma=0.08))
d_eq = law.equilibrium_distance()
print("d_eq =", d_eq)

sh = ShellPatch(rect_patch(2, (4, 4), (0.0, 0.0, 0.0), (2.0, 2.0)),
                h=0.05, E=100.0, nu=0.3)
z0 = 1.07 * d_eq
bm = BeamPatch(fiber_patch(2, 4, (0.45, 0.9, z0), (1.55, 1.15, z0 + 0.04)),
               R_B=0.02, E=100.0, mu=40.0)
print("shell ndof", sh.ndof, "beam ndof", bm.ndof)

# -- projection sanity: flat shell, foot of perpendicular ---------------
cpp = ct.closest_point_project(sh, sh.patch.coefs, np.array([0.3, 0.4, 1.0]))
print("proj status", cpp.status, "theta", cpp.theta1, cpp.theta2,
      "d", cpp.d, "n", cpp.n)
assert cpp.status == "interior"
assert abs(cpp.d - 1.0) < 1e-12
assert np.allclose(cpp.x_S, [0.3, 0.4, 0.0], atol=1e-10)

# warm start
cpp2 = ct.closest_point_project(sh, sh.patch.coefs, np.array([0.3, 0.4, 1.0]),
                                guess=(0.31, 0.39))
assert abs(cpp2.theta1 - cpp.theta1) < 1e-10

# off-patch point -> boundary
cppb = ct.closest_point_project(sh, sh.patch.coefs, np.array([-0.5, 0.4, 1.0]))
print("edge proj status", cppb.status, cppb.theta1, cppb.theta2)
assert cppb.status == "boundary"

# -- randomly perturbed state for FD checks -----------------------------
qb = 0.01 * rng.standard_normal(bm.ndof)
qs = 0.01 * rng.standard_normal(sh.ndof)

tr = ct.ProjectionTracker()
out = ct.sbs_integrate(bm, sh, qb, qs, "FF", law, tracker=tr)
print("diagnostics:\n", out.diagnostics)
print("dropped", out.n_dropped)

# FF residual vs FD of energy
def en(qb_, qs_):
    return ct.sbs_energy(bm, sh, qb_, qs_, "FF", law, tracker=tr.copy())

h = 1e-6
errs = []
for k in rng.choice(bm.ndof, 12, replace=False):
    e = np.zeros(bm.ndof); e[k] = h
    fd = (en(qb + e, qs) - en(qb - e, qs)) / (2 * h)
    errs.append(abs(fd - out.R_beam[k]))
for k in rng.choice(sh.ndof, 12, replace=False):
    e = np.zeros(sh.ndof); e[k] = h
    fd = (en(qb, qs + e) - en(qb, qs - e)) / (2 * h)
    errs.append(abs(fd - out.R_shell[k]))
scale = max(np.abs(out.R_beam).max(), np.abs(out.R_shell).max())
print("FF energy-FD max abs err", max(errs), "rel", max(errs) / scale)
assert max(errs) / scale < 1e-6

# -- RF1 / RF2 tangent vs FD of residual --------------------------------
for form in ("RF2", "RF1"):
    base = ct.sbs_integrate(bm, sh, qb, qs, form, law, tracker=tr.copy())
    K = np.block([[base.K_bb.toarray(), base.K_bs.toarray()],
                  [base.K_sb.toarray(), base.K_ss.toarray()]])
    nrm = np.abs(K).max()
    cols = list(rng.choice(bm.ndof, 8, replace=False)) + \
           [bm.ndof + c for c in rng.choice(sh.ndof, 8, replace=False)]
    worst = 0.0
    for c in cols:
        eb = np.zeros(bm.ndof); es = np.zeros(sh.ndof)
        if c < bm.ndof:
            eb[c] = h
        else:
            es[c - bm.ndof] = h
        rp = ct.sbs_integrate(bm, sh, qb + eb, qs + es, form, law,
                              tracker=tr.copy(), want_k=False)
        rm = ct.sbs_integrate(bm, sh, qb - eb, qs - es, form, law,
                              tracker=tr.copy(), want_k=False)
        fd = np.concatenate([(rp.R_beam - rm.R_beam),
                             (rp.R_shell - rm.R_shell)]) / (2 * h)
        worst = max(worst, np.abs(fd - K[:, c]).max())
    print(form, "tangent FD max abs err", worst, "rel", worst / nrm)
    assert worst / nrm < 1e-5
    sym = np.abs(K - K.T).max() / nrm
    print(form, "symmetry defect", sym)
    if form == "RF2":
        assert sym < 1e-12
    else:
        assert sym > 1e-6  # genuinely unsymmetric

# -- rigid co-translation invariance ------------------------------------
shift = np.array([0.123, -0.456, 0.789])
qb2 = qb.copy(); qs2 = qs.copy()
ub, _ = bm.split_dofs(qb2)
qb2[:3 * bm.n_fun] = (ub + shift).ravel()
qs2 = (qs2.reshape(-1, 3) + shift).ravel()
out2 = ct.sbs_integrate(bm, sh, qb2, qs2, "FF", law, tracker=tr.copy(),
                        want_k=False)
print("co-translation residual diff",
      np.abs(out2.R_beam - out.R_beam).max() / scale,
      np.abs(out2.R_shell - out.R_shell).max() / scale)
assert np.abs(out2.R_beam - out.R_beam).max() / scale < 1e-9

# -- FF == RF1 at t_n = 0, and rigid closed-form total force ------------
bm_par = BeamPatch(fiber_patch(2, 4, (0.45, 1.0, z0), (1.55, 1.0, z0)),
                   R_B=0.02, E=100.0, mu=40.0)
z = np.zeros(bm_par.ndof)
zs = np.zeros(sh.ndof)
rf = ct.sbs_integrate(bm_par, sh, z, zs, "FF", law, want_k=False)
r1 = ct.sbs_integrate(bm_par, sh, z, zs, "RF1", law, want_k=False)
sc = np.abs(rf.R_beam).max()
print("FF vs RF1 at t_n=0:", np.abs(rf.R_beam - r1.R_beam).max() / sc,
      np.abs(rf.R_shell - r1.R_shell).max() / sc)
assert np.abs(rf.R_beam - r1.R_beam).max() <= 1e-10 * sc

from fibershell.laws import dspt_eval
tot = rf.R_beam[:3 * bm_par.n_fun].reshape(-1, 3).sum(axis=0)
L_B = 1.1
ref = L_B * dspt_eval(law, z0, 1.0).phi_d
print("total z residual", tot[2], "closed form", ref,
      "rel", abs(tot[2] - ref) / abs(ref), "xy", tot[:2])
assert abs(tot[2] - ref) / abs(ref) < 1e-12
assert np.abs(tot[:2]).max() < 1e-14 * abs(ref) + 1e-18

# action-reaction on the translational parts
cppx = ct.closest_point_project(sh, sh.patch.coefs, np.array([1.0, 1.0, z0]))
Rp, kin = ct.contact_point_residual("FF", np.array([1.0, 0.2, 0.1]), cppx, law)
assert np.array_equal(Rp[0], -Rp[2])
print("all contact checks passed")
