"""Command-line entry points.

Subcommands:
  simulate --config FILE --out DIR [--deterministic]
      Run a scenario config and write the CSV bundle (reactions.csv,
      interaction.csv, shell_fields.csv, events.csv, resolved.toml).
      Exit 0 on success, 3 when the continuation aborts early (partial
      outputs are kept), 1 on configuration errors.
  laws eval [--gaps LO:HI:N | --d V ...] [--cos-a V ...] [law params]
      Tabulate the disk-plate law and its derivatives as CSV
      (d, cos_a, phi, phi_d, phi_dd, phi_cos_r, phi_dcos_r).
  oracle sweep --figure KIND [--gaps LO:HI:N] [--R-ratio V ...]
      [--h-ratio V ...] [--out DIR] [--deterministic]
      Write one error-curve CSV (gap_ratio, value, relative_error) per
      geometry-ratio combination. Gap points fan out over a process
      pool; FIBERSHELL_WORKERS caps the pool, --deterministic forces
      serial evaluation. Output order is fixed either way.
  verify
      Run the built-in oracle, finite-difference and symmetry suites
      and print a JSON summary with per-suite counts. Exit 0 when every
      check passes, 1 otherwise.

All errors are reported as one JSON object on stderr.
"""

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

import numpy as np

from .config import (ConfigError, InteractionSpec, MeshSpec, default_config,
                     parse_config)
from .laws import LJParams, SurrogateLaw, dhs_potential, dpt_potential, dspt_eval
from .oracles import (dhs_quadrature, disk_sphere_potential, oracle_sweep,
                      point_sphere_potential)
from .quadrature import ToleranceError, quad2d
from .scenarios import _write_csv, build_peeling, run_scenario

SWEEP_KINDS = ("ds-dss", "dss-dpt", "dc-parallel", "dc-perpendicular", "ic-ss")
SWEEP_COLUMNS = ("gap_ratio", "value", "relative_error")
LAW_COLUMNS = ("d", "cos_a", "phi", "phi_d", "phi_dd", "phi_cos_r",
               "phi_dcos_r")


def _grid(spec: str) -> np.ndarray:
    """Geometric grid from a LO:HI:N spec string."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid spec must be LO:HI:N, got {spec!r}")
    lo, hi = float(parts[0]), float(parts[1])
    n = int(parts[2])
    if lo <= 0 or hi <= lo or n < 2:
        raise ValueError(f"grid spec needs 0 < LO < HI and N >= 2, got {spec!r}")
    return np.geomspace(lo, hi, n)


def _emit(payload, stream):
    json.dump(payload, stream, sort_keys=True)
    stream.write("\n")


def _worker_count(n_tasks: int, deterministic: bool) -> int:
    if deterministic:
        return 1
    env = os.environ.get("FIBERSHELL_WORKERS", "")
    if env:
        return max(1, min(int(env), n_tasks))
    return max(1, min(os.cpu_count() or 1, n_tasks))


def _sweep_point(task):
    kind, gap, r_ratio, h_ratio = task
    return oracle_sweep(kind, [gap], R_ratio=r_ratio, h_ratio=h_ratio)[0]


def _cmd_simulate(args) -> int:
    if args.deterministic:
        os.environ["FIBERSHELL_WORKERS"] = "1"
    cfg = parse_config(args.config)
    bundle = run_scenario(cfg, out_dir=args.out)
    summary = {
        "out": args.out,
        "scenario": cfg.scenario,
        "steps": int(bundle.reactions.shape[0]),
        "aborted": bool(bundle.aborted),
        "events": {name: t for name, t in bundle.events},
    }
    _emit(summary, sys.stdout)
    if bundle.aborted:
        t_reached = (float(bundle.reactions[-1, 0])
                     if bundle.reactions.shape[0] else 0.0)
        _emit({"error": "ContinuationAbort", "t_reached": t_reached,
               "message": "step size collapsed; partial outputs written"},
              sys.stderr)
        return 3
    return 0


def _cmd_laws_eval(args) -> int:
    law = SurrogateLaw(R_B=args.r_b, h=args.h, beta_B=args.beta_b,
                       beta_S=args.beta_s,
                       lj=LJParams(eps=args.eps, sigma=args.sigma))
    rows = []
    for ca in args.cos_a:
        if args.d is not None:
            ds = list(args.d)
        else:
            lo = law.h / 2.0 + law.R_B * abs(ca)
            ds = [lo + g for g in _grid(args.gaps)]
        for d in ds:
            v = dspt_eval(law, d, ca)
            rows.append((d, ca, v.phi, v.phi_d, v.phi_dd,
                         v.phi_cos_r, v.phi_dcos_r))
    if args.out:
        _write_csv(args.out, LAW_COLUMNS, rows)
    else:
        _write_csv("/dev/stdout", LAW_COLUMNS, rows)
    return 0


def _cmd_oracle_sweep(args) -> int:
    gaps = _grid(args.gaps)
    curves = [(r, h) for r in args.r_ratio for h in args.h_ratio]
    tasks = [(args.figure, float(g), r, h) for r, h in curves for g in gaps]
    workers = _worker_count(len(tasks), args.deterministic)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_point, tasks,
                                 chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        rows = [_sweep_point(t) for t in tasks]
    os.makedirs(args.out, exist_ok=True)
    written = []
    per_curve = len(gaps)
    for i, (r, h) in enumerate(curves):
        path = os.path.join(args.out, f"{args.figure}_R{r:g}_h{h:g}.csv")
        _write_csv(path, SWEEP_COLUMNS, rows[i * per_curve:(i + 1) * per_curve])
        written.append(path)
    _emit({"figure": args.figure, "files": written, "points": len(tasks),
           "workers": workers}, sys.stdout)
    return 0


def _suite_disk_halfspace():
    """Closed-form disk laws against adaptive area quadrature."""
    checks, fails = 0, []
    R_B = 0.7
    for m in (6, 12):
        for gr in (1e-3, 0.1, 10.0):
            for ca in (0.0, 0.5, 1.0):
                d = gr * R_B + R_B * ca
                ref = dhs_quadrature(m, d, ca, R_B)
                val = dhs_potential(m, d, ca, R_B)
                rel = abs(val - ref) / abs(ref)
                checks += 1
                if not rel <= 1e-8:
                    fails.append(f"half-space m={m} gap/R={gr:g} "
                                 f"cos_a={ca:g}: rel err {rel:.2e}")
    h = 0.23
    for m in (6, 12):
        for d, ca in ((1.1, 1.0), (0.8, 0.3)):
            plate = dpt_potential(m, d, ca, h, R_B)
            diff = (dhs_potential(m, d - h / 2.0, ca, R_B)
                    - dhs_potential(m, d + h / 2.0, ca, R_B))
            checks += 1
            if plate != diff:
                fails.append(f"plate difference m={m} d={d}: not bitwise")
    return "disk-halfspace-law", checks, fails


def _suite_sphere_oracles():
    """Sphere closed forms against quadrature and far-field asymptotes."""
    checks, fails = 0, []
    R_D = 1.0
    for R_S, gap in ((0.5, 0.05), (0.5, 2.0), (3.0, 0.1), (3.0, 20.0),
                     (10.0, 1.0)):
        d = R_D + R_S + gap

        def integrand(s, t, d=d, R_S=R_S):
            dist = np.sqrt(d * d + s * s - 2.0 * d * s * np.cos(t))
            return s * point_sphere_potential(dist, R_S)

        ref = 2.0 * quad2d(integrand, 0.0, R_D, 0.0, math.pi,
                           rtol=1e-9, atol=0.0)[0]
        val = disk_sphere_potential(d, R_D, R_S)
        rel = abs(val - ref) / abs(ref)
        checks += 1
        if not rel <= 1e-6:
            fails.append(f"disk-sphere R_S={R_S} gap={gap}: rel err {rel:.2e}")
    D = 1e3
    far = 4.0 * math.pi / 3.0 * 0.5**3 / D**6
    rel = abs(point_sphere_potential(D, 0.5) - far) / far
    checks += 1
    if not rel <= 1e-3:
        fails.append(f"point-sphere far field: rel err {rel:.2e}")
    d = 1e3
    far = math.pi * R_D**2 * point_sphere_potential(d, 2.0)
    rel = abs(disk_sphere_potential(d, R_D, 2.0) - far) / far
    checks += 1
    if not rel <= 1e-3:
        fails.append(f"disk-sphere far field: rel err {rel:.2e}")
    return "sphere-oracles", checks, fails


def _tiny_model(formulation: str):
    cfg = default_config("peeling")
    cfg = replace(cfg, formulation=formulation,
                  interaction=InteractionSpec(eps=2.0, sigma=0.5,
                                              strength=1.0),
                  mesh=MeshSpec(n_el_beam=4, n_el_shell_1=3, n_el_shell_2=2,
                                degree=3))
    return build_peeling(cfg).model


def _suite_fd_tangents():
    """Assembled tangents against central differences of the residual,
    plus the symmetry contract per formulation."""
    checks, fails = 0, []
    rng = np.random.default_rng(1723)
    for formulation, want_sym in (("FF", None), ("RF2", True),
                                  ("RF1", False)):
        model = _tiny_model(formulation)
        n = model.dofmap.n_free
        t = 0.004
        u = 1e-3 * rng.standard_normal(n)
        model.assemble(t, u)
        base = model.tracker.copy()
        _, K, _ = model.assemble(t, u)
        K = K.toarray()
        cols = rng.choice(n, size=min(18, n), replace=False)
        num = den = 0.0
        for j in cols:
            h = 1e-6 * max(1.0, abs(u[j]))
            up, um = u.copy(), u.copy()
            up[j] += h
            um[j] -= h
            model.tracker = base.copy()
            rp, _, _ = model.assemble(t, up, want_k=False)
            model.tracker = base.copy()
            rm, _, _ = model.assemble(t, um, want_k=False)
            fd = (rp - rm) / (2.0 * h)
            num += float(np.sum((fd - K[:, j]) ** 2))
            den += float(np.sum(K[:, j] ** 2))
        rel = math.sqrt(num / den)
        checks += 1
        if not rel <= 1e-5:
            fails.append(f"{formulation} tangent vs FD: rel err {rel:.2e}")
        checks += 1
        if model.symmetric != (formulation == "RF2"):
            fails.append(f"{formulation} symmetric flag is "
                         f"{model.symmetric}")
        if want_sym is None:
            continue
        asym = float(np.abs(K - K.T).max()) / float(np.abs(K).max())
        checks += 1
        if want_sym and not asym <= 1e-12:
            fails.append(f"{formulation} tangent asymmetry {asym:.2e}")
        if not want_sym and not asym > 1e-8:
            fails.append(f"{formulation} tangent unexpectedly symmetric "
                         f"(asym {asym:.2e})")
    return "fd-tangents", checks, fails


def _cmd_verify(args) -> int:
    suites = []
    total = failed = 0
    for run in (_suite_disk_halfspace, _suite_sphere_oracles,
                _suite_fd_tangents):
        name, checks, fails = run()
        suites.append({"name": name, "checks": checks,
                       "failed": len(fails), "messages": fails})
        total += checks
        failed += len(fails)
    _emit({"suites": suites, "checks": total, "failed": failed}, sys.stdout)
    return 0 if failed == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibershell",
        description="Fiber-shell adhesion simulations and their oracles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a scenario config")
    p.add_argument("--config", required=True, help="TOML config file")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--deterministic", action="store_true",
                   help="force single-worker bitwise mode")
    p.set_defaults(func=_cmd_simulate)

    laws = sub.add_parser("laws", help="interaction-law tables")
    laws_sub = laws.add_subparsers(dest="subcommand", required=True)
    p = laws_sub.add_parser("eval", help="tabulate the disk-plate law")
    p.add_argument("--gaps", default="0.01:2:120",
                   help="geometric surface-gap grid LO:HI:N")
    p.add_argument("--d", type=float, nargs="+",
                   help="explicit midsurface distances (overrides --gaps)")
    p.add_argument("--cos-a", type=float, nargs="+", default=[1.0],
                   dest="cos_a", help="disk tilt cosines")
    p.add_argument("--eps", type=float, default=1.0)
    p.add_argument("--sigma", type=float, default=0.5)
    p.add_argument("--R-B", type=float, default=0.1, dest="r_b",
                   help="disk (fiber) radius")
    p.add_argument("--h", type=float, default=0.1, help="plate thickness")
    p.add_argument("--beta-B", type=float, default=1.0, dest="beta_b")
    p.add_argument("--beta-S", type=float, default=1.0, dest="beta_s")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=_cmd_laws_eval)

    oracle = sub.add_parser("oracle", help="approximation-error oracles")
    oracle_sub = oracle.add_subparsers(dest="subcommand", required=True)
    p = oracle_sub.add_parser("sweep", help="error curves over a gap grid")
    p.add_argument("--figure", required=True, choices=SWEEP_KINDS)
    p.add_argument("--gaps", default="1e-3:10:25",
                   help="geometric gap-ratio grid LO:HI:N")
    p.add_argument("--R-ratio", type=float, nargs="+", default=[10.0],
                   dest="r_ratio", help="big-body/disk radius ratios")
    p.add_argument("--h-ratio", type=float, nargs="+", default=[1.0],
                   dest="h_ratio", help="thickness/disk radius ratios")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--deterministic", action="store_true",
                   help="force single-worker bitwise mode")
    p.set_defaults(func=_cmd_oracle_sweep)

    p = sub.add_parser("verify", help="run the built-in check suites")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ToleranceError, ValueError, OSError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
