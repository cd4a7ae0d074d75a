"""Assembly benchmark: numba kernels against the numpy fallback.

FIBERSHELL_NO_JIT is read once at import, so the two modes run in
subprocesses: `python -m fibershell.bench` spawns one child per mode
and reports the median assemble time and the speedup.
"""

import argparse
import json
import os
import subprocess
import sys
import time
from dataclasses import replace

import numpy as np


def _time_assembly(mesh, repeat: int) -> dict:
    from .config import MeshSpec, default_config
    from .jit import JIT_ENABLED
    from .scenarios import build_peeling

    n1, n2, n3 = mesh
    cfg = default_config("peeling")
    cfg = replace(cfg, mesh=MeshSpec(n_el_beam=n1, n_el_shell_1=n2,
                                     n_el_shell_2=n3, degree=3))
    model = build_peeling(cfg).model
    rng = np.random.default_rng(7)
    u = 1e-4 * rng.standard_normal(model.dofmap.n_free)
    model.assemble(0.002, u)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        model.assemble(0.002, u)
        times.append(time.perf_counter() - t0)
    return {"jit": JIT_ENABLED, "n_free": int(model.dofmap.n_free),
            "median_s": float(np.median(times)),
            "min_s": float(min(times))}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fibershell.bench",
        description="Time residual/tangent assembly with and without the "
                    "compiled kernels.")
    parser.add_argument("--mesh", default="20x6x3",
                        help="element counts N1xN2xN3 (beam x shell grid)")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--worker", action="store_true",
                        help=argparse.SUPPRESS)
    args = parser.parse_args(argv)
    mesh = tuple(int(v) for v in args.mesh.split("x"))
    if len(mesh) != 3:
        raise SystemExit("mesh must be N1xN2xN3")

    if args.worker:
        json.dump(_time_assembly(mesh, args.repeat), sys.stdout)
        return 0

    results = {}
    for label, no_jit in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, FIBERSHELL_NO_JIT=no_jit)
        proc = subprocess.run(
            [sys.executable, "-m", "fibershell.bench", "--worker",
             "--mesh", args.mesh, "--repeat", str(args.repeat)],
            env=env, capture_output=True, text=True, check=True)
        results[label] = json.loads(proc.stdout)
    if results["numba"]["jit"] == results["numpy"]["jit"]:
        print("warning: numba unavailable, both runs used the fallback",
              file=sys.stderr)
    for label, r in results.items():
        print(f"{label:6s} n_free={r['n_free']} "
              f"median={r['median_s']*1e3:.1f} ms min={r['min_s']*1e3:.1f} ms")
    speedup = results["numpy"]["median_s"] / results["numba"]["median_s"]
    print(f"speedup {speedup:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
