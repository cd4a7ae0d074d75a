"""Generate the beam Gauss-point energy kernel.

The per-point energy density W depends on q = (a1, a1_1, phi, phi_1)
through the smallest-rotation directors; its exact gradient and Hessian
in q turn the residual and tangent into plain B-matrix contractions
(the discretization is linear in the control coefficients). sympy does
the differentiation; common-subexpression elimination keeps the emitted
kernel compact. Output: src/fibershell/_beam_kernel.py.

Run: python3 tools/gen_beam_kernel.py
"""

import os

import sympy as sp


def build_energy():
    a1 = sp.Matrix(sp.symbols("q0 q1 q2"))
    a11 = sp.Matrix(sp.symbols("q3 q4 q5"))
    phi, phip = sp.symbols("q6 q7")
    T = sp.Matrix(sp.symbols("T0 T1 T2"))
    A2 = sp.Matrix(sp.symbols("B0 B1 B2"))
    A3 = sp.Matrix(sp.symbols("C0 C1 C2"))
    Aref, K1, K2, K3 = sp.symbols("Aref K1 K2 K3")
    cN, cT, c2, c3, J = sp.symbols("cN cT c2 c3 J")

    a = a1.dot(a1)
    s = sp.sqrt(a)
    t = a1 / s
    tT = 1 + T.dot(t)
    t1 = (a11 - t * t.dot(a11)) / s

    def sr(A):
        return A - (A.dot(t) / tT) * (t + T)

    def sr_d(A):
        coef = A.dot(t) / tT
        dcoef = A.dot(t1) / tT - A.dot(t) * T.dot(t1) / tT**2
        return -dcoef * (t + T) - coef * t1

    a2s, a3s = sr(A2), sr(A3)
    a2s1 = sr_d(A2)
    c, si = sp.cos(phi), sp.sin(phi)
    a2 = c * a2s + si * a3s
    a3 = -si * a2s + c * a3s

    k1 = a2s1.dot(a3s) + phip
    k2 = -a11.dot(a3) / a
    k3 = a11.dot(a2) / a

    # Green-Lagrange axial strain of the axis (the equidistant-line
    # expansion and the printed variation a1 . du' both carry the 1/2)
    eps = (a - Aref) / 2
    kap1 = k1 - K1
    kap2 = a * (k2 - K2)
    kap3 = a * (k3 - K3)

    W = (J / 2) * (
        cN / a * eps**2 + cT / s * kap1**2 + c2 / a * kap2**2 + c3 / a * kap3**2
    )
    q = list(a1) + list(a11) + [phi, phip]
    return W, q, (a, k1, k2, k3)


def _unpack_lines(with_consts):
    lines = []
    for i in range(3):
        lines.append(f"    q{i} = q[{i}]")
        lines.append(f"    q{i + 3} = q[{i + 3}]")
        lines.append(f"    T{i} = T[{i}]")
        lines.append(f"    B{i} = A2[{i}]")
        lines.append(f"    C{i} = A3[{i}]")
    lines.append("    q6 = q[6]")
    lines.append("    q7 = q[7]")
    if with_consts:
        names = ["Aref", "K1", "K2", "K3", "cN", "cT", "c2", "c3", "J"]
        for k, nm in enumerate(names):
            lines.append(f"    {nm} = consts[{k}]")
    return lines


def emit():
    W, q, (a, k1, k2, k3) = build_energy()
    grad = [sp.diff(W, qi) for qi in q]
    hess = [[sp.diff(grad[i], q[j]) for j in range(i + 1)] for i in range(8)]

    exprs = [W] + grad + [hess[i][j] for i in range(8) for j in range(i + 1)]
    repl, reduced = sp.cse(exprs, optimizations="basic")
    code = sp.pycode

    lines = []
    lines.append('"""Beam Gauss-point energy kernel (generated by')
    lines.append('tools/gen_beam_kernel.py; do not edit by hand)."""')
    lines.append("")
    lines.append("import math")
    lines.append("")
    lines.append("from .jit import njit")
    lines.append("")
    lines.append("")
    lines.append("@njit")
    lines.append("def beam_gp(q, T, A2, A3, consts, g, H):")
    lines.append('    """Energy density at one quadrature point plus exact')
    lines.append("    gradient g (8,) and Hessian H (8, 8) in")
    lines.append("    q = (a1, a1_1, phi, phi_1). consts packs")
    lines.append('    (Aref, K1, K2, K3, cN, cT, c2, c3, J)."""')
    lines.extend(_unpack_lines(True))
    for sym, e in repl:
        lines.append(f"    {sym} = {code(e)}")
    lines.append(f"    W = {code(reduced[0])}")
    for i in range(8):
        lines.append(f"    g[{i}] = {code(reduced[1 + i])}")
    k = 9
    for i in range(8):
        for j in range(i + 1):
            lines.append(f"    H[{i}, {j}] = {code(reduced[k])}")
            if j != i:
                lines.append(f"    H[{j}, {i}] = H[{i}, {j}]")
            k += 1
    lines.append("    return W")
    lines.append("")
    lines.append("")

    repl2, red2 = sp.cse([a, k1, k2, k3], optimizations="basic")
    lines.append("@njit")
    lines.append("def beam_k(q, T, A2, A3):")
    lines.append('    """Metric a and curvature measures (k1, k2, k3) for the')
    lines.append('    same kinematics as beam_gp."""')
    lines.extend(_unpack_lines(False))
    for sym, e in repl2:
        lines.append(f"    {sym} = {code(e)}")
    outs = ", ".join(code(e) for e in red2)
    lines.append(f"    return {outs}")
    lines.append("")
    return "\n".join(lines)


if __name__ == "__main__":
    out = os.path.join(os.path.dirname(__file__), "..", "src", "fibershell",
                       "_beam_kernel.py")
    src = emit()
    with open(out, "w") as f:
        f.write(src)
    print(f"wrote {os.path.normpath(out)} ({len(src)} bytes)")
