"""B-spline bases, patches and per-element Gauss quadrature.

Basis evaluation follows the standard knot-span / basis-derivative
recursions (The NURBS Book, algorithms A2.1 and A2.3), written so the
inner routines can be JIT compiled.
"""

from dataclasses import dataclass

import numpy as np

from .jit import njit


@njit
def find_span(values, p, u):
    n = values.shape[0] - p - 1
    if u >= values[n]:
        return n - 1
    if u <= values[p]:
        return p
    low, high = p, n
    mid = (low + high) // 2
    while u < values[mid] or u >= values[mid + 1]:
        if u < values[mid]:
            high = mid
        else:
            low = mid
        mid = (low + high) // 2
    return mid


@njit
def ders_basis(values, p, u, nderiv):
    """Nonzero basis functions and derivatives at u.

    Returns (ders, span) with ders of shape (nderiv+1, p+1); the first
    contributing basis function has global index span - p.
    """
    span = find_span(values, p, u)
    ndu = np.empty((p + 1, p + 1))
    left = np.empty(p + 1)
    right = np.empty(p + 1)
    ndu[0, 0] = 1.0
    for j in range(1, p + 1):
        left[j] = u - values[span + 1 - j]
        right[j] = values[span + j] - u
        saved = 0.0
        for r in range(j):
            ndu[j, r] = right[r + 1] + left[j - r]
            temp = ndu[r, j - 1] / ndu[j, r]
            ndu[r, j] = saved + right[r + 1] * temp
            saved = left[j - r] * temp
        ndu[j, j] = saved
    ders = np.zeros((nderiv + 1, p + 1))
    for j in range(p + 1):
        ders[0, j] = ndu[j, p]
    a = np.empty((2, p + 1))
    for r in range(p + 1):
        s1, s2 = 0, 1
        a[0, 0] = 1.0
        for k in range(1, nderiv + 1):
            dd = 0.0
            rk = r - k
            pk = p - k
            if r >= k:
                a[s2, 0] = a[s1, 0] / ndu[pk + 1, rk]
                dd = a[s2, 0] * ndu[rk, pk]
            j1 = 1 if rk >= -1 else -rk
            j2 = k - 1 if r - 1 <= pk else p - r
            for j in range(j1, j2 + 1):
                a[s2, j] = (a[s1, j] - a[s1, j - 1]) / ndu[pk + 1, rk + j]
                dd += a[s2, j] * ndu[rk + j, pk]
            if r <= pk:
                a[s2, k] = -a[s1, k - 1] / ndu[pk + 1, r]
                dd += a[s2, k] * ndu[r, pk]
            ders[k, r] = dd
            s1, s2 = s2, s1
    rr = float(p)
    for k in range(1, nderiv + 1):
        for j in range(p + 1):
            ders[k, j] *= rr
        rr *= p - k
    return ders, span


@dataclass(frozen=True)
class KnotVector:
    """Open knot vector with degree; immutable."""

    values: np.ndarray
    degree: int

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", v)
        p = self.degree
        if np.any(np.diff(v) < 0):
            raise ValueError("knot values must be nondecreasing")
        if not (np.all(v[: p + 1] == v[0]) and np.all(v[-p - 1 :] == v[-1])):
            raise ValueError("knot vector must be open (end multiplicity p+1)")
        if self.n < p + 1:
            raise ValueError("too few basis functions")

    @property
    def n(self):
        """Number of basis functions."""
        return len(self.values) - self.degree - 1

    @property
    def domain(self):
        return self.values[self.degree], self.values[-self.degree - 1]

    def breakpoints(self):
        return np.unique(self.values[self.degree : -self.degree])

    @property
    def n_elements(self):
        return len(self.breakpoints()) - 1

    def element_span(self, e):
        bp = self.breakpoints()
        return bp[e], bp[e + 1]

    def greville(self):
        """Greville abscissae (knot averages)."""
        p = self.degree
        v = self.values
        return np.array([v[i + 1 : i + p + 1].mean() for i in range(self.n)])


def eval_basis(kv: KnotVector, u: float, nderiv: int = 0):
    """Values/derivatives of the p+1 nonzero basis functions at u.

    Returns (ders, first) with ders[k, j] the k-th derivative of basis
    function first + j.
    """
    lo, hi = kv.domain
    if u < lo or u > hi:
        raise ValueError(f"parameter {u} outside domain [{lo}, {hi}]")
    ders, span = ders_basis(kv.values, kv.degree, float(u), nderiv)
    return ders, span - kv.degree


def make_knots(p: int, n_el: int, lo: float = 0.0, hi: float = 1.0) -> KnotVector:
    """Open uniform knot vector with interior multiplicity p-1 (C1)."""
    if n_el < 1:
        raise ValueError("n_el must be >= 1")
    sites = np.linspace(lo, hi, n_el + 1)
    vals = [lo] * (p + 1)
    for s in sites[1:-1]:
        vals.extend([s] * (p - 1))
    vals.extend([hi] * (p + 1))
    return KnotVector(np.array(vals), p)


@dataclass
class SplinePatch:
    """Tensor-product spline field: 1 (curve) or 2 (surface) directions.

    coefs has shape (n1, dim) or (n1, n2, dim).
    """

    knots: tuple
    coefs: np.ndarray

    def __post_init__(self):
        ns = tuple(kv.n for kv in self.knots)
        if self.coefs.shape[: len(ns)] != ns:
            raise ValueError(
                f"control net {self.coefs.shape} does not match basis sizes {ns}"
            )

    @property
    def dim(self):
        return self.coefs.shape[-1]


def make_patch(p: int, n_el, dim: int = 3, continuity: str = "C1") -> SplinePatch:
    """Patch over the unit parametric domain, control points at Greville sites.

    n_el: int (curve) or pair (surface). Control coefficients are the
    Greville abscissae embedded in the first 1 or 2 coordinates, so the
    fresh patch represents the identity geometry; callers remap it.
    """
    if continuity != "C1":
        raise ValueError("only C1 interelement continuity is supported")
    if np.isscalar(n_el):
        kv = make_knots(p, int(n_el))
        g = kv.greville()
        coefs = np.zeros((kv.n, dim))
        coefs[:, 0] = g
        return SplinePatch((kv,), coefs)
    ne1, ne2 = n_el
    kv1, kv2 = make_knots(p, int(ne1)), make_knots(p, int(ne2))
    g1, g2 = kv1.greville(), kv2.greville()
    coefs = np.zeros((kv1.n, kv2.n, dim))
    coefs[:, :, 0] = g1[:, None]
    coefs[:, :, 1] = g2[None, :]
    return SplinePatch((kv1, kv2), coefs)


def line_patch(p: int, n_el: int, start, end) -> SplinePatch:
    """Straight segment from start to end (exact by affine precision)."""
    start, end = np.asarray(start, float), np.asarray(end, float)
    patch = make_patch(p, n_el, dim=len(start))
    g = patch.knots[0].greville()
    patch.coefs = start[None, :] + g[:, None] * (end - start)[None, :]
    return patch


def fiber_patch(p: int, n_el: int, start, end) -> SplinePatch:
    """Straight segment parameterized by reference arc length.

    The knot domain spans [0, length], so the reference metric is
    A = 1 everywhere; beam section-force normalizations assume this.
    """
    start, end = np.asarray(start, float), np.asarray(end, float)
    L = float(np.linalg.norm(end - start))
    if L <= 0.0:
        raise ValueError("fiber endpoints coincide")
    kv = make_knots(p, int(n_el), 0.0, L)
    g = kv.greville()
    coefs = start[None, :] + (g / L)[:, None] * (end - start)[None, :]
    return SplinePatch((kv,), coefs)


def rect_patch(p: int, n_el, corner, lengths) -> SplinePatch:
    """Planar rectangle spanned by the first two axes at corner."""
    corner = np.asarray(corner, float)
    patch = make_patch(p, n_el, dim=3)
    g1 = patch.knots[0].greville()
    g2 = patch.knots[1].greville()
    coefs = np.zeros((len(g1), len(g2), 3))
    coefs[:, :, 0] = corner[0] + g1[:, None] * lengths[0]
    coefs[:, :, 1] = corner[1] + g2[None, :] * lengths[1]
    coefs[:, :, 2] = corner[2]
    patch.coefs = coefs
    return patch


@dataclass(frozen=True)
class QuadratureRule:
    element: int
    points: np.ndarray
    weights: np.ndarray


def gauss_rule(kv: KnotVector, element: int, npts: int) -> QuadratureRule:
    """Gauss-Legendre rule mapped to the element's knot span."""
    if npts < 1:
        raise ValueError("npts must be >= 1")
    x, w = np.polynomial.legendre.leggauss(npts)
    a, b = kv.element_span(element)
    half = 0.5 * (b - a)
    return QuadratureRule(element, a + half * (x + 1.0), half * w)


def insert_knot(kv: KnotVector, coefs: np.ndarray, u: float):
    """Single knot insertion (Boehm); returns (new kv, new coefs).

    coefs has the basis-function count along axis 0.
    """
    p = kv.degree
    v = kv.values
    k = find_span(v, p, float(u))
    new_v = np.insert(v, k + 1, u)
    n = kv.n
    out = np.empty((n + 1,) + coefs.shape[1:])
    out[: k - p + 1] = coefs[: k - p + 1]
    out[k + 1 :] = coefs[k:]
    for i in range(k - p + 1, k + 1):
        den = v[i + p] - v[i]
        a = 0.0 if den == 0.0 else (u - v[i]) / den
        out[i] = a * coefs[i] + (1.0 - a) * coefs[i - 1]
    return KnotVector(new_v, p), out


def refine_patch(patch: SplinePatch, factor: int = 2) -> SplinePatch:
    """Geometry-preserving refinement: split every element into `factor`
    parts, keeping the interior multiplicity (hence continuity)."""
    knots = []
    coefs = patch.coefs
    for axis, kv in enumerate(patch.knots):
        mult = kv.degree - 1
        cc = np.moveaxis(coefs, axis, 0)
        bp = kv.breakpoints()
        for lo, hi in zip(bp[:-1], bp[1:]):
            for j in range(1, factor):
                site = lo + (hi - lo) * j / factor
                for _ in range(mult):
                    kv, cc = insert_knot(kv, cc, site)
        coefs = np.moveaxis(cc, 0, axis)
        knots.append(kv)
    return SplinePatch(tuple(knots), coefs)
