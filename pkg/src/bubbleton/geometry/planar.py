"""The planar y=0 curve: extraction, turning number and self-intersections."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from ..algebra import DEFAULT_TOL, Jet, spinor_to_r3
from ..dressing import BubbletonParams, dressed_frame
from ..errors import IrregularCurve, PlanarityViolated
from .closed_form import closed_form_derivatives
from .immersion import sym_bobenko

Evaluator = Callable[[np.ndarray], np.ndarray]

MAX_TURN = 0.1


@dataclass(frozen=True)
class PlanarCurve:
    """Polyline samples ``points[i] = c(x[i])`` of a parametrized plane curve.

    A closed curve repeats its first point at the end.  ``evaluator`` maps
    parameter arrays to (n, 2) point arrays and is used for refinement.
    """

    x: np.ndarray
    points: np.ndarray
    closed: bool = True
    evaluator: Optional[Evaluator] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.points.shape != (len(self.x), 2):
            raise ValueError("points must have shape (len(x), 2)")
        if self.closed:
            scale = 1.0 + np.max(np.abs(self.points))
            gap = np.linalg.norm(self.points[-1] - self.points[0])
            if gap > 1e-9 * scale:
                raise ValueError(f"closed curve does not close up (gap {gap:.3e})")

    @classmethod
    def sample(cls, evaluator: Evaluator, n: int, closed: bool = True, span=(0.0, 1.0)) -> "PlanarCurve":
        x = np.linspace(span[0], span[1], n + 1)
        return cls(x, np.asarray(evaluator(x), dtype=float), closed, evaluator)

    def __len__(self) -> int:
        return len(self.x)

    def with_samples(self, x: np.ndarray) -> "PlanarCurve":
        if self.evaluator is None:
            raise ValueError("curve has no evaluator to resample")
        return PlanarCurve(x, np.asarray(self.evaluator(x), dtype=float), self.closed, self.evaluator)


def _pipeline_evaluator(params: BubbletonParams, planarity_tol: float) -> Evaluator:
    lam = Jet.variable(params.lambda0)

    def evaluate(x: np.ndarray) -> np.ndarray:
        f = sym_bobenko(dressed_frame(np.asarray(x, dtype=complex), lam, params), params.lambda0, params.H)
        leak = float(np.max(np.abs(np.imag(f.b)), initial=0.0))
        leak = max(leak, float(np.max(np.abs(np.imag(f.c)), initial=0.0)))
        if leak > planarity_tol:
            raise PlanarityViolated(f"off-diagonal imaginary part {leak:.3e} exceeds {planarity_tol:.1e}")
        p = spinor_to_r3(f, DEFAULT_TOL)
        return np.stack([p[..., 0], p[..., 2]], axis=-1)

    return evaluate


def extract_planar_curve(
    params: BubbletonParams,
    n: int = 2048,
    refine: bool = True,
    planarity_tol: float = 1e-9,
) -> PlanarCurve:
    """Sample the surface along y=0 as a closed plane curve.

    Only the cylinder and single bubbletons have a planar y=0 curve.
    """
    if n < 16:
        raise ValueError("need at least 16 samples")
    if len(params.lobes) > 1:
        raise ValueError("the planar y=0 curve is only defined for single bubbletons")
    curve = PlanarCurve.sample(_pipeline_evaluator(params, planarity_tol), n)
    return refine_curve(curve) if refine else curve


def _segments(points: np.ndarray) -> np.ndarray:
    d = np.diff(points, axis=0)
    return d[:, 0] + 1j * d[:, 1]


def _turns(points: np.ndarray, closed: bool) -> np.ndarray:
    """Signed turn at each interior vertex (and at the seam when closed)."""
    w = _segments(points)
    if np.any(w == 0):
        raise IrregularCurve("repeated consecutive samples")
    nxt = np.roll(w, -1) if closed else w[1:]
    cur = w if closed else w[:-1]
    return np.angle(nxt / cur)


def refine_curve(
    curve: PlanarCurve,
    max_turn: float = MAX_TURN,
    max_passes: int = 40,
    min_step: float = 1e-12,
) -> PlanarCurve:
    """Bisect parameter intervals until the tangent turns < ``max_turn`` per vertex."""
    if curve.evaluator is None:
        return curve
    x, pts = curve.x, curve.points
    for _ in range(max_passes):
        turns = np.abs(_turns(pts, curve.closed))
        nseg = len(x) - 1
        mark = np.zeros(nseg, dtype=bool)
        hot = np.flatnonzero(turns > max_turn)
        if hot.size == 0:
            break
        # vertex k sits between segments k and k+1 (cyclically when closed)
        mark[hot % nseg] = True
        mark[(hot + 1) % nseg] = True
        mark &= np.diff(x) > min_step
        if not mark.any():
            break
        mids = 0.5 * (x[:-1][mark] + x[1:][mark])
        mid_pts = np.asarray(curve.evaluator(mids), dtype=float)
        order = np.argsort(np.concatenate([x, mids]), kind="stable")
        x = np.concatenate([x, mids])[order]
        pts = np.concatenate([pts, mid_pts])[order]
    return PlanarCurve(x, pts, curve.closed, curve.evaluator)


@dataclass(frozen=True)
class TurningNumber:
    value: int
    raw: float

    @property
    def residual(self) -> float:
        return abs(self.raw - self.value)


def turning_number(curve: PlanarCurve, max_turn: float = MAX_TURN) -> TurningNumber:
    """Winding of the unit tangent, by summing exterior angles of the polyline.

    The curve is refined first when it carries an evaluator.
    """
    if not curve.closed:
        raise ValueError("turning number needs a closed curve")
    curve = refine_curve(curve, max_turn)
    turns = _turns(curve.points, closed=True)
    worst = float(np.max(np.abs(turns)))
    if worst > np.pi / 2:
        raise IrregularCurve(f"tangent jumps by {worst:.3f} rad between samples")
    raw = float(np.sum(turns) / (2 * np.pi))
    return TurningNumber(int(round(raw)), raw)


def turning_number_integral(K: int, epsabs: float = 1e-10) -> float:
    """(1/2pi) * integral over [0, 1] of (X'Z'' - X''Z')/(X'^2 + Z'^2), closed-form derivatives."""

    def curvature_density(x: float) -> float:
        dx, dz, ddx, ddz = closed_form_derivatives(x, K)
        return float((dx * ddz - ddx * dz) / (dx * dx + dz * dz))

    # break points at the lobe centres keep quad from stepping over spikes
    breaks = np.arange(1, 4 * K) / (4 * K)
    total, _ = integrate.quad(curvature_density, 0.0, 1.0, points=breaks, limit=2000, epsabs=epsabs)
    return total / (2 * np.pi)


@dataclass(frozen=True)
class Intersection:
    s: float
    t: float
    point: np.ndarray


def _cross(a, b):
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def _segment_hit(p0, p1, q0, q1, slack: float = 1e-12):
    """Segment parameters (s, t) of a transversal crossing, or None."""
    d1 = p1 - p0
    d2 = q1 - q0
    denom = _cross(d1, d2)
    if abs(denom) <= 1e-300:
        return None
    r = q0 - p0
    s = _cross(r, d2) / denom
    t = _cross(r, d1) / denom
    if -slack <= s <= 1 + slack and -slack <= t <= 1 + slack:
        return s, t
    return None


def _candidate_pairs(points: np.ndarray, closed: bool):
    lo = np.minimum(points[:-1], points[1:])
    hi = np.maximum(points[:-1], points[1:])
    lengths = np.linalg.norm(points[1:] - points[:-1], axis=1)
    cell = float(np.median(lengths)) or 1.0
    origin = points.min(axis=0)
    ilo = np.floor((lo - origin) / cell).astype(int)
    ihi = np.floor((hi - origin) / cell).astype(int)
    grid = defaultdict(list)
    for k in range(len(lo)):
        for gx in range(ilo[k, 0], ihi[k, 0] + 1):
            for gy in range(ilo[k, 1], ihi[k, 1] + 1):
                grid[gx, gy].append(k)
    m = len(lo)
    pairs = set()
    for members in grid.values():
        for a_i, i in enumerate(members):
            for j in members[a_i + 1 :]:
                a, b = (i, j) if i < j else (j, i)
                if b - a == 1 or (closed and a == 0 and b == m - 1):
                    continue
                pairs.add((a, b))
    return sorted(pairs)


def _bisect_crossing(evaluator: Evaluator, a, b, tol: float, max_iter: int = 80):
    """Shrink the parameter intervals a=(a0,a1), b=(b0,b1) around a crossing."""
    a0, a1 = a
    b0, b1 = b
    ends = np.asarray(evaluator(np.array([a0, a1, b0, b1])), dtype=float)
    pa0, pa1, pb0, pb1 = ends
    for _ in range(max_iter):
        if max(a1 - a0, b1 - b0) <= tol:
            break
        am, bm = 0.5 * (a0 + a1), 0.5 * (b0 + b1)
        pam, pbm = np.asarray(evaluator(np.array([am, bm])), dtype=float)
        found = None
        for sa, pa in (((a0, am), (pa0, pam)), ((am, a1), (pam, pa1))):
            for sb, pb in (((b0, bm), (pb0, pbm)), ((bm, b1), (pbm, pb1))):
                if _segment_hit(pa[0], pa[1], pb[0], pb[1], slack=1e-9) is not None:
                    found = (sa, pa, sb, pb)
                    break
            if found:
                break
        if found is None:
            break
        (a0, a1), (pa0, pa1), (b0, b1), (pb0, pb1) = found
    hit = _segment_hit(pa0, pa1, pb0, pb1, slack=1e-6)
    s, t = hit if hit is not None else (0.5, 0.5)
    return a0 + s * (a1 - a0), b0 + t * (b1 - b0), pa0 + s * (pa1 - pa0)


def self_intersections(curve: PlanarCurve, tol: float = 1e-9) -> list[Intersection]:
    """All transversal crossings between non-adjacent polyline segments.

    With an evaluator, each crossing is refined by bisection to ``tol`` in
    both parameters.  Crossings found twice (at a shared vertex) are merged.
    """
    curve = refine_curve(curve)
    x, pts = curve.x, curve.points
    found: list[Intersection] = []
    for i, j in _candidate_pairs(pts, curve.closed):
        hit = _segment_hit(pts[i], pts[i + 1], pts[j], pts[j + 1])
        if hit is None:
            continue
        if curve.evaluator is not None:
            s, t, p = _bisect_crossing(curve.evaluator, (x[i], x[i + 1]), (x[j], x[j + 1]), tol)
        else:
            s = x[i] + hit[0] * (x[i + 1] - x[i])
            t = x[j] + hit[1] * (x[j + 1] - x[j])
            p = pts[i] + hit[0] * (pts[i + 1] - pts[i])
        found.append(Intersection(float(s), float(t), np.asarray(p)))
    return _merge(found, period=(x[-1] - x[0]) if curve.closed else None)


def _merge(hits: list[Intersection], period: Optional[float], tol: float = 1e-6) -> list[Intersection]:
    def same(u: float, v: float) -> bool:
        d = abs(u - v)
        if period:
            d = min(d, period - d)
        return d <= tol

    out: list[Intersection] = []
    for h in hits:
        if any(
            (same(h.s, o.s) and same(h.t, o.t)) or (same(h.s, o.t) and same(h.t, o.s))
            for o in out
        ):
            continue
        out.append(h)
    return out
