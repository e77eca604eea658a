"""Surface sampling on a parameter grid and finite-difference mean curvature."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from ..dressing import BubbletonParams
from ..errors import DegenerateMetric
from .immersion import immersion


@dataclass(frozen=True)
class SurfaceMesh:
    """``grid[i, j]`` is the surface point at z = x[i] + i y[j]."""

    grid: np.ndarray
    x: np.ndarray
    y: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.grid.shape[:2]


def surface_mesh(
    params: BubbletonParams,
    nx: int = 256,
    ny: int = 256,
    y_range: tuple[float, float] = (-3.0, 3.0),
    x_range: tuple[float, float] = (0.0, 1.0),
) -> SurfaceMesh:
    if nx < 2 or ny < 2:
        raise ValueError("mesh needs at least 2 samples per direction")
    x = np.linspace(x_range[0], x_range[1], nx)
    y = np.linspace(y_range[0], y_range[1], ny)
    z = x[:, None] + 1j * y[None, :]
    return SurfaceMesh(immersion(z, params), x, y)


# central-difference weights: (offsets, first-derivative weights, second-derivative weights, denominators)
_STENCILS = {
    2: ((-1, 0, 1), (-1, 0, 1), (1, -2, 1), (2, 1)),
    4: ((-2, -1, 0, 1, 2), (1, -8, 0, 8, -1), (-1, 16, -30, 16, -1), (12, 12)),
}


def mean_curvature_estimate(mesh: SurfaceMesh, order: int = 4, strict: bool = False) -> np.ndarray:
    """Mean curvature at interior grid points from central differences.

    ``order`` is 2 (3x3 stencil) or 4 (5x5 stencil); the returned array
    drops ``order // 2`` boundary rows on every side.  The normal is
    f_y x f_x, which makes Sym-Bobenko surfaces come out with the H they
    were built with.  Degenerate metric points come back as NaN, or raise
    DegenerateMetric when ``strict``.
    """
    if order not in _STENCILS:
        raise ValueError("order must be 2 or 4")
    offsets, w1, w2, (d1, d2) = _STENCILS[order]
    r = order // 2
    f = mesh.grid
    nx, ny = mesh.shape
    if min(nx, ny) < 2 * r + 1:
        raise ValueError(f"need at least {2 * r + 1} samples per direction")
    hx = mesh.x[1] - mesh.x[0]
    hy = mesh.y[1] - mesh.y[0]

    def shifted(i: int, j: int) -> np.ndarray:
        return f[r + i : nx - r + i, r + j : ny - r + j]

    fx = sum(w * shifted(o, 0) for o, w in zip(offsets, w1)) / (d1 * hx)
    fy = sum(w * shifted(0, o) for o, w in zip(offsets, w1)) / (d1 * hy)
    fxx = sum(w * shifted(o, 0) for o, w in zip(offsets, w2)) / (d2 * hx**2)
    fyy = sum(w * shifted(0, o) for o, w in zip(offsets, w2)) / (d2 * hy**2)
    fxy = sum(
        wi * wj * shifted(oi, oj) for oi, wi in zip(offsets, w1) for oj, wj in zip(offsets, w1)
    ) / (d1 * d1 * hx * hy)

    E = np.einsum("...k,...k", fx, fx)
    F = np.einsum("...k,...k", fx, fy)
    G = np.einsum("...k,...k", fy, fy)
    det = E * G - F * F
    n = np.cross(fy, fx)
    norm = np.linalg.norm(n, axis=-1)
    bad = (det <= 1e-14 * (E * G + 1e-300)) | (norm == 0)
    if bad.any():
        msg = f"first fundamental form degenerate at {int(bad.sum())} grid points"
        if strict:
            raise DegenerateMetric(msg)
        warnings.warn(msg, RuntimeWarning, stacklevel=2)
    with np.errstate(invalid="ignore", divide="ignore"):
        n = n / norm[..., None]
        e = np.einsum("...k,...k", fxx, n)
        m = np.einsum("...k,...k", fxy, n)
        g = np.einsum("...k,...k", fyy, n)
        H = (e * G - 2 * m * F + g * E) / (2 * det)
    H[bad] = np.nan
    return H
