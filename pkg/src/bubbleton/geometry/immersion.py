"""Sym-Bobenko immersion of an extended frame and the cylinder closed form."""

from __future__ import annotations

import numpy as np

from ..algebra import DEFAULT_TOL, Jet, Mat2, spinor_to_r3
from ..dressing import BubbletonParams, dressed_frame


def sym_bobenko(frame_jet: Mat2, lambda0, H: float, tol: float = DEFAULT_TOL) -> Mat2:
    """-2 i lambda0 / H * F'(lambda0) F(lambda0)^{-1}.

    ``frame_jet`` must have been evaluated with the spectral parameter
    carried as ``Jet.variable(lambda0)``.  Raises NotInSu2 when the result
    is not trace-free anti-hermitian.
    """
    if H == 0:
        raise ValueError("mean curvature must be nonzero")
    F = frame_jet.value()
    dF = frame_jet.jet_part()
    f = (dF @ F.inv()) * (-2j * lambda0 / H)
    spinor_to_r3(f, tol)
    return f


def immersion(z, params: BubbletonParams, sheet: int = 1, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Points of the surface at conformal coordinates ``z``; shape z.shape + (3,)."""
    lam = Jet.variable(params.lambda0)
    F = dressed_frame(z, lam, params, sheet)
    return spinor_to_r3(sym_bobenko(F, params.lambda0, params.H, tol), tol)


def cylinder_immersion_closed_form(x, y, H: float) -> np.ndarray:
    """(sin 2 pi x, -2 pi y, 1 - cos 2 pi x) / (2H)."""
    if H == 0:
        raise ValueError("mean curvature must be nonzero")
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    return np.stack([np.sin(2 * np.pi * x), -2 * np.pi * y, 1 - np.cos(2 * np.pi * x)], axis=-1) / (2 * H)
