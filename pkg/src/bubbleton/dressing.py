"""Simple factors and the dressing action that turns the cylinder into bubbletons."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .algebra import (
    DEFAULT_TOL,
    E1,
    LineCP1,
    Mat2,
    gram_schmidt_qr,
    hermitian_projection,
    principal_sqrt,
    value,
)
from .cylinder import frame
from .errors import (
    ExtrapolationDiverged,
    InvalidLobeNumber,
    PoleAtLambda,
    UnimodularAlpha,
    ZeroLambda,
)

POLE_GUARD = 1e-6


def alpha_for_lobes(K: int) -> float:
    """Admissible singularity for a K-lobed bubbleton.

    The smaller root of sqrt(a) + 1/sqrt(a) = 2K, written in the
    cancellation-free form 1 / (K + sqrt(K^2 - 1))^2.
    """
    _check_lobe_number(K)
    return 1.0 / (K + math.sqrt(K * K - 1)) ** 2


def _check_lobe_number(K) -> None:
    if isinstance(K, bool) or not isinstance(K, (int, np.integer)) or K < 2:
        raise InvalidLobeNumber(f"lobe number must be an integer K >= 2, got {K!r}")


@dataclass(frozen=True)
class SimpleFactorParams:
    """One simple factor: lobe number, singularity and line.

    ``alpha`` defaults to :func:`alpha_for_lobes`; pass ``1/alpha`` to use
    the other root of the same quadratic.
    """

    K: int
    L: LineCP1 = E1
    alpha: float = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        _check_lobe_number(self.K)
        if self.alpha is None:
            object.__setattr__(self, "alpha", alpha_for_lobes(self.K))
        if abs(abs(self.alpha) - 1.0) <= DEFAULT_TOL:
            raise UnimodularAlpha(f"|alpha| = 1 is not allowed (alpha = {self.alpha})")


@dataclass(frozen=True)
class BubbletonParams:
    """Everything that fixes a (multi-)bubbleton.

    An empty ``lobes`` tuple is the round cylinder itself.
    """

    lobes: tuple[SimpleFactorParams, ...] = ()
    H: float = -0.5
    lambda0: complex = 1.0 + 0j

    def __post_init__(self):
        ks = [p.K for p in self.lobes]
        if len(set(ks)) != len(ks):
            raise InvalidLobeNumber(f"each lobe number may appear only once, got {ks}")
        if self.H == 0:
            raise ValueError("mean curvature must be nonzero")
        if abs(abs(self.lambda0) - 1.0) > DEFAULT_TOL:
            raise ValueError("the Sym point lambda0 must lie on the unit circle")
        object.__setattr__(self, "lobes", tuple(sorted(self.lobes, key=lambda p: p.K)))

    @classmethod
    def from_lobes(cls, Ks: Sequence[int], H: float = -0.5, lambda0: complex = 1.0) -> "BubbletonParams":
        return cls(tuple(SimpleFactorParams(int(K)) for K in Ks), H=H, lambda0=complex(lambda0))

    @property
    def is_single(self) -> bool:
        return len(self.lobes) == 1


def _factor_scalar(alpha, lam):
    return (alpha - lam) / (1 - np.conj(alpha) * lam)


def _guard_pole(alpha, lam, tol: float) -> None:
    lv = np.asarray(value(lam))
    if np.any(np.abs(1 - np.conj(alpha) * lv) <= tol):
        raise PoleAtLambda(f"lambda is at the pole 1/conj(alpha) = {1 / np.conj(alpha)}")


def psi(L: LineCP1, alpha, lam, tol: float = DEFAULT_TOL) -> Mat2:
    """pi_L + (alpha - lam)/(1 - conj(alpha) lam) pi_L^perp."""
    _guard_pole(alpha, lam, tol)
    P = hermitian_projection(L)
    s = _factor_scalar(alpha, lam)
    return Mat2(P.a + (1 - P.a) * s, P.b - P.b * s, P.c - P.c * s, P.d + (1 - P.d) * s)


def psi_inverse(L: LineCP1, alpha, lam) -> Mat2:
    """pi_L + (1 - conj(alpha) lam)/(alpha - lam) pi_L^perp."""
    lv = np.asarray(value(lam))
    if np.any(np.abs(alpha - lv) <= DEFAULT_TOL):
        raise PoleAtLambda(f"psi is singular at lambda = alpha = {alpha}")
    P = hermitian_projection(L)
    r = 1.0 / _factor_scalar(alpha, lam)
    return Mat2(P.a + (1 - P.a) * r, P.b - P.b * r, P.c - P.c * r, P.d + (1 - P.d) * r)


def unitary_normalizer(L: LineCP1, alpha) -> Mat2:
    """The unitary Q in det(psi(0))^{-1/2} psi(0) = Q R."""
    m = psi(L, alpha, 0.0) / principal_sqrt(alpha)
    Q, _ = gram_schmidt_qr(m)
    return Q


def simple_factor(L: LineCP1, alpha, lam, tol: float = DEFAULT_TOL) -> Mat2:
    """h_{L,alpha}(lam) = det(psi)^{-1/2} Q^{-1} psi, unimodular and unitary on |lam| = 1."""
    if abs(abs(alpha) - 1.0) <= tol:
        raise UnimodularAlpha(f"|alpha| = 1 is not allowed (alpha = {alpha})")
    lv = np.asarray(value(lam))
    if np.any(np.abs(alpha - lv) <= tol):
        raise PoleAtLambda(f"simple factor degenerates at lambda = alpha = {alpha}")
    p = psi(L, alpha, lam, tol)
    Q = unitary_normalizer(L, alpha)
    return (Q.H @ p) / principal_sqrt(_factor_scalar(alpha, lam))


def transformed_line(F_alpha: Mat2, L: LineCP1) -> LineCP1:
    """conj(F_alpha)^t L, renormalized."""
    Fh = F_alpha.value().H
    return LineCP1.through(Fh.a * L.a + Fh.b * L.b, Fh.c * L.a + Fh.d * L.b)


def dressed_line(z, alpha, L: LineCP1 = E1) -> LineCP1:
    """The line conj(F_alpha(z))^t L for the cylinder frame."""
    if abs(abs(alpha) - 1.0) <= DEFAULT_TOL:
        raise UnimodularAlpha(f"|alpha| = 1 is not allowed (alpha = {alpha})")
    return transformed_line(frame(z, alpha), L)


def _guard_lobes(lobes, lam) -> None:
    lv = np.asarray(value(lam))
    if np.any(lv == 0):
        raise ZeroLambda("the spectral parameter must be nonzero")
    for p in lobes:
        near = np.minimum(np.abs(lv - p.alpha), np.abs(lv - 1.0 / p.alpha))
        if np.any(near <= POLE_GUARD):
            raise PoleAtLambda(
                f"lambda within {POLE_GUARD} of the singularity pair of the K={p.K} factor; "
                "use residue_check or a jet expansion there"
            )


def _dress(z, lam, lobes, sheet: int) -> Mat2:
    if not lobes:
        return frame(z, lam, sheet)
    *inner, p = lobes
    inner = tuple(inner)
    Lt = transformed_line(_dress(z, p.alpha, inner, sheet), p.L)
    Q = unitary_normalizer(p.L, p.alpha)
    Qt = unitary_normalizer(Lt, p.alpha)
    core = _dress(z, lam, inner, sheet)
    # det(psi) does not depend on the line, so the scalar normalizations of
    # h_L and h_Lt^{-1} cancel and no square root of it is ever taken
    return Q.H @ psi(p.L, p.alpha, lam) @ core @ psi_inverse(Lt, p.alpha, lam) @ Qt


def dressed_frame(z, lam, params: BubbletonParams, sheet: int = 1) -> Mat2:
    """Extended frame of the bubbleton described by ``params``.

    Lobes act in increasing K, each on the frame already dressed by the
    smaller ones.  ``z`` may be an array and ``lam`` a Jet.
    """
    _guard_lobes(params.lobes, lam)
    return _dress(np.asarray(z, dtype=complex), lam, params.lobes, sheet)


def _lobed_conjugate(alpha: float, lam) -> Mat2:
    h = simple_factor(E1, alpha, lam)
    hinv = h.inv()
    return h @ frame(1.0, lam) @ hinv


def removable_limit(K: int) -> Mat2:
    """Exact value of lim_{lam -> alpha} h F_lam(1) h^{-1} for L = [1:0].

    With mu_lam(1) = (pi/2)(lam^{-1/2} + lam^{1/2}) one gets
    (-1)^K (1 + i alpha^{-1/2} 2 pi K (K^2 - 1) E12).
    """
    alpha = alpha_for_lobes(K)
    sign = (-1) ** K
    coeff = 1j * alpha ** -0.5 * 2 * math.pi * K * (K * K - 1)
    return Mat2(sign + 0j, sign * coeff, 0j, sign + 0j)


def residue_check(K: int, alpha: float | None = None, rtol: float = 1e-6) -> Mat2:
    """Limit of h F_lam(1) h^{-1} as lam -> alpha by Richardson extrapolation.

    Samples lam = alpha + eps_k with eps_k = 10^-k (1 - alpha), k = 2..6, and
    runs the full Richardson table on them.  Raises :class:`ExtrapolationDiverged` when
    the estimates do not settle, i.e. the singularity is not removable.
    """
    _check_lobe_number(K)
    if alpha is None:
        alpha = alpha_for_lobes(K)
    eps = [10.0 ** -k * (1 - alpha) for k in range(2, 7)]
    table = [_lobed_conjugate(alpha, alpha + e).to_array() for e in eps]
    growth = np.max(np.abs(table[-1])) / np.max(np.abs(table[-2]))
    # each sweep removes the next power of eps (step ratio 10)
    estimates = [table[-1]]
    for order in range(1, len(eps)):
        factor = 10.0**order
        table = [(factor * table[i + 1] - table[i]) / (factor - 1) for i in range(len(table) - 1)]
        estimates.append(table[-1])
    last, prev = estimates[-1], estimates[-2]
    scale = max(np.max(np.abs(last)), 1.0)
    # a genuine simple pole grows tenfold per step
    if growth > 2.0 or not np.all(np.isfinite(last)) or np.max(np.abs(last - prev)) > rtol * scale:
        raise ExtrapolationDiverged(
            f"estimates moved by {np.max(np.abs(last - prev)):.3e} (scale {scale:.3e}); "
            f"alpha = {alpha} does not give a removable singularity"
        )
    return Mat2.from_array(last)
