"""Extended frame of the round cylinder and its period conditions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_TOL, Jet, Mat2, cos, principal_sqrt, sin, value
from .errors import ZeroLambda


def _check_lambda(lam) -> None:
    if np.any(np.asarray(value(lam)) == 0):
        raise ZeroLambda("the spectral parameter must be nonzero")


def mu(z, lam, sheet: int = 1):
    """(pi/2) (z lam^{-1/2} + conj(z) lam^{1/2})."""
    _check_lambda(lam)
    root = principal_sqrt(lam, sheet)
    return (np.pi / 2) * (z / root + np.conj(z) * root)


def frame(z, lam, sheet: int = 1) -> Mat2:
    """Extended frame F_lam(z) of the round cylinder.

    ``z`` may be an array; ``lam`` may be a scalar, array or Jet.
    """
    _check_lambda(lam)
    root = principal_sqrt(lam, sheet)
    m = (np.pi / 2) * (z / root + np.conj(z) * root)
    c, s = cos(m), sin(m)
    return Mat2(c, 1j * s / root, 1j * root * s, c)


def monodromy(tau, lam, sheet: int = 1) -> Mat2:
    """Monodromy for z -> z + tau with base point 0, where F = identity."""
    return frame(tau, lam, sheet)


@dataclass(frozen=True)
class ClosingReport:
    lambda0: complex
    tau: complex
    sign: int
    value_deviation: float
    derivative_norm: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.value_deviation <= self.tol and self.derivative_norm <= self.tol


def closing_report(m: Mat2, lambda0, tau, tol: float = DEFAULT_TOL) -> ClosingReport:
    """Check M = +-1 and M' = 0 for a monodromy evaluated with a jet."""
    val, der = m.value(), m.jet_part()
    one = Mat2.identity()
    dev_plus = (val - one).max_norm()
    dev_minus = (val + one).max_norm()
    sign = 1 if dev_plus <= dev_minus else -1
    return ClosingReport(
        lambda0=complex(lambda0),
        tau=complex(tau),
        sign=sign,
        value_deviation=min(dev_plus, dev_minus),
        derivative_norm=der.max_norm(),
        tol=tol,
    )


def check_closing(lambda0, tau=1.0, tol: float = DEFAULT_TOL) -> ClosingReport:
    _check_lambda(lambda0)
    m = monodromy(tau, Jet.variable(lambda0))
    return closing_report(m, lambda0, tau, tol)
