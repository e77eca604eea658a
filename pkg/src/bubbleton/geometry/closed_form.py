"""Closed-form y=0 curve of a single bubbleton (lambda = 1, H = -1/2).

These are the hand-derived trigonometric expressions; the dressing
pipeline in :mod:`bubbleton.geometry.immersion` is the independent check.
All quantities here live in the normalization i F' F^{-1}, which is the
Sym-Bobenko immersion scaled by -H/2 = 1/4.
"""

from __future__ import annotations

import math
import types
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy

from ..algebra import Mat2
from ..dressing import _check_lobe_number, alpha_for_lobes


@dataclass(frozen=True)
class CurveSummands:
    """The three pieces of i F'F^{-1} along y=0: outer factor, cylinder, inner factor."""

    t1: Mat2
    t2: Mat2
    t3: Mat2

    @property
    def total(self) -> Mat2:
        return self.t1 + self.t2 + self.t3


def _uv_parts(x, K, alpha, lib):
    """Shared numerators and denominator of u and v."""
    sa = lib.sqrt(alpha)
    p = lib.pi
    outer = (alpha - 1) * lib.cos(2 * p * K * x) - alpha - 1
    cos_sum = (
        (sa - 1) ** 2 * lib.cos(2 * p * (K + 1) * x)
        + (sa + 1) ** 2 * lib.cos(2 * p * (K - 1) * x)
        + 2 * (alpha - 1) * lib.cos(2 * p * x)
    )
    sin_sum = (
        (sa - 1) ** 2 * lib.sin(2 * p * (K + 1) * x)
        - (sa + 1) ** 2 * lib.sin(2 * p * (K - 1) * x)
        + 2 * (alpha - 1) * lib.sin(2 * p * x)
    )
    quartic = -((alpha - 1) ** 2) * lib.cos(4 * p * K * x) + alpha**2 + 6 * alpha + 1
    return outer, cos_sum, sin_sum, quartic


def inner_factor_uv(x, K: int):
    """The real functions u, v with third summand [[i u, -v], [v, -i u]]."""
    _check_lobe_number(K)
    alpha = alpha_for_lobes(K)
    x = np.asarray(x, dtype=float)
    outer, cos_sum, sin_sum, quartic = _uv_parts(x, K, alpha, np)
    den = 2 * (alpha - 1) * quartic
    u = (alpha + 1) * outer * cos_sum / den
    v = (alpha + 1) * sin_sum * outer / den
    return u, v


def curve_summands(x, K: int) -> CurveSummands:
    """Closed forms of the three summands of i F'F^{-1} at lambda = 1, y = 0."""
    _check_lobe_number(K)
    x = np.asarray(x, dtype=float)
    c = K / (2 * math.sqrt(K * K - 1))
    one = np.ones_like(x)
    t1 = Mat2(-1j * c * one, 0j * one, 0j * one, 1j * c * one)
    s2 = np.sin(np.pi * x) ** 2
    s = np.sin(2 * np.pi * x)
    t2 = Mat2(-0.5j * s2, -0.25 * s + 0j, 0.25 * s + 0j, 0.5j * s2)
    u, v = inner_factor_uv(x, K)
    t3 = Mat2(1j * u, -v + 0j, v + 0j, -1j * u)
    return CurveSummands(t1, t2, t3)


def _xz(x, K, alpha, lib, literal: bool = False):
    outer, cos_sum, sin_sum, quartic = _uv_parts(x, K, alpha, lib)
    p = lib.pi
    # as typeset, the second denominator term lacks the factor 2 that
    # X = sin(2 pi x)/4 + v requires
    k = 1 if literal else 2
    x_den = 2 * (alpha - 1) ** 3 * lib.cos(4 * p * K * x) - k * (alpha - 1) * (alpha * (alpha + 6) + 1)
    X = lib.sin(2 * p * x) / 4 - (alpha + 1) * sin_sum * outer / x_den
    Z = (
        ((alpha**2 - 1) * lib.cos(2 * p * K * x) - (alpha + 1) ** 2) * cos_sum / (2 * (alpha - 1) * quartic)
        - lib.sin(p * x) ** 2 / 2
        - K / (2 * lib.sqrt(K**2 - 1))
    )
    return X, Z


def bubbleton_curve_closed_form(x, K: int, literal: bool = False):
    """(X(x), Z(x)) of the y=0 curve in the i F'F^{-1} normalization.

    ``literal=True`` reproduces the X expression exactly as typeset, which
    differs from the combination of the summands; see ``_xz``.
    """
    _check_lobe_number(K)
    x = np.asarray(x, dtype=float)
    return _xz(x, K, alpha_for_lobes(K), np, literal)


@lru_cache(maxsize=None)
def _derivative_functions(K: int):
    t = sympy.Symbol("x", real=True)
    lib = types.SimpleNamespace(sin=sympy.sin, cos=sympy.cos, sqrt=sympy.sqrt, pi=sympy.pi)
    alpha = 1 / (K + sympy.sqrt(K * K - 1)) ** 2
    X, Z = _xz(t, K, alpha, lib)
    exprs = [sympy.diff(X, t), sympy.diff(Z, t), sympy.diff(X, t, 2), sympy.diff(Z, t, 2)]
    return sympy.lambdify(t, exprs, "numpy")


def closed_form_derivatives(x, K: int):
    """(X', Z', X'', Z'') by symbolic differentiation of the closed forms."""
    _check_lobe_number(K)
    x = np.asarray(x, dtype=float)
    return tuple(np.broadcast_to(np.asarray(d, dtype=float), x.shape) for d in _derivative_functions(K)(x))


def to_closed_form_normalization(points: np.ndarray, H: float) -> np.ndarray:
    """Scale immersion coordinates by -H/2, the Sym-Bobenko prefactor at lambda0 = 1."""
    return np.asarray(points) * (-H / 2)
