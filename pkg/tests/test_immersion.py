import math

import numpy as np
import pytest

from bubbleton.algebra import Jet, Mat2, r3_to_spinor, spinor_to_r3
from bubbleton.cylinder import frame
from bubbleton.dressing import BubbletonParams, dressed_frame
from bubbleton.errors import NotInSu2
from bubbleton.geometry import (
    bubbleton_curve_closed_form,
    curve_summands,
    cylinder_immersion_closed_form,
    extract_planar_curve,
    immersion,
    inner_factor_uv,
    sym_bobenko,
    to_closed_form_normalization,
)

CYL = BubbletonParams()


def test_sym_bobenko_cylinder_origin():
    f = sym_bobenko(frame(0.0, Jet.variable(1.0)), 1.0, -0.5)
    assert np.allclose(spinor_to_r3(f), 0, atol=1e-15)


def test_sym_bobenko_cylinder_quarter():
    f = sym_bobenko(frame(0.25, Jet.variable(1.0)), 1.0, -0.5)
    assert f.allclose(r3_to_spinor(np.array([-1.0, 0.0, -1.0])), 1e-14)


def test_sym_bobenko_rejects_non_frame():
    bogus = Mat2.identity().map(lambda v: Jet(v, 1.0 + 0j))
    with pytest.raises(NotInSu2):
        sym_bobenko(bogus, 1.0, -0.5)
    with pytest.raises(ValueError):
        sym_bobenko(frame(0.1, Jet.variable(1.0)), 1.0, 0.0)


def test_cylinder_closed_form_examples():
    assert np.allclose(cylinder_immersion_closed_form(0, 0, -0.5), 0)
    assert np.allclose(cylinder_immersion_closed_form(0.5, 0, -0.5), [0, 0, -2])
    assert np.allclose(cylinder_immersion_closed_form(0, 1, -0.5), [0, 2 * np.pi, 0])


@pytest.mark.parametrize("H", [-0.5, 1.0, -2.5])
def test_cylinder_pipeline_matches_closed_form(H, rng):
    x = rng.uniform(-1, 2, 200)
    y = rng.uniform(-2, 2, 200)
    got = immersion(x + 1j * y, BubbletonParams(H=H))
    assert np.max(np.abs(got - cylinder_immersion_closed_form(x, y, H))) <= 1e-12


def test_curve_summand_examples():
    s = curve_summands(np.array([0.0, 0.3]), 2)
    assert s.t1.allclose(Mat2.diag(-1j, 1j) / math.sqrt(3), 1e-15)
    t2_at_0 = s.t2.map(lambda v: v[0])
    assert t2_at_0.max_norm() == 0


@pytest.mark.parametrize("K", [2, 3, 4, 5])
def test_summands_add_up_to_pipeline(K):
    x = np.linspace(0, 1, 1000)
    p = BubbletonParams.from_lobes([K])
    f = sym_bobenko(dressed_frame(x, Jet.variable(1.0), p), 1.0, p.H) * (-p.H / 2)
    assert (curve_summands(x, K).total - f).max_norm() <= 1e-9


def test_summands_are_planar(rng):
    x = rng.uniform(0, 1, 300)
    for K in (2, 4):
        total = curve_summands(x, K).total
        assert np.max(np.abs(np.imag(total.b))) == 0 and np.max(np.abs(np.imag(total.c))) == 0
        u, v = inner_factor_uv(x, K)
        assert u.dtype == float and v.dtype == float


@pytest.mark.parametrize("K", [2, 3, 4, 5])
def test_closed_form_curve_matches_pipeline(K):
    x = np.linspace(0, 1, 4097)
    p = BubbletonParams.from_lobes([K])
    curve = extract_planar_curve(p, n=64, refine=False)
    pipe = to_closed_form_normalization(curve.evaluator(x), p.H)
    X, Z = bubbleton_curve_closed_form(x, K)
    assert np.max(np.hypot(pipe[:, 0] - X, pipe[:, 1] - Z)) <= 1e-9


def test_closed_form_examples():
    K = 2
    X, Z = bubbleton_curve_closed_form(np.array([0.0, 0.25, 1.0]), K)
    assert X[0] == pytest.approx(X[2], abs=1e-14) and Z[0] == pytest.approx(Z[2], abs=1e-14)
    p = BubbletonParams.from_lobes([K])
    pipe = to_closed_form_normalization(extract_planar_curve(p, n=64).evaluator(np.array([0.0, 0.25])), p.H)
    assert np.allclose(pipe[:, 0], X[:2], atol=1e-9) and np.allclose(pipe[:, 1], Z[:2], atol=1e-9)


def test_literal_x_differs_from_summands():
    # the X denominator as typeset is off by a factor 2 in one term
    x = np.linspace(0, 1, 257)
    X, _ = bubbleton_curve_closed_form(x, 2)
    Xl, _ = bubbleton_curve_closed_form(x, 2, literal=True)
    u, v = inner_factor_uv(x, 2)
    assert np.allclose(X, np.sin(2 * np.pi * x) / 4 + v, atol=1e-12)
    assert np.max(np.abs(Xl - X)) > 1e-2


@pytest.mark.parametrize("K", [2, 3])
def test_bubbleton_periodic(K, rng):
    z = rng.uniform(-1, 1, 100) + 1j * rng.uniform(-1.5, 1.5, 100)
    p = BubbletonParams.from_lobes([K])
    assert np.max(np.linalg.norm(immersion(z + 1, p) - immersion(z, p), axis=-1)) <= 1e-9


def test_immersion_branch_independent(rng):
    z = rng.uniform(0, 1, 50) + 1j * rng.uniform(-1, 1, 50)
    p = BubbletonParams.from_lobes([3])
    assert np.allclose(immersion(z, p, sheet=1), immersion(z, p, sheet=-1), atol=1e-10)


def test_immersion_shape():
    z = np.zeros((4, 5), dtype=complex)
    assert immersion(z, BubbletonParams.from_lobes([2, 3])).shape == (4, 5, 3)
