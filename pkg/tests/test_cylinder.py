import numpy as np
import pytest

from bubbleton.algebra import Jet, Mat2
from bubbleton.cylinder import check_closing, closing_report, frame, monodromy, mu
from bubbleton.dressing import alpha_for_lobes
from bubbleton.errors import ZeroLambda

ONE = Mat2.identity()


def test_mu_values():
    assert mu(0, 1) == 0
    assert np.isclose(mu(1, 1), np.pi, atol=1e-15)
    x = np.linspace(0, 1, 11)
    for K in (2, 3, 7):
        assert np.allclose(mu(x, alpha_for_lobes(K)), np.pi * K * x, atol=1e-12)


def test_mu_jet_derivative():
    lam0 = 0.4 + 0.9j
    z = 0.3 + 0.2j
    m = mu(z, Jet.variable(lam0))
    h = 1e-6
    fd = (mu(z, lam0 + h) - mu(z, lam0 - h)) / (2 * h)
    assert abs(m.der - fd) <= 1e-8


def test_zero_lambda():
    with pytest.raises(ZeroLambda):
        frame(0.5, 0)
    with pytest.raises(ZeroLambda):
        mu(0.5, 0j)


def test_frame_at_origin_is_identity(rng):
    for lam in rng.normal(size=5) + 1j * rng.normal(size=5):
        assert frame(0, lam).allclose(ONE, 1e-15)


def test_frame_closes_at_one():
    F = frame(1.0, Jet.variable(1.0))
    assert (F.value() + ONE).max_norm() <= 1e-15
    assert F.jet_part().max_norm() <= 1e-14


def test_monodromy_examples():
    assert (monodromy(1.0, 1.0) + ONE).max_norm() <= 1e-15
    assert monodromy(0.0, 0.3 + 0.1j).allclose(ONE, 1e-15)
    # cos(mu_alpha(1)) = cos(2 pi) for K = 2
    assert (monodromy(1.0, alpha_for_lobes(2)) - ONE).max_norm() <= 1e-12
    assert (monodromy(1.0, alpha_for_lobes(3)) + ONE).max_norm() <= 1e-12


def test_check_closing_cylinder_passes():
    rep = check_closing(1.0, 1.0)
    assert rep.passed and rep.sign == -1
    assert rep.value_deviation < 1e-14 and rep.derivative_norm < 1e-14


def test_check_closing_half_period_fails():
    rep = check_closing(1.0, 0.5)
    # F_1(1/2) = [[0, i], [i, 0]] is a distance 2 from both +1 and -1
    assert not rep.passed
    assert np.isclose(rep.value_deviation, 2.0)


def test_check_closing_at_alpha_fails_on_derivative():
    a = alpha_for_lobes(2)
    rep = check_closing(a, 1.0)
    assert rep.sign == 1 and rep.value_deviation < 1e-12
    assert not rep.passed and rep.derivative_norm > 1.0


def test_closing_conditions_are_conjugation_invariant(rng):
    F = frame(1.0, Jet.variable(1.0))
    g = Mat2.from_array(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    conj = g @ F @ g.inv()
    rep = closing_report(conj, 1.0, 1.0)
    assert rep.passed and rep.sign == -1


def test_frame_unitary_on_circle(rng):
    z = rng.normal(size=50) + 1j * rng.normal(size=50)
    lam = np.exp(1j * rng.uniform(-np.pi, np.pi, 50))
    F = frame(z, lam)
    assert (F @ F.H - ONE).max_norm() <= 1e-12


def test_frame_unimodular_on_circle(rng):
    z = rng.normal(size=50) + 1j * rng.normal(size=50)
    lam = np.exp(1j * rng.uniform(-np.pi, np.pi, 50))
    assert np.max(np.abs(frame(z, lam).det() - 1)) <= 1e-12


def test_frame_unimodular_off_circle(rng):
    z = rng.normal(size=50) + 1j * rng.normal(size=50)
    lam = rng.normal(size=50) + 1j * rng.normal(size=50)
    F = frame(z, lam)
    # cancellation error grows with the entry size off the unit circle
    scale = np.maximum(1.0, np.abs(F.to_array()).max(axis=(-2, -1)) ** 2)
    assert np.all(np.abs(F.det() - 1) <= 1e-14 * scale)


def test_translation_property(rng):
    z = rng.normal(size=30) + 1j * rng.normal(size=30)
    lam = np.exp(rng.normal(size=30) * 0.3 + 1j * rng.uniform(-3, 3, 30))
    lhs = frame(z + 1, lam)
    rhs = monodromy(1.0, lam) @ frame(z, lam)
    assert (lhs - rhs).max_norm() <= 1e-12 * max(1.0, lhs.max_norm())


def test_reality_symmetry_off_circle(rng):
    z = rng.normal(size=30) * 0.5 + 1j * rng.normal(size=30) * 0.5
    r = rng.uniform(0.3, 3.0, 30)
    lam = r * np.exp(1j * rng.uniform(-2.5, 2.5, 30))
    lhs = frame(z, 1 / np.conj(lam)).H
    rhs = frame(z, lam).inv()
    assert (lhs - rhs).max_norm() <= 1e-10 * max(1.0, rhs.max_norm())


def test_frame_branch_independent(rng):
    z = rng.normal(size=20) + 1j * rng.normal(size=20)
    lam = rng.normal(size=20) + 1j * rng.normal(size=20)
    assert (frame(z, lam, sheet=1) - frame(z, lam, sheet=-1)).max_norm() <= 1e-12
