import numpy as np
import pytest

from bubbleton.dressing import BubbletonParams
from bubbleton.errors import IrregularCurve
from bubbleton.geometry import (
    PlanarCurve,
    extract_planar_curve,
    self_intersections,
    turning_number,
    turning_number_integral,
)


def circle(r=1.0, turns=1):
    return lambda t: r * np.stack([np.cos(2 * np.pi * turns * t), np.sin(2 * np.pi * turns * t)], axis=-1)


def figure_eight(t):
    return np.stack([np.sin(2 * np.pi * t), np.sin(4 * np.pi * t)], axis=-1)


def test_closed_curve_must_close():
    with pytest.raises(ValueError):
        PlanarCurve.sample(lambda t: np.stack([t, t], axis=-1), 16)
    with pytest.raises(ValueError):
        PlanarCurve(np.arange(3.0), np.zeros((4, 2)))


def test_cylinder_curve_is_circle():
    for H in (-0.5, 2.0):
        c = extract_planar_curve(BubbletonParams(H=H), n=256)
        centre = np.array([0.0, 1 / (2 * H)])
        r = np.linalg.norm(c.points - centre, axis=1)
        assert np.allclose(r, 1 / (2 * abs(H)), atol=1e-12)


@pytest.mark.parametrize("K", [2, 5])
def test_curve_lies_in_x1x3_plane(K):
    from bubbleton.geometry import immersion

    x = np.linspace(0, 1, 2001)
    assert np.max(np.abs(immersion(x + 0j, BubbletonParams.from_lobes([K]))[:, 1])) <= 1e-10


def test_extract_rejects_bad_input():
    with pytest.raises(ValueError):
        extract_planar_curve(BubbletonParams.from_lobes([2]), n=8)
    with pytest.raises(ValueError):
        extract_planar_curve(BubbletonParams.from_lobes([2, 3]))


def test_extract_row_count():
    c = extract_planar_curve(BubbletonParams.from_lobes([2]), n=2000, refine=False)
    assert len(c) == 2001
    assert np.allclose(c.points[0], c.points[-1], atol=1e-12)


def test_turning_number_circle():
    tn = turning_number(PlanarCurve.sample(circle(), 64))
    assert tn.value == 1 and tn.residual < 1e-12
    tn = turning_number(PlanarCurve.sample(circle(turns=-1), 64))
    assert tn.value == -1


def test_turning_number_figure_eight_is_zero():
    assert turning_number(PlanarCurve.sample(figure_eight, 200)).value == 0


def test_turning_number_coarse_without_evaluator():
    c = PlanarCurve.sample(circle(), 3)
    with pytest.raises(IrregularCurve):
        turning_number(PlanarCurve(c.x, c.points))


def test_turning_number_open_curve():
    c = PlanarCurve.sample(lambda t: np.stack([t, t * t], axis=-1), 16, closed=False)
    with pytest.raises(ValueError):
        turning_number(c)


@pytest.mark.parametrize("K", [2, 3, 4, 5, 6])
def test_bubbleton_turning_number(K):
    tn = turning_number(extract_planar_curve(BubbletonParams.from_lobes([K])))
    assert tn.value == 2 * K - 1
    assert tn.residual <= 1e-6


@pytest.mark.parametrize("K", [2, 3, 4])
def test_turning_number_integral(K):
    assert abs(turning_number_integral(K) - (2 * K - 1)) <= 1e-6


def test_turning_number_independent_of_H():
    for H in (-0.5, 3.0):
        assert turning_number(extract_planar_curve(BubbletonParams.from_lobes([3], H=H))).value == 5


def test_circle_has_no_intersections():
    assert self_intersections(PlanarCurve.sample(circle(), 64)) == []


def test_figure_eight_single_crossing():
    hits = self_intersections(PlanarCurve.sample(figure_eight, 400))
    assert len(hits) == 1
    assert np.allclose(hits[0].point, 0, atol=1e-9)
    assert sorted([hits[0].s, hits[0].t]) == pytest.approx([0.0, 0.5], abs=1e-9) or sorted(
        [hits[0].s, hits[0].t]
    ) == pytest.approx([0.5, 1.0], abs=1e-9)


def test_figure_eight_without_evaluator():
    c = PlanarCurve.sample(figure_eight, 401)
    hits = self_intersections(PlanarCurve(c.x, c.points))
    assert len(hits) == 1 and np.allclose(hits[0].point, 0, atol=1e-6)


@pytest.mark.parametrize("K", [2, 3, 4, 5, 6])
def test_bubbleton_not_embedded(K):
    curve = extract_planar_curve(BubbletonParams.from_lobes([K]))
    hits = self_intersections(curve)
    assert len(hits) >= 1
    # the lobes cross each other pairwise
    assert len(hits) == K * (K - 1)
    for h in hits:
        p, q = curve.evaluator(np.array([h.s, h.t]))
        assert np.linalg.norm(p - q) <= 1e-7
        assert abs(h.s - h.t) > 1e-6
