import numpy as np
import pytest

from bubbleton.algebra import LineCP1, Mat2

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240613)


def random_su2(rng) -> Mat2:
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    return Mat2(q[0] + 1j * q[1], q[2] + 1j * q[3], -q[2] + 1j * q[3], q[0] - 1j * q[1])


def random_line(rng) -> LineCP1:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return LineCP1.through(v[0], v[1])


def apply(m: Mat2, L: LineCP1) -> LineCP1:
    return LineCP1.through(m.a * L.a + m.b * L.b, m.c * L.a + m.d * L.b)
