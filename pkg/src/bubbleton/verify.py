"""Per-K verification checks, collected into a JSON-serializable report."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .algebra import Jet
from .cylinder import closing_report
from .dressing import BubbletonParams, alpha_for_lobes, dressed_frame, removable_limit, residue_check
from .geometry import (
    bubbleton_curve_closed_form,
    extract_planar_curve,
    self_intersections,
    sym_bobenko,
    to_closed_form_normalization,
    turning_number,
)

SCHEMA_VERSION = 1

DEFAULT_TOLERANCES = {
    "alpha_sum": 1e-12,
    "alpha_difference": 1e-12,
    "closing_value": 1e-10,
    "closing_derivative": 1e-10,
    "residue_limit": 1e-6,
    "planarity": 1e-10,
    "closed_form_equivalence": 1e-9,
    "turning_number": 1e-6,
}


@dataclass
class CheckRecord:
    name: str
    K: int
    measured: float
    tolerance: float
    passed: bool
    expected: Optional[float] = None


@dataclass
class VerifyReport:
    parameters: dict
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, K: int, measured: float, tolerance: float, expected=None, passed=None):
        if passed is None:
            passed = bool(measured <= tolerance)
        self.checks.append(CheckRecord(name, K, float(measured), float(tolerance), bool(passed), expected))

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "parameters": self.parameters,
            "passed": self.passed,
            "checks": [{k: v for k, v in asdict(c).items() if v is not None} for c in self.checks],
        }


def _check_one(report: VerifyReport, K: int, tol: dict, samples: int) -> None:
    alpha = alpha_for_lobes(K)
    s = math.sqrt(alpha)
    report.add("alpha_sum", K, abs(1 / s + s - 2 * K), tol["alpha_sum"])
    report.add("alpha_difference", K, abs(1 / s - s - 2 * math.sqrt(K * K - 1)), tol["alpha_difference"])

    params = BubbletonParams.from_lobes([K])
    closing = closing_report(dressed_frame(1.0, Jet.variable(1.0), params), 1.0, 1.0)
    report.add("closing_value", K, closing.value_deviation, tol["closing_value"])
    report.add("closing_derivative", K, closing.derivative_norm, tol["closing_derivative"])

    limit = residue_check(K).to_array()
    exact = removable_limit(K).to_array()
    rel = float(np.max(np.abs(limit - exact)) / np.max(np.abs(exact)))
    report.add("residue_limit", K, rel, tol["residue_limit"])

    xs = np.linspace(0.0, 1.0, samples + 1)
    f = sym_bobenko(dressed_frame(xs, Jet.variable(1.0), params), 1.0, params.H)
    leak = float(max(np.max(np.abs(np.imag(f.b))), np.max(np.abs(np.imag(f.c)))))
    report.add("planarity", K, leak, tol["planarity"])

    curve = extract_planar_curve(params, n=2048)
    pipe = to_closed_form_normalization(curve.evaluator(xs), params.H)
    X, Z = bubbleton_curve_closed_form(xs, K)
    gap = float(np.max(np.hypot(pipe[:, 0] - X, pipe[:, 1] - Z)))
    report.add("closed_form_equivalence", K, gap, tol["closed_form_equivalence"])

    tn = turning_number(curve)
    expected = 2 * K - 1
    report.add(
        "turning_number",
        K,
        tn.raw,
        tol["turning_number"],
        expected=expected,
        passed=tn.value == expected and tn.residual <= tol["turning_number"],
    )

    hits = self_intersections(curve)
    report.add("self_intersections", K, len(hits), 1, expected=None, passed=len(hits) >= 1)


def run_verification(Ks, tol_override: Optional[float] = None, samples: int = 4096) -> VerifyReport:
    """Run every check for each lobe number; ``tol_override`` replaces all tolerances."""
    tol = {k: (tol_override if tol_override is not None else v) for k, v in DEFAULT_TOLERANCES.items()}
    report = VerifyReport(parameters={"K": list(Ks), "samples": samples, "tolerances": tol})
    for K in Ks:
        _check_one(report, K, tol, samples)
    return report
