"""Immersions, the planar y=0 curve and surface meshes."""

from .closed_form import (
    CurveSummands,
    bubbleton_curve_closed_form,
    closed_form_derivatives,
    curve_summands,
    inner_factor_uv,
    to_closed_form_normalization,
)
from .immersion import cylinder_immersion_closed_form, immersion, sym_bobenko
from .mesh import SurfaceMesh, mean_curvature_estimate, surface_mesh
from .planar import (
    Intersection,
    PlanarCurve,
    TurningNumber,
    extract_planar_curve,
    refine_curve,
    self_intersections,
    turning_number,
    turning_number_integral,
)

__all__ = [
    "CurveSummands",
    "Intersection",
    "PlanarCurve",
    "SurfaceMesh",
    "TurningNumber",
    "bubbleton_curve_closed_form",
    "closed_form_derivatives",
    "curve_summands",
    "cylinder_immersion_closed_form",
    "extract_planar_curve",
    "immersion",
    "inner_factor_uv",
    "mean_curvature_estimate",
    "refine_curve",
    "self_intersections",
    "surface_mesh",
    "sym_bobenko",
    "to_closed_form_normalization",
    "turning_number",
    "turning_number_integral",
]
