"""Constant mean curvature bubbletons by dressing the round cylinder."""

from .dressing import BubbletonParams, SimpleFactorParams, alpha_for_lobes

__version__ = "0.1.0"

__all__ = ["BubbletonParams", "SimpleFactorParams", "alpha_for_lobes", "__version__"]
