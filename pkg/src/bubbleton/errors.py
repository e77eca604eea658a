"""Exception types raised across the package."""


class BubbletonError(Exception):
    """Base class for all package errors."""


class NotInSu2(BubbletonError):
    """A matrix expected to be trace-free anti-hermitian is not."""


class SingularInput(BubbletonError):
    """A matrix that must be invertible has (numerically) zero determinant."""


class ZeroArgument(BubbletonError):
    """Square root or power of zero requested."""


class ZeroLambda(BubbletonError):
    """The spectral parameter is zero; frames live on C^x."""


class InvalidLobeNumber(BubbletonError, ValueError):
    """Lobe number K must be an integer >= 2."""


class PoleAtLambda(BubbletonError):
    """Evaluation requested at (or too close to) a pole of a simple factor."""


class UnimodularAlpha(BubbletonError):
    """Simple factor singularity lies on the unit circle."""


class ExtrapolationDiverged(BubbletonError):
    """Richardson extrapolation toward a supposed removable singularity blew up."""


class PlanarityViolated(BubbletonError):
    """The y=0 curve left the x1x3-plane; signals a pipeline bug."""


class IrregularCurve(BubbletonError):
    """Sampling cannot certify the tangent winding of a curve."""


class DegenerateMetric(BubbletonError):
    """First fundamental form is singular at a grid point."""
