"""Exception types shared across the package."""


class HypstarError(Exception):
    """Base class for all package errors."""


class InvalidC(HypstarError):
    """c is a nonpositive integer, so the series coefficients are undefined."""


class InvalidParams(HypstarError):
    """Parameter combination outside a checker's hypotheses."""


class PrecondFailed(HypstarError):
    """A standing assumption of a specialized checker does not hold."""


class RadiusExceeded(HypstarError):
    """Evaluation point lies outside the configured disk radius."""


class NoConvergence(HypstarError):
    """Series did not settle within the term budget."""


class ZeroOfF(HypstarError):
    """F(z) vanished; the logarithmic derivative is undefined there."""


class NonFinite(HypstarError):
    """A residual returned NaN or infinity inside the search range."""
