"""Exceptions raised by the toolkit."""


class ParameterOverflow(ValueError):
    """Parameters push a closed form past the floating-point range."""


class DegenerateTemperature(ValueError):
    """T = 0 was passed where only T > 0 makes sense (use the alpha=0 state)."""


class ColdVacuumLimit(ValueError):
    """alpha = 0 has no finite temperature image other than T = 0."""


class NonConvergence(RuntimeError):
    """Quadrature refinement stopped before reaching the requested tolerance."""


class GridTooCoarse(ValueError):
    """A coordinate grid is too coarse to resolve the momentum distribution."""
