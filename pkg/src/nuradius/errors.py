"""Exception types raised by the toolkit."""


class NuRadiusError(ValueError):
    """Base class for all toolkit errors."""


class DimensionMismatch(NuRadiusError):
    pass


class ZeroVector(NuRadiusError):
    pass


class DegenerateBall(NuRadiusError):
    """The vertex set does not span the ambient space."""


class EnumerationTooLarge(NuRadiusError):
    """Facet enumeration was requested beyond desk scale."""


class ZeroOperator(NuRadiusError):
    pass


class ZeroDirection(NuRadiusError):
    pass


class NotUnitVector(NuRadiusError):
    pass


class DegenerateRecovery(NuRadiusError):
    """Entry recovery is impossible (Euclidean exponent p = 2)."""


class InconsistentOracle(NuRadiusError):
    """The evaluation oracle is not consistent with a linear operator."""
