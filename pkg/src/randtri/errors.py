"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain where a quantity is defined."""


class DegenerateRegion(DomainError):
    """The region has zero (or non-finite) area."""


class RegionSpecError(DomainError):
    """A textual region description could not be parsed."""


class NumericalFailure(RuntimeError):
    """Base class for failures of a numerical method (not of the inputs)."""


class QuadratureError(NumericalFailure):
    """Adaptive quadrature could not reach its tolerance within the panel budget."""


class ConsistencyError(NumericalFailure):
    """Two routes that must agree produced different answers."""


class RejectionBudgetExceeded(NumericalFailure):
    """Rejection sampling accepted too few candidates to be practical."""
