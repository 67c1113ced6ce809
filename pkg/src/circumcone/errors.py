"""Exception types raised by circumcone."""


class CircumconeError(ValueError):
    """Base class for all library errors."""


class DimensionError(CircumconeError):
    """Inputs have inconsistent or unsupported shapes."""


class InvariantError(CircumconeError):
    """A domain invariant (zero generator, unequal norms, ...) is violated."""


class InfeasiblePointError(CircumconeError):
    """The given point lies outside the feasible region beyond tolerance."""


class ResamplingError(CircumconeError):
    """A random instance generator ran out of its rejection budget."""
