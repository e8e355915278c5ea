"""Exception types shared across the package."""


class GeoStretchError(Exception):
    """Base class for all package-specific errors."""


class DomainError(GeoStretchError):
    """A point lies outside a model's domain; the message names the coordinate."""


class ParameterError(GeoStretchError):
    """Invalid model parameters or rescaling factors."""


class CapabilityError(GeoStretchError):
    """A derivative order beyond what the model's jet oracle provides."""


class ShapeError(GeoStretchError):
    """Dimension mismatch between vectors, matrices or points."""


class DegeneracyError(GeoStretchError):
    """Zero vector, equilibrium point, or an ill-defined tangent plane."""


class RankError(GeoStretchError):
    """Linearly dependent vectors where an independent family is required."""


class NumericalConsistencyError(GeoStretchError):
    """A numerically impossible value, e.g. a Gram determinant below round-off."""


class LocationFailure(GeoStretchError):
    """No interior extremum found on a search slice.

    Carries the coarse grid profile so the caller can inspect the objective.
    """

    def __init__(self, message, grid=None, values=None):
        super().__init__(message)
        self.grid = grid
        self.values = values


class IntegrationFailure(GeoStretchError):
    """Integration aborted (domain exit or step collapse); keeps the last state."""

    def __init__(self, message, t=None, state=None):
        super().__init__(message)
        self.t = t
        self.state = state


class FixtureError(GeoStretchError):
    """A bundled reference dataset failed its checksum."""


class ConfigError(GeoStretchError):
    """Malformed run configuration; the message names the offending key."""
