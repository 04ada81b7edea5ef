"""Exception types shared across the package."""


class ScenarioError(ValueError):
    """A scenario document or field failed validation.

    ``field`` names the offending field when known.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class WindExceedsAirspeedError(ValueError):
    """The aircraft cannot hold the requested ground track in this wind."""


class UnsupportedConfigurationError(ValueError):
    """A solver was asked for a configuration it does not handle."""


class UnreachableTargetError(ValueError):
    """A trace target lies outside the reachable region."""


class UndefinedDirectionError(ValueError):
    """No usable descent direction exists at a point (no finite stencil)."""
