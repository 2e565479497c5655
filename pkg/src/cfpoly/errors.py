"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """Parameters violate an operation's precondition."""


class ResourceLimitError(RuntimeError):
    """A search exceeded its node budget before reaching an answer."""


class NotEulerianError(ValueError):
    """Graph has an odd-degree vertex or more than one non-trivial component."""


class NoUniversalCycleError(ValueError):
    """Divisibility condition r | C(c-1, r-1) fails, so no universal cycle exists."""


class UnsupportedParametersError(ValueError):
    """No construction is available for the requested parameters."""
