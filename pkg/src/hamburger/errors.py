"""Exception and warning classes shared across the package."""


class NumericalError(Exception):
    """Base class for numerical failures (CLI exit code 3)."""


class PoleProximity(NumericalError):
    """Argument lies within the guard radius of a pole."""


class DomainError(NumericalError, ValueError):
    """Argument outside the domain of the operation."""


class NonFiniteResult(NumericalError):
    """A computation produced NaN or infinity."""


class IllConditioned(NumericalError):
    pass


class ResidualTooLarge(NumericalError):
    pass


class SignalTooSmall(NumericalError):
    pass


class ContourFailure(NumericalError):
    pass


class TooManyClasses(NumericalError):
    pass


class NotFiniteCombination(NumericalError):
    """Measure is not a finite combination of T_{d,e} within the window."""


class InsufficientWindow(NumericalError):
    pass


class UnknownSuite(NumericalError, KeyError):
    pass


class NearDegenerate(UserWarning):
    """Parameter close to, but not within tolerance of, an integer."""


class OriginMismatch(UserWarning):
    """Origin atom differs from the one predicted by a decomposition."""
