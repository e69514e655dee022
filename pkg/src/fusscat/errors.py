"""Exception hierarchy shared by every fusscat module."""


class FusscatError(Exception):
    """Base class for all library errors."""


class DomainError(FusscatError, ValueError):
    """An argument lies outside the domain of a counting formula or map."""


class NotPeelable(FusscatError):
    """No innermost star could be found while peeling an up-set."""


class InternalInvariantBroken(FusscatError, AssertionError):
    """A structural law that must always hold was observed to fail."""


class CapExceeded(FusscatError):
    """The predicted size of an enumeration is above the configured cap."""


class IncompatibleGeometry(FusscatError, ValueError):
    """The polygon size is not of the form n(k-1)+2."""


class MalformedDissection(FusscatError, ValueError):
    """A dissection's face incidences are inconsistent."""


class ParseError(FusscatError, ValueError):
    """Input text is not well-formed JSON of the expected shape."""


class ValidationError(FusscatError, ValueError):
    """Input parsed but describes an invalid object."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)
