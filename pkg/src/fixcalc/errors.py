"""Exception hierarchy shared by every fixcalc module."""


class FixcalcError(Exception):
    """Base class; the CLI maps these to exit status 2."""


class UniverseMismatchError(FixcalcError, ValueError):
    pass


class SizeCapError(FixcalcError, ValueError):
    pass


class SubsetSyntaxError(FixcalcError, ValueError):
    pass


class MissingEntryError(FixcalcError, KeyError):
    pass


class NotMonotoneError(FixcalcError):
    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class NonConvergenceError(FixcalcError):
    """Iteration hit its step cap. ``trace`` holds every iterate visited."""

    def __init__(self, message, trace=()):
        super().__init__(message)
        self.trace = tuple(trace)


class DomainError(FixcalcError, ValueError):
    pass


class ConvergenceError(FixcalcError):
    """A real-valued solver gave up.

    ``reason`` is one of ``"non-convergence"``, ``"derivative-too-small"``
    or ``"left-domain"``; ``trace`` lists the iterates.
    """

    def __init__(self, message, reason, trace=()):
        super().__init__(message)
        self.reason = reason
        self.trace = tuple(trace)
