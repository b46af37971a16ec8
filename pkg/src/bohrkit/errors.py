"""Exception hierarchy shared by all modules."""


class BohrError(Exception):
    """Base class for every error raised by bohrkit."""


class DomainError(BohrError, ValueError):
    """An argument lies outside the domain of the operation (e.g. r not in [0, 1))."""


class ConfigurationError(BohrError, ValueError):
    """A sequence, instance or probe is misconfigured."""


class UnsupportedError(ConfigurationError):
    """A parameter value has no implementation (e.g. alpha outside {1, 2, 3})."""


class PreconditionError(BohrError, ValueError):
    """A mathematical precondition of a theorem is violated."""


class NonConvergentError(BohrError, ArithmeticError):
    """A series could not be certified to converge to the requested tolerance."""


class NoRootError(BohrError):
    """The residual has no sign change on the scan grid."""


class DegenerateError(NoRootError):
    """The problem is well posed but its radius collapses to 0."""
