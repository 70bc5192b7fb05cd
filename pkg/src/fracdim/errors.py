"""Exception hierarchy shared by the library and the CLI."""


class FracdimError(Exception):
    """Base class for all errors raised by :mod:`fracdim`."""


class InputError(FracdimError, ValueError):
    """Malformed or out-of-range input (bad vertex, bad file, unknown family)."""


class PreconditionError(FracdimError, ValueError):
    """An operation was called outside the hypotheses it is defined for."""


class CapacityError(FracdimError):
    """Input exceeds the documented desk-scale limit of an exhaustive search."""


class InconsistencyError(FracdimError, AssertionError):
    """An internal cross-check failed (e.g. a twin class with no valid type)."""


class TheoremViolation(FracdimError, AssertionError):
    """A computed quantity contradicts a proved identity or bound."""


class InfeasibleError(FracdimError):
    """A covering LP has an empty row and therefore no feasible point."""


class CertificateError(FracdimError, AssertionError):
    """Solver output failed its own primal/dual certificate check."""
