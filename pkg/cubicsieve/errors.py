from __future__ import annotations


class SieveError(ValueError):
    """Base class for mathematical failures raised by the pipeline."""


class InsufficientGammaError(SieveError):
    """Not enough recurrence coefficients for the requested depth."""


class TableTooShortError(SieveError):
    """A moment table does not reach the index an operation needs."""


class NonRationalRatioError(SieveError):
    """A determinant ratio kept a sqrt(2) part; points at a moment bug."""


class ZeroDeterminantError(SieveError):
    """A Hankel determinant vanished where positivity was expected."""


class ChainSequenceViolation(SieveError):
    """A chain-sequence parameter left the open interval (0, 1)."""


class HypothesisViolation(SieveError):
    """Recurrence coefficients do not follow the cubic pattern the mapping needs."""


class DomainError(SieveError):
    """A weight was evaluated outside its open support."""


class QuadratureError(SieveError):
    """The oracle could not reach the requested tolerance within its budget."""


class PositivityError(SieveError):
    """A quantity the positive-definite theory requires to be positive is not."""


class ConfigError(ValueError):
    """A configuration file or override could not be used."""
