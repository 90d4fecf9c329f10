"""Exception types shared by the package.

Two families matter to callers (and to the CLI exit codes):
``ValidationError`` for malformed or out-of-domain input, and
``ContractViolation`` for a mathematical invariant that failed at run time.
"""

from __future__ import annotations


class QPairingError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(QPairingError, ValueError):
    """Input does not satisfy an operation's preconditions."""


class ContractViolation(QPairingError, ArithmeticError):
    """A computed quantity broke an identity that must hold exactly."""


class NonExpandablePole(ValidationError):
    """A denominator factor is not a pure multiple of the expansion variable."""


class InvalidChamber(ValidationError):
    """A chamber vector lies on the hyperplane of some denominator form."""


class PerturbationRequired(ValidationError):
    """The exponent sits on a cone wall and the perturbation cannot break the tie."""


class StrictlySemistableError(ValidationError):
    """The regular pairing formula was requested for a model with a flagged component."""


class CriticalValueError(ValidationError):
    """The shift equals the moment value of some fixed component."""


class DegreeMismatch(ValidationError):
    """Degrees of the supplied classes do not add up to the required total."""
