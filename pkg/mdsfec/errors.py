"""Exception hierarchy shared by every mdsfec module."""

from __future__ import annotations


class MdsFecError(Exception):
    """Base class for all errors raised by mdsfec."""


# ── Field arithmetic ─────────────────────────────────────────────


class FieldMismatchError(MdsFecError, TypeError):
    """Operands belong to different fields."""


class FieldRangeError(MdsFecError, ValueError):
    """A canonical integer is outside [0, p^beta)."""


class FieldDivisionError(MdsFecError, ZeroDivisionError):
    """Inversion of the zero element."""


class NotPrimeError(MdsFecError, ValueError):
    """A characteristic that is not prime."""


class ModulusError(MdsFecError, ValueError):
    """A modulus that is not monic, of the wrong degree, or reducible."""


# ── Field search ─────────────────────────────────────────────────


class NoOrderError(MdsFecError, ValueError):
    """gcd(a, m) != 1, so a has no multiplicative order mod m."""


class CharacteristicError(MdsFecError, ValueError):
    """The characteristic divides the length; no n-th root of unity exists."""


class NoRootError(MdsFecError, ValueError):
    """n does not divide p^beta - 1 in the given field."""


# ── Codes ────────────────────────────────────────────────────────


class InvalidStepError(MdsFecError, ValueError):
    """The row step k is not coprime to n."""


class CodeRangeError(MdsFecError, ValueError):
    """A code parameter outside its admissible range."""


class EvaluationPointsError(MdsFecError, ValueError):
    """Vandermonde evaluation points repeated or zero."""


class LengthMismatchError(MdsFecError, ValueError):
    """A vector of the wrong length for the operation."""


class DescriptorError(MdsFecError, ValueError):
    """Malformed code descriptor text."""


# ── Streams and planning ─────────────────────────────────────────


class StreamError(MdsFecError, ValueError):
    """Unparseable symbol in an input stream."""


class PaddingError(MdsFecError, ValueError):
    """The final block of a symbol stream is short."""


class RateError(MdsFecError, ValueError):
    """A rate or rate window outside (0, 1)."""


class OracleLimitError(MdsFecError, ValueError):
    """A brute-force computation larger than the configured guard."""
