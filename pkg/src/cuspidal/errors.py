"""Exception hierarchy.

Three families map onto the CLI exit codes: :class:`DomainError` (bad input,
exit 1), :class:`CertificationFailed` (a mathematical check did not hold,
exit 2) and :class:`InvariantViolation` (an internal consistency check
tripped, exit 3).
"""


class CuspidalError(Exception):
    """Base class for every error raised by this package."""


class DomainError(CuspidalError, ValueError):
    """The caller supplied input outside an operation's domain."""


class InvariantViolation(CuspidalError, AssertionError):
    """An identity that must hold by construction failed."""


class CertificationFailed(CuspidalError):
    """A certification check failed; ``check`` names which one."""

    def __init__(self, check, detail=""):
        self.check = check
        self.detail = detail
        msg = f"certification check {check!r} failed"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


# -- exact algebra ----------------------------------------------------------

class NotDivisible(DomainError):
    """Polynomial division left a nonzero remainder."""

    def __init__(self, remainder):
        self.remainder = remainder
        super().__init__(f"not exactly divisible, remainder {remainder}")


class ZeroConstantTerm(DomainError):
    """A power series with vanishing constant term has no reciprocal."""


class PrecisionExhausted(CuspidalError):
    """A truncated series was read beyond its known coefficients."""


class DivisibilityFailed(InvariantViolation):
    """A division that is exact for every valid input left a remainder."""


# -- multiplicity sequences -------------------------------------------------

class EmptyInput(DomainError):
    pass


class InvalidNotation(DomainError):
    pass


class PaddingAmbiguous(DomainError):
    pass


class InvalidSequence(DomainError):
    """The entries do not form a multiplicity sequence of a cusp."""

    def __init__(self, entries, violations):
        self.entries = tuple(entries)
        self.violations = list(violations)
        detail = "; ".join(str(v) for v in self.violations)
        super().__init__(f"{self.entries} is not a multiplicity sequence: {detail}")


class IndexOutOfRange(DomainError, IndexError):
    pass


# -- branches ---------------------------------------------------------------

class ExpressionSyntaxError(DomainError):
    """Malformed branch expression; ``position`` is a 0-based column."""

    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position} in {text!r}")


class NonvanishingAtZero(DomainError):
    pass


# -- curves, invariants, topology, rendering --------------------------------

class InvalidParameters(DomainError):
    pass


class DegreeTooSmall(InvalidParameters):
    pass


class DegenerateProjection(DomainError):
    pass


class TooFewCusps(DomainError):
    pass


class UnsupportedFamily(DomainError):
    pass


class UnsupportedFormat(DomainError):
    pass
