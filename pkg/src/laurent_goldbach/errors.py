"""Exception hierarchy.

Every error raised by the package derives from :class:`LaurentGoldbachError`.
The CLI maps the three families below onto exit codes 1, 2 and 3.
"""


class LaurentGoldbachError(Exception):
    """Base class for all package errors."""


# -- bad input (exit 1 in the CLI) -------------------------------------------

class ParseError(LaurentGoldbachError, ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


# -- precondition violations (exit 2) ----------------------------------------

class PreconditionViolation(LaurentGoldbachError, ValueError):
    pass


class NegativeCoefficient(PreconditionViolation):
    pass


class ZeroPolynomial(PreconditionViolation):
    pass


class TooFewTerms(PreconditionViolation):
    pass


class TooShort(PreconditionViolation):
    pass


class Underflow(PreconditionViolation):
    pass


class ShapeMismatch(PreconditionViolation):
    pass


class AmountTooLarge(PreconditionViolation):
    pass


class ValueMismatch(PreconditionViolation):
    pass


class NotCovered(PreconditionViolation):
    pass


class SupportTooSmall(PreconditionViolation):
    pass


class SizeLimit(PreconditionViolation):
    pass


class WindowViolation(PreconditionViolation):
    pass


class ExponentOverflow(PreconditionViolation):
    pass


# -- internal invariant failures (exit 3) -------------------------------------

class InvariantFailure(LaurentGoldbachError, AssertionError):
    """A construction step produced something it should not have: a bug."""


class RepairFailed(InvariantFailure):
    pass
