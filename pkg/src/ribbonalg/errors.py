"""Exception hierarchy.

Every library error carries a stable string ``code``; the CLI maps the three
families below onto exit codes 2, 3 and 4.
"""


class RibbonError(Exception):
    code = "error"

    def __init__(self, message="", *, location=None):
        super().__init__(message)
        self.location = location


class InputError(RibbonError, ValueError):
    """Malformed text or JSON input (exit code 2)."""

    code = "parse-error"


class ParseError(InputError):
    code = "syntax-error"

    def __init__(self, message, *, offset, expected=(), text=None):
        super().__init__(message, location={"offset": offset})
        self.offset = offset
        self.expected = tuple(sorted(expected))
        self.text = text


class SchemaError(InputError):
    code = "schema-error"


class PreconditionError(RibbonError, ValueError):
    """A mathematical precondition does not hold (exit code 3)."""

    code = "precondition-violated"


class DivisionByZero(PreconditionError, ZeroDivisionError):
    code = "division-by-zero"


class UndefinedOrder(PreconditionError):
    code = "undefined-order"


class OrderMismatch(PreconditionError):
    code = "order-mismatch"


class OrderTooSmall(PreconditionError):
    code = "order-too-small"


class WrongOrder(PreconditionError):
    code = "wrong-order"


class NonUnit(PreconditionError):
    code = "non-unit"


class NotDivisibleByT(PreconditionError):
    code = "not-divisible-by-t"


class CharacterNotOne(PreconditionError):
    code = "character-not-one"


class CoverMismatch(PreconditionError):
    code = "cover-mismatch"


class RegularityError(PreconditionError):
    code = "regularity-violated"


class PointPosition(PreconditionError):
    code = "point-position"


class KernelMembership(PreconditionError):
    code = "kernel-membership"


class InvariantViolation(RibbonError, AssertionError):
    """A property guaranteed by theory failed to hold (exit code 4)."""

    code = "internal-invariant-violated"
