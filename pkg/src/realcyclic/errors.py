"""Exception hierarchy.

Input problems derive from ``InputError`` (CLI exit code 2). A failed check of
something that is a theorem raises ``TheoremViolation`` (exit code 3); it should
never fire.
"""


class RealCyclicError(Exception):
    pass


class InputError(RealCyclicError, ValueError):
    pass


class InvariantViolation(InputError):
    """A value does not satisfy the invariants of its type."""


class NotAnInvolution(InputError):
    pass


class SizeLimitExceeded(InputError):
    pass


class IncompatibleEigenspaceData(InputError):
    def __init__(self, condition: str, message: str):
        super().__init__(f"eigenspace condition {condition!r} fails: {message}")
        self.condition = condition


class WrongParity(InputError):
    pass


class DegenerateParameter(InputError):
    pass


class NotAFieldExtension(InputError):
    pass


class UnsupportedShape(InputError):
    pass


class CoprimalityError(InputError):
    pass


class RealityError(InputError):
    pass


class ParseError(InputError):
    pass


class TheoremViolation(RealCyclicError, RuntimeError):
    """An identity that is proven to hold came out false."""
