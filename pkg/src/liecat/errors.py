"""Exception hierarchy. Every domain error derives from :class:`LiecatError`."""


class LiecatError(Exception):
    """Base class for all liecat domain errors."""


class DivisionByZero(LiecatError, ZeroDivisionError):
    pass


class FieldMismatch(LiecatError):
    pass


class CapacityExceeded(LiecatError):
    pass


class DegreeOverflow(LiecatError):
    pass


class ContextMismatch(LiecatError):
    pass


class ZeroScale(LiecatError):
    pass


class BadSpec(LiecatError):
    pass


class NotLinear(LiecatError):
    pass


class Singular(LiecatError):
    pass


class NotInvertible(LiecatError):
    pass


class ShapeMismatch(LiecatError):
    pass


class UnknownGenerator(LiecatError):
    pass


class ExprSyntaxError(LiecatError):
    """Malformed expression text; ``pos`` is the 0-based offending offset."""

    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


class UnknownSuite(LiecatError):
    pass


class ConfigInvalid(LiecatError):
    pass
