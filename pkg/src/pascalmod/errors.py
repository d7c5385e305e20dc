"""Exception hierarchy shared by every module of the package."""


class PascalModError(Exception):
    """Base class for all errors raised by :mod:`pascalmod`."""


class InvalidBaseError(PascalModError, ValueError):
    pass


class InvalidModulusError(PascalModError, ValueError):
    pass


class ShapeError(PascalModError, ValueError):
    pass


class DomainError(PascalModError, TypeError):
    """Operands live in different coefficient domains, or the domain is unsupported."""


class SingularMatrixError(PascalModError, ArithmeticError):
    pass


class NonUnimodularError(PascalModError, ArithmeticError):
    """Integer matrix whose determinant is not a unit of Z."""


class ParameterError(PascalModError, ValueError):
    pass


class DegreeMismatchError(PascalModError, ValueError):
    pass


class DegeneracyError(PascalModError, ArithmeticError):
    """Autosimilar seed with a vanishing leading principal minor."""

    def __init__(self, size, message=None):
        self.size = size
        super().__init__(message or f"leading principal minor of size {size} vanishes")


class ConjectureViolation(PascalModError):
    """A computed characteristic polynomial does not have the conjectured shape."""

    def __init__(self, message, witness=None):
        self.witness = witness or {}
        super().__init__(message)
