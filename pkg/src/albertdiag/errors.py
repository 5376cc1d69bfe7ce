"""Exception hierarchy for albertdiag."""


class AlbertError(Exception):
    """Base class for all errors raised by this package."""


class MismatchedAlgebra(AlbertError, ValueError):
    """Operands belong to different algebras (compact vs split)."""


class NullElement(AlbertError, ZeroDivisionError):
    """An element with (numerically) zero norm was inverted or normalized."""


class HermiticityViolation(AlbertError, ArithmeticError):
    """A product that must be Hermitian came out non-Hermitian."""


class SplitUnsupported(AlbertError, ValueError):
    """The operation is only defined over the compact octonions."""


class CompactUnsupported(AlbertError, ValueError):
    """The operation is only defined over the split octonions."""


class InvalidGenerator(AlbertError, ValueError):
    """Generator data fails its group-membership invariants."""


class NotImaginary(InvalidGenerator):
    pass


class NotUnit(InvalidGenerator):
    pass


class DiagonalizationError(AlbertError, ArithmeticError):
    """A pipeline step could not be carried out."""


class X1NotReal(DiagonalizationError):
    pass


class NotComplex(DiagonalizationError):
    pass


class NoConvergence(DiagonalizationError):
    pass
