"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(AlgebraError, ValueError):
    """Malformed input: bad ring, non-homogeneous ideal, invalid graph, ..."""


class PolynomialSyntaxError(ValidationError):
    """Polynomial text that does not follow the grammar.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class RingMismatchError(ValidationError):
    pass


class UndefinedProductError(AlgebraError, ValueError):
    """Coordinate-wise product of two points with all products zero."""


class HypothesisError(AlgebraError):
    """A precondition of a closed-form result does not hold for the input."""


class ResourceCapExceeded(AlgebraError, RuntimeError):
    """A configured computation limit was hit.

    This is not a mathematical failure; the computation is simply larger
    than what the current limits allow.
    """
