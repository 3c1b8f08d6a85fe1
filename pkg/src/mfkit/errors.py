"""Exceptions shared across the package."""


class GeometryError(Exception):
    """Base class for every domain error raised by this package."""


class DimensionMismatch(GeometryError):
    """Operands live in spaces of different dimensions."""


class SingularMatrix(GeometryError):
    """A matrix required to be invertible is not."""


class DegenerateFrame(GeometryError):
    """A point set fails the general-position requirement of a frame."""


class DegenerateConfiguration(GeometryError):
    """Input points violate a genericity precondition; carries a witness."""


class IndexOutOfRange(GeometryError, IndexError):
    """A variable index does not exist."""


class InvalidMultiplicity(GeometryError):
    """Vanishing order outside the admissible range for the degree."""


class BaseLocusPoint(GeometryError):
    """Every member of the linear system vanishes at the given point."""


class IndeterminacyPoint(GeometryError):
    """The coordinatewise inversion is undefined at the given point."""


class CenterPoint(GeometryError):
    """Cannot project a point from itself."""


class MalformedTree(GeometryError):
    """Edge set is disconnected or contains a cycle."""


class UnstableTree(GeometryError):
    """Operation requires a stable tree."""


class GenericityFailure(GeometryError):
    """Rejection sampling exhausted its retry budget."""


class UnknownSuite(GeometryError):
    """No verification suite registered under the requested name."""
