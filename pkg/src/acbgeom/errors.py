"""Exception hierarchy.

``ValidationError`` subclasses mark inputs that violate a mathematical
identity (the CLI maps them to exit status 2); the rest are usage errors.
"""


class GeometryError(Exception):
    """Base class for all package errors."""


class ValidationError(GeometryError):
    """An input violates a defining identity."""


class AntisymmetryViolation(ValidationError):
    pass


class JacobiViolation(ValidationError):
    pass


class ConstraintViolation(JacobiViolation):
    """Lee-parameter form of the Jacobi condition theta1*omega2 == theta2*omega1."""


class AxiomViolation(ValidationError):
    pass


class DimensionMismatch(GeometryError, ValueError):
    pass


class SingularMetric(GeometryError, ValueError):
    pass


class DegeneratePlane(GeometryError, ValueError):
    pass


class DegeneratePair(GeometryError, ValueError):
    pass


class EmptyGrid(GeometryError, ValueError):
    pass
