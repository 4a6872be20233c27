"""Exception hierarchy shared by every module."""


class LieError(Exception):
    """Base class for all library errors."""


class InvalidField(LieError, ValueError):
    pass


class FieldMismatch(LieError, ValueError):
    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class DimensionMismatch(LieError, ValueError):
    pass


class AntisymmetryViolation(LieError, ValueError):
    def __init__(self, i, j, message=None):
        super().__init__(message or f"bracket table not antisymmetric at ({i},{j})")
        self.i, self.j = i, j


class JacobiViolation(LieError, ValueError):
    """Raised with the first basis triple whose Jacobi defect is nonzero."""

    def __init__(self, i, j, k, defect):
        super().__init__(f"Jacobi identity fails on basis triple ({i},{j},{k}); defect {defect}")
        self.i, self.j, self.k = i, j, k
        self.defect = tuple(defect)


class NotASubalgebra(LieError, ValueError):
    pass


class NotAnIdeal(LieError, ValueError):
    pass


class NotNilpotent(LieError, ValueError):
    pass


class NotTriangulable(LieError, ValueError):
    pass


class CapExceeded(LieError):
    """An exhaustive computation would exceed its configured budget."""

    def __init__(self, what, estimate, cap):
        super().__init__(f"{what}: estimate {estimate} exceeds cap {cap}")
        self.what = what
        self.estimate = estimate
        self.cap = cap


class Unsupported(LieError):
    """No complete algorithm is shipped for this input (typically over Q)."""


class UnknownProperty(LieError, KeyError):
    def __str__(self):
        return f"unknown property {self.args[0]!r}"


# catalog construction errors

class CatalogError(LieError, ValueError):
    pass


class AlphaEqualsOne(CatalogError):
    pass


class ReducibleAction(CatalogError):
    pass


class CharMismatch(CatalogError):
    pass


class BadP(CatalogError):
    pass


# file format errors

class ParseError(LieError, ValueError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.message = message


class LieSyntaxError(ParseError):
    pass


class UnknownBasisName(ParseError):
    pass


class UpperTriangleViolation(ParseError):
    pass
