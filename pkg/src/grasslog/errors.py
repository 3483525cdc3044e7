"""Exception hierarchy shared by every grasslog module."""


class GrasslogError(Exception):
    pass


class DomainError(GrasslogError, ValueError):
    """Argument outside the supported domain (weight, special parameter)."""


class CutError(DomainError):
    """Principal-branch value requested on the branch cut (1, inf)."""


class SizeError(GrasslogError, ValueError):
    """Problem size exceeds a factorial or dimension guard."""


class DegenerateError(GrasslogError, ArithmeticError):
    """A determinant that must be nonzero vanished.

    ``indices`` names the offending minor when known.
    """

    def __init__(self, message, indices=None):
        super().__init__(message)
        self.indices = tuple(indices) if indices is not None else None


class CrossRatioDegenerateError(DegenerateError):
    """A cross-ratio argument landed on 0, 1 or infinity."""


class SingularityError(GrasslogError, ArithmeticError):
    """Form evaluated on (or numerically at) a zero locus."""


class NonGenericError(GrasslogError, ValueError):
    """Zero loci of two linear forms coincide within tolerance."""
