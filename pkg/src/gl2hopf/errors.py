"""Exception types shared across the package."""


class UsageError(ValueError):
    """Bad arguments: unknown ring, missing generator image, mismatched carriers."""


class UnsupportedRingError(UsageError):
    """The operation needs a coefficient ring with unique factorisation."""


class NotDualizableError(ValueError):
    """The structure matrix has a non-invertible determinant."""


class NotClosedError(ValueError):
    """A proposed subcomodule or block is not closed under the coaction."""


class NotDiagonalError(ValueError):
    """Weights were requested from a torus matrix that is not diagonal."""
