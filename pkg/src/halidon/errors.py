"""Domain errors shared across the package."""


class HalidonError(Exception):
    """Base class for every domain error raised by this package."""


class NotUnit(HalidonError):
    """An element that was required to be invertible shares a factor with n."""


class EvenModulus(HalidonError):
    """The operation is only defined for odd moduli."""


class MismatchedRing(HalidonError):
    """Two operands live over different ring structures."""


class NotIdempotentSpectrum(HalidonError):
    """A spectrum entry fails x*x = x mod n."""


class TooLarge(HalidonError):
    """Exhaustive enumeration was requested beyond the size guard."""


class InvalidStructure(HalidonError):
    """(n, m, omega) is not a halidon structure."""


class ReconstructionMismatch(HalidonError):
    """The spectral factorization of a circulant failed to reproduce it."""


class InvalidTable(HalidonError):
    """A multiplication table is not a valid group table."""


class OrderNotInvertible(HalidonError):
    """The group order shares a factor with the modulus."""


class NotProjection(HalidonError):
    """A matrix that was required to be idempotent is not."""
