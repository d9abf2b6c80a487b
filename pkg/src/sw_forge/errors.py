"""Exception types shared across the package."""


class SwForgeError(Exception):
    """Base class for all domain errors raised by this package."""


class LoopEdgeError(SwForgeError):
    """An edge (v, v) was supplied; simple graphs have no loops."""


class IndexOutOfRangeError(SwForgeError):
    """A vertex index is outside 0..n-1."""


class MalformedGraph6Error(SwForgeError):
    """Input is not a valid short-form graph6 string."""


class TooLargeError(SwForgeError):
    """Input exceeds the size this operation supports."""


class DisconnectedError(SwForgeError):
    """Operation requires a connected graph."""


class EmptyTerminalsError(SwForgeError):
    """Terminal set must be non-empty."""


class BadKError(SwForgeError):
    """Subset size k must be at least 2."""


class BadSpecError(SwForgeError):
    """Nested-star parameters violate 1 <= a_1 < ... < a_r <= n-2."""


class NotPrimeError(SwForgeError):
    """Modulus base must be prime."""


class TooLargeModulusError(SwForgeError):
    """Residue modulus exceeds the supported per-variable range."""


class InfeasibleWidthError(SwForgeError):
    """Counting table would exceed the supported arithmetic/memory width."""


class IncompleteCoverageError(SwForgeError):
    """Scan cannot certify exceptions: some required vertex count is uncovered."""
