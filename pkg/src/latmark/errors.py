"""Exception hierarchy shared by the library and the CLI."""


class LatmarkError(Exception):
    """Base class for every error raised by latmark."""


class DimensionError(LatmarkError, ValueError):
    """Vectors or rows of incompatible length."""


class NotInLatticeError(LatmarkError, ValueError):
    """A vector (or a binomial's difference vector) is not a lattice element."""


class NotPrimitiveError(LatmarkError, ValueError):
    pass


class NotPositivelyGradedError(LatmarkError, ValueError):
    """The lattice contains a nonzero nonnegative vector."""


class NoPureElementsError(LatmarkError, ValueError):
    pass


class FiberTooLargeError(LatmarkError, RuntimeError):
    """A fiber enumeration exceeded the configured size cap."""


class ParseError(LatmarkError, ValueError):
    pass
