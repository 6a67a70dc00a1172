"""Exception hierarchy shared across the package."""


class DirlapError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(DirlapError):
    pass


class NotHermitian(DirlapError):
    pass


class NoConvergence(DirlapError):
    pass


class InvalidComplex(DirlapError):
    """A complex failed validation; the message carries the diagnostics."""


class NotAFace(DirlapError):
    pass


class NotUpperAdjacent(DirlapError):
    pass


class NotLowerAdjacent(DirlapError):
    pass


class NotPseudoManifold(DirlapError):
    pass


class NotOrientable(DirlapError):
    pass


class ManifoldNotOriented(DirlapError):
    pass


class MissingRotation(DirlapError):
    pass


class UnstableStep(DirlapError):
    pass


class UnknownCase(DirlapError):
    pass


class TooSmall(DirlapError):
    pass


class ParseError(DirlapError):
    pass
