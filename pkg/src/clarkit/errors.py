"""Exception hierarchy shared by all clarkit modules."""


class ClarkitError(Exception):
    """Base class for all structured clarkit failures."""


class ParseError(ClarkitError):
    """A text input (adjacency list, spiral file) could not be parsed."""


class ValidationError(ClarkitError):
    """An input graph is structurally unacceptable."""


class NotCubic(ValidationError):
    """A vertex does not have exactly three distinct neighbours."""


class NotThreeConnected(ValidationError):
    """The graph has a vertex cut of size at most two."""


class BadFaceSizes(ValidationError):
    """A traced face is neither a pentagon nor a hexagon."""


class WrongPentagonCount(ValidationError):
    """The number of pentagonal faces differs from twelve."""


class EulerViolation(ValidationError):
    """Face tracing does not satisfy n - e + f = 2 (not a sphere embedding)."""


class SpiralDoesNotClose(ClarkitError):
    """A face-size sequence cannot be wound up into a closed sphere."""


class NoSpiralFound(ClarkitError):
    """No unwinding of the graph succeeds from any start (n > 380 territory)."""


class NotAHexagon(ClarkitError):
    """A face id passed as a hexagon is actually a pentagon."""


class TooManyHexagons(ClarkitError):
    """Brute-force Clar oracle refused: hexagon count above the desk-scale guard."""


class NotMaximal(ClarkitError):
    """A fragment has a pentagonal adjoining face, so no hexagon extension exists."""


class NoTwoDegreeVertices(ClarkitError):
    """A boundary labeling was requested for a cycle without 2-degree vertices."""


class IncompatibleOrientation(ClarkitError):
    """Two patch templates cannot be pasted along the designated edges."""


class WrongOrder(ClarkitError):
    """An operation requiring n >= 60 was invoked on a smaller fullerene."""


class OutOfSupportedRange(ClarkitError):
    """Isomer enumeration was requested outside 20 <= n <= 120."""
