"""Exception hierarchy.

Every error raised by the library derives from :class:`InterfaceError` so
callers (and the command line front end) can map failures to exit codes.
"""


class InterfaceError(Exception):
    """Base class for all library errors."""


class InvalidTable(InterfaceError, ValueError):
    """A table violates the frequency-matrix invariants."""


class ZeroTotal(InvalidTable):
    """All counts are zero."""


class ZeroRow(InvalidTable):
    """A row sum is zero, so row normalization is undefined."""


class ZeroColumn(InvalidTable):
    """A column sum is zero, so the correlation is undefined."""


class NotCanonical(InvalidTable):
    """The table has a negative determinant (anti-causal orientation)."""


class DegenerateInterface(InterfaceError):
    """The confusion weight is zero, so the confusion matrix is undefined."""


class DiagonalTable(DegenerateInterface):
    """The point (1, 1) leaves the confusion distribution undefined."""


class DegenerateGeometry(InterfaceError):
    """The operation needs a regular hyperbola arc."""


class OutOfRange(InterfaceError, ValueError):
    """A coefficient lies outside the valid interval of the curve."""


class SigmaOutOfRange(OutOfRange):
    """A confusion distribution lies outside ``[r10, r00] x [r01, r11]``."""


class OffCurve(OutOfRange):
    """A coefficient pair does not satisfy the determinant-zero condition."""
