"""Error classes raised by the engine.

Each class carries an exit code used by the command line driver, grouped by
pipeline stage: 2 parse/schema, 3 primitivity, 4 window language, 5 complex
construction, 6 cohomology/limits, 7 ring/Chern, 8 quotients, 9 frequency,
10 input/output.
"""


class TilingError(Exception):
    exit_code = 1


# --- rule parsing / validation -------------------------------------------

class SchemaError(TilingError):
    """Input object does not match the rule schema."""
    exit_code = 2


class RangeError(TilingError):
    """A numeric field is outside its allowed range."""
    exit_code = 2


class LengthError(TilingError):
    """A table row or list has the wrong length."""
    exit_code = 2


class DimensionOverflow(TilingError):
    """expansion**dimension exceeds the implementation limit."""
    exit_code = 2


class ExpansionMismatch(TilingError):
    """Product factors have different expansion constants."""
    exit_code = 2


class IncompatibleInvolution(TilingError):
    """A color/axis involution is not a symmetry of the rule."""
    exit_code = 8


class NotPrimitive(TilingError):
    """The substitution matrix is not primitive."""
    exit_code = 3


# --- window language ------------------------------------------------------

class MissingShape(TilingError):
    """A window shape required by a construction was not enumerated."""
    exit_code = 4


# --- complex construction -------------------------------------------------

class IllegalFace(TilingError):
    """A face descriptor is inconsistent with its cell."""
    exit_code = 5


class BorderNotAsserted(TilingError):
    """The uncollared complex needs rule.forces_border asserted true."""
    exit_code = 5


class ChainMapViolation(TilingError):
    """The induced cell map does not commute with the boundary."""
    exit_code = 5


# --- quotients ------------------------------------------------------------

class NonCommuting(TilingError):
    """An involution does not commute with boundary or substitution."""
    exit_code = 8


class OrientationReversingFixedCell(TilingError):
    """A fixed cell is orientation reversing and carries no fold data."""
    exit_code = 8


class UnsupportedQuotientRing(TilingError):
    """Cup products over folded cells need all boundary maps to vanish."""
    exit_code = 8


# --- cohomology / limits --------------------------------------------------

class NotCochainMap(TilingError):
    """A matrix does not preserve cocycles/coboundaries as claimed."""
    exit_code = 6


class NotACocycle(TilingError):
    """A vector expected to be a cocycle is not."""
    exit_code = 6


# --- ring / Chern ---------------------------------------------------------

class WrongDimension(TilingError):
    """The operation is only defined in a specific dimension."""
    exit_code = 7


# --- frequency ------------------------------------------------------------

class NotPrimitiveSpectrum(TilingError):
    """The Perron eigenspace is not one-dimensional."""
    exit_code = 9
