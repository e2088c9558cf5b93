"""Typed exceptions shared across the package."""


class ConformalHeatError(Exception):
    """Base class for all library errors."""


class DomainError(ConformalHeatError, ValueError):
    """An argument lies outside the mathematical domain of the routine."""


class SeriesDivergenceError(ConformalHeatError, ValueError):
    """The requested series does not converge (e.g. theta with Im tau <= 0)."""


class InvalidRegimeError(ConformalHeatError, ValueError):
    """The operation is not defined in this parameter regime.

    Kernel formulas need Re z > 0.  On the line Re z = 0 the semigroup is
    still a bounded (unitary) operator but has no pointwise integral kernel,
    so those applications must go through the spectral route instead.
    """


class UnboundedExponentError(InvalidRegimeError):
    """The requested exponent generates an unbounded operator on L2."""


class GridAlignmentError(ConformalHeatError, ValueError):
    """A discrete shift does not land on the sample grid."""


class FieldFormatError(ConformalHeatError, ValueError):
    """A field file or point table could not be parsed."""
