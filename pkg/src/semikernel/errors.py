"""Error types shared by every module in the package.

All domain errors derive from SemiringError so callers (and the CLI) can
distinguish them from programming errors. Names describe the violated
contract, not the operation that raised them.
"""


class SemiringError(Exception):
    """Base class for all domain errors raised by this package."""


class CarrierMismatch(SemiringError):
    """A value does not belong to the carrier of the active semiring."""


class NotIdempotent(SemiringError):
    """An order- or iteration-based operation was asked of a non-idempotent semiring."""


class NotSemifield(SemiringError):
    """Multiplicative inversion was asked of a semiring without inverses."""


class ZeroDivision(SemiringError):
    """Multiplicative inverse of the zero element."""


class StarDiverges(SemiringError):
    """The series one + a + a*a + ... does not stabilize."""


class NegativeInput(SemiringError):
    """Dequantization requires a nonnegative input."""


class ShapeMismatch(SemiringError):
    """Matrix or vector dimensions do not conform."""


class SemiringMismatch(SemiringError):
    """Operands belong to different semirings."""


class NonStabilizing(SemiringError):
    """An iterative solver hit its iteration budget without reaching a fixed point."""


class WeightOutOfCarrier(SemiringError):
    """A graph edge weight falls outside the target semiring's carrier."""


class NoPath(SemiringError):
    """Path reconstruction was asked for an unreachable node pair."""


class EmptyDomain(SemiringError):
    """A sampled function with no usable sample points."""


class EmptySubset(SemiringError):
    """An idempotent measure over the empty index set."""


class NotMaxPlus(SemiringError):
    """An operation defined only over the max-plus semiring."""


class GridMismatch(SemiringError):
    """Sampled functions or kernels with incompatible grids."""


class InvariantViolation(SemiringError):
    """A structural invariant failed (interval ordering, node range, nesting, trace cap)."""


class ParseError(SemiringError):
    """A text input failed to parse; carries 1-based line and column."""

    def __init__(self, line: int, col: int, reason: str):
        self.line = line
        self.col = col
        self.reason = reason
        super().__init__(f"line {line} col {col}: {reason}")
