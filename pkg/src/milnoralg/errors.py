"""Exception hierarchy shared by all modules."""


class MilnoralgError(Exception):
    """Base class for all package errors."""


class ParseError(MilnoralgError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PreconditionError(MilnoralgError):
    """An operation was called outside its stated domain."""


class ResourceLimitError(MilnoralgError):
    """The S-pair queue exceeded the configured bound; input exceeds desk scale."""


class GenericityFailure(MilnoralgError):
    """Randomized genericity draws kept disagreeing or degenerating."""


class NonIsolatedSingularities(PreconditionError):
    """The singular scheme has positive dimension where isolated points were required."""


class NonZeroDimensionalFiber(MilnoralgError):
    """A gradient-map fiber came out positive dimensional; the target was not generic."""


class NotFreeCompatible(MilnoralgError):
    """The Hilbert polynomial is not that of a free divisor of the given degree."""


class DegenerateTarget(MilnoralgError):
    """A target point could not be normalized for the triangular preimage solve."""


class NotGeneric(MilnoralgError):
    """An arrangement labelled generic has four planes through a point."""


class ChartFailure(MilnoralgError):
    """Singular points escaped to the line at infinity of the chosen affine chart."""
