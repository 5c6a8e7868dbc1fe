"""Exception hierarchy shared by all modules."""


class ShiftlabError(Exception):
    """Base class for library errors."""


class VertexOutOfRange(ShiftlabError, ValueError):
    pass


class UnsortableFace(ShiftlabError, ValueError):
    pass


class FaceNotInComplex(ShiftlabError, ValueError):
    pass


class BadParameters(ShiftlabError, ValueError):
    pass


class NotAFacet(ShiftlabError, ValueError):
    pass


class SizeMismatch(ShiftlabError, ValueError):
    pass


class DimensionMismatch(ShiftlabError, ValueError):
    pass


class NotShifted(ShiftlabError, ValueError):
    pass


class NotNearCone(ShiftlabError, ValueError):
    pass


class ZeroWeight(ShiftlabError, ValueError):
    pass


class VertexMissing(ShiftlabError, ValueError):
    pass


class NotAdmissible(ShiftlabError, ValueError):
    pass


class GenericInstability(ShiftlabError, RuntimeError):
    """Two seeded runs kept disagreeing, or the random matrix was degenerate."""


class ClosureViolation(GenericInstability):
    """A shifted result was not closed under inclusion (a non-generic draw)."""


class Disagreement(ShiftlabError, AssertionError):
    """Two independent oracles that must agree did not."""


class BudgetExhausted(ShiftlabError, RuntimeError):
    pass


class ParseError(ShiftlabError, ValueError):
    pass
