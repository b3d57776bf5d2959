"""Exception hierarchy.

Every domain error derives from :class:`HomcycleError`; the CLI maps those to
exit code 1 and prints ``error: <ClassName>: <message>``.
"""


class HomcycleError(Exception):
    """Base class for domain errors; ``line`` is set for file-parsing failures."""

    def __init__(self, message="", line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ComplexError(HomcycleError):
    pass


class DuplicateSimplex(ComplexError):
    pass


class BadArity(ComplexError):
    pass


class BadDimension(HomcycleError):
    pass


class NonManifold(ComplexError):
    pass


class DimensionMismatch(HomcycleError):
    pass


class HomologyError(HomcycleError):
    pass


class NotACycle(HomologyError):
    pass


class NotIndependent(HomologyError):
    pass


class IncompleteBasis(HomologyError):
    """Supplied cycles are independent but do not span the homology group."""


class NotSimple(HomologyError):
    pass


class NotSimpleBasis(NotSimple):
    pass


class EmptyLocalSide(HomcycleError):
    pass


class NotAPath(HomcycleError):
    pass


class BudgetExceeded(HomcycleError):
    pass


class IndexZero(HomcycleError):
    pass


class Unreachable(HomcycleError):
    pass


class BadParams(HomcycleError):
    pass


class ParseError(HomcycleError):
    pass
