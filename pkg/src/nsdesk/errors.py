"""Exception types shared across the engine."""

from __future__ import annotations


class NsdeskError(Exception):
    """Base class for all engine errors."""


class UnsupportedTerm(NsdeskError):
    """A term or predicate leaves the decidable fragment."""


class InvalidTerm(NsdeskError):
    """A term violates a construction invariant (bad sort, zero denominator class, ...)."""


class DivisionByZeroAt(NsdeskError):
    """A denominator vanishes at a concrete index."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"denominator vanishes at index {index}")


class UndecidedPartition(NsdeskError):
    """A level-2 class assignment could not be decided against the probe battery."""


class WitnessSearchExhausted(NsdeskError):
    """No standard witness for a finite conjunction was found within the bound."""

    def __init__(self, k: int, bound: int):
        self.k = k
        self.bound = bound
        super().__init__(f"no witness for conjunction of conditions 0..{k} within {bound} candidates")


class DiagonalOutsideFragment(NsdeskError):
    """The diagonal witness sequence does not fit a piecewise rational term."""


class SexprSyntaxError(NsdeskError):
    """Malformed s-expression input."""

    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class SortError(NsdeskError):
    """A variable or operand has an incompatible sort."""

    def __init__(self, variable, message=None):
        self.variable = variable
        super().__init__(message or f"sort error on {variable!r}")


class SignatureMismatch(NsdeskError):
    """A formula refers to relations/functions/sorts absent from the model."""


class SupportOutOfUniverse(NsdeskError):
    """A cylinder query touches indices outside a table-backed ultrafilter's universe."""


class IncompatibleUltrafilters(NsdeskError):
    """The extension-step compatibility precondition fails."""


class ExtensionInfeasible(NsdeskError):
    """The generated cylinder family lacks the finite intersection property."""


class InvalidTable(NsdeskError):
    """A raw membership table does not describe a cylinder ultrafilter."""
