"""Exception hierarchy shared by every engine."""

from __future__ import annotations


class GallaiError(Exception):
    """Base class for all library errors."""


class InputError(GallaiError, ValueError):
    """Malformed user input (point sets, colorings, files)."""


class EmptySet(InputError):
    pass


class ZeroScale(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class MixedRadicand(GallaiError, ArithmeticError):
    """Arithmetic between Q(sqrt d) and Q(sqrt d') with d != d'."""


class NotSquarefree(InputError):
    pass


class DegenerateConfiguration(InputError):
    """The points of S lie in a proper affine hyperplane of the ambient space."""


class InexactEvaluation(GallaiError):
    """A coloring cannot be evaluated exactly at the requested point."""


class BudgetExhausted(GallaiError):
    """A bounded search ran out of budget.

    This never means that no witness exists, only that none was found within
    the supplied bounds.
    """


class ColoringSyntaxError(InputError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class UnknownIdentifier(InputError):
    pass


class NonIntegerMod(GallaiError, ArithmeticError):
    pass


class MalformedImage(InputError):
    pass


class TooManyColors(InputError):
    pass


class EmptyPayload(GallaiError):
    pass
