"""Exception hierarchy shared by every holoconn module."""

from __future__ import annotations


class HoloconnError(ValueError):
    """Base class for all errors raised by holoconn."""


# expression kernel

class PoleCreated(HoloconnError):
    """A substitution made a denominator identically zero."""


class PoleAtBase(HoloconnError):
    """A denominator vanishes at the requested base point."""


# connection calculus

class NotTorsionFree(HoloconnError):
    """An operation that presumes a torsion-free connection got one with torsion."""


class ChartMismatch(HoloconnError):
    """Two objects live on charts with different variable names."""


class NotSymmetric(HoloconnError):
    """A difference tensor is not symmetric in its two lower slots."""


# families

class DependsOnFirstVariable(HoloconnError):
    """Elliptic-family data must be functions of the second chart variable only."""


class NotUnimodular(HoloconnError):
    """A 2x2 group element does not have determinant one."""


class BadSpectrum(HoloconnError):
    """An integer matrix lacks the eigenvalue pattern of an Inoue surface S_M."""


# input parsing

class ParseError(HoloconnError):
    """Error in a connection file or an expression string.

    ``line`` and ``column`` are 1-based; either may be ``None`` when the
    position is not known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(self._render())

    def _render(self) -> str:
        if self.line is None:
            return self.message
        if self.column is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, column {self.column}: {self.message}"

    def shifted(self, line: int, column_offset: int) -> "ParseError":
        """Copy of this error re-anchored inside a larger document."""
        col = None if self.column is None else self.column + column_offset
        return type(self)(self.message, line, col)


class InputSyntaxError(ParseError):
    """Malformed input text."""


class UnknownVariable(ParseError):
    """An identifier that is neither ``i`` nor a declared chart variable."""


class ArityError(ParseError):
    """Wrong set of parameters for a connection family."""


class AnalysisError(HoloconnError):
    """A requested analysis failed; wraps the underlying module error."""

    def __init__(self, analysis: str, cause: Exception):
        self.analysis = analysis
        self.cause = cause
        super().__init__(f"{analysis}: {type(cause).__name__}: {cause}")
