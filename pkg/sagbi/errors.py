"""
Error types for the SAGBI toolkit
Every error carries a diagnostic category used by the command-line driver
"""


class SagbiError(Exception):
    """Base class for all toolkit errors."""

    category = "error"


class InvalidInputError(SagbiError, ValueError):
    """Invalid arguments, options, orders or arities."""

    category = "input"


class RingMismatchError(InvalidInputError):
    """Operands live in different rings."""


class DomainError(SagbiError, ArithmeticError):
    """Mathematically undefined request, such as the lead term of zero."""

    category = "math"


class IncompleteBasisError(DomainError):
    """Operation needs a complete Groebner basis but got a truncated one."""


class ParseError(SagbiError):
    """Syntax error in a polynomial, order specification or script."""

    category = "parse"

    def __init__(self, message, line=None, column=None):
        """
        Create a parse error

        Args:
            message (str): What went wrong
            line (int): 1-based line number, if known
            column (int): 1-based column number, if known
        """
        self.message = message
        self.line = line
        self.column = column
        super().__init__(self.describe())

    def describe(self):
        """Message prefixed with the position, when there is one."""
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        if where:
            return f"{', '.join(where)}: {self.message}"
        return self.message


class NameResolutionError(ParseError):
    """A script statement refers to a name that was never declared."""


class StateFileError(SagbiError):
    """Saved computation state is unreadable, from another version, or inconsistent."""

    category = "io"
