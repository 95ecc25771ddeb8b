from typing import Optional


class NoneArgumentError(ValueError):
    """Exception on None argument"""

    def __init__(self, message: str):
        super().__init__(message)


class InvalidOperationError(Exception):
    """Exception on invalid operations"""

    def __init__(self, message: str = ""):
        super().__init__(message)


class RingMismatchError(ValueError):
    """Operands live in different ambient rings (arity, field or order)"""

    def __init__(self, message: str = ""):
        super().__init__(message)


class ParseError(ValueError):
    """Invalid polynomial text, ring file or corpus file

    :param message: what went wrong
    :param line: 1-based line number in the source file, if known
    :param column: 0-based column in the parsed text, if known
    """

    def __init__(
        self, message: str, line: Optional[int] = None, column: Optional[int] = None
    ):
        self.message = message
        self.line = line
        self.column = column
        prefix = "" if line is None else f"line {line}: "
        suffix = "" if column is None else f" (at column {column})"
        super().__init__(prefix + message + suffix)

    def at_line(self, line: int) -> "ParseError":
        """A copy of this error attributed to ``line`` of a file"""
        if self.line is not None:
            return self
        return ParseError(self.message, line=line, column=self.column)


class SamuelError(Exception):
    """Base class of errors raised by computations"""

    def __init__(self, message: str = ""):
        super().__init__(message)


class NotZeroDimensionalError(SamuelError):
    """The quotient by the ideal is not a finite dimensional vector space"""


class NoStabilizationError(SamuelError):
    """A truncated length did not stabilize before the degree cap"""


class NoPolynomialWindowError(SamuelError):
    """The Hilbert table is too short to certify its polynomial part"""


class NonIntegerCoefficientError(SamuelError):
    """A fitted Hilbert coefficient is not an integer"""


class NotAReductionError(SamuelError):
    """No reduction relation was found within the cap"""


class SearchExhaustedError(SamuelError):
    """A randomized search ran out of attempts"""


class HypothesisNotCertifiedError(SamuelError):
    """A hypothesis of a formula could not be certified"""
