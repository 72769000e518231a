"""Exception hierarchy shared by every cl2 module."""


class Cl2Error(Exception):
    """Base class for all errors raised by cl2."""


class InvalidValue(Cl2Error, ValueError):
    """A coefficient is NaN or infinite."""


class NonInvertible(Cl2Error, ZeroDivisionError):
    """The element has I_a = 0 (within tolerance) and no inverse."""


class ZeroElement(Cl2Error, ValueError):
    """The zero multivector was passed where a nonzero one is required."""


class BadExponent(Cl2Error, ValueError):
    """Root order below 2."""


class Overflow(Cl2Error, OverflowError):
    """A result coefficient does not fit in a double."""


class DecodeError(Cl2Error, ValueError):
    """Malformed JSON payload."""


class ParseError(Cl2Error):
    """Error while lexing, parsing or evaluating an expression.

    ``kind`` is one of ``"lexical"``, ``"syntax"``, ``"domain"`` or
    ``"noninvertible"``; ``position`` is a 0-based offset into the input.
    """

    LEXICAL = "lexical"
    SYNTAX = "syntax"
    DOMAIN = "domain"
    NONINVERTIBLE = "noninvertible"

    def __init__(self, message: str, position: int, kind: str = SYNTAX):
        super().__init__(message)
        self.message = message
        self.position = position
        self.kind = kind

    def __str__(self):
        return f"{self.kind} error at position {self.position}: {self.message}"
