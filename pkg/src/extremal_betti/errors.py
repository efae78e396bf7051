"""Exception hierarchy shared by every module."""


class ExtremalBettiError(Exception):
    """Base class for all package errors."""


class RangeError(ExtremalBettiError, ValueError):
    """A vertex, degree or parameter lies outside its admissible range."""


class NotAFaceError(ExtremalBettiError, ValueError):
    """The given vertex set is not a face of the complex."""


class DomainError(ExtremalBettiError, ValueError):
    """An operation was applied outside the class of objects it is defined on."""


class CapacityError(ExtremalBettiError):
    """The request exceeds a declared computational capacity."""


class FormatError(ExtremalBettiError, ValueError):
    """A serialized document is malformed."""
