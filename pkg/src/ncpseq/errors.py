"""Shared exception types for parse and validation failures."""


class ParseError(ValueError):
    """Input text does not match the expected grammar."""


class ValidationError(ValueError):
    """A structural invariant does not hold for otherwise well-formed input."""


class StretchError(ValidationError):
    """An arc-stretching step met a diagram without the required shape."""
