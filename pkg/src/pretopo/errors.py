"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input."""


class SizeError(InputError):
    """An instance exceeds a configured size bound."""


class ParseError(InputError):
    """A graph file could not be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
