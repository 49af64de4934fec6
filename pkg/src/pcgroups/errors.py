"""Exception types shared across the package."""


class InputError(ValueError):
    """A caller handed an operation a value outside its stated domain."""


class ParseError(InputError):
    """Malformed text input; carries the 1-based source line when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
