"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands live in spaces of different dimension."""


class ZeroPolynomialError(ValueError):
    """A polynomial cancelled down to the empty term list."""


class ParseError(ValueError):
    """Malformed polynomial text; ``position`` is the 0-based column."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at column {position + 1})")
        self.message = message
        self.position = position
