"""Exception types raised by the library and surfaced by the CLI."""


class SingularMatrix(ValueError):
    """A 2x2 matrix over F2 with determinant 0 was used where GL2 is required."""


class UnknownName(LookupError):
    """No catalog entry with the requested name."""


class ParseError(ValueError):
    """An algebra literal could not be parsed."""


class UnknownFilter(ValueError):
    """Classification was requested for an undocumented family."""
