"""Exception hierarchy shared by the library and the command line."""


class MonomultError(ValueError):
    """Base class for all errors raised by :mod:`monomult`."""


class DimensionError(MonomultError):
    """Operands have incompatible lengths or shapes."""


class DegenerateInputError(MonomultError):
    """Input is empty, zero, or otherwise degenerate."""


class UnboundedError(MonomultError):
    """An inequality system expected to be bounded is not."""


class InputError(MonomultError):
    """Invalid user-level input (graphs, cones, generators)."""


class ParseError(MonomultError):
    """Malformed ideal expression; ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.message = message
        self.position = position
