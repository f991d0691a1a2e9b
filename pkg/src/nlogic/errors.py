"""Exception hierarchy shared across the kernel, surface syntax and CLI."""


class NLError(Exception):
    """Base class for every error raised by this package."""


class InvalidType(NLError):
    """A function type whose codomain is the individual type."""

    def __init__(self, message, span=None):
        super().__init__(message)
        self.span = span


class IllTyped(NLError):
    """A term has no structural type.

    ``path`` is the sequence of child indices from the root to the offending
    node (0 = function / body, 1 = argument).
    """

    def __init__(self, reason, path=(), span=None):
        self.reason = reason
        self.path = tuple(path)
        self.span = span
        where = "/".join(map(str, self.path)) or "root"
        super().__init__(f"{reason} (at {where})")


class EquivOnIota(IllTyped):
    """Equivalence used on operands whose only common type is i."""


class FuelExhausted(NLError):
    def __init__(self, fuel, last):
        super().__init__(f"no normal form within {fuel} steps (fuel exhausted)")
        self.fuel = fuel
        self.last = last


class NLSyntaxError(NLError):
    """Malformed concrete syntax. ``span`` is a (start, end) offset pair."""

    def __init__(self, message, span=None):
        self.span = span
        if span is not None:
            message = f"{message} at {span[0]}:{span[1]}"
        super().__init__(message)


class UnknownIdentifier(NLSyntaxError):
    pass
