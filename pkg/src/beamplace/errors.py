"""Exception hierarchy.

Every error raised by the library derives from :class:`BeamPlacementError`.
The three intermediate classes map onto CLI exit codes: validation (2),
solver infeasibility (3) and IO/parse failures (4).
"""


class BeamPlacementError(Exception):
    pass


class ValidationError(BeamPlacementError, ValueError):
    """Input outside an operation's domain."""


class ZeroRange(ValidationError):
    pass


class DegenerateApex(ValidationError):
    pass


class OutOfDomain(ValidationError):
    pass


class NoBracket(BeamPlacementError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class BadClusterCount(ValidationError):
    pass


class InvalidInput(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class EmptyCluster(ValidationError):
    pass


class EmptyInput(ValidationError):
    pass


class BadBox(ValidationError):
    pass


class Infeasible(BeamPlacementError):
    """No feasible clustering was found within the restart budget."""


class ParseError(BeamPlacementError):
    def __init__(self, message, *, line=None, field=None):
        parts = [message]
        if field is not None:
            parts.append(f"field={field!r}")
        if line is not None:
            parts.append(f"line={line}")
        super().__init__(" ".join(parts))
        self.line = line
        self.field = field


class VersionMismatch(ParseError):
    pass
