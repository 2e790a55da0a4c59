"""Exception hierarchy shared by all modules."""


class DGError(Exception):
    """Base class for every error raised by :mod:`distgraph`."""


class InvalidGraphError(DGError, ValueError):
    """An operation that needs a valid distinguishing graph got an invalid one."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"invalid distinguishing graph: {lines}{more}")


class PreconditionError(DGError, ValueError):
    """Input is valid but does not meet an operation's precondition."""


class SizeGuardError(PreconditionError):
    """The exhaustive oracle refuses instances above its size guard."""


class UnknownVertexError(DGError, KeyError):
    def __str__(self):
        return f"unknown vertex {self.args[0]!r}"


class ShapeError(DGError, ValueError):
    """Graph is not a minimal-function bouquet graph."""


class WordError(DGError, ValueError):
    """Malformed or unsupported signed word."""


class ParseError(DGError, ValueError):
    def __init__(self, message, line=None):
        self.message = message
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
