from __future__ import annotations


class StabilkitError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(StabilkitError, ValueError):
    """An instance or certificate file could not be parsed."""

    def __init__(self, line: int, kind: str, detail: str = "") -> None:
        self.line = line
        self.kind = kind
        msg = f"line {line}: {kind}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class InvalidSolutionError(StabilkitError, ValueError):
    """A stabilizer triple violates one of its invariants."""


class PreconditionError(StabilkitError, ValueError):
    """An algorithm was called on an input outside its guarantee."""


class SizeBoundError(PreconditionError):
    """The brute-force oracle refuses instances above its size bound."""
