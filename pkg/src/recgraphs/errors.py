"""Exception types shared across the package."""


class RecGraphError(Exception):
    """Base class for all errors raised by recgraphs."""


class InvalidProgram(RecGraphError, KeyError):
    """Unknown registry name or unparsable parameter."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "invalid program"


class MalformedProgram(RecGraphError, ValueError):
    """A register program has a branch target or register out of range."""


class BudgetExhausted(RecGraphError):
    """An operation needed a decided answer but the budget left it Pending."""


class VertexError(RecGraphError, ValueError):
    """A vertex is outside a graph's universe or missing from a prefix."""


class ColoringError(RecGraphError, ValueError):
    """A coloring is undefined on some vertex of the prefix it is checked against."""


class GroundTruthError(RecGraphError, ValueError):
    """A program lacks the ground-truth metadata an operation requires."""


class SizeGuardError(RecGraphError, ValueError):
    """An exhaustive oracle was called on an instance above its size guard."""
