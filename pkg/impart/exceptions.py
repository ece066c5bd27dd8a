"""
Error hierarchy for the impart package.

The CLI maps these onto exit codes: input errors → 3, ceilings → 4.
"""


class ImpartError(Exception):
    """Base class for every error raised deliberately by impart."""


class InvalidGraphError(ImpartError, ValueError):
    """Graph or vertex set violates its construction invariants."""


class EmptyGraphError(ImpartError, ValueError):
    """Parameter is undefined on the given graph (too few vertices)."""


class CeilingExceededError(ImpartError):
    """Input is larger than the configured ceiling of an exponential routine."""

    def __init__(self, routine: str, size: int, ceiling: int):
        super().__init__(f"{routine}: size {size} exceeds ceiling {ceiling}")
        self.routine = routine
        self.size = size
        self.ceiling = ceiling


class InvalidDecompositionError(ImpartError, ValueError):
    """Tree or path decomposition is not valid for the graph it is used with."""


class GraphFormatError(ImpartError, ValueError):
    """Edge-list or graph6 text could not be parsed."""


class UnsupportedParameterError(ImpartError, ValueError):
    """Parameter is not handled by the requested routine."""


class WitnessRejectedError(ImpartError):
    """A solver witness failed independent re-checking before being reported."""
