"""Exception types shared across the toolkit.

Every error raised on bad input derives from ColorBiasError so callers can
catch the whole family at once; the CLI maps them to exit code 1.
"""

from __future__ import annotations


class ColorBiasError(Exception):
    """Base class for all toolkit errors."""


class ParseError(ColorBiasError):
    """Malformed .ecg input; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ValidationError(ColorBiasError):
    """Structurally invalid graph data (loop, duplicate edge, bad range)."""


class ColorOutOfRange(ColorBiasError):
    """A color argument outside 1..r."""


class OverlappingSides(ColorBiasError):
    """Bipartite selection with intersecting sides."""


class InvalidCycle(ColorBiasError):
    """A vertex sequence that is not a Hamilton cycle of the host graph."""


class NotHamiltonian(ColorBiasError):
    """The graph has no Hamilton cycle."""


class BudgetExceeded(ColorBiasError):
    """Enumeration aborted after exhausting its search-node budget."""


class NotALinearForest(ColorBiasError):
    """Edge set is not a union of vertex-disjoint paths in the host graph."""


class NoExtensionFound(ColorBiasError):
    """No Hamilton cycle through the requested path system was found."""


class InvalidBowtie(ColorBiasError):
    """Five vertices that do not form a bowtie in the host graph."""


class NotDisjoint(ColorBiasError):
    """Bowties expected to be vertex-disjoint share a vertex."""


class NotKBad(ColorBiasError):
    """A bowtie whose color-count value for the requested color is zero."""


class NotATriangle(ColorBiasError):
    """Triangle typing requested on three vertices that do not span a triangle."""


class DivisibilityError(ColorBiasError):
    """Construction size does not satisfy the required divisibility."""


class ParameterError(ColorBiasError):
    """Construction parameters outside their allowed range."""


class TargetsInfeasible(ColorBiasError):
    """Partition targets cannot be realized (defensive; unreachable after rounding)."""


class ModeInconclusive(ColorBiasError):
    """Partition recovery requested on a graph whose dichotomy is inconclusive."""


class NotAPartition(ColorBiasError):
    """Certificate parts do not partition the vertex set."""
