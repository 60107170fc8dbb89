"""Exception hierarchy.

Three branches matter to callers (and to the CLI exit-code mapping):
``HypothesisError`` for violated algorithm preconditions, ``BudgetError``
for refused oversized work, and ``ParseError`` for malformed input files.
"""

from __future__ import annotations


class DicolorError(Exception):
    """Base class for every error raised by this package."""


class HypothesisError(DicolorError):
    """An algorithm's hypothesis does not hold for the given input."""


class BudgetError(DicolorError):
    """The requested computation exceeds the configured budget."""


# -- digraph construction ---------------------------------------------------

class LoopArc(DicolorError):
    """An arc or edge from a vertex to itself was supplied."""


class OutOfRange(DicolorError):
    """A vertex id outside 0..n-1 was supplied."""


# -- structure analysis -----------------------------------------------------

class NotABlock(HypothesisError):
    """The vertex set is not biconnected in the underlying graph."""


class NotACycle(HypothesisError):
    """The vertex sequence is not a cycle of the underlying graph."""


class BadBlock(HypothesisError):
    """The block is a dicycle, odd symmetric cycle, or complete symmetric
    digraph, so it contains no good cycle."""


class NotGallai(HypothesisError):
    """A block of the component is not of a Gallai-tree kind."""


# -- coloring engine --------------------------------------------------------

class PartialColoring(HypothesisError):
    """A total coloring was required but some vertex is uncolored."""


class ListTooSmall(HypothesisError):
    """Some vertex's color list is smaller than the operation requires."""

    def __init__(self, vertex: int, message: str | None = None):
        self.vertex = vertex
        super().__init__(message or f"color list too small at vertex {vertex}")


class UnanchoredComponent(HypothesisError):
    """A component contains no anchor but full coverage was demanded."""


class BlockedHypothesisFails(HypothesisError):
    """The hole vertex has a color in its list that is missing from one
    side, so shifting is not needed (extend directly instead)."""


class InvariantViolation(HypothesisError):
    """A step produced a state the underlying theory rules out; this
    flags violated preconditions (or a bug)."""


class ExtensionFailed(HypothesisError):
    """Both walk directions capped out and the exhaustive fallback found
    no extension."""


class GallaiComponent(HypothesisError):
    """A connected component is a Gallai tree, so degree-list dicoloring
    is not guaranteed (and may be impossible)."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"component of vertex {vertex} is a Gallai tree")


class DegreeTooHigh(HypothesisError):
    """Some vertex exceeds the degree bound d."""

    def __init__(self, vertex: int, message: str | None = None):
        self.vertex = vertex
        super().__init__(message or f"vertex {vertex} has maximum degree above the bound")


class ContainsForbiddenClique(HypothesisError):
    """The digraph contains the complete symmetric digraph on d+1 vertices."""

    def __init__(self, witness: tuple[int, ...]):
        self.witness = tuple(witness)
        super().__init__(
            "contains the complete symmetric digraph on vertices "
            + " ".join(str(v) for v in self.witness)
        )


class DTooSmall(HypothesisError):
    """The color count d is below what this solver supports."""


# -- oracle -----------------------------------------------------------------

class BudgetExceeded(BudgetError):
    """Input size, color count, or running time exceeds the oracle budget."""


class NoExtension(DicolorError):
    """No list-respecting recoloring of the region extends the fixed part."""


# -- generators -------------------------------------------------------------

class RetryExhausted(BudgetError):
    """Rejection sampling hit its retry cap without an admissible sample."""


# -- file I/O ---------------------------------------------------------------

class ParseError(DicolorError):
    """An input file is malformed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
