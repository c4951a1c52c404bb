"""Exception hierarchy.

Domain errors (bad edge, bad pair, bad script) are kept apart from
malformed input and resource limits so the CLI can map each family to
its own exit code.
"""

from __future__ import annotations


class StellarPairError(Exception):
    """Base class for all library errors."""


class MalformedInputError(StellarPairError):
    """Input that fails structural validation (documents, facet lists, labels)."""


class ResourceLimitError(StellarPairError):
    """A configured size or search budget was exceeded."""

    def __init__(self, message: str, **stats):
        super().__init__(message)
        self.stats = dict(stats)


class DomainError(StellarPairError):
    """A well-formed request that the mathematics rejects."""


class AbsentFaceError(DomainError):
    """The named simplex is not a face of the complex."""


class NamingError(DomainError):
    """A new vertex label collides with an existing one."""


class NotASubcomplexError(DomainError):
    """The alleged subcomplex has a facet outside the ambient complex."""


class InvalidEdgeError(DomainError):
    """Contraction requested at an edge contained in a missing simplex."""

    def __init__(self, edge, blockers):
        self.edge = edge
        self.blockers = tuple(blockers)
        names = ", ".join(str(b) for b in self.blockers)
        super().__init__(f"edge {edge} is not valid; blocked by missing simplices: {names}")


class PreconditionError(DomainError):
    """A pair operation was called with a weaker inducedness status than required."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ScriptMismatchError(DomainError):
    """A move script did not transform its input into the expected target."""


class ScriptStepError(DomainError):
    """A move failed mid-script; carries the failing step index and cause."""

    def __init__(self, step: int, cause: Exception):
        self.step = step
        self.cause = cause
        super().__init__(f"script step {step} failed: {cause}")


class InvariantViolationError(DomainError):
    """An invariant the theory guarantees was observed to fail (a bug or a bad input pair)."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
