"""Exception types raised by coreflex."""


class CoreflexError(Exception):
    """Base class for all library errors."""


class DomainError(CoreflexError, ValueError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(CoreflexError):
    """An operation was called on an input that violates its precondition."""


class NotALineDigraph(PreconditionError):
    """Raised by root reconstruction on a digraph that is not a line digraph.

    The ``counterexample`` attribute carries the certificate found by recognition.
    """

    def __init__(self, counterexample):
        self.counterexample = counterexample
        super().__init__(f"not a line digraph: {counterexample}")


class InstanceTooLarge(CoreflexError):
    """The instance exceeds the size a brute-force routine is willing to handle."""


class ConvergenceError(CoreflexError):
    """An iteration did not reach its fixpoint within the allowed number of steps."""
