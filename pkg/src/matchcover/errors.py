"""Exception types raised by the matchcover package."""

from __future__ import annotations


class MatchCoverError(Exception):
    """Base class for all matchcover errors."""


class MalformedGraph6(MatchCoverError):
    """The input is not a valid short-form graph6 string."""


class NotSimple(MatchCoverError):
    """The edge list contains a loop or a parallel edge."""


class NotCubic(MatchCoverError):
    """Some vertex does not have degree exactly 3."""


class NotConnected(MatchCoverError):
    """The graph is not connected."""


class NotBridgeless(MatchCoverError):
    """The graph contains a bridge (a 1-cut)."""


class InvalidParameter(MatchCoverError):
    """A parameter is outside its admissible range."""


class EmptySide(MatchCoverError):
    """A cut side must be a nonempty proper subset of the vertices."""


class GraphTooLarge(MatchCoverError):
    """The graph exceeds the configured subset-enumeration threshold."""


class TooManyMatchings(MatchCoverError):
    """The perfect-matching count exceeds the configured search cap."""


class NotAFractionalPM(MatchCoverError):
    """The weighting is not a fractional perfect matching.

    Carries the failing verdict on the ``verdict`` attribute.
    """

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class NoAdmissibleMatching(MatchCoverError):
    """No maximum-cost perfect matching meets every tight cut exactly once.

    This cannot happen when the cost / tight-cut pair comes from a verified
    fractional perfect matching; it signals caller error or a bug.  The full
    optimizer list is attached for diagnosis.
    """

    def __init__(self, message, optimizers=()):
        super().__init__(message)
        self.optimizers = tuple(optimizers)

    def __str__(self):
        base = super().__str__()
        return f"{base} (optimizers: {[m.edges for m in self.optimizers]})"


class InfeasibleDecomposition(MatchCoverError):
    """The exact feasibility system for a convex decomposition has no solution.

    Impossible for a verified fractional perfect matching; signals a bug.
    The assembled system is attached on the ``system`` attribute.
    """

    def __init__(self, message, system=None):
        super().__init__(message)
        self.system = system


class InvariantBroken(MatchCoverError):
    """A greedy-step induction invariant failed.

    This contradicts the covering theorem, so it signals a bug.  The graph,
    the family, and the violating certificate are attached.
    """

    def __init__(self, message, graph=None, family=None, certificate=None):
        super().__init__(message)
        self.graph = graph
        self.family = family
        self.certificate = certificate
