"""Exception types shared across the toolkit."""


class FbgaError(Exception):
    """Base class for all domain errors."""


class MalformedInput(FbgaError):
    """Input could not be parsed into the graph file schema."""


class StructureViolation(FbgaError):
    """A parsed graph violates the combinatorial-map axioms.

    Carries the complete list of violations, not just the first one.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class SIViolation(FbgaError):
    """The degree function fails the half-edge compatibility identity.

    ``failures`` lists one (half_edge, lhs, rhs) triple per failing
    half-edge, where lhs/rhs are the two sides of the identity.
    """

    def __init__(self, failures):
        self.failures = list(failures)
        msgs = [f"{h}: {a} != {b}" for h, a, b in self.failures]
        super().__init__("SI fails at " + "; ".join(msgs))


class DisconnectedGraph(FbgaError):
    """Operation requires a connected graph."""


class UnknownHalfEdge(FbgaError, KeyError):
    pass


class UnknownEdge(FbgaError, KeyError):
    pass


class UnknownVertex(FbgaError, KeyError):
    pass


class NotAnOrbit(FbgaError):
    """The given edge set is not a single Nakayama orbit."""


class NotStable(FbgaError):
    """A half-edge set is not closed under the required maps."""


class SizeLimitExceeded(FbgaError):
    pass


class UnsupportedAction(FbgaError):
    pass


class NotSkewBG(FbgaError):
    """Valency does not divide degree at some vertex."""


class PreconditionFailed(FbgaError):
    pass


class NoEvenCycle(FbgaError):
    pass


class CapMismatch(FbgaError):
    """Bounded walk universes disagree in size; raise the length cap."""
