"""Exception hierarchy shared by all modules."""


class TransitGeoError(Exception):
    """Base class for every domain error raised by this package."""


class IndexOutOfRange(TransitGeoError):
    """A vertex/element index falls outside the ground set."""


class AxiomViolation(TransitGeoError):
    """Constructed data violates a defining transit axiom.

    ``axiom`` names the violated axiom ("t1" or "t3"); ``pair`` carries the
    offending unordered pair.
    """

    def __init__(self, axiom, pair, message=None):
        self.axiom = axiom
        self.pair = pair
        super().__init__(message or f"axiom ({axiom}) violated at pair {pair}")


class DuplicatePair(TransitGeoError):
    """The same unordered pair was specified twice."""


class GroundTooLarge(TransitGeoError):
    """The ground set exceeds the guard bound of an exhaustive operation."""


class NotConvex(TransitGeoError):
    """A convex set was required but the given subset is not convex."""


class InternalDisagreement(TransitGeoError):
    """The three convex-geometry criteria disagreed; signals an implementation bug."""


class Disconnected(TransitGeoError):
    """A connected graph was required."""


class NotConnected(TransitGeoError):
    """A connected hypergraph was required."""


class MalformedGraph6(TransitGeoError):
    """Invalid graph6 text; ``offset`` is the byte position of the defect."""

    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class UncoveredPair(TransitGeoError):
    """No member of the set system contains the given pair."""


class MissingSingleton(TransitGeoError):
    """A set system lacks a singleton required by (KS)."""


class HypothesesNotMet(TransitGeoError):
    """Standing hypotheses of an operation fail; lists the failed ones."""

    def __init__(self, failed):
        self.failed = tuple(failed)
        super().__init__(f"hypotheses not met: {', '.join(self.failed)}")


class UnknownTheorem(TransitGeoError):
    """No theorem registered under the given identifier."""


class UnknownPredicate(TransitGeoError):
    """No counterexample predicate registered under the given identifier."""
