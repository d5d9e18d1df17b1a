"""Set systems, their clustering/intersection axioms, canonical transit
functions, identification, and convex-geometry testing of transit-set
systems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .axioms import check_axiom
from .convexity import GeometryCertificate, family_geometry_certificate
from .core import AxiomVerdict, GroundSet, Subset, TransitFunction
from .errors import HypothesesNotMet, MissingSingleton, UncoveredPair


@dataclass(frozen=True)
class SetSystem:
    """Deduplicated nonempty subsets of a ground set, sorted by (size, bits)."""

    ground: GroundSet
    members: tuple[int, ...]

    def __post_init__(self):
        masks = sorted(set(self.members), key=lambda m: (m.bit_count(), m))
        if masks and masks[0] == 0:
            raise ValueError("set systems contain nonempty members only")
        for m in masks:
            if m >> self.ground.n or m < 0:
                raise ValueError("member leaves the ground set")
        object.__setattr__(self, "members", tuple(masks))

    @classmethod
    def from_sets(cls, ground: GroundSet, sets: Iterable) -> "SetSystem":
        masks = []
        for s in sets:
            if isinstance(s, Subset):
                masks.append(s.bits)
            elif isinstance(s, int):
                masks.append(s)
            else:
                masks.append(ground.subset(s).bits)
        return cls(ground, tuple(masks))

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def subsets(self) -> list[Subset]:
        return [Subset(self.ground, m) for m in self.members]

    def to_json(self) -> dict:
        return {
            "n": self.ground.n,
            "members": [list(Subset(self.ground, m)) for m in self.members],
        }


def set_system_from_json(payload: dict) -> SetSystem:
    ground = GroundSet(int(payload["n"]))
    return SetSystem.from_sets(ground, [[int(i) for i in m] for m in payload["members"]])


@dataclass(frozen=True)
class KAxiomReport:
    """Verdicts for (KS), (KR), (KC), (K1), (K2)."""

    ks: AxiomVerdict
    kr: AxiomVerdict
    kc: AxiomVerdict
    k1: AxiomVerdict
    k2: AxiomVerdict

    @property
    def is_t_system(self) -> bool:
        return self.ks.holds and self.kr.holds and self.kc.holds

    def to_json(self) -> dict:
        return {
            "ks": self.ks.to_json(),
            "kr": self.kr.to_json(),
            "kc": self.kc.to_json(),
            "k1": self.k1.to_json(),
            "k2": self.k2.to_json(),
            "is_t_system": self.is_t_system,
        }


def check_k_axioms(system: SetSystem) -> KAxiomReport:
    """Exhaustive evaluation of the clustering/intersection axioms.

    (KC) is read over covered pairs: a pair contained in no member fails it
    (the defining intersection would run over an empty family).
    """
    n = system.ground.n
    members = set(system.members)

    ks_witness = None
    for x in range(n):
        if (1 << x) not in members:
            ks_witness = (("x", x),)
            break
    ks = AxiomVerdict("ks", ks_witness is None, ks_witness)

    kr_witness = None
    for c in system.members:
        found = False
        for p in Subset(system.ground, c):
            for q in Subset(system.ground, c):
                if all(c & ~d == 0 for d in system.members if (d >> p) & 1 and (d >> q) & 1):
                    found = True
                    break
            if found:
                break
        if not found:
            elems = list(Subset(system.ground, c))
            kr_witness = tuple((f"C{i}", e) for i, e in enumerate(elems))
            break
    kr = AxiomVerdict("kr", kr_witness is None, kr_witness)

    kc_witness = None
    for p in range(n):
        for q in range(p + 1, n):
            holders = [c for c in system.members if (c >> p) & 1 and (c >> q) & 1]
            if not holders:
                kc_witness = (("p", p), ("q", q))
                break
            inter = holders[0]
            for c in holders[1:]:
                inter &= c
            if inter not in members:
                kc_witness = (("p", p), ("q", q))
                break
        if kc_witness:
            break
    kc = AxiomVerdict("kc", kc_witness is None, kc_witness)

    k1 = AxiomVerdict("k1", system.ground.full_mask in members, None)

    k2_witness = None
    ms = system.members
    for i, a in enumerate(ms):
        for b in ms[i:]:
            inter = a & b
            if inter and inter not in members:
                ai = list(Subset(system.ground, a))
                bi = list(Subset(system.ground, b))
                k2_witness = tuple((f"A{i}", e) for i, e in enumerate(ai)) + tuple(
                    (f"B{i}", e) for i, e in enumerate(bi)
                )
                break
        if k2_witness:
            break
    k2 = AxiomVerdict("k2", k2_witness is None, k2_witness)
    return KAxiomReport(ks, kr, kc, k1, k2)


def canonical_transit(system: SetSystem) -> TransitFunction:
    """R(x,y) = intersection of the members containing both x and y.

    Requires (KS) and every pair covered by some member.
    """
    n = system.ground.n
    members = set(system.members)
    for x in range(n):
        if (1 << x) not in members:
            raise MissingSingleton(f"system lacks the singleton {{{x}}}")
    table = [0] * (n * n)
    for x in range(n):
        table[x * n + x] = 1 << x
    for x in range(n):
        for y in range(x + 1, n):
            inter = None
            for c in system.members:
                if (c >> x) & 1 and (c >> y) & 1:
                    inter = c if inter is None else inter & c
            if inter is None:
                raise UncoveredPair(f"no member contains both {x} and {y}")
            table[x * n + y] = inter
            table[y * n + x] = inter
    return TransitFunction(system.ground, table)


def transit_set_system(R: TransitFunction) -> SetSystem:
    """Deduplicated transit sets of R, singletons included."""
    return SetSystem(R.ground, tuple(set(R.table())))


def identifies(R: TransitFunction) -> AxiomVerdict:
    """Whether R reproduces itself through its own transit-set system.

    Holds iff the canonical transit function of the transit-set system
    equals R; equivalent to monotonicity.
    """
    back = canonical_transit(transit_set_system(R))
    if back.table() == R.table():
        return AxiomVerdict("identifies", True, None)
    n = R.ground.n
    for u in range(n):
        for v in range(u + 1, n):
            if back.transit_mask(u, v) != R.transit_mask(u, v):
                return AxiomVerdict("identifies", False, (("u", u), ("v", v)))
    return AxiomVerdict("identifies", False, None)  # pragma: no cover


def transit_system_is_convex_geometry(R: TransitFunction) -> GeometryCertificate:
    """Convex-geometry test of the transit-set system (plus the empty set).

    Standing hypotheses: monotone, (a'), (k) - they make the system a
    convexity whose convex sets are exactly the transit sets.
    """
    failed = [a for a in ("m", "a_prime", "k") if not check_axiom(R, a).holds]
    if failed:
        raise HypothesesNotMet(failed)
    family = set(R.table())
    family.add(0)
    return family_geometry_certificate(R.ground.n, family)


def random_monotone_transit_function(n: int, seed: int, density: float) -> TransitFunction:
    """Random transit function made monotone by hull-closing to fixpoint.

    Replacing every transit set by its hull (iterated until stable) forces
    each transit set convex, which is exactly monotonicity.
    """
    from . import _backend
    from .core import random_transit_function

    R = random_transit_function(n, seed, density)
    table = list(R.table())
    while True:
        new = [0] * (n * n)
        for u in range(n):
            for v in range(u, n):
                h = _backend.hull_mask(n, table, table[u * n + v])
                new[u * n + v] = h
                new[v * n + u] = h
        if new == table:
            break
        table = new
    return TransitFunction(R.ground, table)
