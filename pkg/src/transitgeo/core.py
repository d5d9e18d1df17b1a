"""Ground sets, bit-vector subsets, transit functions and betweenness.

Vertices are dense integer indices 0..n-1; labels are display-only.  All
types are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import AxiomViolation, DuplicatePair, IndexOutOfRange


@dataclass(frozen=True)
class GroundSet:
    """A finite indexed universe with optional display names."""

    n: int
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground set needs at least one element")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.n:
                raise ValueError("labels must have length n")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels must be distinct")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def check_index(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"index {i} outside 0..{self.n - 1}")
        return i

    def label(self, i: int) -> str:
        self.check_index(i)
        return self.labels[i] if self.labels else str(i)

    def index(self, label: str) -> int:
        if self.labels is None:
            return self.check_index(int(label))
        try:
            return self.labels.index(label)
        except ValueError:
            raise IndexOutOfRange(f"unknown label {label!r}") from None

    def subset(self, elements: Iterable[int] = ()) -> "Subset":
        return Subset.from_indices(self, elements)

    def subset_of_labels(self, labels: Iterable[str]) -> "Subset":
        return Subset.from_indices(self, (self.index(s) for s in labels))


@dataclass(frozen=True)
class Subset:
    """Fixed-width bit-vector subset of a ground set."""

    ground: GroundSet
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.ground.n:
            raise IndexOutOfRange("subset bits exceed the ground set width")

    @classmethod
    def from_indices(cls, ground: GroundSet, elements: Iterable[int]) -> "Subset":
        bits = 0
        for e in elements:
            ground.check_index(e)
            bits |= 1 << e
        return cls(ground, bits)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.ground.n and (self.bits >> i) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __le__(self, other: "Subset") -> bool:
        return self.bits & ~other.bits == 0

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.ground, self.bits & other.bits)

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.ground, self.bits | other.bits)

    def __sub__(self, other: "Subset") -> "Subset":
        return Subset(self.ground, self.bits & ~other.bits)

    def complement(self) -> "Subset":
        return Subset(self.ground, self.ground.full_mask & ~self.bits)

    def indices(self) -> tuple[int, ...]:
        return tuple(self)

    def to_labels(self) -> tuple[str, ...]:
        return tuple(self.ground.label(i) for i in self)

    def __repr__(self) -> str:
        return "{" + ",".join(self.to_labels()) + "}"


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of a decision procedure plus a re-checkable witness.

    A failing universally-quantified check carries the instantiating tuple;
    a holding existential check carries the witnessing tuple.  Roles name
    the quantified variables.
    """

    axiom: str
    holds: bool
    witness: Optional[tuple[tuple[str, int], ...]] = None

    def to_json(self) -> dict:
        payload = {"axiom": self.axiom, "holds": self.holds}
        if self.witness is None:
            payload["witness"] = None
        else:
            payload["witness"] = [{"role": r, "index": i} for r, i in self.witness]
        return payload

    def __bool__(self) -> bool:
        return self.holds


def _pair_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


class _SymmetricTable:
    """Shared storage/behaviour of TransitFunction and Betweenness."""

    __slots__ = ("ground", "_table")

    def __init__(self, ground: GroundSet, table: Sequence[int]):
        self.ground = ground
        self._table = tuple(table)
        if len(self._table) != ground.n * ground.n:
            raise ValueError("table must have n*n entries")

    @property
    def n(self) -> int:
        return self.ground.n

    def mask_at(self, u: int, v: int) -> int:
        n = self.ground.n
        self.ground.check_index(u)
        self.ground.check_index(v)
        return self._table[u * n + v]

    def table(self) -> tuple[int, ...]:
        return self._table

    def __eq__(self, other) -> bool:
        return (
            type(other) is type(self)
            and self.ground.n == other.ground.n
            and self._table == other._table
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.ground.n, self._table))


class TransitFunction(_SymmetricTable):
    """Symmetric table of transit sets satisfying (t1)-(t3)."""

    def __init__(self, ground: GroundSet, table: Sequence[int]):
        super().__init__(ground, table)
        n = ground.n
        for u in range(n):
            if self._table[u * n + u] != 1 << u:
                raise AxiomViolation("t3", (u, u))
            for v in range(u + 1, n):
                m = self._table[u * n + v]
                if self._table[v * n + u] != m:
                    raise ValueError("table must be symmetric")
                if m & ((1 << u) | (1 << v)) != (1 << u) | (1 << v):
                    raise AxiomViolation("t1", (u, v))
                if m >> n:
                    raise IndexOutOfRange(f"transit set at {(u, v)} leaves the ground set")

    def transit_mask(self, u: int, v: int) -> int:
        return self.mask_at(u, v)

    def transit_set(self, u: int, v: int) -> Subset:
        return Subset(self.ground, self.mask_at(u, v))

    def pairs_with_sets(self) -> Iterator[tuple[int, int, Subset]]:
        """Upper-triangular walk of (u, v, R(u,v)), diagonal included."""
        n = self.ground.n
        for u in range(n):
            for v in range(u, n):
                yield u, v, Subset(self.ground, self._table[u * n + v])

    def nontrivial_entries(self) -> list[tuple[int, int, int]]:
        """Off-diagonal pairs whose transit set differs from the default {u,v}."""
        n = self.ground.n
        out = []
        for u in range(n):
            for v in range(u + 1, n):
                m = self._table[u * n + v]
                if m != (1 << u) | (1 << v):
                    out.append((u, v, m))
        return out

    def to_json(self) -> dict:
        payload = {"n": self.ground.n}
        if self.ground.labels is not None:
            payload["labels"] = list(self.ground.labels)
        payload["entries"] = [
            {"u": u, "v": v, "set": list(Subset(self.ground, m))}
            for u, v, m in self.nontrivial_entries()
        ]
        return payload

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class Betweenness(_SymmetricTable):
    """Strict betweenness: endpoints never belong to their own set."""

    def __init__(self, ground: GroundSet, table: Sequence[int]):
        super().__init__(ground, table)
        n = ground.n
        for u in range(n):
            for v in range(n):
                m = self._table[u * n + v]
                if self._table[v * n + u] != m:
                    raise ValueError("table must be symmetric")
                if m & ((1 << u) | (1 << v)):
                    raise AxiomViolation("strict", (u, v), "endpoint inside B(u,v)")
                if m >> n:
                    raise IndexOutOfRange(f"set at {(u, v)} leaves the ground set")

    def between_set(self, u: int, v: int) -> Subset:
        return Subset(self.ground, self.mask_at(u, v))


def make_transit_function(
    ground: GroundSet,
    entries: Iterable[tuple[int, int, object]],
) -> TransitFunction:
    """Build a transit function; unspecified pairs default to {u, v}.

    Entries are (u, v, S) with S a Subset, an iterable of indices or a raw
    bit mask.  Each unordered pair may appear at most once; diagonal
    entries must equal {u}.
    """
    n = ground.n
    table = [0] * (n * n)
    for u in range(n):
        for v in range(n):
            table[u * n + v] = (1 << u) | (1 << v)
    seen = set()
    for u, v, s in entries:
        ground.check_index(u)
        ground.check_index(v)
        key = _pair_key(u, v)
        if key in seen:
            raise DuplicatePair(f"pair {key} specified twice")
        seen.add(key)
        if isinstance(s, Subset):
            mask = s.bits
        elif isinstance(s, int):
            mask = s
        else:
            mask = 0
            for e in s:
                ground.check_index(e)
                mask |= 1 << e
        if mask >> n or mask < 0:
            raise IndexOutOfRange(f"set at {key} leaves the ground set")
        if u == v:
            if mask != 1 << u:
                raise AxiomViolation("t3", key)
        elif mask & ((1 << u) | (1 << v)) != (1 << u) | (1 << v):
            raise AxiomViolation("t1", key)
        table[u * n + v] = mask
        table[v * n + u] = mask
    return TransitFunction(ground, table)


def minimal_transit_function(ground: GroundSet) -> TransitFunction:
    """R(u,v) = {u,v} everywhere."""
    return make_transit_function(ground, ())


def transit_set(R: TransitFunction, u: int, v: int) -> Subset:
    return R.transit_set(u, v)


def to_betweenness(R: TransitFunction) -> Betweenness:
    """Chvatal view: B(u,v) = R(u,v) minus its endpoints."""
    n = R.ground.n
    table = []
    src = R.table()
    for u in range(n):
        for v in range(n):
            table.append(src[u * n + v] & ~((1 << u) | (1 << v)))
    return Betweenness(R.ground, table)


def random_transit_function(n: int, seed: int, density: float) -> TransitFunction:
    """Seed-deterministic random transit function.

    Every non-endpoint element joins each R(u,v), u < v, independently
    with probability ``density``.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    ground = GroundSet(n)
    rng = random.Random(seed)
    entries = []
    for u in range(n):
        for v in range(u + 1, n):
            mask = (1 << u) | (1 << v)
            for w in range(n):
                if w != u and w != v and rng.random() < density:
                    mask |= 1 << w
            entries.append((u, v, mask))
    return make_transit_function(ground, entries)


def transit_function_from_json(payload: dict) -> TransitFunction:
    """Read the CLI's JSON transit-function format."""
    n = int(payload["n"])
    labels = payload.get("labels")
    ground = GroundSet(n, tuple(labels) if labels else None)
    entries = [(int(e["u"]), int(e["v"]), [int(i) for i in e["set"]]) for e in payload.get("entries", ())]
    return make_transit_function(ground, entries)
