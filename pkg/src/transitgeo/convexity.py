"""R-convex sets, hulls, extreme points and convex-geometry testing.

The convex-geometry certificate always runs the three equivalent criteria
(Minkowski-Krein-Milman, anti-exchange, one-point extension) and insists
that they agree; a disagreement signals an implementation bug, never a
property of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import _backend
from .core import AxiomVerdict, Betweenness, Subset, TransitFunction
from .errors import GroundTooLarge, InternalDisagreement, NotConvex

ENUMERATION_GUARD = 24
SCAN_GUARD = 20
SUBSET_SCAN_GUARD = 16


def is_convex(R: TransitFunction, S: Subset) -> bool:
    """True iff R(u,v) stays inside S for every u, v in S."""
    n = R.ground.n
    table = R.table()
    mask = S.bits
    for u in S:
        row = u * n
        for v in S:
            if table[row + v] & ~mask:
                return False
    return True


def hull_mask(R: TransitFunction, seed: int) -> int:
    return _backend.hull_mask(R.ground.n, R.table(), seed)


def hull(R: TransitFunction, S: Subset) -> Subset:
    """Least R-convex superset of S (worklist fixpoint)."""
    return Subset(R.ground, hull_mask(R, S.bits))


@dataclass(frozen=True)
class ConvexFamily:
    """All R-convex sets, deduplicated and sorted by (size, bits)."""

    ground_n: int
    sets: tuple[int, ...]

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def subsets(self, ground) -> list[Subset]:
        return [Subset(ground, m) for m in self.sets]


def convex_sets(R: TransitFunction, method: str = "closure") -> ConvexFamily:
    """Enumerate the convexity C_R.

    ``closure`` walks the hull operator's closed sets (NextClosure);
    ``scan`` is the slow 2^n oracle mode used by tests.
    """
    n = R.ground.n
    if method == "closure":
        if n > ENUMERATION_GUARD:
            raise GroundTooLarge(f"n={n} exceeds enumeration guard {ENUMERATION_GUARD}")
        masks = _backend.convex_sets_closure(n, R.table())
    elif method == "scan":
        if n > SCAN_GUARD:
            raise GroundTooLarge(f"n={n} exceeds scan guard {SCAN_GUARD}")
        masks = _backend.convex_sets_scan(n, R.table())
    else:
        raise ValueError(f"unknown method {method!r}")
    ordered = sorted(masks, key=lambda m: (m.bit_count(), m))
    return ConvexFamily(n, tuple(ordered))


def extreme_points(R: TransitFunction, K: Subset) -> Subset:
    """Points of convex K whose removal keeps K convex."""
    if not is_convex(R, K):
        raise NotConvex(f"{K!r} is not R-convex")
    out = 0
    for k in K:
        if is_convex(R, Subset(R.ground, K.bits ^ (1 << k))):
            out |= 1 << k
    return Subset(R.ground, out)


@dataclass(frozen=True)
class CriterionVerdict:
    """One of the three convex-geometry criteria plus its witness."""

    ok: bool
    witness: Optional[tuple] = None


@dataclass(frozen=True)
class GeometryCertificate:
    """Joint verdict of the three equivalent convex-geometry tests.

    ``mkm`` carries the convex set that is not the hull of its extreme
    points; ``anti_exchange`` carries (K, p, q) with mutual exchange;
    ``extension`` carries a proper convex set with no one-point convex
    extension; ``chain`` is a peel order of V with every prefix-complement
    convex, present exactly when the family is a convex geometry.
    """

    is_geometry: bool
    mkm: CriterionVerdict
    anti_exchange: CriterionVerdict
    extension: CriterionVerdict
    chain: Optional[tuple[int, ...]]
    family_size: int

    def to_json(self) -> dict:
        def crit(c: CriterionVerdict, render) -> dict:
            return {"ok": c.ok, "witness": None if c.witness is None else render(c.witness)}

        return {
            "is_geometry": self.is_geometry,
            "mkm": crit(self.mkm, lambda m: {"set": _mask_list(m)}),
            "anti_exchange": crit(
                self.anti_exchange,
                lambda w: {"set": _mask_list(w[0]), "p": w[1], "q": w[2]},
            ),
            "extension": crit(self.extension, lambda m: {"set": _mask_list(m)}),
            "chain": None if self.chain is None else list(self.chain),
            "family_size": self.family_size,
        }


def _mask_list(mask: int) -> list[int]:
    out = []
    i = 0
    while mask >> i:
        if (mask >> i) & 1:
            out.append(i)
        i += 1
    return out


def family_geometry_certificate(n: int, family) -> GeometryCertificate:
    """Run the three criteria over an intersection-closed family of masks.

    The family must contain the empty and full masks.  Disagreement among
    the criteria raises InternalDisagreement.
    """
    fam_sorted = sorted(set(family), key=lambda m: (m.bit_count(), m))
    if fam_sorted[0] != 0 or fam_sorted[-1] != (1 << n) - 1:
        raise ValueError("family must contain the empty set and the ground set")
    mkm_w, ae_w, ext_w, chain = _backend.family_geometry(n, fam_sorted)
    verdicts = (mkm_w is None, ae_w is None, ext_w is None)
    if len(set(verdicts)) != 1:
        raise InternalDisagreement(f"criteria disagree: mkm={verdicts[0]} ae={verdicts[1]} ext={verdicts[2]}")
    return GeometryCertificate(
        is_geometry=all(verdicts),
        mkm=CriterionVerdict(mkm_w is None, mkm_w),
        anti_exchange=CriterionVerdict(ae_w is None, ae_w),
        extension=CriterionVerdict(ext_w is None, ext_w),
        chain=None if chain is None else tuple(chain),
        family_size=len(fam_sorted),
    )


def is_convex_geometry(R: TransitFunction) -> GeometryCertificate:
    """Decide whether the R-convexity is a convex geometry."""
    family = convex_sets(R)
    return family_geometry_certificate(R.ground.n, family.sets)


def ex_B(B: Betweenness, X: Subset) -> Subset:
    """Extreme points of X: never strictly between two others of X."""
    n = B.ground.n
    table = B.table()
    out = 0
    for x in X:
        rest = X.bits ^ (1 << x)
        extreme = True
        for u in Subset(B.ground, rest):
            row = u * n
            for v in Subset(B.ground, rest):
                if (table[row + v] >> x) & 1:
                    extreme = False
                    break
            if not extreme:
                break
        if extreme:
            out |= 1 << x
    return Subset(B.ground, out)


def check_eb1(B: Betweenness) -> AxiomVerdict:
    """Chvatal's (eB1) over every subset of the ground set."""
    n = B.ground.n
    if n > SUBSET_SCAN_GUARD:
        raise GroundTooLarge(f"n={n} exceeds subset-scan guard {SUBSET_SCAN_GUARD}")
    failing = _backend.eb1_witness(n, B.table())
    if failing is None:
        return AxiomVerdict("eb1", True, None)
    x_mask, x1, x2, x3 = failing
    witness = tuple((f"X{i}", v) for i, v in enumerate(_mask_list(x_mask)))
    witness += (("x1", x1), ("x2", x2), ("x3", x3))
    return AxiomVerdict("eb1", False, witness)


def check_eb2(B: Betweenness) -> AxiomVerdict:
    """Chvatal's (eB2): the (Ch) pattern evaluated on strict betweenness."""
    failing = _backend.axiom_ch(B.ground.n, B.table())
    if failing is None:
        return AxiomVerdict("eb2", True, None)
    return AxiomVerdict("eb2", False, tuple(zip(("u", "v", "w", "x", "y"), failing)))


def segment_transit(R: TransitFunction) -> TransitFunction:
    """R*(u,v) = hull of R(u,v); equals R when R is monotone."""
    n = R.ground.n
    src = R.table()
    table = [0] * (n * n)
    for u in range(n):
        for v in range(u, n):
            h = _backend.hull_mask(n, src, src[u * n + v])
            table[u * n + v] = h
            table[v * n + u] = h
    return TransitFunction(R.ground, table)


def is_jhc(R: TransitFunction) -> AxiomVerdict:
    """Join hull commutativity over every nonempty convex set and point.

    <K u p> must equal the union of <{k, p}> over k in K.  The empty set is
    excluded: the displayed equality is about joins with existing hulls.
    """
    n = R.ground.n
    if n > ENUMERATION_GUARD:
        raise GroundTooLarge(f"n={n} exceeds enumeration guard {ENUMERATION_GUARD}")
    table = R.table()
    pair_hulls = [
        [_backend.hull_mask(n, table, (1 << k) | (1 << p)) for p in range(n)]
        for k in range(n)
    ]
    for k_mask in convex_sets(R):
        if k_mask == 0:
            continue
        for p in range(n):
            lhs = _backend.hull_mask(n, table, k_mask | (1 << p))
            rhs = 0
            for k in _mask_list(k_mask):
                rhs |= pair_hulls[k][p]
            if lhs != rhs:
                witness = tuple((f"K{i}", v) for i, v in enumerate(_mask_list(k_mask)))
                return AxiomVerdict("jhc", False, witness + (("p", p),))
    return AxiomVerdict("jhc", True, None)
