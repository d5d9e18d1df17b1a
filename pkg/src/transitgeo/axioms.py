"""Decision procedures with witnesses for the betweenness/transit axioms.

Quantifier scope: every axiom ranges over all tuples of (not necessarily
distinct) elements, except (j0) whose defining condition is written for
distinct u, v, x, y.  Witnesses are the lexicographically first failing
tuples in index order, scanned in the role order listed per axiom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import _backend
from .core import AxiomVerdict, TransitFunction

AXIOM_IDS = ("b1", "b3", "m", "j0", "ch", "p", "a_prime", "k", "cg")

_ROLES = {
    "b1": ("u", "v", "x"),
    "b3": ("u", "v", "x", "y"),
    "m": ("u", "v", "x", "y"),
    "j0": ("u", "v", "x", "y"),
    "ch": ("u", "v", "w", "x", "y"),
    "p": ("u", "v", "w", "x", "y"),
    "k": ("u", "v", "x", "y"),
    "cg": ("x", "y"),
}

_CHECKS = {
    "b1": _backend.axiom_b1,
    "b3": _backend.axiom_b3,
    "m": _backend.axiom_m,
    "j0": _backend.axiom_j0,
    "ch": _backend.axiom_ch,
    "p": _backend.axiom_p,
    "k": _backend.axiom_k,
    "cg": _backend.axiom_cg,
}


def check_axiom(R: TransitFunction, axiom: str) -> AxiomVerdict:
    """Exhaustively decide one axiom on R.

    Universal axioms fail with the instantiating tuple as witness; the
    existential (a_prime) holds with the witnessing pair and carries no
    witness when it fails (every pair is a non-witness).
    """
    n = R.ground.n
    table = R.table()
    if axiom == "a_prime":
        pair = _backend.axiom_aprime(n, table)
        if pair is None:
            return AxiomVerdict("a_prime", False, None)
        return AxiomVerdict("a_prime", True, (("u", pair[0]), ("v", pair[1])))
    try:
        checker = _CHECKS[axiom]
    except KeyError:
        raise ValueError(f"unknown axiom {axiom!r}") from None
    failing = checker(n, table)
    if failing is None:
        return AxiomVerdict(axiom, True, None)
    witness = tuple(zip(_ROLES[axiom], failing))
    return AxiomVerdict(axiom, False, witness)


@dataclass(frozen=True)
class AxiomProfile:
    """Verdicts for every axiom id."""

    verdicts: Mapping[str, AxiomVerdict]

    def __post_init__(self):
        missing = set(AXIOM_IDS) - set(self.verdicts)
        if missing:
            raise ValueError(f"profile missing axioms: {sorted(missing)}")

    def __getitem__(self, axiom: str) -> AxiomVerdict:
        return self.verdicts[axiom]

    def holds(self, axiom: str) -> bool:
        return self.verdicts[axiom].holds

    def to_json(self) -> dict:
        return {a: self.verdicts[a].to_json() for a in AXIOM_IDS}


def axiom_profile(R: TransitFunction) -> AxiomProfile:
    """Verdicts for all axioms; agrees with per-axiom checks."""
    return AxiomProfile({a: check_axiom(R, a) for a in AXIOM_IDS})


def recheck_witness(R: TransitFunction, verdict: AxiomVerdict) -> bool:
    """Re-evaluate a witness against the axiom's defining condition.

    Returns True when the witness indeed demonstrates what the verdict
    claims (a violation for failed universal axioms, a witnessing pair for
    a held existential).
    """
    if verdict.witness is None:
        return verdict.holds or verdict.axiom == "a_prime"
    w = dict(verdict.witness)
    member = lambda a, b, x: (R.transit_mask(a, b) >> x) & 1 == 1  # noqa: E731
    a = verdict.axiom
    if a == "b1":
        return member(w["u"], w["v"], w["x"]) and w["x"] != w["v"] and member(w["u"], w["x"], w["v"])
    if a == "b3":
        return (
            member(w["u"], w["v"], w["x"])
            and member(w["u"], w["x"], w["y"])
            and not member(w["y"], w["v"], w["x"])
        )
    if a == "m":
        r = R.transit_mask(w["u"], w["v"])
        return (
            (r >> w["x"]) & 1 == 1
            and (r >> w["y"]) & 1 == 1
            and R.transit_mask(w["x"], w["y"]) & ~r != 0
        )
    if a == "j0":
        distinct = len({w["u"], w["v"], w["x"], w["y"]}) == 4
        return (
            distinct
            and member(w["u"], w["y"], w["x"])
            and member(w["x"], w["v"], w["y"])
            and not member(w["u"], w["v"], w["x"])
        )
    if a == "ch":
        return (
            member(w["u"], w["v"], w["x"])
            and member(w["x"], w["w"], w["y"])
            and not member(w["u"], w["w"], w["y"])
            and not member(w["v"], w["w"], w["y"])
            and not member(w["u"], w["v"], w["y"])
        )
    if a == "p":
        if not (member(w["u"], w["v"], w["x"]) and member(w["x"], w["w"], w["y"])):
            return False
        for z in R.transit_set(w["u"], w["w"]):
            if member(z, w["v"], w["y"]):
                return False
        return True
    if a == "a_prime":
        return R.transit_mask(w["u"], w["v"]) == R.ground.full_mask
    if a == "k":
        inter = R.transit_mask(w["u"], w["v"]) & R.transit_mask(w["x"], w["y"])
        return inter != 0 and inter not in set(R.table())
    if a == "cg":
        r = R.transit_mask(w["x"], w["y"])
        if r == R.ground.full_mask:
            return False
        for ww in range(R.ground.n):
            if (r >> ww) & 1:
                continue
            for z in R.transit_set(w["x"], w["y"]):
                if R.transit_mask(ww, z) == r | (1 << ww):
                    return False
        return True
    raise ValueError(f"unknown axiom {a!r}")
