"""Command-line front door.

Every subcommand prints a single JSON document on stdout.  Exit codes:
0 for successful computations (a negative verdict is still a success),
1 for usage errors, 2 for domain errors (malformed input, guard limits).
Randomized commands take --seed and default to a fixed constant.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import _backend, __version__
from .axioms import AXIOM_IDS, axiom_profile, check_axiom
from .convexity import convex_sets, hull, is_convex_geometry
from .core import Subset, transit_function_from_json
from .errors import TransitGeoError
from .graphs import MODEL_NAMES, build_model, graph_from_json, parse_graph6
from .harness import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    THEOREMS,
    count_connected_graphs,
    enumerate_connected_graphs,
    find_counterexample,
    verify_theorem,
)
from .hypergraph import (
    cutvertex_C_hyper,
    hyper_connected,
    hypergraph_from_json,
    strong_cut_vertices,
)
from .recognizers import CLASS_IDS, recognize
from .setsystems import (
    canonical_transit,
    check_k_axioms,
    set_system_from_json,
    transit_set_system,
    transit_system_is_convex_geometry,
)

SCHEMA_VERSION = "1"


class _Parser(argparse.ArgumentParser):
    """Usage problems exit 1; code 2 is reserved for domain errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_json(path: str | None):
    if path is None or path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_transit(args):
    return transit_function_from_json(_read_json(getattr(args, "input", None)))


def _load_graph(args):
    if getattr(args, "graph6", None):
        return parse_graph6(args.graph6)
    payload = _read_json(getattr(args, "input", None))
    if isinstance(payload, str):
        return parse_graph6(payload)
    return graph_from_json(payload)


def _emit(payload) -> int:
    json.dump(payload, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def _cmd_axioms(args) -> int:
    R = _load_transit(args)
    if args.axiom:
        return _emit(check_axiom(R, args.axiom).to_json())
    return _emit(axiom_profile(R).to_json())


def _cmd_hull(args) -> int:
    R = _load_transit(args)
    seed = [int(tok) for tok in args.set.split(",") if tok != ""]
    result = hull(R, Subset.from_indices(R.ground, seed))
    return _emit({"hull": list(result), "input": sorted(set(seed))})


def _cmd_convex_sets(args) -> int:
    R = _load_transit(args)
    family = convex_sets(R, method="scan" if args.scan else "closure")
    return _emit({
        "count": len(family),
        "sets": [list(Subset(R.ground, m)) for m in family],
    })


def _cmd_geometry(args) -> int:
    R = _load_transit(args)
    return _emit(is_convex_geometry(R).to_json())


def _cmd_build(args) -> int:
    g = _load_graph(args)
    R = build_model(g, args.model)
    return _emit(R.to_json())


def _cmd_recognize(args) -> int:
    verdicts = []
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        g = parse_graph6(line)
        verdict = recognize(g, getattr(args, "class"))
        payload = verdict.to_json()
        payload["graph6"] = line
        verdicts.append(payload)
    return _emit({"class": getattr(args, "class"), "verdicts": verdicts})


def _cmd_setsys(args) -> int:
    system = set_system_from_json(_read_json(args.input))
    payload = {"axioms": check_k_axioms(system).to_json()}
    if args.canonical:
        payload["canonical"] = canonical_transit(system).to_json()
    return _emit(payload)


def _cmd_hyper(args) -> int:
    h = hypergraph_from_json(_read_json(args.input))
    payload = {"connected": hyper_connected(h)}
    if payload["connected"]:
        payload["strong_cut_vertices"] = list(strong_cut_vertices(h))
        transit = cutvertex_C_hyper(h)
        payload["transit"] = transit.to_json()
        if args.geometry:
            payload["geometry"] = is_convex_geometry(transit).to_json()
    return _emit(payload)


def _cmd_transit_geometry(args) -> int:
    R = _load_transit(args)
    payload = {
        "k_axioms": check_k_axioms(transit_set_system(R)).to_json(),
        "geometry": transit_system_is_convex_geometry(R).to_json(),
    }
    return _emit(payload)


def _cmd_verify(args) -> int:
    corpus = None
    if args.corpus:
        with open(args.corpus, "r", encoding="utf-8") as fh:
            corpus = [parse_graph6(line) for line in fh if line.strip()]
    report = verify_theorem(
        args.theorem, n_max=args.n, seed=args.seed, samples=args.samples, corpus=corpus
    )
    return _emit(report.to_json())


def _cmd_enumerate(args) -> int:
    if args.count_only:
        return _emit({"n": args.n, "count": count_connected_graphs(args.n)})
    graphs = [g.to_graph6() for g in enumerate_connected_graphs(args.n)]
    return _emit({"n": args.n, "count": len(graphs), "graphs": graphs})


def _cmd_search(args) -> int:
    witness = find_counterexample(args.predicate, n_max=args.n, seed=args.seed, samples=args.samples)
    if witness is None:
        return _emit({"predicate": args.predicate, "found": False})
    return _emit({"predicate": args.predicate, "found": True, "witness": witness.to_json()})


def _schema() -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "package_version": __version__,
        "backend": _backend.BACKEND,
        "commands": {
            "axioms": "transit JSON -> {axiom, holds, witness} or full profile",
            "hull": "transit JSON + --set -> {hull: [indices]}",
            "convex-sets": "transit JSON -> {count, sets: [[indices]]}",
            "geometry": "transit JSON -> convex-geometry certificate",
            "build": "graph (graph6 or adjacency JSON) + --model -> transit JSON",
            "recognize": "graph6 lines on stdin + --class -> verdicts",
            "setsys": "set-system JSON -> k-axioms report (+canonical transit)",
            "transit-geometry": "transit JSON -> transit-set-system geometry",
            "hyper": "hypergraph JSON -> cut vertices + transit (+geometry)",
            "verify": "--theorem -> mismatch report",
            "enumerate": "--n -> connected graphs as graph6",
            "search": "--predicate -> first counterexample or none",
        },
        "formats": {
            "transit": '{"n": int, "labels"?: [str], "entries": [{"u": i, "v": j, "set": [k]}]}',
            "graph": '{"n": int, "adj": [[neighbor indices]]}',
            "setsystem": '{"n": int, "members": [[indices]]}',
            "hypergraph": '{"n": int, "edges": [[indices]]}',
        },
    }


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="transitgeo",
        description="Transit functions, betweenness axioms and convex geometries.",
    )
    parser.add_argument("--schema", action="store_true", help="print the output schema and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("axioms", help="check betweenness/transit axioms")
    p.add_argument("--input", help="transit-function JSON file (default stdin)")
    p.add_argument("--axiom", choices=AXIOM_IDS, help="single axiom instead of the full profile")
    p.set_defaults(func=_cmd_axioms)

    p = sub.add_parser("hull", help="convex hull of a subset")
    p.add_argument("--input")
    p.add_argument("--set", required=True, help="comma-separated element indices")
    p.set_defaults(func=_cmd_hull)

    p = sub.add_parser("convex-sets", help="enumerate all convex sets")
    p.add_argument("--input")
    p.add_argument("--scan", action="store_true", help="use the 2^n oracle scan")
    p.set_defaults(func=_cmd_convex_sets)

    p = sub.add_parser("geometry", help="convex-geometry certificate")
    p.add_argument("--input")
    p.set_defaults(func=_cmd_geometry)

    p = sub.add_parser("build", help="build a graph transit function")
    p.add_argument("--model", required=True, choices=MODEL_NAMES)
    p.add_argument("--graph6", help="graph6 string (otherwise JSON from --input/stdin)")
    p.add_argument("--input")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("recognize", help="recognize graph classes (graph6 on stdin)")
    p.add_argument("--class", required=True, choices=CLASS_IDS)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("setsys", help="set-system axioms and canonical transit function")
    p.add_argument("--input")
    p.add_argument("--canonical", action="store_true")
    p.set_defaults(func=_cmd_setsys)

    p = sub.add_parser("transit-geometry", help="convex geometry of the transit-set system")
    p.add_argument("--input")
    p.set_defaults(func=_cmd_transit_geometry)

    p = sub.add_parser("hyper", help="hypergraph cut-vertex analysis")
    p.add_argument("--input")
    p.add_argument("--geometry", action="store_true")
    p.set_defaults(func=_cmd_hyper)

    p = sub.add_parser("verify", help="run a theorem suite")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--corpus", help="file of graph6 lines appended to the built-in corpus")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="connected graphs up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("search", help="search for a counterexample")
    p.add_argument("--predicate", required=True, choices=("m_j0_b1_implies_cg", "ch_implies_b1", "hyper_cg_with_3plus_cuts"))
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=2000)
    p.set_defaults(func=_cmd_search)
    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse help or usage error
        return int(exc.code or 0)
    if args.schema:
        return _emit(_schema())
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except TransitGeoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
