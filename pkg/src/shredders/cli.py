"""Command-line front end: listing, most-shattering, brute verification, and
test-graph generation over the plain text format."""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .brute import brute_shredders, brute_vertex_connectivity
from .driver import list_all, most_shattering
from .errors import DisconnectedError, GraphError, TooLargeError
from .generators import gen
from .graph import format_graph_text, parse_graph_text
from .records import SamplingConfig

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_PRECONDITION = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shredders", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="graph in text format (first line 'n m')")
        p.add_argument("--seed", type=int, default=None,
                       help="PRNG seed (default: $SHREDDER_SEED or 1)")
        p.add_argument("--paper-constants", action="store_true",
                       help="use the published 400/300/800 loop factors")
        p.add_argument("--no-sparsify", action="store_true",
                       help="never sparsify before listing")

    p = sub.add_parser("shredders", help="list all k-shredders")
    common(p)
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("most-shattering", help="find a most-shattering minimum cut")
    common(p)
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("verify", help="diff repeated listings against brute force")
    common(p)
    p.add_argument("--runs", type=int, default=10)

    p = sub.add_parser("gen", help="write a generated test graph")
    p.add_argument("kind")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output", required=True)
    return parser


def _resolve_seed(ns) -> int:
    if ns.seed is not None:
        return ns.seed
    env = os.environ.get("SHREDDER_SEED")
    if env is not None:
        return int(env)
    return 1


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def _config(ns) -> SamplingConfig:
    return SamplingConfig.paper() if ns.paper_constants else SamplingConfig()


def _sparsify_flag(ns):
    return False if ns.no_sparsify else None


def run(argv) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        if ns.command == "gen":
            graph = gen(ns.kind, *ns.params)
            with open(ns.output, "w", encoding="utf-8") as fh:
                fh.write(format_graph_text(graph))
            print(f"wrote {ns.kind} graph: n={graph.n} m={graph.m} -> {ns.output}")
            return EXIT_OK

        seed = _resolve_seed(ns)
        graph = _load(ns.file)
        cfg = _config(ns)

        if ns.command == "shredders":
            k, records = list_all(graph, random.Random(seed), cfg,
                                  sparsify_first=_sparsify_flag(ns))
            if ns.as_json:
                payload = {
                    "k": k,
                    "shredders": [
                        {"vertices": list(r.vertices), "components": r.components}
                        for r in records
                    ],
                    "seed": seed,
                }
                print(json.dumps(payload, separators=(",", ":")))
            else:
                print(f"k={k} seed={seed} shredders={len(records)}")
                for r in records:
                    verts = ",".join(map(str, r.vertices))
                    print(f"  {{{verts}}} components={r.components}")
            return EXIT_OK

        if ns.command == "most-shattering":
            result = most_shattering(graph, random.Random(seed), cfg)
            if ns.as_json:
                payload = {
                    "k": result.k,
                    "cut": list(result.cut),
                    "components": result.components,
                    "is_shredder": result.is_shredder,
                    "seed": seed,
                }
                print(json.dumps(payload, separators=(",", ":")))
            else:
                verts = ",".join(map(str, result.cut))
                print(f"k={result.k} seed={seed} cut={{{verts}}} "
                      f"components={result.components} is_shredder={result.is_shredder}")
            return EXIT_OK

        # verify
        k = brute_vertex_connectivity(graph)
        expected = {cut: count for cut, count in brute_shredders(graph, k)}
        for run_idx in range(ns.runs):
            rng = random.Random(seed + run_idx)
            got_k, records = list_all(graph, rng, cfg,
                                      sparsify_first=_sparsify_flag(ns))
            got = {r.vertices: r.components for r in records}
            if got_k != k or got != expected:
                print(f"mismatch on run {run_idx} (seed {seed + run_idx}):")
                print(f"  expected k={k} {sorted(expected.items())}")
                print(f"  got      k={got_k} {sorted(got.items())}")
                return EXIT_MISMATCH
        print(f"verify ok: {ns.runs} runs, k={k}, {len(expected)} shredders, seed={seed}")
        return EXIT_OK

    except (DisconnectedError, TooLargeError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
