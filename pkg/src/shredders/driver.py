"""Top-level listing: balanced sampling, unbalanced local probing, the merged
full listing, and the most-shattering cut query."""
from __future__ import annotations

import random
from dataclasses import replace

from .errors import DisconnectedError
from .graph import Graph, components, min_vertex_cut, sample_edge, sparsify
from .local_flow import grow_local_paths
from .local_listing import CaptureTuple, local_list
from .oracle import FailureOracle
from .records import (
    MostShatteringResult,
    SamplingConfig,
    ShredderRecord,
    ceil_log2_ratio,
    log_rounds,
)
from .resolution import (
    UnverifiedRecord,
    count_low_degree_components,
    high_degree_extract,
    low_degree_check,
)
from .paths import shredders_between

_DESK = SamplingConfig()


def _merge(found: dict[tuple[int, ...], ShredderRecord], recs) -> None:
    # counts from non-capturing probes can undershoot but never overshoot,
    # so the max across provenances is the exact count
    for rec in recs:
        old = found.get(rec.vertices)
        if old is None or rec.components > old.components:
            found[rec.vertices] = rec


def list_balanced(g: Graph, k: int, rng: random.Random,
                  cfg: SamplingConfig = _DESK) -> list[ShredderRecord]:
    """Shredders found by sampling endpoint pairs: complete for the balanced
    ones (small side at least m/k of the volume) with high probability."""
    found: dict[tuple[int, ...], ShredderRecord] = {}
    rounds = cfg.balanced_factor * k * log_rounds(g.n)
    for _ in range(rounds):
        x = sample_edge(g, rng)[0]
        y = sample_edge(g, rng)[0]
        if x == y:
            continue
        _merge(found, shredders_between(g, x, y, k))
    return [found[key] for key in sorted(found)]


def list_unbalanced(g: Graph, k: int, rng: random.Random,
                    cfg: SamplingConfig = _DESK) -> list[ShredderRecord]:
    """Shredders found by budgeted local probing: complete for the unbalanced
    ones with high probability.

    Geometric budgets bracket every possible small-side volume; per sampled
    seed, repeated local path growth feeds the local lister, and unverified
    separators go through the low-degree check or pool up for the high-degree
    extraction pass.
    """
    found: dict[tuple[int, ...], ShredderRecord] = {}
    oracle = FailureOracle(g)
    pool: list[UnverifiedRecord] = []
    pooled_keys: set = set()
    logn = log_rounds(g.n)
    tries = cfg.boost_factor * logn
    top = ceil_log2_ratio(g.m, max(k, 1))
    # a repeated (seed, budget) sample would rerun an identically distributed
    # boost batch, so one batch per distinct pair carries the same guarantee;
    # when a level draws more samples than there are vertices, trying every
    # vertex outright covers a superset of anything the sampler could hit
    done: set[tuple[int, int]] = set()
    for i in range(top + 1):
        nu = 1 << i
        rounds = cfg.hit_factor * ((g.m + nu - 1) // nu) * logn
        if rounds >= g.n:
            seeds = range(g.n)
        else:
            seeds = (sample_edge(g, rng)[0] for _ in range(rounds))
        for x in seeds:
            if (x, nu) in done:
                continue
            done.add((x, nu))
            for _ in range(tries):
                ps = grow_local_paths(g, x, nu, k, rng)
                if ps is None:
                    continue
                res = local_list(g, CaptureTuple(x, nu, ps))
                _merge(found, res.shredders)
                if res.unverified is not None:
                    rec = UnverifiedRecord(x, nu, ps, res.unverified, res.vol_qx)
                    if low_degree_check(oracle, rec):
                        count = count_low_degree_components(oracle, rec)
                        _merge(found, [ShredderRecord(
                            tuple(sorted(rec.unverified)), count, "low-degree")])
                    else:
                        key = (x, nu, tuple(sorted(rec.unverified)), rec.vol_qx,
                               rec.paths.endpoints())
                        if key not in pooled_keys:
                            pooled_keys.add(key)
                            pool.append(rec)
    _merge(found, high_degree_extract(g, pool, rng, cfg))
    return [found[key] for key in sorted(found)]


def list_all(g: Graph, rng: random.Random, cfg: SamplingConfig = _DESK,
             sparsify_first: bool | None = None,
             k: int | None = None) -> tuple[int, list[ShredderRecord]]:
    """All k-shredders of g with exact component counts (whp complete).

    ``k`` may be passed when the connectivity is already known; computing it
    exactly is the one quadratic step and dominates on large inputs.
    ``sparsify_first=None`` sparsifies exactly when it would shrink the edge
    count; sparsification preserves the shredder sets but not the component
    counts, so counts are then recomputed on the original graph.
    """
    if k is None:
        k = min_vertex_cut(g)[0]
    if k == 0:
        raise DisconnectedError("the graph is not connected")
    if g.is_complete():
        return k, []
    work = g
    sparsified = False
    if sparsify_first is None:
        sparsify_first = g.m > (k + 1) * (g.n - 1)
    if sparsify_first:
        work = sparsify(g, k)
        sparsified = True
    found: dict[tuple[int, ...], ShredderRecord] = {}
    _merge(found, list_balanced(work, k, rng, cfg))
    _merge(found, list_unbalanced(work, k, rng, cfg))
    records = [found[key] for key in sorted(found)]
    if sparsified:
        records = [replace(r, components=len(components(g, r.vertices)))
                   for r in records]
    return k, records


def _select_most_shattering(g: Graph, k: int,
                            records: list[ShredderRecord]) -> MostShatteringResult:
    if records:
        best_count = max(r.components for r in records)
        best = min(r.vertices for r in records if r.components == best_count)
        return MostShatteringResult(best, best_count, True, k)
    kappa, cut = min_vertex_cut(g)
    cut_t = tuple(sorted(cut))
    count = len(components(g, cut))
    return MostShatteringResult(cut_t, count, count >= 3, kappa)


def most_shattering(g: Graph, rng: random.Random,
                    cfg: SamplingConfig = _DESK) -> MostShatteringResult:
    """A minimum vertex cut maximizing the component count; when no minimum
    cut shatters the graph into three parts, any minimum separator."""
    k, records = list_all(g, rng, cfg)
    return _select_most_shattering(g, k, records)
