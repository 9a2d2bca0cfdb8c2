"""Statistics and invariants of the budgeted local path builder."""
from __future__ import annotations

import random

from shredders import gen, grow_local_paths, partition_of

STAR4 = gen("star", 3)
K33 = gen("complete_bipartite", 3, 3)


def _valid(g, ps, x, k, budget):
    if len(ps.paths) != k:
        return False
    seen = set()
    for p in ps.paths:
        if p[0] != x or len(set(p)) != len(p):
            return False
        for v in p[1:]:
            if v in seen:
                return False
            seen.add(v)
        for a, b in zip(p, p[1:]):
            if b not in g.adj[a]:
                return False
    return ps.total_length <= k * k * budget


def test_always_valid_or_absent():
    rng = random.Random(404)
    for _ in range(300):
        g = gen("random_connected", rng.randrange(4, 10), 0.4, rng.randrange(10**6))
        x = rng.randrange(g.n)
        k = rng.randrange(1, 4)
        budget = 1 << rng.randrange(0, 4)
        ps = grow_local_paths(g, x, budget, k, rng)
        if ps is not None:
            assert _valid(g, ps, x, k, budget)


def test_star_success_rate():
    rng = random.Random(1)
    ok = 0
    for _ in range(1000):
        ps = grow_local_paths(STAR4, 1, 2, 1, rng)
        if ps is not None:
            assert _valid(STAR4, ps, 1, 1, 2)
            ok += 1
    assert ok >= 250


def test_k33_success_rate():
    rng = random.Random(2)
    ok = 0
    for _ in range(1000):
        ps = grow_local_paths(K33, 0, 4, 3, rng)
        if ps is not None:
            assert _valid(K33, ps, 0, 3, 4)
            ok += 1
    assert ok >= 250


def test_planted_cut_endpoint_statistics():
    # seed on the small side of a planted cut: at least a quarter of the
    # attempts must land every endpoint in the big side, and the first
    # endpoint must clear the per-round bound with a small slack
    for t, k, r in [(6, 2, 2), (12, 2, 4), (10, 3, 4), (14, 3, 6)]:
        g = gen("gen_unbalanced", t, k, r)
        cut = set(range(t, t + k))
        part = partition_of(g, cut)
        big = part.largest
        nu = 1
        while nu < part.vol_rest:
            nu <<= 1
        assert nu < 2 * part.vol_rest
        rng = random.Random(3)
        trials = 1000
        hits = 0
        first = 0
        for _ in range(trials):
            ps = grow_local_paths(g, t + k, nu, k, rng)
            if ps is None:
                continue
            ends = ps.endpoints()
            if ends[0] in big:
                first += 1
            if all(e in big for e in ends):
                hits += 1
        assert hits >= trials / 4, (t, k, r, hits)
        assert first / trials >= 1 - 1 / k - 0.15, (t, k, r, first)
