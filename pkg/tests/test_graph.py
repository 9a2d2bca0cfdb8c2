"""Graph core: construction, volume, components, partitions, connectivity,
sparsification, and edge sampling."""
from __future__ import annotations

import random
from itertools import combinations

import pytest

from shredders import (
    DuplicateEdgeError,
    EmptyGraphError,
    NotASeparatorError,
    SelfLoopError,
    VertexRangeError,
    brute_shredders,
    brute_vertex_connectivity,
    build_graph,
    components,
    format_graph_text,
    gen,
    min_vertex_cut,
    parse_graph_text,
    partition_of,
    sample_edge,
    sparsify,
    vertex_connectivity,
    volume,
)

STAR4 = gen("star", 3)
K33 = gen("complete_bipartite", 3, 3)
PATH3 = gen("path", 3)
C4 = gen("cycle", 4)


def test_build_basic():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert (g.n, g.m) == (4, 3)
    assert g.adj[0] == frozenset({1, 2, 3})
    assert K33.m == 9


def test_build_rejects_bad_edges():
    with pytest.raises(SelfLoopError):
        build_graph(3, [(0, 1), (1, 1)])
    with pytest.raises(DuplicateEdgeError):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(VertexRangeError):
        build_graph(3, [(0, 3)])


def test_text_roundtrip():
    text = format_graph_text(K33)
    g = parse_graph_text(text)
    assert g.n == K33.n and sorted(g.edges) == sorted(K33.edges)
    g = parse_graph_text("# comment\n\n3 2\n0 1\n\n1 2\n")
    assert (g.n, g.m) == (3, 2)
    with pytest.raises(VertexRangeError):
        parse_graph_text("3 2\n0 1\n")


def test_volume():
    assert volume(STAR4, {0}) == 3
    assert volume(STAR4, set()) == 0
    assert volume(K33, {0, 1}) == 6
    with pytest.raises(VertexRangeError):
        volume(STAR4, {9})


def test_volume_properties():
    rng = random.Random(5)
    for _ in range(50):
        g = gen("random_connected", 8, 0.4, rng.randrange(10**6))
        verts = list(range(g.n))
        q = {v for v in verts if rng.random() < 0.5}
        q2 = q | {rng.randrange(g.n)}
        assert volume(g, q) <= volume(g, q2) <= g.m
        assert volume(g, verts) == g.m


def test_components():
    assert components(STAR4, {0}) == [frozenset({1}), frozenset({2}), frozenset({3})]
    assert components(K33, {3, 4, 5}) == [frozenset({0}), frozenset({1}), frozenset({2})]
    assert components(PATH3, {1}) == [frozenset({0}), frozenset({2})]
    assert components(K33, set()) == [frozenset(range(6))]


def test_partition_of():
    p = partition_of(STAR4, {0})
    assert p.largest == frozenset({1})
    assert p.rest == (frozenset({2}), frozenset({3}))
    assert p.vol_rest == 2

    p = partition_of(PATH3, {1})
    assert p.largest == frozenset({0}) and p.rest == (frozenset({2}),) and p.vol_rest == 1

    p = partition_of(K33, {0, 1, 2})
    assert p.largest == frozenset({3}) and p.vol_rest == 6

    with pytest.raises(NotASeparatorError):
        partition_of(K33, {0})


def test_partition_volume_identity():
    # every edge touches exactly one component or lies inside the separator
    rng = random.Random(11)
    for _ in range(60):
        g = gen("random_connected", 9, 0.35, rng.randrange(10**6))
        cut = set(rng.sample(range(g.n), rng.randrange(1, 4)))
        comps = components(g, cut)
        if len(comps) < 2:
            continue
        p = partition_of(g, cut)
        internal = sum(1 for u, v in g.edges if u in cut and v in cut)
        assert volume(g, p.largest) + p.vol_rest + internal == g.m


def test_vertex_connectivity_examples():
    assert vertex_connectivity(STAR4) == 1
    assert vertex_connectivity(C4) == 2
    assert vertex_connectivity(K33) == 3
    assert vertex_connectivity(gen("complete", 5)) == 4
    two = build_graph(4, [(0, 1), (2, 3)])
    assert vertex_connectivity(two) == 0


def test_vertex_connectivity_matches_brute():
    rng = random.Random(23)
    for _ in range(40):
        g = gen("random_connected", rng.randrange(4, 10), rng.choice([0.3, 0.5, 0.7]),
                rng.randrange(10**6))
        assert vertex_connectivity(g) == brute_vertex_connectivity(g)


def test_min_vertex_cut_witness():
    for _ in range(25):
        seed = random.Random(31).randrange(10**6) + _
        g = gen("random_connected", 9, 0.4, seed)
        k, cut = min_vertex_cut(g)
        if k == 0 or g.is_complete():
            continue
        assert len(cut) == k
        assert len(components(g, cut)) >= 2


def test_sparsify_examples():
    assert sparsify(STAR4, 1).m == 3
    assert sparsify(K33, 3).m == 9
    k6 = gen("complete", 6)
    s = sparsify(k6, 2)
    assert s.m <= 15
    assert brute_shredders(k6, 2) == brute_shredders(s, 2)


def test_sparsify_bound_and_preservation():
    rng = random.Random(41)
    for _ in range(30):
        g = gen("random_connected", rng.randrange(5, 12), 0.5, rng.randrange(10**6))
        k = brute_vertex_connectivity(g)
        if not (1 <= k <= 3):
            continue
        s = sparsify(g, k)
        assert s.m <= (k + 1) * (s.n - 1)
        assert brute_vertex_connectivity(s) == k
        got = [cut for cut, _ in brute_shredders(s, k)]
        want = [cut for cut, _ in brute_shredders(g, k)]
        assert got == want


def test_sample_edge():
    rng = random.Random(7)
    seen = set()
    for _ in range(200):
        u, v = sample_edge(STAR4, rng)
        key = (u, v) if u < v else (v, u)
        assert key in set(STAR4.edges)
        seen.add(key)
    assert seen == set(STAR4.edges)

    a = [sample_edge(K33, random.Random(99)) for _ in range(50)]
    b = [sample_edge(K33, random.Random(99)) for _ in range(50)]
    assert a == b

    with pytest.raises(EmptyGraphError):
        sample_edge(build_graph(2, []), rng)


def test_sample_edge_frequencies():
    rng = random.Random(13)
    draws = 100_000
    counts = {e: 0 for e in STAR4.edges}
    first = {v: 0 for v in range(4)}
    for _ in range(draws):
        u, v = sample_edge(STAR4, rng)
        counts[(u, v) if u < v else (v, u)] += 1
        first[u] += 1
    # each edge within 3 sigma of draws/3
    sigma = (draws * (1 / 3) * (2 / 3)) ** 0.5
    for e, c in counts.items():
        assert abs(c - draws / 3) <= 3 * sigma
    # orientation is uniform: the hub leads half the time
    assert abs(first[0] - draws / 2) <= 3 * (draws * 0.25) ** 0.5
