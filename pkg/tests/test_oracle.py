"""DFS-tree failure oracle: tree structure, exact connectivity, component
roots, and internal-component representatives."""
from __future__ import annotations

import random
from itertools import combinations

import pytest

from shredders import (
    DisconnectedError,
    FailureOracle,
    QueriedFailedVertexError,
    build_graph,
    components,
    gen,
)

PATH3 = gen("path", 3)
K33 = gen("complete_bipartite", 3, 3)
STAR4 = gen("star", 3)


def test_preprocess_tree_shape():
    o = FailureOracle(PATH3)
    assert o.dfs.root == 0
    assert o.dfs.parent == [None, 0, 1]

    o = FailureOracle(STAR4)
    assert o.dfs.parent == [None, 0, 0, 0]

    # all non-tree edges must close vertically (checked inside the constructor)
    FailureOracle(K33)

    with pytest.raises(DisconnectedError):
        FailureOracle(build_graph(4, [(0, 1), (2, 3)]))


def test_connected_queries():
    o = FailureOracle(PATH3)
    o.update({1})
    assert not o.connected(0, 2)
    with pytest.raises(QueriedFailedVertexError):
        o.connected(1, 2)

    o = FailureOracle(K33)
    o.update({3, 4, 5})
    assert not o.connected(0, 1)
    o.update(())
    assert o.connected(0, 1)
    assert o.connected(2, 2)


def test_connected_matches_bfs():
    rng = random.Random(60)
    checks = 0
    while checks < 10_000:
        g = gen("random_connected", rng.randrange(4, 11), 0.4, rng.randrange(10**6))
        o = FailureOracle(g)
        for _ in range(10):
            f = set(rng.sample(range(g.n), rng.randrange(0, min(4, g.n - 2) + 1)))
            o.update(f)
            comps = components(g, f)
            loc = {}
            for i, c in enumerate(comps):
                for v in c:
                    loc[v] = i
            alive = [v for v in range(g.n) if v not in f]
            for _ in range(10):
                u, v = rng.choice(alive), rng.choice(alive)
                assert o.connected(u, v) == (loc[u] == loc[v])
                checks += 1


def test_component_root():
    o = FailureOracle(PATH3)
    assert o.component_root(2, {1}) == 2
    assert o.component_root(0, {1}) == 0
    chain = gen("path", 4)
    o = FailureOracle(chain)
    assert o.component_root(3, {1}) == 2
    with pytest.raises(QueriedFailedVertexError):
        o.component_root(1, {1})


def test_internal_representatives_examples():
    o = FailureOracle(PATH3)
    assert o.internal_representatives({1}) == [0]
    assert o.internal_representatives({2}) == [0]
    o = FailureOracle(STAR4)  # rooted at the center
    assert o.internal_representatives({1}) == [0]
    assert o.internal_representatives({0}) == []  # only hanging subtrees remain


def test_internal_representatives_structure():
    rng = random.Random(61)
    for _ in range(200):
        g = gen("random_connected", rng.randrange(4, 11), 0.35, rng.randrange(10**6))
        o = FailureOracle(g)
        size = rng.randrange(1, min(4, g.n - 1) + 1)
        fail = set(rng.sample(range(g.n), size))
        reps = o.internal_representatives(fail)
        assert len(reps) <= len(fail)
        # reps are roots of distinct tree components, each an ancestor of a failure
        seen_comps = set()
        for r in reps:
            assert o.component_root(r, fail) == r
            assert any(o.dfs.is_ancestor(r, u) for u in fail)
            assert r not in seen_comps
            seen_comps.add(r)
        # completeness: every internal component of the tree minus failures
        # owns exactly one representative
        tree_edges = [(v, p) for v, p in enumerate(o.dfs.parent) if p is not None]
        tg = build_graph(g.n, tree_edges)
        for comp in components(tg, fail):
            root = min(comp, key=lambda v: o.dfs.depth[v])
            internal = any(o.dfs.is_ancestor(root, u) for u in fail)
            assert (root in reps) == internal


def test_tree_connectivity_decomposition():
    # two vertices are connected without the failures iff they share a tree
    # component or both reach a common internal component
    rng = random.Random(62)
    for _ in range(150):
        g = gen("random_connected", rng.randrange(4, 11), 0.4, rng.randrange(10**6))
        o = FailureOracle(g)
        for size in (1, 2, 3):
            if size > g.n - 2:
                continue
            fail = set(rng.sample(range(g.n), size))
            o.update(fail)
            reps = o.internal_representatives(fail)
            alive = [v for v in range(g.n) if v not in fail]
            for u, v in combinations(alive, 2):
                lhs = o.connected(u, v)
                rhs = o.component_root(u, fail) == o.component_root(v, fail) or any(
                    o.connected(u, r) and o.connected(v, r) for r in reps
                )
                assert lhs == rhs, (g.edges, fail, u, v)
