"""Deterministic graph generators covering the structural cases the listing
algorithms branch on."""
from __future__ import annotations

import random

from .errors import BadParamsError
from .graph import Graph, build_graph


def _star(d: int) -> Graph:
    if d < 1:
        raise BadParamsError("star needs at least one leaf")
    return build_graph(d + 1, [(0, i) for i in range(1, d + 1)])


def _path(n: int) -> Graph:
    if n < 2:
        raise BadParamsError("path needs at least two vertices")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    if n < 3:
        raise BadParamsError("cycle needs at least three vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    if n < 2:
        raise BadParamsError("complete graph needs at least two vertices")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParamsError("both sides need at least one vertex")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _double_star(d1: int, d2: int) -> Graph:
    if d1 < 1 or d2 < 1:
        raise BadParamsError("both centers need at least one leaf")
    edges = [(0, 1)]
    edges.extend((0, 2 + i) for i in range(d1))
    edges.extend((1, 2 + d1 + i) for i in range(d2))
    return build_graph(2 + d1 + d2, edges)


def _dumbbell() -> Graph:
    """Two five-vertex near-cliques joined by three edges.

    Each side is a triangle of joint endpoints plus two poles adjacent to all
    three of them.  3-connected with at least 2^3 4-shredders: one red or blue
    endpoint per joining edge extends to a 4-shredder (verified by brute force
    in the generator tests).
    """
    # side A: poles 0,1 over triangle 2,3,4; side B: poles 5,6 over 7,8,9
    edges = [(2, 3), (2, 4), (3, 4), (7, 8), (7, 9), (8, 9)]
    edges += [(0, r) for r in (2, 3, 4)]
    edges += [(1, r) for r in (2, 3, 4)]
    edges += [(5, s) for s in (7, 8, 9)]
    edges += [(6, s) for s in (7, 8, 9)]
    edges += [(2, 7), (3, 8), (4, 9)]
    return build_graph(10, edges)


def _unbalanced(t: int, k: int, r: int) -> Graph:
    """Clique of size t, k cut vertices adjacent to the whole clique and to
    each other, and r leaf vertices adjacent to all k cut vertices.  Plants a
    unique unbalanced high-degree k-shredder with r+1 components."""
    if t < 2 or k < 1 or r < 2:
        raise BadParamsError("need t >= 2, k >= 1, r >= 2")
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    cut = range(t, t + k)
    edges += [(c, v) for c in cut for v in range(t)]
    edges += [(a, b) for a in cut for b in cut if a < b]
    edges += [(c, t + k + i) for i in range(r) for c in cut]
    return build_graph(t + k + r, edges)


def _lowdeg(t: int, k: int, r: int, d: int) -> Graph:
    """Like the unbalanced generator, but each cut vertex touches only d
    clique vertices (staggered), planting a low-degree shredder."""
    if t < 2 or k < 1 or r < 2 or not (1 <= d <= t):
        raise BadParamsError("need t >= 2, k >= 1, r >= 2, 1 <= d <= t")
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    cut = list(range(t, t + k))
    for ci, c in enumerate(cut):
        for off in range(d):
            edges.append((c, (ci + off) % t))
    edges += [(a, b) for a in cut for b in cut if a < b]
    edges += [(c, t + k + i) for i in range(r) for c in cut]
    return build_graph(t + k + r, edges)


def _random_connected(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi sample patched into connectivity by chaining components."""
    if n < 2 or not (0.0 <= p <= 1.0):
        raise BadParamsError("need n >= 2 and 0 <= p <= 1")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = [False] * n
    heads = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        heads.append(s)
        queue = [s]
        for a in queue:
            for b in adj[a]:
                if not seen[b]:
                    seen[b] = True
                    queue.append(b)
    edges.extend((heads[i], heads[i + 1]) for i in range(len(heads) - 1))
    return build_graph(n, sorted(set(tuple(sorted(e)) for e in edges)))


_KINDS = {
    "star": (_star, 1),
    "path": (_path, 1),
    "cycle": (_cycle, 1),
    "complete": (_complete, 1),
    "complete_bipartite": (_complete_bipartite, 2),
    "double_star": (_double_star, 2),
    "dumbbell": (_dumbbell, 0),
    "gen_unbalanced": (_unbalanced, 3),
    "gen_lowdeg": (_lowdeg, 4),
    "random_connected": (_random_connected, 3),
}


def gen(kind: str, *params) -> Graph:
    """Build a named test graph; see _KINDS for the parameter counts."""
    entry = _KINDS.get(kind)
    if entry is None:
        raise BadParamsError(f"unknown generator {kind!r}; choose from {sorted(_KINDS)}")
    fn, arity = entry
    if len(params) != arity:
        raise BadParamsError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    if kind == "random_connected":
        return fn(int(params[0]), float(params[1]), int(params[2]))
    return fn(*(int(p) for p in params))
