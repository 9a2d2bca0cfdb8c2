"""Budgeted construction of k openly-disjoint paths out of a seed vertex.

Works on the vertex-split directed graph kept implicitly: per round, a DFS
from the seed explores up to k*budget residual arcs, a random explored arc
head becomes the round's endpoint, and the DFS-tree path to it is reversed.
The final reversed-arc set decomposes into the k paths.
"""
from __future__ import annotations

import random

from .errors import MalformedTupleError
from .graph import Graph
from .paths import PathSystem

# split node ids: 2v = v_in, 2v+1 = v_out; arcs packed as tail*width + head

_split_cache: list = [None, None]  # [graph, out-arc lists]


def _split_out(g: Graph) -> list[tuple[int, ...]]:
    """Static out-arc lists of the vertex-split digraph, cached per graph."""
    if _split_cache[0] is g:
        return _split_cache[1]
    out: list[tuple[int, ...]] = []
    for v in range(g.n):
        out.append((2 * v + 1,))  # v_in -> v_out
        out.append(tuple(2 * w for w in g.neighbors[v]))  # v_out -> w_in
    _split_cache[0] = g  # the held reference keeps the identity check sound
    _split_cache[1] = out
    return out


def grow_local_paths(g: Graph, x: int, budget: int, k: int,
                     rng: random.Random) -> PathSystem | None:
    """Try to build k openly-disjoint simple paths from x of total length
    at most k*k*budget.  None is a legitimate probabilistic outcome."""
    width = 2 * g.n
    source = 2 * x + 1
    x_in = 2 * x
    cap = k * budget
    split = _split_out(g)
    flipped: set[int] = set()
    back: dict[int, list[int]] = {}
    # vertex splitting alone does not keep endpoints openly disjoint: a unit
    # may terminate at an in-node without consuming the through-arc, letting a
    # later round route through (or terminate at) that vertex.  So used
    # endpoints lose their through-arc, and in-nodes whose through-arc already
    # carries flow are never sampled as terminals.
    used: set[int] = {x}

    def _arcs(node: int) -> tuple[int, ...]:
        if not (node & 1) and node >> 1 in used:
            base: tuple[int, ...] = ()  # frozen endpoint: no through-arc
        else:
            base = split[node]
        bk = back.get(node)
        return base if not bk else base + tuple(bk)

    for _ in range(k):
        parent: dict[int, int] = {source: -1}
        pool: list[int] = []  # explored arc heads usable as fresh endpoints
        count = 0
        stack = [[source, _arcs(source), 0]]
        while stack and count < cap:
            top = stack[-1]
            a, lst, i = top
            abase = a * width
            moved = False
            n_arcs = len(lst)
            while i < n_arcs:
                b = lst[i]
                i += 1
                if b == x_in or abase + b in flipped:
                    continue
                count += 1
                if b >> 1 not in used and (
                        b & 1 or (b * width + b + 1) not in flipped):
                    pool.append(b)
                if b not in parent:
                    parent[b] = a
                    top[2] = i
                    stack.append([b, _arcs(b), 0])
                    moved = True
                    break
                if count >= cap:
                    break
            if moved:
                continue
            if count >= cap:
                break
            stack.pop()
        if not pool:
            return None
        node = pool[rng.randrange(len(pool))]
        used.add(node >> 1)
        while node != source:
            a = parent[node]
            bl = back.get(a)
            if bl is not None and node in bl:
                bl.remove(node)
                flipped.discard(node * width + a)
            else:
                flipped.add(a * width + node)
                back.setdefault(node, []).append(a)
            node = a

    # decompose the reversed arcs into k walks from the seed
    succ: dict[int, list[int]] = {}
    for arc in sorted(flipped):
        succ.setdefault(arc // width, []).append(arc % width)
    limit = k * k * budget + 2
    paths = []
    for _ in range(k):
        node = source
        seq = [x]
        lst = succ.get(node)
        while lst:
            node = lst.pop()
            v = node >> 1
            if v != seq[-1]:
                seq.append(v)
                if len(seq) > limit:
                    return None
            lst = succ.get(node)
        if len(seq) < 2:
            return None
        paths.append(seq)
    try:
        # walks follow real graph arcs, so only the sharing rules need checking
        ps = PathSystem.build(x, paths)
    except MalformedTupleError:
        return None
    if ps.total_length > k * k * budget:
        return None
    return ps
