"""Graph core: construction, volume, components, connectivity, sparsification.

Vertices are ints 0..n-1. Graphs are simple, undirected, and immutable after
construction; every randomized routine takes an explicit ``random.Random``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    DuplicateEdgeError,
    EmptyGraphError,
    NotASeparatorError,
    SelfLoopError,
    VertexRangeError,
)


class Graph:
    """Immutable simple undirected graph.

    ``adj`` holds per-vertex neighbor sets for O(1) membership tests;
    ``neighbors`` holds the same adjacency as sorted tuples so that every
    traversal in the package is deterministic; ``edges`` is the edge array
    (u < v) used for uniform sampling.
    """

    __slots__ = ("n", "m", "adj", "neighbors", "edges")

    def __init__(self, n: int, adj: list[frozenset[int]], edges: list[tuple[int, int]]):
        self.n = n
        self.m = len(edges)
        self.adj = adj
        self.neighbors = [tuple(sorted(s)) for s in adj]
        self.edges = edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list) -> Graph:
    """Build a graph from an edge list, rejecting self-loops and duplicates."""
    if n < 1:
        raise VertexRangeError(f"need at least one vertex, got n={n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, [frozenset(s) for s in adj], edges)


def parse_graph_text(text: str) -> Graph:
    """Parse the plain text format: first line ``n m``, then m lines ``u v``.

    Lines starting with '#' are comments; blank lines are ignored.
    """
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line)
    if not rows:
        raise VertexRangeError("empty graph file")
    head = rows[0].split()
    if len(head) != 2:
        raise VertexRangeError(f"bad header line: {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise VertexRangeError(f"header says m={m} but found {len(rows) - 1} edge lines")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise VertexRangeError(f"bad edge line: {row!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _check_vertices(g: Graph, q) -> None:
    for v in q:
        if not (0 <= v < g.n):
            raise VertexRangeError(f"vertex {v} out of range for n={g.n}")


def volume(g: Graph, q) -> int:
    """Number of edges with at least one endpoint in ``q``."""
    qs = q if isinstance(q, (set, frozenset)) else set(q)
    _check_vertices(g, qs)
    adj = g.adj
    total = 0
    internal = 0
    for v in qs:
        total += len(adj[v])
        internal += len(adj[v] & qs)
    return total - internal // 2


def components(g: Graph, removed) -> list[frozenset[int]]:
    """Connected components of G minus ``removed``, ordered by smallest member."""
    rem = removed if isinstance(removed, (set, frozenset)) else set(removed)
    _check_vertices(g, rem)
    seen = bytearray(g.n)
    for v in rem:
        seen[v] = 1
    out: list[frozenset[int]] = []
    neighbors = g.neighbors
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        for a in comp:
            for b in neighbors[a]:
                if not seen[b]:
                    seen[b] = 1
                    comp.append(b)
        out.append(frozenset(comp))
    return out


@dataclass(frozen=True)
class Partition:
    """Split of the components of G minus a separator into (largest, rest)."""

    largest: frozenset[int]
    rest: tuple[frozenset[int], ...]
    vol_rest: int


def partition_of(g: Graph, separator) -> Partition:
    """Partition with the max-volume component singled out.

    Ties on volume go to the component with the smallest minimum vertex id,
    which makes the result deterministic.
    """
    comps = components(g, separator)
    if len(comps) < 2:
        raise NotASeparatorError(f"removing {sorted(separator)} leaves the graph connected")
    vols = [volume(g, c) for c in comps]
    best = max(vols)
    idx = vols.index(best)  # components are ordered by min id already
    rest = tuple(c for i, c in enumerate(comps) if i != idx)
    # components of G \ S share no edges, so volume adds up across them
    return Partition(comps[idx], rest, sum(vols) - best)


# ---------------------------------------------------------------------------
# Unit-capacity vertex flow (vertex splitting), shared by connectivity and
# openly-disjoint path extraction.  Split node ids: 2v = v_in, 2v+1 = v_out.
# ---------------------------------------------------------------------------


class _SplitFlow:
    def __init__(self, g: Graph, s: int, t: int):
        self.g = g
        self.s = s
        self.t = t
        self.source = 2 * s + 1
        self.sink = 2 * t
        self.flipped: set[tuple[int, int]] = set()  # original arcs carrying flow
        self.back: dict[int, list[int]] = {}  # reverse residual arcs
        self.value = 0

    def _residual_out(self, a: int):
        g = self.g
        flipped = self.flipped
        v, is_out = a >> 1, a & 1
        if is_out:
            for w in g.neighbors[v]:
                b = 2 * w
                if b != self.source - 1 and (a, b) not in flipped:
                    yield b
        else:
            b = a | 1
            if (a, b) not in flipped:
                yield b
        for b in self.back.get(a, ()):
            yield b

    def _flip(self, a: int, b: int) -> None:
        bl = self.back.get(a)
        if bl is not None and b in bl:
            bl.remove(b)
            self.flipped.discard((b, a))
        else:
            self.flipped.add((a, b))
            self.back.setdefault(b, []).append(a)

    def augment(self) -> bool:
        """One BFS augmentation of a single flow unit; False when saturated."""
        src, snk = self.source, self.sink
        parent: dict[int, int] = {src: -1}
        queue = [src]
        found = False
        for a in queue:
            for b in self._residual_out(a):
                if b not in parent:
                    parent[b] = a
                    if b == snk:
                        found = True
                        break
                    queue.append(b)
            if found:
                break
        if not found:
            return False
        b = snk
        while b != src:
            a = parent[b]
            self._flip(a, b)
            b = a
        self.value += 1
        return True

    def run(self, limit: int) -> int:
        while self.value < limit and self.augment():
            pass
        return self.value

    def reachable_cut(self) -> frozenset[int]:
        """Min vertex cut from the residual reachability after saturation."""
        seen = {self.source}
        queue = [self.source]
        for a in queue:
            for b in self._residual_out(a):
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        cut = set()
        for a in seen:
            if a & 1 == 0 and (a | 1) not in seen:
                cut.add(a >> 1)
        return frozenset(cut)

    def flow_paths(self) -> list[list[int]]:
        """Decompose the current flow into vertex paths from s to t."""
        succ: dict[int, list[int]] = {}
        for a, b in sorted(self.flipped):
            succ.setdefault(a, []).append(b)
        paths = []
        for _ in range(self.value):
            node = self.source
            seq = [self.s]
            while succ.get(node):
                node = succ[node].pop()
                v = node >> 1
                if v != seq[-1]:
                    seq.append(v)
            paths.append(seq)
        return paths


def _flow_value(g: Graph, s: int, t: int, limit: int) -> int:
    return _SplitFlow(g, s, t).run(limit)


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; 0 for disconnected graphs, n-1 for complete."""
    return min_vertex_cut(g)[0]


def min_vertex_cut(g: Graph) -> tuple[int, frozenset[int]]:
    """Vertex connectivity together with a witness minimum vertex cut.

    Uses the classical minimum-degree pivot: fix a min-degree vertex v and
    take flows from v to each non-neighbor and between each non-adjacent pair
    of neighbors of v.  For complete graphs no cut exists; by convention the
    witness is all vertices except vertex 0.
    """
    n = g.n
    if n < 2:
        raise VertexRangeError("connectivity needs at least two vertices")
    if len(components(g, ())) > 1:
        return 0, frozenset()
    if g.is_complete():
        return n - 1, frozenset(range(1, n))
    v = min(range(n), key=lambda u: (len(g.adj[u]), u))
    best = g.degree(v)
    best_pair: tuple[int, int] | None = None
    pairs = [(v, u) for u in range(n) if u != v and u not in g.adj[v]]
    nbrs = g.neighbors[v]
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if b not in g.adj[a]:
                pairs.append((a, b))
    for s, t in pairs:
        f = _flow_value(g, s, t, best)
        if f < best:
            best = f
            best_pair = (s, t)
    if best_pair is not None:
        flow = _SplitFlow(g, *best_pair)
        flow.run(n)
        return best, flow.reachable_cut()
    # degree term won: N(v) itself is a minimum cut
    cut = g.adj[v]
    if len(components(g, cut)) < 2:  # pragma: no cover - excluded by pivot coverage
        raise NotASeparatorError("internal error: degree witness does not separate")
    return best, frozenset(cut)


def sparsify(g: Graph, k: int) -> Graph:
    """Edge subgraph made of k+1 successive scan-first (BFS) spanning forests.

    Keeps at most (k+1)(n-1) edges on the same vertex set while preserving the
    k-shredders of the input.
    """
    if k < 1:
        raise VertexRangeError(f"k must be positive, got {k}")
    remaining = [set(s) for s in g.adj]
    kept: list[tuple[int, int]] = []
    for _ in range(k + 1):
        if not any(remaining):
            break
        seen = bytearray(g.n)
        forest = []
        for s in range(g.n):
            if seen[s]:
                continue
            seen[s] = 1
            queue = [s]
            for a in queue:
                for b in sorted(remaining[a]):
                    if not seen[b]:
                        seen[b] = 1
                        forest.append((a, b) if a < b else (b, a))
                        queue.append(b)
        for a, b in forest:
            remaining[a].discard(b)
            remaining[b].discard(a)
        kept.extend(forest)
    return build_graph(g.n, sorted(kept))


def sample_edge(g: Graph, rng: random.Random) -> tuple[int, int]:
    """Uniform random edge with a uniformly chosen orientation."""
    if g.m == 0:
        raise EmptyGraphError("cannot sample from a graph with no edges")
    u, v = g.edges[rng.randrange(g.m)]
    if rng.randrange(2):
        return v, u
    return u, v
