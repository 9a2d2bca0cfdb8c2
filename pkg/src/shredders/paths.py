"""Openly-disjoint path systems, bridges, the straddle order, and the
pairwise shredder subroutine built on them."""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

from .errors import CutSmallerThanK, MalformedTupleError
from .graph import Graph, _SplitFlow
from .records import ShredderRecord


@dataclass(frozen=True)
class PathSystem:
    """k simple paths from a common source, pairwise sharing only endpoints.

    ``on_path`` maps each vertex except the source (and except a shared
    far endpoint, when all paths run to the same target) to its unique
    (path index, distance-from-source) position.
    """

    source: int
    paths: tuple[tuple[int, ...], ...]
    shared_target: int | None
    on_path: dict[int, tuple[int, int]] = field(repr=False)
    total_length: int

    @staticmethod
    def build(source: int, paths, shared_target: int | None = None) -> "PathSystem":
        paths = tuple(tuple(p) for p in paths)
        if not paths:
            raise MalformedTupleError("path system needs at least one path")
        on_path: dict[int, tuple[int, int]] = {}
        total = 0
        for i, p in enumerate(paths):
            if len(p) < 2:
                raise MalformedTupleError(f"path {i} is degenerate: {p}")
            if p[0] != source:
                raise MalformedTupleError(f"path {i} does not start at {source}")
            if shared_target is not None and p[-1] != shared_target:
                raise MalformedTupleError(f"path {i} does not end at {shared_target}")
            if len(set(p)) != len(p):
                raise MalformedTupleError(f"path {i} is not simple: {p}")
            total += len(p) - 1
            for d, v in enumerate(p):
                if v == source or v == shared_target:
                    continue
                if v in on_path:
                    raise MalformedTupleError(f"vertex {v} lies on two paths")
                on_path[v] = (i, d)
        return PathSystem(source, paths, shared_target, on_path, total)

    def validate_in(self, g: Graph) -> None:
        """Check that every consecutive pair really is a graph edge."""
        for p in self.paths:
            for a, b in zip(p, p[1:]):
                if b not in g.adj[a]:
                    raise MalformedTupleError(f"({a},{b}) is not an edge of the graph")

    def endpoints(self) -> tuple[int, ...]:
        return tuple(p[-1] for p in self.paths)

    def vertices(self) -> set[int]:
        out = set(self.on_path)
        out.add(self.source)
        if self.shared_target is not None:
            out.add(self.shared_target)
        return out

    def path_edge_keys(self, n: int) -> set[int]:
        keys = set()
        for p in self.paths:
            for a, b in zip(p, p[1:]):
                keys.add(a * n + b if a < b else b * n + a)
        return keys


@dataclass(frozen=True)
class Bridge:
    """A component of G minus the path system, or a non-path edge on it."""

    attachments: frozenset[int]
    volume: int
    vertices: frozenset[int] | None = None  # None for an edge bridge
    edge: tuple[int, int] | None = None

    @property
    def is_edge(self) -> bool:
        return self.vertices is None


@dataclass(frozen=True)
class Candidate:
    """A set meeting every path exactly once: vertices plus per-path depths."""

    vertices: tuple[int, ...]
    deltas: tuple[int, ...]


def as_candidate(vertex_set, ps: PathSystem) -> Candidate | None:
    """Return the candidate form of ``vertex_set`` or None if it is no k-tuple."""
    k = len(ps.paths)
    vs = sorted(vertex_set)
    if len(vs) != k:
        return None
    deltas: list[int | None] = [None] * k
    on_path = ps.on_path
    for v in vs:
        info = on_path.get(v)
        if info is None:  # off the paths, or the source / shared endpoint
            return None
        i, d = info
        if deltas[i] is not None:
            return None
        deltas[i] = d
    return Candidate(tuple(vs), tuple(deltas))


def bridges_of(g: Graph, ps: PathSystem, scope=None) -> list[Bridge]:
    """All bridges of the path system (or those attaching inside ``scope``)."""
    on = ps.vertices()
    n = g.n
    path_edges = ps.path_edge_keys(n)
    seen = bytearray(n)
    for v in on:
        seen[v] = 1
    out: list[Bridge] = []
    neighbors = g.neighbors
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        atts: set[int] = set()
        vol = 0
        internal = 0
        for a in comp:
            for b in neighbors[a]:
                vol += 1
                if b in on:
                    atts.add(b)
                else:
                    internal += 1
                    if not seen[b]:
                        seen[b] = 1
                        comp.append(b)
        out.append(Bridge(frozenset(atts), vol - internal // 2, frozenset(comp)))
    for u, v in g.edges:
        if u in on and v in on and (u * n + v) not in path_edges:
            out.append(Bridge(frozenset((u, v)), 1, None, (u, v)))
    if scope is not None:
        scope = set(scope)
        out = [br for br in out if br.attachments & scope]
    return out


def _position(ps: PathSystem, v: int, cand: Candidate) -> int:
    """-1/0/+1: v strictly before, at, or strictly after the candidate."""
    if v == ps.source:
        return -1
    if v == ps.shared_target:
        return 1
    i, d = ps.on_path[v]
    c = cand.deltas[i]
    if d < c:
        return -1
    if d > c:
        return 1
    return 0


def straddles(a, b: Candidate, ps: PathSystem) -> bool:
    """True iff ``a`` has an attachment strictly before ``b`` on some path and
    one strictly after it on some (possibly different) path."""
    atts = a.attachments if isinstance(a, Bridge) else a.vertices
    before = after = False
    for v in atts:
        p = _position(ps, v, b)
        if p < 0:
            before = True
        elif p > 0:
            after = True
        if before and after:
            return True
    return False


def prune_candidates(cands, bridges, ps: PathSystem) -> list[Candidate]:
    """Candidates straddled neither by another candidate nor by any bridge.

    Phase 1 sorts the per-path depth tuples lexicographically and marks every
    row involved in a column inversion (two directional scans per column).
    Phase 2 orders the survivors (now a chain) and kills, per bridge, the open
    index interval it straddles.
    Output preserves the input order.
    """
    cands = list(cands)
    if not cands:
        return []
    k = len(ps.paths)
    order = sorted(range(len(cands)), key=lambda i: cands[i].deltas)
    killed = [False] * len(cands)
    for col in range(k):
        mx = -1
        for r in order:
            d = cands[r].deltas[col]
            if d < mx:
                killed[r] = True
            elif d > mx:
                mx = d
        mn = None
        for r in reversed(order):
            d = cands[r].deltas[col]
            if mn is not None and d > mn:
                killed[r] = True
            elif mn is None or d < mn:
                mn = d
    chain = [i for i in order if not killed[i]]
    cols = [[cands[i].deltas[c] for i in chain] for c in range(k)]
    for vals in cols:
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise AssertionError("phase-1 survivors are not totally ordered")
    nsurv = len(chain)
    diff = [0] * (nsurv + 2)
    on_path = ps.on_path
    for br in bridges:
        atts = br.attachments if isinstance(br, Bridge) else br.vertices
        if not atts:
            continue
        lo = nsurv + 1
        hi = 0
        for v in atts:
            if v == ps.source:
                p, q = 0, 1
            elif v == ps.shared_target:
                p, q = nsurv, nsurv + 1
            else:
                i, d = on_path[v]
                p = bisect_right(cols[i], d)
                q = bisect_left(cols[i], d) + 1
            if p < lo:
                lo = p
            if q > hi:
                hi = q
        if hi > lo + 1:  # rows strictly inside (lo, hi) are straddled
            diff[lo + 1] += 1
            diff[hi] -= 1
    acc = 0
    for r in range(1, nsurv + 1):
        acc += diff[r]
        if acc > 0:
            killed[chain[r - 1]] = True
    return [c for i, c in enumerate(cands) if not killed[i]]


def openly_disjoint_paths(g: Graph, x: int, y: int, k: int) -> PathSystem:
    """k openly-disjoint simple x-y paths via unit-capacity vertex flow."""
    if x == y:
        raise MalformedTupleError("endpoints must differ")
    flow = _SplitFlow(g, x, y)
    if flow.run(k) < k:
        raise CutSmallerThanK(f"only {flow.value} openly-disjoint paths between {x} and {y}")
    ps = PathSystem.build(x, flow.flow_paths(), shared_target=y)
    ps.validate_in(g)
    return ps


def shredders_between(g: Graph, x: int, y: int, k: int) -> list[ShredderRecord]:
    """All k-shredders separating x from y, each with its exact component count.

    A separating shredder leaves the x-side, the y-side, and one extra
    component per off-path component whose attachment set equals it, so the
    count is that tally plus two.
    """
    ps = openly_disjoint_paths(g, x, y, k)
    brs = bridges_of(g, ps)
    cand_map: dict[tuple[int, ...], Candidate] = {}
    tally: dict[tuple[int, ...], int] = {}
    for br in brs:
        if br.is_edge:
            continue
        cand = as_candidate(br.attachments, ps)
        if cand is not None:
            cand_map.setdefault(cand.vertices, cand)
            tally[cand.vertices] = tally.get(cand.vertices, 0) + 1
    survivors = prune_candidates(list(cand_map.values()), brs, ps)
    return [
        ShredderRecord(c.vertices, tally[c.vertices] + 2, "balanced")
        for c in sorted(survivors, key=lambda c: c.vertices)
    ]
