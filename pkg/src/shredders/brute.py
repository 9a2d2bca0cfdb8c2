"""Exhaustive reference implementations used as ground truth."""
from __future__ import annotations

from itertools import combinations

from .errors import TooLargeError
from .graph import Graph, components
from .records import MostShatteringResult


def _guard(g: Graph, s: int) -> None:
    if not (g.n <= 16 or s <= 3):
        raise TooLargeError(f"refusing to enumerate C({g.n},{s}) subsets")


def brute_shredders(g: Graph, s: int) -> list[tuple[tuple[int, ...], int]]:
    """Every size-s set whose removal leaves >= 3 components, with counts."""
    _guard(g, s)
    out = []
    for cut in combinations(range(g.n), s):
        comps = components(g, cut)
        if len(comps) >= 3:
            out.append((cut, len(comps)))
    return out


def brute_vertex_connectivity(g: Graph) -> int:
    """Smallest separator size by direct enumeration; n-1 for complete graphs."""
    if len(components(g, ())) > 1:
        return 0
    for s in range(1, g.n - 1):
        _guard(g, s)
        for cut in combinations(range(g.n), s):
            if len(components(g, cut)) > 1:
                return s
    return g.n - 1


def brute_most_shattering(g: Graph) -> MostShatteringResult:
    """Reference most-shattering cut: argmax count over brute shredders, or
    the lexicographically first minimum separator when none shatters."""
    k = brute_vertex_connectivity(g)
    if k == g.n - 1:
        # complete graph: no separator exists; by convention report all
        # vertices but vertex 0 (their removal leaves a single vertex)
        return MostShatteringResult(tuple(range(1, g.n)), 1, False, k)
    shredders = brute_shredders(g, k)
    if shredders:
        best_count = max(c for _, c in shredders)
        best = next(cut for cut, c in shredders if c == best_count)
        return MostShatteringResult(best, best_count, True, k)
    for cut in combinations(range(g.n), k):
        comps = components(g, cut)
        if len(comps) > 1:
            return MostShatteringResult(cut, len(comps), False, k)
    raise AssertionError("connectivity witness vanished")  # pragma: no cover
