"""Connectivity oracle under vertex failures, backed by a DFS tree.

Queries are exact for the current failure set.  Updates relabel components
with a full BFS, trading the published update complexity for a small, fully
correct backend; the DFS-tree internals (ancestor tests, component roots,
internal-component representatives) keep the interface the same.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedError, QueriedFailedVertexError
from .graph import Graph


@dataclass
class DfsTree:
    root: int
    parent: list[int | None]
    pre: list[int]
    post: list[int]
    depth: list[int]

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff u is an ancestor of v (vertices are their own ancestors)."""
        return self.pre[u] <= self.pre[v] and self.post[v] <= self.post[u]


def _build_dfs_tree(g: Graph, root: int = 0) -> DfsTree:
    n = g.n
    parent: list[int | None] = [None] * n
    pre = [-1] * n
    post = [-1] * n
    depth = [0] * n
    clock = 0
    pre[root] = clock
    clock += 1
    stack = [(root, iter(g.neighbors[root]))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if pre[w] < 0:
                parent[w] = v
                depth[w] = depth[v] + 1
                pre[w] = clock
                clock += 1
                stack.append((w, iter(g.neighbors[w])))
                advanced = True
                break
        if not advanced:
            post[v] = clock
            clock += 1
            stack.pop()
    if any(p < 0 for p in pre):
        raise DisconnectedError("oracle preprocessing requires a connected graph")
    return DfsTree(root, parent, pre, post, depth)


class FailureOracle:
    """Exact pairwise connectivity in G minus a mutable failure set."""

    def __init__(self, g: Graph):
        self.graph = g
        self.dfs = _build_dfs_tree(g)
        # every non-tree edge must close between an ancestor and a descendant
        t = self.dfs
        for u, v in g.edges:
            if not (t.is_ancestor(u, v) or t.is_ancestor(v, u)):
                raise AssertionError(f"edge ({u},{v}) is not tree-vertical")
        self.failed: frozenset[int] | None = None
        self.labels: list[int] = []
        self.update(())

    def update(self, failed) -> None:
        """Recompute component labels of G minus ``failed``."""
        fset = frozenset(failed)
        if fset == self.failed:
            return
        self.failed = fset
        g = self.graph
        labels = [-1] * g.n
        neighbors = g.neighbors
        label = 0
        for s in range(g.n):
            if labels[s] >= 0 or s in fset:
                continue
            labels[s] = label
            queue = [s]
            for a in queue:
                for b in neighbors[a]:
                    if labels[b] < 0 and b not in fset:
                        labels[b] = label
                        queue.append(b)
            label += 1
        self.labels = labels

    def connected(self, u: int, v: int) -> bool:
        if u in self.failed or v in self.failed:
            raise QueriedFailedVertexError(f"queried failed vertex among ({u},{v})")
        return self.labels[u] == self.labels[v]

    def component_root(self, y: int, failed) -> int:
        """Highest ancestor of y reachable in the tree without touching ``failed``."""
        fset = failed if isinstance(failed, (set, frozenset)) else set(failed)
        if y in fset:
            raise QueriedFailedVertexError(f"vertex {y} is failed")
        parent = self.dfs.parent
        while True:
            p = parent[y]
            if p is None or p in fset:
                return y
            y = p

    def internal_representatives(self, failed) -> list[int]:
        """One representative (its root) per internal component of T minus U.

        A component is internal when its root is an ancestor of some failed
        vertex; those roots sit directly above failed vertices, so scanning
        the failed vertices' parents finds each exactly once.
        """
        fset = failed if isinstance(failed, (set, frozenset)) else set(failed)
        parent = self.dfs.parent
        reps: set[int] = set()
        for v in fset:
            p = parent[v]
            if p is not None and p not in fset:
                reps.add(self.component_root(p, fset))
        return sorted(reps)
