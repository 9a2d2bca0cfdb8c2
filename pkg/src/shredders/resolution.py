"""Resolving unverified separators: low-degree confirmation and counting via
the failure oracle, the volume checksum, and sampled high-degree extraction."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import PreconditionError
from .graph import Graph, components, sample_edge
from .oracle import FailureOracle
from .paths import PathSystem
from .records import SamplingConfig, ShredderRecord, ceil_log2_ratio, log_rounds


@dataclass(frozen=True)
class UnverifiedRecord:
    """An unverified separator as produced by the local listing pass."""

    x: int
    budget: int
    paths: PathSystem
    unverified: frozenset[int]
    vol_qx: int


def _low_degree_vertex(g: Graph, rec: UnverifiedRecord) -> int | None:
    for v in sorted(rec.unverified):
        if g.degree(v) <= rec.budget:
            return v
    return None


def low_degree_check(oracle: FailureOracle, rec: UnverifiedRecord) -> bool:
    """True iff the unverified set is a shredder with a low-degree member.

    Scans the low-degree member's edges for a neighbor disconnected from both
    the seed and the far endpoint of the member's path: such a neighbor
    witnesses a third component.
    """
    g = oracle.graph
    u = _low_degree_vertex(g, rec)
    if u is None:
        return False
    path_idx, _ = rec.paths.on_path[u]
    z = rec.paths.paths[path_idx][-1]
    fset = rec.unverified
    oracle.update(fset)
    x = rec.x
    for y in g.neighbors[u]:
        if y in fset:
            continue
        if not oracle.connected(x, y) and not oracle.connected(y, z):
            return True
    return False


def count_low_degree_components(oracle: FailureOracle, rec: UnverifiedRecord) -> int:
    """Exact component count of G minus the (low-degree, confirmed) set.

    Every component touches the low-degree member, so its neighbors cover all
    of them; tree-component roots plus internal-component representatives
    dedup neighbors that share a component.
    """
    g = oracle.graph
    u = _low_degree_vertex(g, rec)
    if u is None:
        raise PreconditionError("no vertex of the unverified set is low-degree")
    fset = rec.unverified
    oracle.update(fset)
    reps = oracle.internal_representatives(fset)
    seen_roots: set[int] = set()
    seen_reps: set[int] = set()
    counter = 0
    for y in g.neighbors[u]:
        if y in fset:
            continue
        root = oracle.component_root(y, fset)
        if root in seen_roots:
            continue
        seen_roots.add(root)
        fresh = True
        for v in reps:
            if not oracle.connected(y, v):
                continue
            if v in seen_reps:
                fresh = False
                break
            seen_reps.add(v)
        if fresh:
            counter += 1
    return counter


def volume_checksum(g: Graph, separator, vol_q1: int, vol_q2: int) -> bool:
    """True iff a third component exists beyond the two given ones.

    Every edge either touches one of the two components or lies inside the
    separator; strict slack in that tally is exactly an edge into a third
    component.
    """
    sep = separator if isinstance(separator, (set, frozenset)) else set(separator)
    internal = sum(len(g.adj[v] & sep) for v in sep) // 2
    return vol_q1 + vol_q2 + internal < g.m


def _bounded_lowdeg_bfs(g: Graph, seed: int, nu: int):
    """BFS from ``seed`` skipping vertices of degree > nu, within nu edges.

    Returns (component, attachment set, volume) or None on budget overflow.
    High-degree vertices are treated as absent: their edges are neither
    traversed nor counted, but they show up as attachments.
    """
    n = g.n
    neighbors = g.neighbors
    adj = g.adj
    comp = [seed]
    comp_set = {seed}
    atts: set[int] = set()
    seen_e: set[int] = set()
    vol = 0
    qi = 0
    while qi < len(comp):
        a = comp[qi]
        qi += 1
        for b in neighbors[a]:
            ek = a * n + b if a < b else b * n + a
            if ek in seen_e:
                continue
            seen_e.add(ek)
            vol += 1
            if vol > nu:
                return None
            if len(adj[b]) > nu:
                atts.add(b)
            elif b not in comp_set:
                comp_set.add(b)
                comp.append(b)
    return comp_set, atts, vol


def high_degree_extract(g: Graph, records, rng: random.Random,
                        cfg: SamplingConfig | None = None) -> list[ShredderRecord]:
    """Extract every record whose unverified set is a high-degree shredder.

    Geometric sampling finds seeds inside small components; a degree-filtered
    BFS recovers each such component, whose neighborhood is matched against
    the records and confirmed with the volume checksum.  Component counts come
    from one representative per recovered component plus one for the big side.
    """
    records = list(records)
    if not records:
        return []
    cfg = cfg or SamplingConfig()
    k = len(records[0].unverified)
    by_u: dict[tuple[int, ...], list[UnverifiedRecord]] = {}
    for rec in records:
        by_u.setdefault(tuple(sorted(rec.unverified)), []).append(rec)
    reps: dict[tuple[int, ...], set[int]] = {}
    confirmed: set[tuple[int, ...]] = set()
    logn = log_rounds(g.n)
    top = ceil_log2_ratio(g.m, max(k, 1))
    for i in range(top + 1):
        nu = 1 << i
        rounds = cfg.hit_factor * ((g.m + nu - 1) // nu) * logn
        if rounds >= g.n:
            # the exploration is deterministic per seed, so once the sampler
            # would saturate the vertex set, one sweep over it does strictly more
            seeds = range(g.n)
        else:
            seeds = (sample_edge(g, rng)[0] for _ in range(rounds))
        seen_seeds: set[int] = set()
        for y in seeds:
            if g.degree(y) > nu or y in seen_seeds:
                continue
            seen_seeds.add(y)
            got = _bounded_lowdeg_bfs(g, y, nu)
            if got is None:
                continue
            comp_set, atts, vol_qy = got
            ukey = tuple(sorted(atts))
            recs = by_u.get(ukey)
            if recs is None:
                continue
            mset = reps.setdefault(ukey, set())
            if not (comp_set & mset):
                mset.add(y)
            if ukey not in confirmed:
                for rec in recs:
                    if rec.x not in comp_set:
                        if volume_checksum(g, rec.unverified, rec.vol_qx, vol_qy):
                            confirmed.add(ukey)
                        break
    out = []
    for ukey in sorted(confirmed):
        if k == 1:
            # hub cuts: the big side can be as small as every other component
            # and would earn a representative too, so recount exactly
            count = len(components(g, ukey))
        else:
            count = len(reps[ukey]) + 1
        out.append(ShredderRecord(ukey, count, "high-degree"))
    return out
