"""Budgeted local listing: walk each path of a probe tuple, explore the
bridges hanging off it within a per-path edge budget, and emit the verified
shredders plus at most one unverified separator."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedTupleError
from .graph import Graph, components, volume
from .paths import Bridge, Candidate, PathSystem, as_candidate, prune_candidates
from .records import ShredderRecord


@dataclass(frozen=True)
class CaptureTuple:
    """Seed vertex, volume budget (a power of two), and a path system rooted
    at the seed.  The tuple captures a shredder when the seed sits on the
    small side, the budget brackets the small side's volume, and every path
    ends in the big side within total length k^2 * budget."""

    x: int
    budget: int
    paths: PathSystem


@dataclass(frozen=True)
class LocalResult:
    shredders: tuple[ShredderRecord, ...]
    unverified: frozenset[int] | None
    vol_qx: int | None


def _validate(g: Graph, t: CaptureTuple) -> None:
    if t.budget < 1 or t.budget & (t.budget - 1):
        raise MalformedTupleError(f"budget must be a power of two, got {t.budget}")
    if t.paths.source != t.x:
        raise MalformedTupleError("path system is not rooted at the seed vertex")
    t.paths.validate_in(g)


def check_capture(g: Graph, t: CaptureTuple, cut) -> bool:
    """Test the capture conditions literally.

    'Largest component' ties are broken arbitrarily upstream, so this accepts
    any max-volume component as the big side (tie swaps keep the small side's
    volume unchanged because component volumes are additive).
    """
    _validate(g, t)
    cut = frozenset(cut)
    if t.x in cut:
        return False
    comps = components(g, cut)
    if len(comps) < 2:
        return False
    vols = [volume(g, c) for c in comps]
    mx = max(vols)
    rest_vol = sum(vols) - mx
    nu = t.budget
    if not (nu < 2 * rest_vol and rest_vol <= nu):
        return False
    k = len(t.paths.paths)
    if t.paths.total_length > k * k * nu:
        return False
    ends = t.paths.endpoints()
    for comp, vol in zip(comps, vols):
        if vol == mx and t.x not in comp and all(e in comp for e in ends):
            return True
    return False


def local_list(g: Graph, t: CaptureTuple) -> LocalResult:
    """List the shredders reachable within the probe's budget.

    Every captured shredder is returned either in ``shredders`` or as the
    unverified set; everything in ``shredders`` is a genuine shredder.  The
    per-path exploration state resets between paths; a path stops at its far
    endpoint or the moment more than ``budget`` edges are explored, marking
    the stopping vertex unverified.
    """
    _validate(g, t)
    ps = t.paths
    x = t.x
    nu = t.budget
    k = len(ps.paths)
    n = g.n
    neighbors = g.neighbors
    on_path = ps.on_path
    shared = ps.shared_target
    path_edges = ps.path_edge_keys(n)

    candidates: dict[tuple[int, ...], Candidate] = {}
    tally: dict[tuple[int, ...], int] = {}
    counted_comps: set[int] = set()
    prune_bridges: dict[tuple, Bridge] = {}
    unverified: list[int] = []

    for path in ps.paths:
        explored_e: set[int] = set()
        used = 0
        endpoint = path[-1]
        for u in path:
            if u == endpoint:
                unverified.append(u)
                break
            over = False
            batch: list[tuple] = []  # committed only if the whole vertex completes
            for w in neighbors[u]:
                ek = u * n + w if u < w else w * n + u
                if ek in path_edges or ek in explored_e:
                    continue
                if w in on_path or w == x or w == shared:
                    explored_e.add(ek)
                    used += 1
                    if used > nu:
                        over = True
                        break
                    batch.append(("e", ek, u, w))
                else:
                    comp = [w]
                    comp_set = {w}
                    atts: set[int] = set()
                    edge_count = 0
                    qi = 0
                    while qi < len(comp):
                        a = comp[qi]
                        qi += 1
                        for b in neighbors[a]:
                            ek2 = a * n + b if a < b else b * n + a
                            if ek2 in explored_e:
                                continue
                            explored_e.add(ek2)
                            used += 1
                            edge_count += 1
                            if used > nu:
                                over = True
                                break
                            if b in on_path or b == x or b == shared:
                                atts.add(b)
                            elif b not in comp_set:
                                comp_set.add(b)
                                comp.append(b)
                        if over:
                            break
                    if over:
                        break
                    batch.append(("c", comp_set, atts, edge_count))
            if over:
                unverified.append(u)
                break
            for item in batch:
                if item[0] == "e":
                    _, ek, a, b = item
                    prune_bridges.setdefault(
                        ("e", ek), Bridge(frozenset((a, b)), 1, None, (a, b)))
                else:
                    _, comp_set, atts, edge_count = item
                    cid = min(comp_set)
                    prune_bridges.setdefault(
                        ("c", cid),
                        Bridge(frozenset(atts), edge_count, frozenset(comp_set)))
                    cand = as_candidate(atts, ps)
                    if cand is not None:
                        candidates.setdefault(cand.vertices, cand)
                        if cid not in counted_comps:
                            counted_comps.add(cid)
                            tally[cand.vertices] = tally.get(cand.vertices, 0) + 1

    uset = set(unverified)
    if x in uset:
        return LocalResult((), None, None)

    u_cand = as_candidate(uset, ps) if len(uset) == k else None
    to_prune = list(candidates.values())
    if u_cand is not None and u_cand.vertices not in candidates:
        to_prune.append(u_cand)
    survivors = prune_candidates(to_prune, list(prune_bridges.values()), ps)
    surv = {c.vertices for c in survivors}

    shredders = tuple(
        ShredderRecord(cv, tally.get(cv, 0) + 2, "local")
        for cv in sorted(candidates)
        if cv in surv
    )
    if u_cand is not None and u_cand.vertices in surv and not (uset & set(ps.endpoints())):
        return LocalResult(shredders, frozenset(uset), _component_volume(g, x, uset))
    return LocalResult(shredders, None, None)


def _component_volume(g: Graph, x: int, removed: set[int]) -> int:
    """Volume of the component of x in G minus ``removed``."""
    n = g.n
    neighbors = g.neighbors
    seen = {x}
    queue = [x]
    seen_e: set[int] = set()
    vol = 0
    for a in queue:
        for b in neighbors[a]:
            ek = a * n + b if a < b else b * n + a
            if ek in seen_e:
                continue
            seen_e.add(ek)
            vol += 1
            if b not in removed and b not in seen:
                seen.add(b)
                queue.append(b)
    return vol
