"""Shared corpus of desk-scale graphs used by the differential suites."""
from __future__ import annotations

from shredders import brute_vertex_connectivity, gen


def generator_corpus():
    """Named instances of every generator kind."""
    out = []
    for d in range(3, 11):
        out.append((f"star{d}", gen("star", d)))
    for n in range(3, 11):
        out.append((f"path{n}", gen("path", n)))
    for n in range(3, 11):
        out.append((f"cycle{n}", gen("cycle", n)))
    for n in range(3, 7):
        out.append((f"complete{n}", gen("complete", n)))
    for a in range(2, 5):
        for b in range(a, 5):
            out.append((f"k{a}{b}", gen("complete_bipartite", a, b)))
    for d1 in range(2, 5):
        for d2 in range(d1, 5):
            out.append((f"dstar{d1}{d2}", gen("double_star", d1, d2)))
    out.append(("dumbbell", gen("dumbbell")))
    for t in (5, 6, 7):
        for k in (2, 3):
            for r in (2, 3):
                out.append((f"unbal{t}{k}{r}", gen("gen_unbalanced", t, k, r)))
    for t, k, r, d in [
        (5, 2, 2, 1), (5, 3, 2, 1), (6, 2, 2, 1), (6, 2, 2, 2), (6, 2, 3, 1),
        (6, 3, 2, 1), (6, 3, 2, 2), (7, 2, 2, 1), (7, 3, 2, 1), (7, 3, 3, 2),
        (8, 2, 2, 1), (8, 3, 2, 2),
    ]:
        out.append((f"lowdeg{t}{k}{r}{d}", gen("gen_lowdeg", t, k, r, d)))
    return out


def random_corpus(count=100):
    """Seeded random connected graphs with n <= 12."""
    out = []
    sizes = list(range(6, 13))
    densities = (0.25, 0.35, 0.5)
    i = 0
    while len(out) < count:
        n = sizes[i % len(sizes)]
        p = densities[(i // len(sizes)) % len(densities)]
        out.append((f"rand-n{n}-p{int(p * 100)}-{i}", gen("random_connected", n, p, 9000 + i)))
        i += 1
    return out


def full_corpus():
    return generator_corpus() + random_corpus()


def connected_corpus(max_n=None):
    """Corpus entries that are connected, with their brute connectivity."""
    out = []
    for name, g in full_corpus():
        if max_n is not None and g.n > max_n:
            continue
        k = brute_vertex_connectivity(g)
        if k > 0:
            out.append((name, g, k))
    return out
