"""Backtracking enumeration and counting of graph homomorphisms.

Four flavours share one search: ordinary homomorphisms, weak homomorphisms
(an edge may collapse onto a single host vertex), weight-homomorphisms
(preimage weights bounded by target weights) and their surjective variant.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .graphs import SimpleGraph, WeightedGraph

HomMap = tuple[int, ...]


def search_order(g: SimpleGraph) -> list[int]:
    """Static vertex order: most neighbours already placed, then degree, then index."""
    placed: list[int] = []
    remaining = set(range(g.n))
    links = [0] * g.n
    while remaining:
        v = min(remaining, key=lambda u: (-links[u], -len(g.adj[u]), u))
        remaining.remove(v)
        placed.append(v)
        for u in g.adj[v]:
            links[u] += 1
    return placed


def _plan(g: SimpleGraph, order: Sequence[int]) -> list[list[int]]:
    pos = {v: i for i, v in enumerate(order)}
    return [[u for u in g.adj[v] if pos[u] < pos[v]] for v in order]


def _candidates(h_adj, n_h: int, phi: list[int], back: list[int], weak: bool) -> Iterator[int]:
    if not back:
        return iter(range(n_h))
    sets = []
    for u in back:
        img = phi[u]
        sets.append(h_adj[img] | {img} if weak else h_adj[img])
    cands = set.intersection(*map(set, sets)) if len(sets) > 1 else sets[0]
    return iter(sorted(cands))


def _enumerate(g: SimpleGraph, h: SimpleGraph, weak: bool) -> Iterator[HomMap]:
    order = list(range(g.n))
    plan = _plan(g, order)
    phi = [-1] * g.n
    h_adj = h.adj

    def rec(i: int) -> Iterator[HomMap]:
        if i == g.n:
            yield tuple(phi)
            return
        v = order[i]
        for c in _candidates(h_adj, h.n, phi, plan[i], weak):
            phi[v] = c
            yield from rec(i + 1)
        phi[v] = -1

    return rec(0)


def enumerate_homs(g: SimpleGraph, h: SimpleGraph) -> Iterator[HomMap]:
    """All homomorphisms ``g -> h`` as image arrays, in lexicographic order."""
    return _enumerate(g, h, weak=False)


def enumerate_weak_homs(g: SimpleGraph, h: SimpleGraph) -> Iterator[HomMap]:
    """All maps sending every edge to an edge of ``h`` or to a single vertex."""
    return _enumerate(g, h, weak=True)


def is_hom(g: SimpleGraph, h: SimpleGraph, phi: Sequence[int], weak: bool = False) -> bool:
    if len(phi) != g.n or any(not 0 <= x < h.n for x in phi):
        return False
    for u, v in g.edges:
        a, b = phi[u], phi[v]
        if not (h.has_edge(a, b) or (weak and a == b)):
            return False
    return True


def count_homs(g: SimpleGraph, h: SimpleGraph) -> int:
    return _count(WeightedGraph(g), WeightedGraph(h), weighted=False, surjective=False)


def count_weight_homs(src: WeightedGraph, dst: WeightedGraph) -> int:
    """Homomorphisms whose preimage weight at each target vertex stays within its weight."""
    return _count(src, dst, weighted=True, surjective=False)


def count_surjective_weight_homs(src: WeightedGraph, dst: WeightedGraph) -> int:
    return _count(src, dst, weighted=True, surjective=True)


def _count(src: WeightedGraph, dst: WeightedGraph, weighted: bool, surjective: bool) -> int:
    g, h = src.graph, dst.graph
    if surjective and dst.n > src.n:
        return 0
    if weighted and src.total_weight > dst.total_weight and src.n:
        return 0
    order = search_order(g)
    plan = _plan(g, order)
    h_adj = h.adj
    phi = [-1] * g.n
    load = [0] * h.n
    hits = [0] * h.n
    cap = dst.weights
    w = src.weights
    n = g.n
    uncovered = [h.n]

    def rec(i: int) -> int:
        if i == n:
            return 1 if not surjective or uncovered[0] == 0 else 0
        if surjective and n - i < uncovered[0]:
            return 0
        v = order[i]
        wv = w[v]
        total = 0
        for c in _candidates(h_adj, h.n, phi, plan[i], False):
            if weighted and load[c] + wv > cap[c]:
                continue
            phi[v] = c
            load[c] += wv
            hits[c] += 1
            if hits[c] == 1:
                uncovered[0] -= 1
            total += rec(i + 1)
            if hits[c] == 1:
                uncovered[0] += 1
            hits[c] -= 1
            load[c] -= wv
        phi[v] = -1
        return total

    return rec(0)


def separation_witness(
    g1: WeightedGraph, g2: WeightedGraph, family: Sequence[WeightedGraph]
) -> tuple[WeightedGraph, int, int] | None:
    """First ``F`` in ``family`` whose weight-hom counts from ``g1`` and ``g2`` differ."""
    for f in family:
        c1 = count_weight_homs(g1, f)
        c2 = count_weight_homs(g2, f)
        if c1 != c2:
            return f, c1, c2
    return None
