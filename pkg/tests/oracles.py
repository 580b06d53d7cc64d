"""Brute-force reference implementations used only by the tests.

Nothing here shares code paths with the package beyond the value types.
"""

from __future__ import annotations

import itertools
from collections import Counter

from chroma.graphs import SimpleGraph, WeightedGraph


def all_maps(n_src: int, n_dst: int):
    return itertools.product(range(n_dst), repeat=n_src)


def brute_homs(g: SimpleGraph, h: SimpleGraph, weak: bool = False) -> list[tuple[int, ...]]:
    out = []
    for phi in all_maps(g.n, h.n):
        if all((phi[u] == phi[v] and weak) or h.has_edge(phi[u], phi[v]) for u, v in g.edges):
            out.append(phi)
    return out


def brute_weight_homs(src: WeightedGraph, dst: WeightedGraph, surjective: bool = False) -> int:
    count = 0
    for phi in brute_homs(src.graph, dst.graph):
        load = Counter()
        for v, img in enumerate(phi):
            load[img] += src.weights[v]
        if all(load[t] <= dst.weights[t] for t in range(dst.n)):
            if not surjective or len(set(phi)) == dst.n:
                count += 1
    return count


def brute_iso_key(g: WeightedGraph) -> tuple:
    """Minimum over every vertex permutation of (weights, sorted edges)."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        w = [0] * g.n
        for v in range(g.n):
            w[perm[v]] = g.weights[v]
        edges = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges))
        key = (tuple(w), edges)
        if best is None or key < best:
            best = key
    return best


def brute_class_count(n: int, weight_bound: int) -> int:
    pairs = list(itertools.combinations(range(n), 2))
    keys = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        for weights in itertools.product(range(1, weight_bound + 1), repeat=n):
            keys.add(brute_iso_key(WeightedGraph.from_edges(n, edges, weights)))
    return len(keys)


def brute_colorings(g: SimpleGraph, m: int) -> int:
    return sum(1 for c in all_maps(g.n, m) if all(c[u] != c[v] for u, v in g.edges))


def components_by_union_find(n: int, edges) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def weighted_partition_expansion(g: WeightedGraph) -> dict[tuple[int, ...], int]:
    """Sum over edge subsets S of (-1)^|S| times the partition of component weights."""
    out: Counter = Counter()
    edges = sorted(g.edges)
    for r in range(len(edges) + 1):
        for s in itertools.combinations(edges, r):
            parts = tuple(
                sorted((sum(g.weights[v] for v in comp) for comp in components_by_union_find(g.n, s)), reverse=True)
            )
            out[parts] += (-1) ** r
    return {p: c for p, c in out.items() if c}


def brute_weighted_sum(g: WeightedGraph, h: SimpleGraph, weak: bool = False) -> Counter:
    """Exponent-vector -> coefficient, over every (weak) homomorphism."""
    out: Counter = Counter()
    for phi in brute_homs(g.graph, h, weak):
        exps = [0] * h.n
        for v, img in enumerate(phi):
            exps[img] += g.weights[v]
        out[tuple(exps)] += 1
    return out
