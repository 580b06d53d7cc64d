"""Host graphs, the weighted chromatic function and the identities built on it.

Hosts are finite: an explicit graph, the complete graph ``K_m`` or the Kneser
graph on the k-subsets of ``{1..m}``.  The infinite hosts of the theory only
appear through these truncations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import InvalidEmbeddingError, InvalidHostError, NotInImageError
from .graphs import (
    Dag,
    Poset,
    SimpleGraph,
    WeightedGraph,
    contract_edge,
    delete_edge,
    hasse_diagram,
    norm_edge,
    spanning_subgraph,
)
from .homomorphisms import enumerate_homs, enumerate_weak_homs
from .polynomials import Monomial, Poly, VarRegistry, gamma_extract, mono_from_exponents
from .symfun import PBasisExpr, admissible_expansion


@dataclass(frozen=True)
class HostSpec:
    kind: str  # "explicit" | "complete" | "kneser"
    m: int = 0
    k: int = 1
    graph: SimpleGraph | None = None

    @classmethod
    def complete(cls, m: int) -> HostSpec:
        return cls("complete", m=m, k=1)

    @classmethod
    def kneser(cls, m: int, k: int) -> HostSpec:
        return cls("kneser", m=m, k=k)

    @classmethod
    def explicit(cls, graph: SimpleGraph) -> HostSpec:
        return cls("explicit", graph=graph)

    def __str__(self) -> str:
        if self.kind == "complete":
            return f"complete:{self.m}"
        if self.kind == "kneser":
            return f"kneser:{self.m},{self.k}"
        return f"explicit(n={self.graph.n})"


def kneser_vertices(m: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of ``{1..m}`` in colex order."""
    return sorted(itertools.combinations(range(1, m + 1), k), key=lambda s: s[::-1])


@lru_cache(maxsize=256)
def build_host(spec: HostSpec) -> tuple[SimpleGraph, VarRegistry]:
    if spec.kind == "explicit":
        if spec.graph is None:
            raise InvalidHostError("explicit host needs a graph")
        return spec.graph, VarRegistry.vertices(range(spec.graph.n))
    if spec.kind not in ("complete", "kneser"):
        raise InvalidHostError(f"unknown host kind {spec.kind!r}")
    m, k = spec.m, spec.k
    if spec.kind == "complete" and k != 1:
        raise InvalidHostError("complete hosts have k = 1")
    if k < 1 or m < k:
        raise InvalidHostError(f"Kneser host needs m >= k >= 1, got m={m}, k={k}")
    verts = kneser_vertices(m, k)
    sets = [frozenset(v) for v in verts]
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(verts)), 2)
        if not (sets[i] & sets[j])
    ]
    return SimpleGraph.from_edges(len(verts), edges), VarRegistry.subsets(verts)


def default_truncation(g: WeightedGraph, k: int) -> int:
    if k == 1:
        return g.total_weight + 1
    return max(6, k)


def _weighted_sum(g: WeightedGraph, maps, reg: VarRegistry) -> Poly:
    terms: dict[Monomial, int] = {}
    w = g.weights
    for phi in maps:
        exps: dict[int, int] = {}
        for v, img in enumerate(phi):
            exps[img] = exps.get(img, 0) + w[v]
        mono = mono_from_exponents(exps)
        terms[mono] = terms.get(mono, 0) + 1
    return Poly(reg, terms)


def chromatic_function(g: WeightedGraph, host: HostSpec) -> Poly:
    """Sum over homomorphisms ``phi: G -> H`` of ``prod x_{phi(v)}^{w(v)}``."""
    h, reg = build_host(host)
    return _weighted_sum(g, enumerate_homs(g.graph, h), reg)


def weak_chromatic_function(g: WeightedGraph, host_graph: SimpleGraph, reg: VarRegistry | None = None) -> Poly:
    if reg is None:
        reg = VarRegistry.vertices(range(host_graph.n))
    return _weighted_sum(g, enumerate_weak_homs(g.graph, host_graph), reg)


def weak_expansion_sides(g: WeightedGraph, host_graph: SimpleGraph) -> tuple[Poly, Poly]:
    reg = VarRegistry.vertices(range(host_graph.n))
    lhs = _weighted_sum(g, enumerate_homs(g.graph, host_graph), reg)
    comp = host_graph.complement()
    rhs = Poly.zero(reg)
    edges = g.graph.sorted_edges()
    for r in range(len(edges) + 1):
        for s in itertools.combinations(edges, r):
            gs = WeightedGraph(spanning_subgraph(g.graph, s), g.weights)
            term = weak_chromatic_function(gs, comp, reg)
            rhs = rhs + term if r % 2 == 0 else rhs - term
    return lhs, rhs


def verify_weak_expansion(g: WeightedGraph, host_graph: SimpleGraph) -> tuple[bool, Poly, Poly]:
    lhs, rhs = weak_expansion_sides(g, host_graph)
    return lhs == rhs, lhs, rhs


def power_sum_expansion(g: WeightedGraph, k: int) -> PBasisExpr:
    """Signed sum over spanning subgraphs of their admissible p-indices."""
    expr = PBasisExpr(k)
    edges = g.graph.sorted_edges()
    for r in range(len(edges) + 1):
        sign = -1 if r % 2 else 1
        for s in itertools.combinations(edges, r):
            gs = WeightedGraph(spanning_subgraph(g.graph, s), g.weights)
            for idx, c in admissible_expansion(gs, k).items():
                expr.add_term(idx, sign * c)
    return expr


def power_sum_sides(g: WeightedGraph, k: int, m: int) -> tuple[Poly, Poly]:
    """``(X at kneser(m, k), p-expansion specialised at {1..m})``."""
    spec = HostSpec.kneser(m, k)
    _, reg = build_host(spec)
    return chromatic_function(g, spec), power_sum_expansion(g, k).specialize(m, reg)


def verify_power_sum(g: WeightedGraph, k: int, m: int) -> bool:
    if m < k:
        raise InvalidHostError(f"truncation m={m} is smaller than k={k}")
    lhs, rhs = power_sum_sides(g, k, m)
    return lhs == rhs


def deletion_contraction_sides(g: WeightedGraph, e: Sequence[int], m: int) -> tuple[Poly, Poly, Poly]:
    host = HostSpec.complete(m)
    return (
        chromatic_function(g, host),
        chromatic_function(delete_edge(g, e), host),
        chromatic_function(contract_edge(g, e), host),
    )


def verify_deletion_contraction(g: WeightedGraph, e: Sequence[int], m: int) -> bool:
    whole, deleted, contracted = deletion_contraction_sides(g, e, m)
    return whole == deleted - contracted


# ---------------------------------------------------------------------------
# recovering weight-homomorphism counts


def check_embedding(f: SimpleGraph, host_graph: SimpleGraph, embedding: Mapping[int, int]) -> None:
    if sorted(embedding) != list(range(f.n)):
        raise InvalidEmbeddingError("embedding must be defined on every vertex of F")
    images = [embedding[v] for v in range(f.n)]
    if len(set(images)) != f.n or any(not 0 <= x < host_graph.n for x in images):
        raise InvalidEmbeddingError("embedding must be injective into the host")
    for u, v in itertools.combinations(range(f.n), 2):
        if f.has_edge(u, v) != host_graph.has_edge(images[u], images[v]):
            raise InvalidEmbeddingError(f"pair {(u, v)} breaks the induced-subgraph condition")


def find_induced_embedding(f: SimpleGraph, host_graph: SimpleGraph) -> dict[int, int] | None:
    """First injective map realising ``f`` as an induced subgraph of the host, if any."""
    phi: list[int] = []

    def rec(v: int) -> bool:
        if v == f.n:
            return True
        for c in range(host_graph.n):
            if c in phi:
                continue
            if all(f.has_edge(u, v) == host_graph.has_edge(phi[u], c) for u in range(v)):
                phi.append(c)
                if rec(v + 1):
                    return True
                phi.pop()
        return False

    return dict(enumerate(phi)) if rec(0) else None


def weight_hom_count_via_gamma(
    x_poly: Poly, host: HostSpec, f: WeightedGraph, embedding: Mapping[int, int]
) -> int:
    """Count weight-homomorphisms into ``f`` from the coefficients of ``x_poly``."""
    h, reg = build_host(host)
    check_embedding(f.graph, h, embedding)
    target = mono_from_exponents({embedding[v]: f.weights[v] for v in range(f.n)})
    if x_poly.reg != reg:
        raise InvalidHostError("polynomial was not computed over this host")
    return gamma_extract(x_poly, target)


# ---------------------------------------------------------------------------
# DAGs and posets


def dag_weights(d: Dag) -> WeightedGraph:
    """Weight each vertex by one plus the longest directed path ending there."""
    preds = d.predecessors()
    w = [0] * d.n
    for v in d.topological_order():
        w[v] = 1 + max((w[u] for u in preds[v]), default=0)
    return WeightedGraph(d.underlying(), tuple(w))


def reconstruct_dag(gw: WeightedGraph) -> Dag:
    """Orient every edge from its lighter endpoint to its heavier one."""
    arcs = set()
    for u, v in gw.edges:
        wu, wv = gw.weights[u], gw.weights[v]
        if wu == wv:
            raise NotInImageError(f"edge {norm_edge(u, v)} joins two vertices of weight {wu}")
        arcs.add((u, v) if wu < wv else (v, u))
    return Dag(gw.n, frozenset(arcs))


def dag_invariant(d: Dag, host: HostSpec) -> Poly:
    return chromatic_function(dag_weights(d), host)


def poset_invariant(p: Poset, host: HostSpec) -> Poly:
    return dag_invariant(hasse_diagram(p), host)
