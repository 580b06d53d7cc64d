"""Graph, DAG and poset value types plus the structural operations on them.

Vertices are always the dense integers ``0..n-1``.  Every type is an immutable
frozen dataclass; operations return new values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Sequence

from .errors import (
    InvalidGraphError,
    InvalidPosetError,
    InvalidSubsetError,
    MissingEdgeError,
    NotADagError,
    SizeLimitError,
)

Edge = tuple[int, int]

MAX_CANON_VERTICES = 10
MAX_CORPUS_VERTICES = 7


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"negative vertex count {self.n}")
        normed = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"edge {e} out of range for n={self.n}")
            normed.add(norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = ()) -> SimpleGraph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def complement(self) -> SimpleGraph:
        return SimpleGraph(
            self.n,
            frozenset(e for e in itertools.combinations(range(self.n), 2) if e not in self.edges),
        )


@dataclass(frozen=True)
class WeightedGraph:
    graph: SimpleGraph
    weights: tuple[int, ...] = field(default=())

    def __post_init__(self):
        weights = tuple(self.weights) if self.weights else (1,) * self.graph.n
        if len(weights) != self.graph.n:
            raise InvalidGraphError(f"expected {self.graph.n} weights, got {len(weights)}")
        for w in weights:
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise InvalidGraphError(f"weights must be positive integers, got {w!r}")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Sequence[int]] = (), weights: Sequence[int] | None = None
    ) -> WeightedGraph:
        return cls(SimpleGraph.from_edges(n, edges), tuple(weights) if weights else ())

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edges(self) -> frozenset[Edge]:
        return self.graph.edges

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def relabel(self, perm: Sequence[int]) -> WeightedGraph:
        """Move vertex ``v`` to position ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidGraphError(f"{perm!r} is not a permutation of range({self.n})")
        weights = [0] * self.n
        for v, w in enumerate(self.weights):
            weights[perm[v]] = w
        edges = frozenset(norm_edge(perm[u], perm[v]) for u, v in self.edges)
        return WeightedGraph(SimpleGraph(self.n, edges), tuple(weights))

    def induced(self, vertices: Iterable[int]) -> WeightedGraph:
        """Induced sub-weighted-graph, renumbered in increasing vertex order."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return WeightedGraph.from_edges(len(keep), edges, [self.weights[v] for v in keep])


@dataclass(frozen=True)
class Dag:
    n: int
    arcs: frozenset[Edge] = frozenset()

    def __post_init__(self):
        arcs = frozenset(tuple(a) for a in self.arcs)
        for u, v in arcs:
            if u == v:
                raise NotADagError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise NotADagError(f"arc {(u, v)} out of range for n={self.n}")
        object.__setattr__(self, "arcs", arcs)
        self.topological_order()

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]] = ()) -> Dag:
        return cls(n, frozenset(tuple(a) for a in arcs))

    def predecessors(self) -> list[list[int]]:
        preds: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            preds[v].append(u)
        return preds

    def topological_order(self) -> list[int]:
        ts = TopologicalSorter({v: p for v, p in enumerate(self.predecessors())})
        try:
            return list(ts.static_order())
        except CycleError as exc:
            raise NotADagError(f"directed cycle through {exc.args[1]}") from None

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, frozenset(norm_edge(u, v) for u, v in self.arcs))

    def relabel(self, perm: Sequence[int]) -> Dag:
        return Dag(self.n, frozenset((perm[u], perm[v]) for u, v in self.arcs))


@dataclass(frozen=True)
class Poset:
    """Finite order; ``relation`` holds every pair ``(a, b)`` with ``a <= b``."""

    n: int
    relation: frozenset[Edge]

    def __post_init__(self):
        rel = frozenset(tuple(p) for p in self.relation)
        object.__setattr__(self, "relation", rel)
        for a, b in rel:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InvalidPosetError(f"pair {(a, b)} out of range for n={self.n}")
        for a in range(self.n):
            if (a, a) not in rel:
                raise InvalidPosetError(f"relation is not reflexive at {a}")
        for a, b in rel:
            if a != b and (b, a) in rel:
                raise InvalidPosetError(f"relation is not antisymmetric: {a} and {b}")
        for a, b in rel:
            for c in range(self.n):
                if (b, c) in rel and (a, c) not in rel:
                    raise InvalidPosetError(f"relation is not transitive: {a}<={b}<={c}")

    @classmethod
    def from_leq(cls, n: int, pairs: Iterable[Sequence[int]]) -> Poset:
        """Pairs ``a <= b``; the diagonal is implied, transitivity is checked, not added."""
        return cls(n, frozenset(tuple(p) for p in pairs) | {(a, a) for a in range(n)})

    @classmethod
    def from_cover(cls, n: int, cover: Iterable[Sequence[int]]) -> Poset:
        """Reflexive-transitive closure of ``cover``."""
        return cls(n, frozenset(reflexive_transitive_closure(n, cover)))

    def leq(self, a: int, b: int) -> bool:
        return (a, b) in self.relation

    def less(self, a: int, b: int) -> bool:
        return a != b and (a, b) in self.relation

    def relabel(self, perm: Sequence[int]) -> Poset:
        return Poset(self.n, frozenset((perm[a], perm[b]) for a, b in self.relation))


def reflexive_transitive_closure(n: int, pairs: Iterable[Sequence[int]]) -> set[Edge]:
    reach = [[a == b for b in range(n)] for a in range(n)]
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise InvalidPosetError(f"pair {(a, b)} out of range for n={n}")
        reach[a][b] = True
    for c in range(n):
        for a in range(n):
            if reach[a][c]:
                row_c = reach[c]
                row_a = reach[a]
                for b in range(n):
                    if row_c[b]:
                        row_a[b] = True
    return {(a, b) for a in range(n) for b in range(n) if reach[a][b]}


# ---------------------------------------------------------------------------
# structural operations


def spanning_subgraph(g: SimpleGraph, s: Iterable[Sequence[int]]) -> SimpleGraph:
    chosen = frozenset(norm_edge(*e) for e in s)
    extra = chosen - g.edges
    if extra:
        raise InvalidSubsetError(f"edges {sorted(extra)} are not in the graph")
    return SimpleGraph(g.n, chosen)


def connected_components(g: SimpleGraph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def delete_edge(g: WeightedGraph, e: Sequence[int]) -> WeightedGraph:
    edge = norm_edge(*e)
    if edge not in g.edges:
        raise MissingEdgeError(f"edge {edge} not in graph")
    return WeightedGraph(SimpleGraph(g.n, g.edges - {edge}), g.weights)


def contract_edge(g: WeightedGraph, e: Sequence[int]) -> WeightedGraph:
    """Merge the endpoints of ``e``; the merged vertex keeps the lower index.

    Weights add, parallel edges collapse, later vertices shift down by one.
    """
    a, b = norm_edge(*e)
    if (a, b) not in g.edges:
        raise MissingEdgeError(f"edge {(a, b)} not in graph")

    def new_index(v: int) -> int:
        if v == b:
            return a
        return v - 1 if v > b else v

    edges = set()
    for u, v in g.edges:
        if (u, v) == (a, b):
            continue
        nu, nv = new_index(u), new_index(v)
        if nu != nv:
            edges.add(norm_edge(nu, nv))
    weights = list(g.weights)
    weights[a] += weights[b]
    del weights[b]
    return WeightedGraph(SimpleGraph(g.n - 1, frozenset(edges)), tuple(weights))


# ---------------------------------------------------------------------------
# canonical labelling


def _refine(n: int, adj: Sequence[frozenset[int]], colors: list[int]) -> list[int]:
    """Colour refinement by neighbour-colour multisets until the partition is stable."""
    count = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == count:
            return colors
        count = len(ranks)


def canonical_labeling(g: WeightedGraph) -> tuple[tuple, list[int]]:
    """Return ``(code, order)`` where ``order[i]`` is the vertex placed at position ``i``.

    The code is minimal over all orderings that list the refined colour cells
    in colour order; the cell order itself is isomorphism invariant, so equal
    codes mean isomorphic weighted graphs.
    """
    n = g.n
    if n > MAX_CANON_VERTICES:
        raise SizeLimitError(f"canonical labelling is capped at {MAX_CANON_VERTICES} vertices")
    adj = g.graph.adj
    wranks = {w: i for i, w in enumerate(sorted(set(g.weights)))}
    colors = _refine(n, adj, [wranks[w] for w in g.weights])
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    cell_list = [cells[c] for c in sorted(cells)]
    pairs = list(itertools.combinations(range(n), 2))

    best_bits = None
    best_order: list[int] = list(range(n))
    for choice in itertools.product(*(itertools.permutations(c) for c in cell_list)):
        order = [v for part in choice for v in part]
        bits = 0
        for i, j in pairs:
            bits = (bits << 1) | (order[j] in adj[order[i]])
        if best_bits is None or bits < best_bits:
            best_bits, best_order = bits, order
    weights = tuple(g.weights[v] for v in best_order)
    return (n, weights, best_bits or 0), best_order


def canonical_form(g: WeightedGraph) -> WeightedGraph:
    _, order = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def is_isomorphic_weighted(g1: WeightedGraph, g2: WeightedGraph) -> tuple[bool, dict[int, int] | None]:
    """Existential weighted isomorphism test.

    Returns ``(True, phi)`` with ``phi`` mapping vertices of ``g1`` to ``g2``
    (adjacency preserved both ways and ``w2[phi[v]] == w1[v]``), else
    ``(False, None)``.
    """
    if g1.n != g2.n or len(g1.edges) != len(g2.edges) or sorted(g1.weights) != sorted(g2.weights):
        return False, None
    c1, o1 = canonical_labeling(g1)
    c2, o2 = canonical_labeling(g2)
    if c1 != c2:
        return False, None
    return True, {o1[i]: o2[i] for i in range(g1.n)}


def is_weighted_isomorphism(g1: WeightedGraph, g2: WeightedGraph, phi: dict[int, int]) -> bool:
    if g1.n != g2.n or sorted(phi) != list(range(g1.n)) or sorted(phi.values()) != list(range(g2.n)):
        return False
    if any(g2.weights[phi[v]] != g1.weights[v] for v in range(g1.n)):
        return False
    for u, v in itertools.combinations(range(g1.n), 2):
        if g1.graph.has_edge(u, v) != g2.graph.has_edge(phi[u], phi[v]):
            return False
    return True


# ---------------------------------------------------------------------------
# posets and corpora


def hasse_diagram(p: Poset) -> Dag:
    arcs = set()
    for a, b in p.relation:
        if a == b:
            continue
        if not any(p.less(a, c) and p.less(c, b) for c in range(p.n)):
            arcs.add((a, b))
    return Dag(p.n, frozenset(arcs))


def generate_corpus(n: int, weight_bound: int) -> list[WeightedGraph]:
    """One canonical representative per class of weighted graphs on ``n`` vertices.

    Grown vertex by vertex: every class on ``t+1`` vertices extends some class
    on ``t`` vertices by one new vertex with an arbitrary neighbourhood.
    """
    if n > MAX_CORPUS_VERTICES:
        raise SizeLimitError(f"corpus generation is capped at {MAX_CORPUS_VERTICES} vertices")
    if n < 1 or weight_bound < 1:
        raise InvalidGraphError("n and weight_bound must be positive")
    level: dict[tuple, WeightedGraph] = {(): WeightedGraph.from_edges(0)}
    for t in range(n):
        nxt: dict[tuple, WeightedGraph] = {}
        for base in level.values():
            for r in range(t + 1):
                for nbrs in itertools.combinations(range(t), r):
                    edges = list(base.edges) + [(u, t) for u in nbrs]
                    for w in range(1, weight_bound + 1):
                        g = WeightedGraph.from_edges(t + 1, edges, base.weights + (w,))
                        code, _ = canonical_labeling(g)
                        if code not in nxt:
                            nxt[code] = canonical_form(g)
        level = nxt
    return [level[c] for c in sorted(level)]
