"""Classes of k-uniform hyper-multigraphs and the p-basis built on them.

A class is stored by its canonical edge list over the ground set ``0..s-1``.
Connected classes index the monomial functions ``m``; a multiset of connected
classes indexes a power-sum product ``p``.  Everything is specialised at a
finite ground set ``[m] = {1..m}`` when turned into polynomials.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import InvalidEdgeError
from .graphs import WeightedGraph, canonical_form, connected_components
from .polynomials import Poly, VarRegistry, mono_from_exponents, subset_var

HyperEdge = tuple[int, ...]


@dataclass(frozen=True)
class HyperClass:
    k: int
    edges: tuple[HyperEdge, ...]
    s: int

    @property
    def sort_key(self):
        return (self.s, len(self.edges), self.edges)

    def multiplicities(self) -> list[tuple[HyperEdge, int]]:
        return sorted(Counter(self.edges).items())

    def is_connected(self) -> bool:
        return len(_element_components(self.edges)) <= 1

    def render(self) -> str:
        parts = []
        for e, r in self.multiplicities():
            body = "{" + ",".join(map(str, e)) + "}"
            parts.append(body if r == 1 else f"{body}x{r}")
        return ",".join(parts)


PIndex = tuple[HyperClass, ...]


def _element_components(edges: Sequence[HyperEdge]) -> list[list[HyperEdge]]:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        for x in e:
            parent.setdefault(x, x)
        for x in e[1:]:
            ra, rb = find(e[0]), find(x)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, list[HyperEdge]] = {}
    for e in edges:
        groups.setdefault(find(e[0]), []).append(e)
    return list(groups.values())


def canonicalize(k: int, raw_edges: Iterable[Iterable[int]]) -> HyperClass:
    """Canonical representative of the relabelling class of a k-uniform multiset of edges.

    Ground elements are split into cells by iterated incidence refinement; the
    code is the lexicographically least sorted edge list among labellings
    that number the cells in colour order.
    """
    edges = []
    for raw in raw_edges:
        e = tuple(sorted(raw))
        if len(e) != k or len(set(e)) != k:
            raise InvalidEdgeError(f"edge {tuple(raw)!r} does not have {k} distinct elements")
        edges.append(e)
    support = sorted({x for e in edges for x in e})
    relabel = {x: i for i, x in enumerate(support)}
    edges = [tuple(relabel[x] for x in e) for e in edges]
    s = len(support)

    mult = Counter(edges)
    incident: list[list[HyperEdge]] = [[] for _ in range(s)]
    for e in mult:
        for x in e:
            incident[x].append(e)

    sigs = [tuple(sorted(mult[e] for e in incident[x])) for x in range(s)]
    ranks = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
    colors = [ranks[sig] for sig in sigs]
    count = len(ranks)
    while True:
        sigs = [
            (colors[x], tuple(sorted((mult[e], tuple(sorted(colors[y] for y in e))) for e in incident[x])))
            for x in range(s)
        ]
        ranks = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        colors = [ranks[sig] for sig in sigs]
        if len(ranks) == count:
            break
        count = len(ranks)

    cells: dict[int, list[int]] = {}
    for x in range(s):
        cells.setdefault(colors[x], []).append(x)
    cell_list = [cells[c] for c in sorted(cells)]

    best = None
    for choice in itertools.product(*(itertools.permutations(c) for c in cell_list)):
        label = [0] * s
        for pos, x in enumerate(y for part in choice for y in part):
            label[x] = pos
        code = tuple(sorted(tuple(sorted(label[x] for x in e)) for e in edges))
        if best is None or code < best:
            best = code
    return HyperClass(k, best or (), s)


def connected_split(lam: HyperClass) -> list[HyperClass]:
    comps = [canonicalize(lam.k, group) for group in _element_components(lam.edges)]
    return sorted(comps, key=lambda c: c.sort_key)


def make_index(components: Iterable[HyperClass]) -> PIndex:
    return tuple(sorted(components, key=lambda c: c.sort_key))


def index_sort_key(idx: PIndex):
    """Ascending key; expansions list indices in *descending* key order."""
    return (len(idx), tuple(sorted((c.sort_key for c in idx), reverse=True)))


# ---------------------------------------------------------------------------
# admissible classes


def _bfs_order(g: WeightedGraph) -> list[int]:
    order, seen = [0], {0}
    i = 0
    while i < len(order):
        for u in sorted(g.graph.adj[order[i]]):
            if u not in seen:
                seen.add(u)
                order.append(u)
        i += 1
    return order


def _connected_classes(g: WeightedGraph, k: int) -> set[HyperClass]:
    """Classes reachable from assignments with new ground elements introduced in first-use order."""
    order = _bfs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    back = [[u for u in g.graph.adj[v] if pos[u] < pos[v]] for v in order]
    phi: dict[int, frozenset[int]] = {}
    found: set[HyperClass] = set()

    def rec(i: int, used: int) -> None:
        if i == len(order):
            multiset = [tuple(sorted(phi[v])) for v in order for _ in range(g.weights[v])]
            found.add(canonicalize(k, multiset))
            return
        v = order[i]
        for fresh in range(k + 1):
            if i == 0 and fresh != k:
                continue
            new = tuple(range(used, used + fresh))
            for old in itertools.combinations(range(used), k - fresh):
                cand = frozenset(old + new)
                if all(cand & phi[u] for u in back[i]):
                    phi[v] = cand
                    rec(i + 1, used + fresh)
        phi.pop(v, None)

    rec(0, 0)
    return found


def _assignment_count(g: WeightedGraph, lam: HyperClass) -> int:
    """Number of maps V(g) -> distinct edges of ``lam`` realising ``lam`` exactly.

    A map qualifies when adjacent vertices go to intersecting (or equal) edges
    and the weights landing on each edge add up to its multiplicity.
    """
    targets = lam.multiplicities()
    sets = [frozenset(e) for e, _ in targets]
    cap = [r for _, r in targets]
    load = [0] * len(targets)
    order = _bfs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    back = [[u for u in g.graph.adj[v] if pos[u] < pos[v]] for v in order]
    phi = [-1] * g.n

    def rec(i: int) -> int:
        if i == len(order):
            return 1 if load == cap else 0
        v = order[i]
        w = g.weights[v]
        total = 0
        for t, st in enumerate(sets):
            if load[t] + w > cap[t]:
                continue
            if any(not (st & sets[phi[u]]) for u in back[i]):
                continue
            phi[v] = t
            load[t] += w
            total += rec(i + 1)
            load[t] -= w
        phi[v] = -1
        return total

    return rec(0)


@lru_cache(maxsize=4096)
def _connected_expansion(canon: WeightedGraph, k: int) -> tuple[tuple[HyperClass, int], ...]:
    classes = sorted(_connected_classes(canon, k), key=lambda c: c.sort_key)
    return tuple((c, _assignment_count(canon, c)) for c in classes)


def connected_expansion(g: WeightedGraph, k: int) -> list[tuple[HyperClass, int]]:
    """Admissible classes of a connected weighted graph with their multiplicities."""
    if k < 1:
        raise InvalidEdgeError("uniformity k must be at least 1")
    return list(_connected_expansion(canonical_form(g), k))


def admissible_expansion(g: WeightedGraph, k: int) -> dict[PIndex, int]:
    """``W`` over the complement of the Kneser host, written in the p-basis.

    Keys are the admissible p-indices; values count the assignments producing
    each one (the product over components, summed when combinations coincide).
    """
    per_comp = [connected_expansion(g.induced(c), k) for c in connected_components(g.graph)]
    out: dict[PIndex, int] = {}
    for combo in itertools.product(*per_comp):
        idx = make_index(c for c, _ in combo)
        coef = 1
        for _, c in combo:
            coef *= c
        out[idx] = out.get(idx, 0) + coef
    return out


def enumerate_admissible(g: WeightedGraph, k: int) -> list[PIndex]:
    """Distinct admissible p-indices, in expansion display order."""
    return sorted(admissible_expansion(g, k), key=index_sort_key, reverse=True)


# ---------------------------------------------------------------------------
# specialisation at a finite ground set


def specialize_m(lam: HyperClass, m: int, reg: VarRegistry) -> Poly:
    """Monomial function of ``lam`` over k-subsets of ``{1..m}``."""
    if lam.s > m:
        return Poly.zero(reg)
    seen: set[tuple[HyperEdge, ...]] = set()
    for inj in itertools.permutations(range(1, m + 1), lam.s):
        seen.add(tuple(sorted(tuple(sorted(inj[x] for x in e)) for e in lam.edges)))
    terms = {}
    for multiset in seen:
        exps: dict[int, int] = {}
        for e in multiset:
            i = reg.index(subset_var(e))
            exps[i] = exps.get(i, 0) + 1
        terms[mono_from_exponents(exps)] = 1
    return Poly(reg, terms)


def specialize_p(index: Iterable[HyperClass], m: int, reg: VarRegistry) -> Poly:
    out = Poly.one(reg)
    for comp in index:
        out = out * specialize_m(comp, m, reg)
    return out


class PBasisExpr:
    """Integer combination of p-indices for a fixed uniformity ``k``."""

    def __init__(self, k: int, terms: Mapping[PIndex, int] | None = None):
        self.k = k
        self.terms: dict[PIndex, int] = {}
        for idx, c in (terms or {}).items():
            self.add_term(idx, c)

    def add_term(self, idx: PIndex, coef: int) -> None:
        idx = make_index(idx)
        val = self.terms.get(idx, 0) + coef
        if val:
            self.terms[idx] = val
        else:
            self.terms.pop(idx, None)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PBasisExpr):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[PIndex, int]]:
        return sorted(self.terms.items(), key=lambda t: index_sort_key(t[0]), reverse=True)

    def specialize(self, m: int, reg: VarRegistry) -> Poly:
        out = Poly.zero(reg)
        for idx, c in self.terms.items():
            p = specialize_p(idx, m, reg)
            out = out + Poly(reg, {mono: c * v for mono, v in p.terms.items()})
        return out

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for idx, c in self.sorted_terms():
            coef = "" if abs(c) == 1 else f"{abs(c)}·"
            out.append(("-" if c < 0 else "+") + coef + render_index(idx, self.k))
        return " ".join(out)

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "terms": [
                {"coef": str(c), "index": [[list(e) for e in comp.edges] for comp in idx]}
                for idx, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> PBasisExpr:
        k = int(data["k"])
        expr = cls(k)
        for t in data["terms"]:
            expr.add_term(make_index(canonicalize(k, comp) for comp in t["index"]), int(t["coef"]))
        return expr


def partition_of(idx: PIndex) -> tuple[int, ...]:
    """For k = 1 an index is a partition: one part per component, sized by its edge count."""
    return tuple(sorted((len(c.edges) for c in idx), reverse=True))


def render_index(idx: PIndex, k: int) -> str:
    if k == 1:
        return "p[" + ",".join(map(str, partition_of(idx))) + "]"
    return "·".join(f"p[{c.render()}]" for c in idx)
