from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chroma.errors import InvalidEdgeError
from chroma.graphs import WeightedGraph, spanning_subgraph
from chroma.invariants import HostSpec, build_host, weak_chromatic_function
from chroma.polynomials import Poly, VarRegistry, permute_variables
from chroma.suites import weighted_corpus
from chroma.symfun import (
    HyperClass,
    PBasisExpr,
    admissible_expansion,
    canonicalize,
    connected_expansion,
    connected_split,
    enumerate_admissible,
    make_index,
    partition_of,
    specialize_m,
    specialize_p,
)

from oracles import components_by_union_find


@lru_cache(maxsize=None)
def brute_hyper_key(edges: tuple) -> tuple:
    """Minimum sorted edge list over every relabelling of the support."""
    support = sorted({x for e in edges for x in e})
    best = None
    for perm in itertools.permutations(range(len(support))):
        lab = dict(zip(support, perm))
        code = tuple(sorted(tuple(sorted(lab[x] for x in e)) for e in edges))
        if best is None or code < best:
            best = code
    return best


def hyper_oracle(g: WeightedGraph, k: int) -> dict[tuple, int]:
    """Class -> coefficient for a connected graph, by brute force over all maps into k-subsets of [k*n].

    Every labelled copy of a class inside [k*n] is hit by the same number of
    maps, and that number is the coefficient.
    """
    ground = range(k * g.n)
    subsets = list(itertools.combinations(ground, k))
    hits: Counter = Counter()
    for phi in itertools.product(subsets, repeat=g.n):
        if all(set(phi[u]) & set(phi[v]) for u, v in g.edges):
            ms = tuple(sorted(phi[v] for v in range(g.n) for _ in range(g.weights[v])))
            hits[ms] += 1
    per_class: dict[tuple, set] = {}
    counts: dict[tuple, set] = {}
    for ms, c in hits.items():
        key = brute_hyper_key(ms)
        per_class.setdefault(key, set()).add(ms)
        counts.setdefault(key, set()).add(c)
    for key, cs in counts.items():
        assert len(cs) == 1, "labelled copies of one class must be hit equally often"
    return {key: counts[key].pop() for key in per_class}


def cls(k, *edges):
    return canonicalize(k, edges)


DOUBLE = cls(2, (0, 1), (0, 1))
SINGLE = cls(2, (0, 1))
PATH = cls(2, (0, 1), (1, 2))
P3 = WeightedGraph.from_edges(3, [(0, 1), (1, 2)], [2, 1, 1])


# ---------------------------------------------------------------- canonical forms


def test_canonicalize_examples():
    assert cls(2, (5, 9), (5, 9)) == HyperClass(2, ((0, 1), (0, 1)), 2)
    assert cls(2, (1, 2), (2, 3)) == HyperClass(2, ((0, 2), (1, 2)), 3)
    lam = cls(1, (7,), (7,), (3,))
    assert sorted(r for _, r in lam.multiplicities()) == [1, 2]
    assert lam.s == 2


def test_canonicalize_rejects_bad_edges():
    with pytest.raises(InvalidEdgeError):
        cls(2, (1, 1))
    with pytest.raises(InvalidEdgeError):
        cls(2, (1, 2, 3))


@st.composite
def hyperedges(draw, k=None):
    k = k or draw(st.integers(1, 3))
    edges = draw(st.lists(st.sets(st.integers(0, 6), min_size=k, max_size=k), min_size=1, max_size=5))
    return k, [tuple(sorted(e)) for e in edges]


@given(hyperedges(), st.data())
def test_canonicalize_idempotent_and_relabel_invariant(ke, data):
    k, edges = ke
    lam = canonicalize(k, edges)
    assert canonicalize(k, lam.edges) == lam
    assert sorted({x for e in lam.edges for x in e}) == list(range(lam.s))
    perm = data.draw(st.permutations(list(range(7))))
    assert canonicalize(k, [tuple(perm[x] for x in e) for e in edges]) == lam


@settings(max_examples=300)
@given(hyperedges(2), hyperedges(2))
def test_canonical_code_is_complete(a, b):
    same = brute_hyper_key(tuple(sorted(a[1]))) == brute_hyper_key(tuple(sorted(b[1])))
    assert (canonicalize(2, a[1]) == canonicalize(2, b[1])) == same


def test_connected_split_examples():
    assert connected_split(DOUBLE) == [DOUBLE]
    assert connected_split(cls(2, (0, 1), (2, 3))) == [SINGLE, SINGLE]
    assert connected_split(cls(2, (0, 1), (0, 1), (2, 3))) == [SINGLE, DOUBLE]


# ---------------------------------------------------------------- admissible classes


def test_admissible_examples():
    assert enumerate_admissible(WeightedGraph.from_edges(1, [], [2]), 2) == [(DOUBLE,)]
    k2 = enumerate_admissible(WeightedGraph.from_edges(2, [(0, 1)]), 2)
    assert sorted(k2, key=repr) == sorted([(PATH,), (DOUBLE,)], key=repr)
    assert len(enumerate_admissible(P3, 2)) == 6


def test_p3_spanning_subgraph_counts():
    sizes = []
    for r in range(3):
        for s in itertools.combinations(sorted(P3.edges), r):
            sizes.append(len(enumerate_admissible(WeightedGraph(spanning_subgraph(P3.graph, s), P3.weights), 2)))
    assert sizes == [1, 2, 2, 6]


def test_k2_path_coefficient():
    # K_2 maps onto the path class in two ways (either endpoint on either edge)
    assert dict(connected_expansion(WeightedGraph.from_edges(2, [(0, 1)]), 2)) == {PATH: 2, DOUBLE: 1}


def test_k1_reduction_matches_component_weights():
    for g in weighted_corpus(4, 3):
        idx = enumerate_admissible(g, 1)
        assert len(idx) == 1
        comps = components_by_union_find(g.n, g.edges)
        assert partition_of(idx[0]) == tuple(sorted((sum(g.weights[v] for v in c) for c in comps), reverse=True))


CONNECTED = [g for g in weighted_corpus(3, 2) if len(components_by_union_find(g.n, g.edges)) == 1]


@pytest.mark.parametrize("g", CONNECTED, ids=lambda g: f"n{g.n}e{len(g.edges)}w{''.join(map(str, g.weights))}")
def test_connected_expansion_matches_oracle_k2(g):
    ours = {brute_hyper_key(tuple(sorted(c.edges))): coef for c, coef in connected_expansion(g, 2)}
    assert ours == hyper_oracle(g, 2)


@pytest.mark.parametrize("g", CONNECTED, ids=lambda g: f"n{g.n}e{len(g.edges)}w{''.join(map(str, g.weights))}")
def test_connected_expansion_matches_oracle_k1(g):
    ours = {brute_hyper_key(tuple(sorted(c.edges))): coef for c, coef in connected_expansion(g, 1)}
    assert ours == hyper_oracle(g, 1)


def test_connected_expansion_matches_oracle_k3():
    for g in weighted_corpus(2, 2):
        if len(components_by_union_find(g.n, g.edges)) == 1:
            ours = {brute_hyper_key(tuple(sorted(c.edges))): coef for c, coef in connected_expansion(g, 3)}
            assert ours == hyper_oracle(g, 3)


def test_disconnected_expansion_is_product():
    g = WeightedGraph.from_edges(3, [(0, 1)], [1, 1, 2])
    exp = admissible_expansion(g, 2)
    assert exp == {make_index([PATH, DOUBLE]): 2, make_index([DOUBLE, DOUBLE]): 1}


# ---------------------------------------------------------------- specialisation


def subset_reg(m, k):
    _, reg = build_host(HostSpec.kneser(m, k))
    return reg


def test_specialize_m_examples():
    reg = subset_reg(3, 1)
    assert specialize_m(cls(1, (0,)), 3, reg) == sum((Poly.var(reg, i) for i in range(3)), Poly.zero(reg))
    reg4 = subset_reg(4, 2)
    p = specialize_m(DOUBLE, 4, reg4)
    # oracle: one square per 2-subset of [4]
    assert p == sum((Poly.var(reg4, i, 2) for i in range(6)), Poly.zero(reg4))
    assert len(p) == 6
    assert specialize_m(cls(2, (0, 1), (2, 3), (4, 5)), 4, reg4) == Poly.zero(reg4)


def test_specialize_p_examples():
    reg = subset_reg(2, 1)
    x1, x2 = Poly.var(reg, 0), Poly.var(reg, 1)
    one = cls(1, (0,))
    assert specialize_p([one], 2, reg) == specialize_m(one, 2, reg)
    assert specialize_p([one, one], 2, reg) == (x1 + x2) * (x1 + x2)
    for r in (1, 2, 3):
        assert specialize_p([cls(1, *[(0,)] * r)], 2, reg) == Poly.var(reg, 0, r) + Poly.var(reg, 1, r)


@settings(max_examples=60, deadline=None)
@given(hyperedges(2), st.data())
def test_specialize_m_is_symmetric(ke, data):
    k, edges = ke
    m = 5
    lam = canonicalize(k, edges)
    reg = subset_reg(m, k)
    perm = data.draw(st.permutations(list(range(1, m + 1))))
    subsets = [reg.descriptors[i][1] for i in range(len(reg))]
    sigma = [reg.index(("s", tuple(sorted(perm[x - 1] for x in s)))) for s in subsets]
    p = specialize_m(lam, m, reg)
    assert permute_variables(p, sigma) == p


def test_weak_p_lambda_identity():
    """W over the complement of the Kneser truncation = sum of c * p_lambda over admissible lambda."""
    corpus = [g for g in weighted_corpus(4, 5, max_total=5)]
    checked = 0
    for m in (4, 5, 6):
        h, reg = build_host(HostSpec.kneser(m, 2))
        comp = h.complement()
        for g in corpus:
            left = weak_chromatic_function(g, comp, reg)
            right = PBasisExpr(2, admissible_expansion(g, 2)).specialize(m, reg)
            assert left == right, (g, m)
            checked += 1
    assert checked == 3 * len(corpus)


def test_pbasis_json_round_trip():
    expr = PBasisExpr(2, admissible_expansion(P3, 2))
    assert PBasisExpr.from_json(expr.to_json()) == expr
    assert PBasisExpr(2, {(SINGLE,): 1}).render() == "+p[{0,1}]"


def test_unit_coefficients_are_not_enough():
    # with every coefficient forced to 1 the identity breaks, which is why
    # the expansion carries assignment counts
    m = 6
    h, reg = build_host(HostSpec.kneser(m, 2))
    g = WeightedGraph.from_edges(2, [(0, 1)])
    left = weak_chromatic_function(g, h.complement(), reg)
    unit = PBasisExpr(2, {idx: 1 for idx in admissible_expansion(g, 2)}).specialize(m, reg)
    assert left != unit


def test_registry_used_for_subsets():
    reg = subset_reg(4, 2)
    assert isinstance(reg, VarRegistry)
    assert reg.name(0) == "x{1,2}"
