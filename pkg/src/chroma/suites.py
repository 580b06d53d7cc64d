"""Seeded randomized and exhaustive verification suites, plus the corpora they draw on."""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .compare import ISOMORPHIC, SEPARATED, compare_weighted
from .errors import NotADagError
from .formats import dag_to_json, weighted_graph_to_json
from .graphs import (
    Dag,
    Poset,
    SimpleGraph,
    WeightedGraph,
    generate_corpus,
    is_weighted_isomorphism,
    reflexive_transitive_closure,
)
from .homomorphisms import count_weight_homs
from .invariants import (
    HostSpec,
    build_host,
    chromatic_function,
    dag_weights,
    find_induced_embedding,
    reconstruct_dag,
    verify_deletion_contraction,
    verify_power_sum,
    verify_weak_expansion,
    weight_hom_count_via_gamma,
)

SUITES = ("deletion-contraction", "weak-expansion", "power-sum", "gamma", "dag-roundtrip", "separation")
DEFAULT_TRIALS = {
    "deletion-contraction": 200,
    "weak-expansion": 100,
    "power-sum": 50,
    "dag-roundtrip": 500,
}


def thread_count(default: int = 1) -> int:
    try:
        return max(1, int(os.environ.get("CHROMA_THREADS", default)))
    except ValueError:
        return default


@dataclass
class SuiteReport:
    name: str
    seed: int
    checks: int = 0
    passed: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checks == self.passed

    def summary(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.passed}/{self.checks}"


# ---------------------------------------------------------------------------
# corpora and random objects


def weighted_corpus(max_n: int, weight_bound: int, max_total: int | None = None) -> list[WeightedGraph]:
    out = []
    for n in range(1, max_n + 1):
        for g in generate_corpus(n, weight_bound):
            if max_total is None or g.total_weight <= max_total:
                out.append(g)
    return out


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_weighted(rng: random.Random, n: int, max_weight: int, p: float = 0.5) -> WeightedGraph:
    return WeightedGraph(random_graph(rng, n, p), tuple(rng.randint(1, max_weight) for _ in range(n)))


def random_dag(rng: random.Random, n: int, p: float = 0.5) -> Dag:
    order = list(range(n))
    rng.shuffle(order)
    arcs = [(order[i], order[j]) for i, j in itertools.combinations(range(n), 2) if rng.random() < p]
    return Dag.from_arcs(n, arcs)


def all_labeled_dags(n: int) -> list[Dag]:
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = [(u, v) if c == 1 else (v, u) for (u, v), c in zip(pairs, choice) if c]
        try:
            out.append(Dag.from_arcs(n, arcs))
        except NotADagError:
            continue
    return out


def posets_up_to_iso(n: int) -> list[Poset]:
    """One poset per isomorphism class, deduplicated by brute force over relabellings."""
    seen: dict[tuple, Poset] = {}
    for d in all_labeled_dags(n):
        rel = reflexive_transitive_closure(n, d.arcs)
        key = min(
            tuple(sorted((perm[a], perm[b]) for a, b in rel)) for perm in itertools.permutations(range(n))
        )
        if key not in seen:
            seen[key] = Poset(n, frozenset(key))
    return [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------------------
# per-case checks (module level so they pickle for worker processes)


def _check_deletion_contraction(case) -> tuple[int, list[dict]]:
    g, e, m = case
    if verify_deletion_contraction(g, e, m):
        return 1, []
    return 1, [{"graph": weighted_graph_to_json(g), "edge": list(e), "m": m}]


def _check_weak_expansion(case) -> tuple[int, list[dict]]:
    g, host = case
    ok, _, _ = verify_weak_expansion(g, host)
    if ok:
        return 1, []
    return 1, [{"graph": weighted_graph_to_json(g), "host": weighted_graph_to_json(WeightedGraph(host))}]


def _check_power_sum(case) -> tuple[int, list[dict]]:
    g, k, m = case
    if verify_power_sum(g, k, m):
        return 1, []
    return 1, [{"graph": weighted_graph_to_json(g), "k": k, "m": m}]


def _check_gamma(case) -> tuple[int, list[dict]]:
    g, host, family = case
    h, _ = build_host(host)
    x = chromatic_function(g, host)
    checks, failures = 0, []
    for f in family:
        emb = find_induced_embedding(f.graph, h)
        if emb is None:
            continue
        checks += 1
        direct = count_weight_homs(g, f)
        via = weight_hom_count_via_gamma(x, host, f, emb)
        if direct != via:
            failures.append(
                {"graph": weighted_graph_to_json(g), "f": weighted_graph_to_json(f), "host": str(host),
                 "direct": direct, "gamma": via}
            )
    return checks, failures


def _check_dag(d: Dag) -> tuple[int, list[dict]]:
    if reconstruct_dag(dag_weights(d)) == d:
        return 1, []
    return 1, [{"dag": dag_to_json(d)}]


def _check_separation(case) -> tuple[int, list[dict]]:
    a, b, expect_iso = case
    res = compare_weighted(a, b, "hom-count")
    if expect_iso:
        ok = res.verdict == ISOMORPHIC and is_weighted_isomorphism(a, b, res.bijection)
    else:
        ok = res.verdict == SEPARATED
    if ok:
        return 1, []
    return 1, [{"a": weighted_graph_to_json(a), "b": weighted_graph_to_json(b), "verdict": res.verdict}]


# ---------------------------------------------------------------------------
# case builders


def _cases_deletion_contraction(trials: int, rng: random.Random):
    cases = []
    while len(cases) < trials:
        n = rng.randint(2, 6)
        g = random_weighted(rng, n, 3)
        if not g.edges:
            continue
        e = rng.choice(g.graph.sorted_edges())
        cases.append((g, e, rng.randint(1, 4)))
    return cases, _check_deletion_contraction


def _cases_weak_expansion(trials: int, rng: random.Random):
    cases = [
        (random_weighted(rng, rng.randint(1, 4), 2), random_graph(rng, rng.randint(1, 4)))
        for _ in range(trials)
    ]
    return cases, _check_weak_expansion


def _cases_power_sum(trials: int, rng: random.Random):
    corpus = weighted_corpus(3, 5, max_total=5)
    cases = [(rng.choice(corpus), rng.choice((1, 2)), rng.choice((4, 5, 6))) for _ in range(trials)]
    return cases, _check_power_sum


def power_sum_exhaustive_cases():
    corpus = weighted_corpus(3, 5, max_total=5)
    return [(g, k, m) for g in corpus for k in (1, 2) for m in (4, 5, 6)]


def _cases_gamma(trials: int, rng: random.Random):
    corpus = weighted_corpus(3, 2)
    hosts = (HostSpec.complete(5), HostSpec.kneser(6, 2))
    return [(g, host, corpus) for g in corpus for host in hosts], _check_gamma


def _cases_dag(trials: int, rng: random.Random):
    cases = [d for n in range(1, 5) for d in all_labeled_dags(n)]
    cases += [random_dag(rng, 5) for _ in range(trials)]
    return cases, _check_dag


def _cases_separation(trials: int, rng: random.Random):
    corpus = weighted_corpus(4, 2)
    cases = [(a, b, False) for a, b in itertools.combinations(corpus, 2)]
    for g in corpus:
        perm = list(range(g.n))
        rng.shuffle(perm)
        cases.append((g, g.relabel(perm), True))
    return cases, _check_separation


_BUILDERS: dict[str, Callable] = {
    "deletion-contraction": _cases_deletion_contraction,
    "weak-expansion": _cases_weak_expansion,
    "power-sum": _cases_power_sum,
    "gamma": _cases_gamma,
    "dag-roundtrip": _cases_dag,
    "separation": _cases_separation,
}


def run_cases(name: str, seed: int, cases, check, threads: int = 1) -> SuiteReport:
    report = SuiteReport(name, seed)
    if threads > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check, cases, chunksize=max(1, len(cases) // (4 * threads))))
    else:
        results = [check(c) for c in cases]
    for checks, failures in results:
        report.checks += checks
        report.passed += checks - len(failures)
        report.failures.extend(failures)
    return report


def run_suite(name: str, trials: int | None = None, seed: int = 0, threads: int = 1) -> SuiteReport:
    """Run a named suite; ``trials`` only affects the randomized ones."""
    if name not in _BUILDERS:
        raise KeyError(name)
    rng = random.Random(seed)
    cases, check = _BUILDERS[name](trials if trials is not None else DEFAULT_TRIALS.get(name, 0), rng)
    return run_cases(name, seed, cases, check, threads)
