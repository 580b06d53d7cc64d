"""Deciding whether two graphs, DAGs or posets are isomorphic, with certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .graphs import WeightedGraph, hasse_diagram, is_isomorphic_weighted
from .homomorphisms import separation_witness
from .invariants import HostSpec, chromatic_function, dag_weights
from .polynomials import Monomial, mono_sort_key, render_monomial

ISOMORPHIC = "ISOMORPHIC"
SEPARATED = "SEPARATED"
UNRESOLVED = "UNRESOLVED"


@dataclass
class CompareResult:
    verdict: str
    bijection: dict[int, int] | None = None
    family_witness: WeightedGraph | None = None
    counts: tuple[int, int] | None = None
    host: HostSpec | None = None
    monomial: str | None = None
    coefficients: tuple[int, int] | None = None

    def lines(self) -> list[str]:
        out = [self.verdict]
        if self.bijection is not None:
            out.append("bijection: " + " ".join(f"{u}->{v}" for u, v in sorted(self.bijection.items())))
        if self.family_witness is not None:
            f = self.family_witness
            data = {"n": f.n, "edges": [list(e) for e in f.graph.sorted_edges()], "weights": list(f.weights)}
            out.append("witness: " + json.dumps(data))
            out.append(f"counts: {self.counts[0]} vs {self.counts[1]}")
        if self.host is not None:
            out.append(f"host: {self.host}")
            out.append(f"monomial: {self.monomial} (coefficients {self.coefficients[0]} vs {self.coefficients[1]})")
        return out


def as_weighted(obj, kind: str) -> WeightedGraph:
    if kind == "graph":
        return obj
    if kind == "dag":
        return dag_weights(obj)
    if kind == "poset":
        return dag_weights(hasse_diagram(obj))
    raise ValueError(f"unknown kind {kind!r}")


def default_grid(a: WeightedGraph, b: WeightedGraph) -> list[HostSpec]:
    top = max(a.total_weight, b.total_weight, 1) + 1
    return [HostSpec.complete(m) for m in range(1, top + 1)] + [HostSpec.kneser(5, 2)]


def _first_difference(pa, pb) -> tuple[Monomial, int, int]:
    monos = sorted(set(pa.terms) | set(pb.terms), key=mono_sort_key)
    for m in monos:
        ca, cb = pa.coefficient(m), pb.coefficient(m)
        if ca != cb:
            return m, ca, cb
    raise ValueError("polynomials are equal")


def _by_hom_count(a: WeightedGraph, b: WeightedGraph) -> CompareResult:
    found = separation_witness(a, b, [a, b])
    if found is not None:
        f, c1, c2 = found
        return CompareResult(SEPARATED, family_witness=f, counts=(c1, c2))
    iso, phi = is_isomorphic_weighted(a, b)
    if iso:
        return CompareResult(ISOMORPHIC, bijection=phi)
    return CompareResult(UNRESOLVED)


def compare_weighted(
    a: WeightedGraph, b: WeightedGraph, strategy: str = "hom-count", hosts: Sequence[HostSpec] | None = None
) -> CompareResult:
    if strategy == "hom-count":
        return _by_hom_count(a, b)
    if strategy != "host-grid":
        raise ValueError(f"unknown strategy {strategy!r}")
    for host in hosts or default_grid(a, b):
        pa, pb = chromatic_function(a, host), chromatic_function(b, host)
        if pa != pb:
            m, ca, cb = _first_difference(pa, pb)
            return CompareResult(
                SEPARATED, host=host, monomial=render_monomial(m, pa.reg) or "1", coefficients=(ca, cb)
            )
    return _by_hom_count(a, b)


def compare_objects(a, b, kind: str = "graph", strategy: str = "hom-count", hosts=None) -> CompareResult:
    """Compare two graphs, DAGs or posets through their weighted-graph encodings.

    For DAGs and posets a weighted isomorphism of the encodings is also an
    isomorphism of the originals, since the weights fix every orientation.
    """
    return compare_weighted(as_weighted(a, kind), as_weighted(b, kind), strategy, hosts)

