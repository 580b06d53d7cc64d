"""Reading and writing the JSON / graph6 file formats and host spec strings."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

import networkx as nx

from .errors import ChromaError, InvalidHostError, ParseError
from .graphs import Dag, Poset, SimpleGraph, WeightedGraph
from .invariants import HostSpec


def weighted_graph_from_json(data: Mapping[str, Any]) -> WeightedGraph:
    try:
        n = int(data["n"])
        edges = [tuple(int(x) for x in e) for e in data.get("edges", [])]
        weights = data.get("weights")
        if weights is not None:
            weights = [int(w) for w in weights]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed weighted-graph JSON: {exc}") from None
    if any(len(e) != 2 for e in edges):
        raise ParseError("every edge must have two endpoints")
    if weights is not None and len(weights) != n:
        raise ParseError(f"expected {n} weights, got {len(weights)}")
    return WeightedGraph.from_edges(n, edges, weights)


def weighted_graph_to_json(g: WeightedGraph, labels: list[str] | None = None) -> dict:
    out: dict[str, Any] = {
        "n": g.n,
        "edges": [list(e) for e in g.graph.sorted_edges()],
        "weights": list(g.weights),
    }
    if labels is not None:
        out["labels"] = labels
    return out


def graph_from_graph6(text: str) -> SimpleGraph:
    try:
        nxg = nx.from_graph6_bytes(text.strip().encode("ascii"))
    except (ValueError, nx.NetworkXError, UnicodeEncodeError) as exc:
        raise ParseError(f"invalid graph6 string: {exc}") from None
    return SimpleGraph.from_edges(nxg.number_of_nodes(), nxg.edges())


def graph_to_graph6(g: SimpleGraph) -> str:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii").strip()


def dag_from_json(data: Mapping[str, Any]) -> Dag:
    try:
        return Dag.from_arcs(int(data["n"]), [tuple(int(x) for x in a) for a in data.get("arcs", [])])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ChromaError):
            raise
        raise ParseError(f"malformed DAG JSON: {exc}") from None


def dag_to_json(d: Dag) -> dict:
    return {"n": d.n, "arcs": [list(a) for a in sorted(d.arcs)]}


def poset_from_json(data: Mapping[str, Any]) -> Poset:
    try:
        n = int(data["n"])
        if "leq" in data:
            return Poset.from_leq(n, [tuple(int(x) for x in p) for p in data["leq"]])
        if "cover" in data:
            return Poset.from_cover(n, [tuple(int(x) for x in p) for p in data["cover"]])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ChromaError):
            raise
        raise ParseError(f"malformed poset JSON: {exc}") from None
    raise ParseError('poset JSON needs a "leq" or a "cover" list')


def poset_to_json(p: Poset) -> dict:
    return {"n": p.n, "leq": [list(x) for x in sorted(p.relation)]}


def parse_weighted_graph(text: str) -> WeightedGraph:
    """JSON object, or a single graph6 line (all weights 1)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return weighted_graph_from_json(data)
    return WeightedGraph(graph_from_graph6(stripped))


def _load_json(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def read_object(path: str | Path, kind: str = "graph"):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if kind == "graph":
        return parse_weighted_graph(text)
    if kind == "dag":
        return dag_from_json(_load_json(text))
    if kind == "poset":
        return poset_from_json(_load_json(text))
    raise ParseError(f"unknown input kind {kind!r}")


def parse_host(text: str) -> HostSpec:
    """``complete:M``, ``kneser:M,K`` or ``file:PATH`` (explicit host graph JSON)."""
    kind, _, arg = text.partition(":")
    try:
        if kind == "complete":
            return HostSpec.complete(int(arg))
        if kind == "kneser":
            m, k = (int(x) for x in arg.split(","))
            return HostSpec.kneser(m, k)
    except ValueError:
        raise InvalidHostError(f"bad host spec {text!r}") from None
    if kind == "file":
        return HostSpec.explicit(read_object(arg, "graph").graph)
    raise InvalidHostError(f"bad host spec {text!r}; expected complete:M, kneser:M,K or file:PATH")
