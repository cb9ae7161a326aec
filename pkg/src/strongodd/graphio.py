"""Text and JSON formats for graphs, witnesses, and colorings.

Edge-list text: first line ``n m`` (digraphs: ``n m directed``), then m lines
``u v`` with 0-indexed endpoints.  JSON formats mirror the in-memory types.
"""

from __future__ import annotations

import json
from typing import Any

from .graphs import Coloring, DiGraph, Graph, Hypergraph, PlaneGraph
from .ktree import KTreeSeq
from .sums import SumDesc, Summand


class FormatError(ValueError):
    pass


def parse_edge_list(text: str) -> Graph | DiGraph:
    lines = [ln for ln in (l.strip() for l in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty edge-list input")
    header = lines[0].split()
    directed = False
    if len(header) == 3 and header[2] == "directed":
        directed = True
    elif len(header) != 2:
        raise FormatError(f"bad header {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return DiGraph(n, pairs) if directed else Graph(n, pairs)


def write_edge_list(g: Graph | DiGraph) -> str:
    if isinstance(g, DiGraph):
        pairs = g.arc_list()
        header = f"{g.n} {len(pairs)} directed"
    else:
        pairs = g.edge_list()
        header = f"{g.n} {len(pairs)}"
    return "\n".join([header] + [f"{u} {v}" for u, v in pairs]) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edge_list()]}


def graph_from_json(obj: dict) -> Graph:
    try:
        return Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad graph object: {exc}") from exc


def digraph_to_json(d: DiGraph) -> dict:
    return {"n": d.n, "arcs": [list(a) for a in d.arc_list()]}


def digraph_from_json(obj: dict) -> DiGraph:
    try:
        return DiGraph(int(obj["n"]), [tuple(a) for a in obj["arcs"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad digraph object: {exc}") from exc


def hypergraph_from_json(obj: dict) -> Hypergraph:
    try:
        return Hypergraph(int(obj["n"]), [list(h) for h in obj["hyperedges"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad hypergraph object: {exc}") from exc


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {"n": h.n, "hyperedges": [sorted(e) for e in h.hyperedges]}


def plane_from_json(obj: dict) -> PlaneGraph:
    return PlaneGraph(graph_from_json(obj), [list(f) for f in obj["faces"]])


def plane_to_json(p: PlaneGraph) -> dict:
    out = graph_to_json(p.graph)
    out["faces"] = [list(f) for f in p.faces]
    return out


def ktree_to_json(seq: KTreeSeq) -> dict:
    return {
        "k": seq.k,
        "initial": list(seq.initial),
        "steps": [{"v": v, "parents": sorted(p)} for v, p in seq.steps],
    }


def ktree_from_json(obj: dict) -> KTreeSeq:
    try:
        return KTreeSeq(
            int(obj["k"]),
            tuple(obj["initial"]),
            tuple((int(s["v"]), frozenset(s["parents"])) for s in obj["steps"]),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad ktree object: {exc}") from exc


def sumdesc_to_json(desc: SumDesc) -> dict:
    return {
        "w": desc.w,
        "k": desc.k,
        "t": desc.t,
        "summands": [
            {"ktree": ktree_to_json(s.ktree), "path_len": s.path_len}
            for s in desc.summands
        ],
        "attachments": [
            {"host_clique": list(h), "new_clique": list(nw)}
            for h, nw in desc.attachments
        ],
    }


def sumdesc_from_json(obj: dict) -> SumDesc:
    try:
        return SumDesc(
            int(obj["w"]),
            int(obj["k"]),
            int(obj["t"]),
            tuple(
                Summand(ktree_from_json(s["ktree"]), int(s["path_len"]))
                for s in obj["summands"]
            ),
            tuple(
                (tuple(a["host_clique"]), tuple(a["new_clique"]))
                for a in obj.get("attachments", [])
            ),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad sum description: {exc}") from exc


def coloring_to_json(c: Coloring) -> dict:
    out: dict[str, Any] = {"colors": {str(v): col for v, col in sorted(c.assignment.items())}}
    if c.tuples is not None:
        out["tuples"] = {str(v): repr(t) for v, t in sorted(c.tuples.items())}
    return out


def coloring_from_json(obj: dict) -> Coloring:
    try:
        return Coloring({int(v): int(col) for v, col in obj["colors"].items()})
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad coloring object: {exc}") from exc


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
