"""JSON instance/solution documents and DOT export."""

from __future__ import annotations

import json
from typing import Any

from .errors import GraphError
from .graph import Orientation, WeightedGraph, build_graph, format_weight
from .outerplanar import OuterplanarEmbedding


def parse_instance(doc: Any) -> WeightedGraph:
    """Build a graph from ``{"vertices": [...], "edges": [{id, u, v, w}, ...]}``."""
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise GraphError('instance needs "vertices" and "edges"')
    vertices = doc["vertices"]
    edges = doc["edges"]
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphError('"vertices" and "edges" must be lists')
    triples, weights = [], []
    for i, e in enumerate(edges):
        if not isinstance(e, dict):
            raise GraphError(f"edge #{i} is not an object")
        try:
            triples.append((e["id"], e["u"], e["v"]))
            weights.append(e["w"])
        except KeyError as exc:
            raise GraphError(f"edge #{i} lacks field {exc.args[0]!r}") from None
    return build_graph([str(v) for v in vertices], triples, weights)


def load_instance(path: str) -> WeightedGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: invalid JSON: {exc}") from None
    return parse_instance(doc)


def instance_to_dict(G: WeightedGraph) -> dict:
    return {
        "vertices": list(G.vertices),
        "edges": [{"id": e.id, "u": e.u, "v": e.v, "w": format_weight(G.weight(e.id))} for e in G.edges],
    }


def solution_to_dict(sol) -> dict:
    O = sol.orientation
    return {
        "k": format_weight(sol.k),
        "root": sol.root,
        "orientation": [{"id": eid, "tail": t, "head": h} for eid, t, h in O.arcs()],
        "packing": [
            {"lambda": format_weight(lam), "arcs": sorted(arcs, key=O.base.edge_index)}
            for lam, arcs in sol.packing.items
        ],
        "certificate": [
            {
                "root": c.root,
                "steps": [{"sink": v, "delta": format_weight(d)} for v, d in c.steps],
                "final_delta": None if c.final_delta is None else format_weight(c.final_delta),
                "min_cut": format_weight(c.min_cut),
            }
            for c in sol.certificate
        ],
    }


def embedding_to_dict(emb: OuterplanarEmbedding) -> dict:
    return {
        "vertices": list(emb.graph.vertices),
        "outer_cycle": list(emb.outer_cycle),
        "chords": list(emb.chords),
        "join_vertices": sorted(emb.join_vertices, key=emb.graph.index),
        "outer_chords": [list(p) for p in emb.outer_chords],
        "series_outer_chords": [list(emb.outer_chords[i]) for i in emb.series_outer_chords],
    }


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(O: Orientation, name: str = "brp") -> str:
    """Oriented graph as DOT; the root is drawn as a double circle and each
    arc is labelled with its weight."""
    G = O.base
    lines = [f"digraph {name} {{"]
    for v in G.vertices:
        attrs = " [shape=doublecircle]" if v == O.root else ""
        lines.append(f"  {_q(v)}{attrs};")
    for eid, t, h in O.arcs():
        lines.append(f"  {_q(t)} -> {_q(h)} [id={_q(eid)}, label={_q(format_weight(G.weight(eid)))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
