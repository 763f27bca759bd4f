"""Stable JSON encodings for graphs, fibers, divisors, trees, and groups.

Declaration order is preserved everywhere so identical inputs produce
byte-identical outputs.
"""

from __future__ import annotations

import json

from .errors import GraphInputError
from .graphs import WeightedMultigraph
from .divisors import Divisor, EquivalenceCertificate
from .bernardi import SubweightedTree
from .picard import AbelianGroupStructure


def _halfedge_to_json(g, h):
    eid, side = h
    return f"{eid}:{side}" if g.edge(eid).is_loop else eid


def _halfedge_from_json(token, at_vertex, edges_by_id):
    if ":" in token:
        eid, side = token.rsplit(":", 1)
        if eid in edges_by_id and side in ("0", "1"):
            return (eid, int(side))
    eid = token
    if eid not in edges_by_id:
        raise GraphInputError(f"ribbon mentions unknown edge {token!r}")
    ends = edges_by_id[eid]
    if ends[0] == ends[1]:
        raise GraphInputError(
            f"loop {eid!r} must appear in the ribbon as '{eid}:0' and '{eid}:1'")
    if at_vertex == ends[0]:
        return (eid, 0)
    if at_vertex == ends[1]:
        return (eid, 1)
    raise GraphInputError(f"ribbon lists {eid!r} at a non-endpoint vertex")


def graph_to_obj(g: WeightedMultigraph):
    return {
        "vertices": [{"id": v, "weight": g.vertex_weight[v]} for v in g.vertices],
        "edges": [{"id": e.id, "ends": list(e.ends), "weight": g.edge_weight[e.id]}
                  for e in g.edges],
        "ribbon": {v: [_halfedge_to_json(g, h) for h in g.ribbon[v]]
                   for v in g.vertices},
    }


def graph_from_obj(obj) -> WeightedMultigraph:
    try:
        vertices = [v["id"] for v in obj["vertices"]]
        vw = {v["id"]: v.get("weight", 1) for v in obj["vertices"]}
        edges = [(e["id"], tuple(e["ends"])) for e in obj["edges"]]
        ew = {e["id"]: e.get("weight", 1) for e in obj["edges"]}
    except (KeyError, TypeError) as exc:
        raise GraphInputError(f"malformed graph object: {exc}") from exc
    ribbon = None
    if obj.get("ribbon"):
        edges_by_id = dict(edges)
        ribbon = {
            v: tuple(_halfedge_from_json(tok, v, edges_by_id)
                     for tok in tokens)
            for v, tokens in obj["ribbon"].items()
        }
    return WeightedMultigraph.build(vertices, edges, vw, ew, ribbon)


def divisor_to_obj(D: Divisor, key="coefficients"):
    return {key: dict(D.coefficients)}


def divisor_from_obj(obj, key="coefficients") -> Divisor:
    try:
        coeffs = obj[key]
    except (KeyError, TypeError) as exc:
        raise GraphInputError(f"malformed divisor object: missing {key!r}") from exc
    if not all(isinstance(c, int) for c in coeffs.values()):
        raise GraphInputError("divisor coefficients must be integers")
    return Divisor(dict(coeffs))


def certificate_to_obj(cert: EquivalenceCertificate):
    return {"potential": dict(cert.potential)}


def tree_to_obj(g, ts: SubweightedTree):
    obj = {"tree": list(ts.forest_edges),
           "sigma": {e.id: ts.sigma[e.id] for e in g.edges}}
    if len(ts.roots) == 1:
        q = ts.roots[0]
        obj["root"] = q
        if q in ts.starts:
            obj["start"] = _halfedge_to_json(g, ts.starts[q])
    else:
        obj["roots"] = list(ts.roots)
        obj["starts"] = {q: _halfedge_to_json(g, h) for q, h in ts.starts.items()}
    return obj


def tree_from_obj(g, obj) -> SubweightedTree:
    try:
        forest = tuple(obj["tree"])
        sigma = dict(obj["sigma"])
    except (KeyError, TypeError) as exc:
        raise GraphInputError(f"malformed tree object: {exc}") from exc
    edges_by_id = {e.id: e.ends for e in g.edges}
    if "roots" in obj:
        roots = tuple(obj["roots"])
        starts = {q: _halfedge_from_json(tok, q, edges_by_id)
                  for q, tok in obj.get("starts", {}).items()}
    else:
        from .bernardi import default_roots
        droots, dstarts = default_roots(g)
        roots, starts = droots, dstarts
        if "root" in obj:
            q = obj["root"]
            comps = g.components()
            roots = tuple(q if q in comp else droots[i]
                          for i, comp in enumerate(comps))
            starts = {r: dstarts[r] for r in roots if r in dstarts}
            if "start" in obj:
                starts[q] = _halfedge_from_json(obj["start"], q, edges_by_id)
    return SubweightedTree(forest, sigma, roots, starts)


def group_to_obj(s: AbelianGroupStructure):
    return {"invariant_factors": list(s.invariant_factors), "order": s.order}


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def graph_to_dot(g: WeightedMultigraph) -> str:
    lines = ["graph {"]
    for v in g.vertices:
        lines.append(f'  "{v}" [label="{v} ({g.vertex_weight[v]})"];')
    for e in g.edges:
        u, v = e.ends
        lines.append(f'  "{u}" -- "{v}" [label="{e.id} ({g.edge_weight[e.id]})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
