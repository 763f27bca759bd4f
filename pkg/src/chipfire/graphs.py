"""Weighted multigraphs with ribbon structure, plus the graph rewrites.

A graph is a frozen value: vertices and edges keep their declaration
order, weights are positive ints, and each vertex carries a cyclic
ordering of its incident half-edges.  A half-edge is a pair
(edge_id, side) with side 0 at ends[0] and side 1 at ends[1]; a loop
contributes both sides to its vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GraphInputError, PreconditionError

HalfEdge = tuple[str, int]


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple[str, str]

    @property
    def is_loop(self):
        return self.ends[0] == self.ends[1]

    def other_end(self, v):
        a, b = self.ends
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v!r} is not an endpoint of edge {self.id!r}")


@dataclass(frozen=True)
class WeightedMultigraph:
    vertices: tuple[str, ...]
    vertex_weight: dict
    edges: tuple[Edge, ...]
    edge_weight: dict
    ribbon: dict

    # -- construction -----------------------------------------------------

    @classmethod
    def build(cls, vertices, edges, vertex_weight=None, edge_weight=None,
              ribbon=None):
        """Assemble and structurally check a graph.

        `edges` is a sequence of (edge_id, (u, v)).  Missing weights
        default to 1; a missing ribbon defaults to declaration order with
        a loop's two half-edges adjacent.
        """
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise GraphInputError("duplicate vertex ids")
        vset = set(vertices)
        edge_objs = []
        seen = set()
        for eid, ends in edges:
            if eid in seen:
                raise GraphInputError(f"duplicate edge id {eid!r}")
            seen.add(eid)
            u, v = ends
            if u not in vset or v not in vset:
                raise GraphInputError(f"edge {eid!r} has unknown endpoint")
            edge_objs.append(Edge(eid, (u, v)))
        edge_objs = tuple(edge_objs)

        vw = {v: 1 for v in vertices}
        if vertex_weight:
            vw.update(vertex_weight)
        ew = {e.id: 1 for e in edge_objs}
        if edge_weight:
            ew.update(edge_weight)
        for v, w in vw.items():
            if v not in vset:
                raise GraphInputError(f"weight given for unknown vertex {v!r}")
            if not isinstance(w, int) or w < 1:
                raise GraphInputError(f"vertex weight at {v!r} must be a positive integer")
        for eid, w in ew.items():
            if eid not in seen:
                raise GraphInputError(f"weight given for unknown edge {eid!r}")
            if not isinstance(w, int) or w < 1:
                raise GraphInputError(f"edge weight at {eid!r} must be a positive integer")

        if ribbon is None:
            ribbon = cls._default_ribbon(vertices, edge_objs)
        else:
            ribbon = {v: tuple(hs) for v, hs in ribbon.items()}
        cls._check_ribbon(vertices, edge_objs, ribbon)
        return cls(vertices, vw, edge_objs, ew, ribbon)

    @staticmethod
    def _default_ribbon(vertices, edges):
        ribbon = {v: [] for v in vertices}
        for e in edges:
            if e.is_loop:
                ribbon[e.ends[0]].extend([(e.id, 0), (e.id, 1)])
            else:
                ribbon[e.ends[0]].append((e.id, 0))
                ribbon[e.ends[1]].append((e.id, 1))
        return {v: tuple(hs) for v, hs in ribbon.items()}

    @staticmethod
    def _check_ribbon(vertices, edges, ribbon):
        expected = {v: set() for v in vertices}
        for e in edges:
            expected[e.ends[0]].add((e.id, 0))
            expected[e.ends[1]].add((e.id, 1))
        if set(ribbon) != set(vertices):
            raise GraphInputError("ribbon must list every vertex exactly once")
        for v in vertices:
            hs = ribbon[v]
            if len(hs) != len(set(hs)) or set(hs) != expected[v]:
                raise GraphInputError(
                    f"ribbon at {v!r} must contain exactly the incident half-edges")

    # -- basic accessors --------------------------------------------------

    @property
    def n(self):
        return len(self.vertices)

    def vindex(self, v):
        try:
            return self.vertices.index(v)
        except ValueError:
            raise GraphInputError(f"unknown vertex {v!r}") from None

    def edge(self, eid):
        by_id = self.__dict__.get("_edge_by_id")
        if by_id is None:
            by_id = {e.id: e for e in self.edges}
            object.__setattr__(self, "_edge_by_id", by_id)
        try:
            return by_id[eid]
        except KeyError:
            raise GraphInputError(f"unknown edge {eid!r}") from None

    def half_edge_vertex(self, h):
        eid, side = h
        return self.edge(eid).ends[side]

    def components(self):
        """Connected components as tuples of vertices, in declaration order."""
        cached = self.__dict__.get("_components")
        if cached is not None:
            return cached
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            a, b = find(e.ends[0]), find(e.ends[1])
            if a != b:
                parent[a] = b
        groups = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        roots_in_order = []
        for v in self.vertices:
            r = find(v)
            if r not in roots_in_order:
                roots_in_order.append(r)
        out = [tuple(groups[r]) for r in roots_in_order]
        object.__setattr__(self, "_components", out)
        return out

    def is_connected(self):
        return len(self.components()) <= 1

    def laplacian_matrix(self):
        """Weighted Laplacian as an n x n integer matrix; loops contribute 0."""
        idx = {v: i for i, v in enumerate(self.vertices)}
        L = [[0] * self.n for _ in range(self.n)]
        for e in self.edges:
            if e.is_loop:
                continue
            i, j = idx[e.ends[0]], idx[e.ends[1]]
            w = self.edge_weight[e.id]
            L[i][i] += w
            L[j][j] += w
            L[i][j] -= w
            L[j][i] -= w
        return L

    def subgraph(self, verts):
        """Induced subgraph on `verts` (a component), keeping order and ribbon."""
        keep = set(verts)
        vertices = tuple(v for v in self.vertices if v in keep)
        edges = tuple((e.id, e.ends) for e in self.edges if e.ends[0] in keep)
        return WeightedMultigraph.build(
            vertices, edges,
            {v: self.vertex_weight[v] for v in vertices},
            {eid: self.edge_weight[eid] for eid, _ in edges},
            {v: self.ribbon[v] for v in vertices})


@dataclass(frozen=True)
class ValidationReport:
    pleasant: bool
    connected: bool
    issues: tuple[str, ...]


def validate(g: WeightedMultigraph) -> ValidationReport:
    """Check pleasantness (vertex weights divide incident edge weights)."""
    issues = []
    for e in g.edges:
        for v in set(e.ends):
            if g.edge_weight[e.id] % g.vertex_weight[v]:
                issues.append(
                    f"edge {e.id!r} has weight {g.edge_weight[e.id]}, "
                    f"not divisible by weight {g.vertex_weight[v]} of vertex {v!r}")
    return ValidationReport(pleasant=not issues, connected=g.is_connected(),
                            issues=tuple(issues))


def is_pleasant(g):
    return validate(g).pleasant


def weighted_genus(g: WeightedMultigraph) -> int:
    return sum(g.edge_weight.values()) - sum(g.vertex_weight.values()) + 1


def component_genera(g):
    return [weighted_genus(g.subgraph(c)) for c in g.components()]


def vertex_gcd(g):
    return math.gcd(*g.vertex_weight.values()) if g.vertices else 0


# -- hat graph ------------------------------------------------------------


@dataclass(frozen=True)
class HatGraph:
    graph: WeightedMultigraph
    copy_of: dict  # hat edge id -> (original edge id, copy index 1..w)


def _copy_ids(g, eid):
    w = g.edge_weight[eid]
    if w == 1:
        return [eid]
    return [f"{eid}#{i}" for i in range(1, w + 1)]


def expand_hat(g: WeightedMultigraph) -> HatGraph:
    """Replace each edge by edge-weight many parallel unweighted copies.

    Copies are inserted consecutively, in copy-index order, at the edge's
    former position in both endpoint ribbons.
    """
    copy_of = {}
    edges = []
    for e in g.edges:
        for i, cid in enumerate(_copy_ids(g, e.id), start=1):
            copy_of[cid] = (e.id, i)
            edges.append((cid, e.ends))
    ribbon = {}
    for v in g.vertices:
        hs = []
        for eid, side in g.ribbon[v]:
            hs.extend((cid, side) for cid in _copy_ids(g, eid))
        ribbon[v] = tuple(hs)
    hat = WeightedMultigraph.build(g.vertices, edges, ribbon=ribbon)
    return HatGraph(graph=hat, copy_of=copy_of)


# -- rewrites -------------------------------------------------------------


def _fresh_id(taken, stem):
    if stem not in taken:
        return stem
    k = 2
    while f"{stem}{k}" in taken:
        k += 1
    return f"{stem}{k}"


def add_leaf(g, v, leaf_weight=1, edge_weight=1):
    """Attach a new degree-1 vertex at v; weights must keep the graph pleasant."""
    if v not in g.vertices:
        raise GraphInputError(f"unknown vertex {v!r}")
    if edge_weight % leaf_weight or edge_weight % g.vertex_weight[v]:
        raise PreconditionError(
            "leaf edge weight must be divisible by both endpoint weights")
    leaf = _fresh_id(set(g.vertices), f"{v}_leaf")
    eid = _fresh_id({e.id for e in g.edges}, f"{v}_stem")
    vertices = g.vertices + (leaf,)
    edges = [(e.id, e.ends) for e in g.edges] + [(eid, (v, leaf))]
    vw = dict(g.vertex_weight)
    vw[leaf] = leaf_weight
    ew = dict(g.edge_weight)
    ew[eid] = edge_weight
    ribbon = dict(g.ribbon)
    ribbon[v] = g.ribbon[v] + ((eid, 0),)
    ribbon[leaf] = ((eid, 1),)
    return WeightedMultigraph.build(vertices, edges, vw, ew, ribbon)


def split_edge(g, eid, parts):
    """Replace edge `eid` by parallel edges of the given weights (same total)."""
    e = g.edge(eid)
    parts = list(parts)
    if not parts or any(not isinstance(p, int) or p < 1 for p in parts):
        raise PreconditionError("parts must be positive integers")
    if sum(parts) != g.edge_weight[eid]:
        raise PreconditionError("parts must sum to the weight of the split edge")
    for p in parts:
        for v in set(e.ends):
            if p % g.vertex_weight[v]:
                raise PreconditionError(
                    f"part weight {p} is not divisible by the weight of {v!r}")
    if len(parts) == 1:
        return g
    taken = {x.id for x in g.edges}
    new_ids = []
    for k in range(1, len(parts) + 1):
        nid = _fresh_id(taken, f"{eid}.{k}")
        taken.add(nid)
        new_ids.append(nid)
    edges = []
    for x in g.edges:
        if x.id == eid:
            edges.extend((nid, e.ends) for nid in new_ids)
        else:
            edges.append((x.id, x.ends))
    ew = {i: w for i, w in g.edge_weight.items() if i != eid}
    ew.update(dict(zip(new_ids, parts)))
    ribbon = {}
    for v in g.vertices:
        hs = []
        for hid, side in g.ribbon[v]:
            if hid == eid:
                hs.extend((nid, side) for nid in new_ids)
            else:
                hs.append((hid, side))
        ribbon[v] = tuple(hs)
    return WeightedMultigraph.build(g.vertices, edges, dict(g.vertex_weight),
                                    ew, ribbon)


def shrink_vertex_weight(g, v, new_weight):
    """Lower the weight at v to a divisor of the old weight."""
    if v not in g.vertices:
        raise GraphInputError(f"unknown vertex {v!r}")
    if not isinstance(new_weight, int) or new_weight < 1 \
            or g.vertex_weight[v] % new_weight:
        raise PreconditionError("new weight must be a positive divisor of the old one")
    vw = dict(g.vertex_weight)
    vw[v] = new_weight
    return WeightedMultigraph.build(g.vertices,
                                    [(e.id, e.ends) for e in g.edges],
                                    vw, dict(g.edge_weight), dict(g.ribbon))


@dataclass(frozen=True)
class SplitPlan:
    """How the edges at a split vertex redistribute over the copies.

    For a non-loop edge at v: a list of (copy_index, weight) parts.
    For a loop at v: a list of ((copy_index, copy_index), weight) parts.
    Part weights must sum to the original edge weight.  This data comes
    from the caller; the graph alone does not determine it.
    """
    parts: dict


@dataclass(frozen=True)
class VertexSplitMap:
    """Records old vertex -> its copies for a split_vertex rewrite."""
    copies: dict  # every old vertex maps to a tuple of new vertices
    old_weight: dict

    def ratio(self, v):
        return len(self.copies[v])


def split_vertex(g, v, r, plan: SplitPlan):
    """Split v into r copies of weight w(v)/r, redistributing edges per `plan`."""
    if v not in g.vertices:
        raise GraphInputError(f"unknown vertex {v!r}")
    if not isinstance(r, int) or r < 1 or g.vertex_weight[v] % r:
        raise PreconditionError("number of copies must divide the vertex weight")
    if r == 1:
        return g, VertexSplitMap({u: (u,) for u in g.vertices},
                                 dict(g.vertex_weight))
    incident = {e.id for e in g.edges if v in e.ends}
    if set(plan.parts) != incident:
        raise PreconditionError("plan must cover exactly the edges at the split vertex")
    taken_v = set(g.vertices)
    new_names = []
    for j in range(1, r + 1):
        name = _fresh_id(taken_v, f"{v}_{j}")
        taken_v.add(name)
        new_names.append(name)
    vertices = []
    for u in g.vertices:
        if u == v:
            vertices.extend(new_names)
        else:
            vertices.append(u)
    vw = {u: w for u, w in g.vertex_weight.items() if u != v}
    for name in new_names:
        vw[name] = g.vertex_weight[v] // r

    taken_e = {e.id for e in g.edges}
    new_edges = {}       # old eid -> list of (new id, ends, weight)
    for e in g.edges:
        if e.id not in incident:
            continue
        parts = list(plan.parts[e.id])
        if not parts or sum(p[-1] for p in parts) != g.edge_weight[e.id]:
            raise PreconditionError(
                f"plan parts for edge {e.id!r} must sum to its weight")
        pieces = []
        ids = [e.id] if len(parts) == 1 else None
        if ids is None:
            ids = []
            for k in range(1, len(parts) + 1):
                nid = _fresh_id(taken_e, f"{e.id}.{k}")
                taken_e.add(nid)
                ids.append(nid)
        for nid, part in zip(ids, parts):
            if e.is_loop:
                (ci, cj), w = part
                ends = (new_names[ci], new_names[cj])
            else:
                ci, w = part
                if not 0 <= ci < r:
                    raise PreconditionError("plan copy index out of range")
                if e.ends[0] == v:
                    ends = (new_names[ci], e.ends[1])
                else:
                    ends = (e.ends[0], new_names[ci])
            if not isinstance(w, int) or w < 1:
                raise PreconditionError("plan part weights must be positive integers")
            pieces.append((nid, ends, w))
        new_edges[e.id] = pieces

    edges = []
    ew = {}
    for e in g.edges:
        if e.id in new_edges:
            for nid, ends, w in new_edges[e.id]:
                edges.append((nid, ends))
                ew[nid] = w
        else:
            edges.append((e.id, e.ends))
            ew[e.id] = g.edge_weight[e.id]

    # ribbons: other endpoints get the pieces consecutively at the old spot;
    # each copy's ribbon follows the traversal order of v's old ribbon
    ribbon = {}
    copy_ribbons = {name: [] for name in new_names}
    for eid, side in g.ribbon[v]:
        e = g.edge(eid)
        if e.is_loop:
            for nid, ends, _ in new_edges[eid]:
                target = ends[side]
                copy_ribbons[target].append((nid, side))
        else:
            for nid, ends, _ in new_edges[eid]:
                pos = 0 if ends[0] in new_names else 1
                copy_ribbons[ends[pos]].append((nid, pos))
    for u in g.vertices:
        if u == v:
            continue
        hs = []
        for eid, side in g.ribbon[u]:
            if eid in new_edges:
                for nid, ends, _ in new_edges[eid]:
                    pos = side if g.edge(eid).is_loop else (0 if ends[0] == u else 1)
                    hs.append((nid, pos))
            else:
                hs.append((eid, side))
        ribbon[u] = tuple(hs)
    for name in new_names:
        ribbon[name] = tuple(copy_ribbons[name])

    out = WeightedMultigraph.build(vertices, edges, vw, ew, ribbon)
    if not is_pleasant(out):
        raise PreconditionError("split plan breaks pleasantness")
    copies = {u: (u,) for u in g.vertices if u != v}
    copies[v] = tuple(new_names)
    return out, VertexSplitMap(copies, dict(g.vertex_weight))
