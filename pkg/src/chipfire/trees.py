"""Spanning tree and maximal spanning forest enumeration.

Backtracking over edges in declaration order with union-find, so the
emitted order is the lexicographic order on edge-index subsets.  Loops
are never part of a tree.
"""

from __future__ import annotations

from .errors import PreconditionError


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def enumerate_forests(g):
    """All maximal spanning forests as tuples of edge ids."""
    target = g.n - len(g.components())
    candidates = [e for e in g.edges if not e.is_loop]
    out = []
    chosen = []

    def rec(start, parent, count):
        if count == target:
            out.append(tuple(chosen))
            return
        for k in range(start, len(candidates)):
            e = candidates[k]
            ra, rb = _find(parent, e.ends[0]), _find(parent, e.ends[1])
            if ra == rb:
                continue
            child = dict(parent)
            child[ra] = rb
            chosen.append(e.id)
            rec(k + 1, child, count + 1)
            chosen.pop()

    rec(0, {v: v for v in g.vertices}, 0)
    return out


def enumerate_trees(g):
    """All spanning trees of a connected graph, as tuples of edge ids."""
    if not g.is_connected():
        raise PreconditionError("spanning trees require a connected graph")
    return enumerate_forests(g)


def is_maximal_forest(g, edge_ids):
    ids = list(edge_ids)
    if len(set(ids)) != len(ids):
        return False
    known = {e.id for e in g.edges}
    if any(i not in known for i in ids):
        return False
    if len(ids) != g.n - len(g.components()):
        return False
    parent = {v: v for v in g.vertices}
    for eid in ids:
        e = g.edge(eid)
        if e.is_loop:
            return False
        ra, rb = _find(parent, e.ends[0]), _find(parent, e.ends[1])
        if ra == rb:
            return False
        parent[ra] = rb
    return True
