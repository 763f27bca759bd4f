"""Special-fiber descriptions, their dual graphs, the component group,
and base-change maps with brute-force injectivity checks."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .bernardi import enumerate_subweightings
from .divisors import Divisor, LaplacianSystem, degree, is_balanced
from .errors import GraphInputError, PreconditionError
from .graphs import VertexSplitMap, WeightedMultigraph, validate
from .picard import (enumerate_coset_representatives_bruteforce,
                     picb0_structure)
from .trees import enumerate_forests

PHI_NOTE_GENERIC = ("arithmetic component group; equals the geometric "
                    "component group when all component indices are 1")


@dataclass(frozen=True)
class SpecialFiberDescription:
    components: tuple  # (component id, index)
    nodes: tuple       # (node id, (component, component), residue degree)

    @classmethod
    def from_obj(cls, obj):
        try:
            comps = tuple((c["id"], c.get("index", 1)) for c in obj["components"])
            nodes = tuple((p["id"], tuple(p["ends"]), p.get("degree", 1))
                          for p in obj["nodes"])
        except (KeyError, TypeError) as exc:
            raise GraphInputError(f"malformed fiber object: {exc}") from exc
        return cls(comps, nodes)

    def to_obj(self):
        return {
            "components": [{"id": c, "index": i} for c, i in self.components],
            "nodes": [{"id": p, "ends": list(ends), "degree": d}
                      for p, ends, d in self.nodes],
        }


def dual_graph(f: SpecialFiberDescription) -> WeightedMultigraph:
    """Components become weighted vertices, nodes weighted edges.

    A node joining a component to itself becomes a loop.  Each incident
    component's index must divide the node's residue degree; that is what
    makes the result pleasant.
    """
    index = dict(f.components)
    for comp, ind in f.components:
        if not isinstance(ind, int) or ind < 1:
            raise GraphInputError(f"component {comp!r} must have a positive index")
    for node, ends, deg in f.nodes:
        for comp in set(ends):
            if comp not in index:
                raise GraphInputError(f"node {node!r} touches unknown component {comp!r}")
            if deg % index[comp]:
                raise GraphInputError(
                    f"node {node!r} has residue degree {deg}, not divisible by "
                    f"index {index[comp]} of component {comp!r}")
    g = WeightedMultigraph.build(
        [c for c, _ in f.components],
        [(node, ends) for node, ends, _ in f.nodes],
        vertex_weight=index,
        edge_weight={node: deg for node, _, deg in f.nodes})
    report = validate(g)
    assert report.pleasant
    return g


def balanced_representatives(g):
    """All balanced sub-weighted forests, in (forest, sigma) lexicographic order."""
    out = []
    for forest in enumerate_forests(g):
        out.extend(enumerate_subweightings(g, forest, balanced_only=True))
    return out


def component_group(f: SpecialFiberDescription):
    """Group structure of the arithmetic component group plus its torsor elements."""
    g = dual_graph(f)
    if not g.is_connected():
        warnings.warn("special fiber is disconnected; computing the "
                      "component-wise direct sum", stacklevel=2)
    return picb0_structure(g), balanced_representatives(g)


def phi_note(f: SpecialFiberDescription) -> str:
    if all(ind == 1 for _, ind in f.components):
        return ("arithmetic component group; all indices are 1, so this "
                "is the geometric component group")
    return PHI_NOTE_GENERIC


def psi_map(old_g, split: VertexSplitMap, D: Divisor) -> Divisor:
    """Push a balanced divisor through a vertex split: the coefficient at a
    split vertex spreads evenly over its copies."""
    if not is_balanced(old_g, D):
        raise PreconditionError("the base-change divisor map needs a balanced divisor")
    out = {}
    for v in old_g.vertices:
        copies = split.copies[v]
        c = D.coefficients.get(v, 0)
        r = len(copies)
        assert c % r == 0  # r divides w(v) divides c
        for name in copies:
            out[name] = c // r
    return Divisor(out)


@dataclass(frozen=True)
class InjectivityReport:
    injective: bool
    checked: int
    witness: tuple | None  # (D1, D2) with distinct old classes mapping together


def check_base_change_injectivity(old_g, new_g, correspondence=None) -> InjectivityReport:
    """Brute-force check that the induced map on balanced Jacobians is injective.

    `correspondence` is a VertexSplitMap for vertex splits, or None when the
    vertex sets agree (edge split, weight shrink).
    """
    reps = enumerate_coset_representatives_bruteforce(old_g, 0, balanced_only=True)
    if correspondence is None:
        images = list(reps)
    else:
        images = [psi_map(old_g, correspondence, D) for D in reps]
    sys = LaplacianSystem(new_g)
    seen = {}
    for D_old, D_new in zip(reps, images):
        assert degree(D_new) == 0
        key = sys.class_key(D_new)
        if key in seen:
            return InjectivityReport(False, len(reps), (seen[key], D_old))
        seen[key] = D_old
    return InjectivityReport(True, len(reps), None)
