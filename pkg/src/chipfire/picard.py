"""Group structure and cardinality of the Jacobian and its balanced subgroup."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg, trees
from .divisors import Divisor, LaplacianSystem, require_pleasant
from .errors import PreconditionError


@dataclass(frozen=True)
class AbelianGroupStructure:
    invariant_factors: tuple[int, ...]  # d1 | d2 | ..., each >= 2; () is trivial

    @property
    def order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out


def _merge_structures(structures):
    """Invariant factors of a direct sum of cyclic groups."""
    ds = [d for s in structures for d in s.invariant_factors]
    if not ds:
        return AbelianGroupStructure(())
    diag = [[ds[i] if i == j else 0 for j in range(len(ds))]
            for i in range(len(ds))]
    return AbelianGroupStructure(tuple(intlinalg.invariant_factors(diag)))


def pic0_structure(g) -> AbelianGroupStructure:
    """Invariant factors of degree-0 divisors modulo principal divisors."""
    facs = intlinalg.invariant_factors(g.laplacian_matrix())
    return AbelianGroupStructure(tuple(facs))


def _balanced_deg0_generators(g):
    """Columns generating the lattice of balanced degree-0 divisors."""
    weights = [g.vertex_weight[v] for v in g.vertices]
    kernel = intlinalg.kernel_basis([weights])
    return [[a * w for a, w in zip(vec, weights)] for vec in kernel]


def picb0_structure(g) -> AbelianGroupStructure:
    """Invariant factors of balanced degree-0 divisors modulo principal ones."""
    require_pleasant(g, "the balanced Jacobian")
    comps = g.components()
    if len(comps) > 1:
        return _merge_structures([picb0_structure(g.subgraph(c)) for c in comps])
    sup = _balanced_deg0_generators(g)
    L = g.laplacian_matrix()
    sub = [[L[i][j] for i in range(g.n)] for j in range(g.n)]
    facs = intlinalg.lattice_quotient_invariants(sup, sub)
    return AbelianGroupStructure(tuple(facs))


def count_pic0(g) -> int:
    """Sum over maximal spanning forests of the product of tree edge weights."""
    total = 0
    for forest in trees.enumerate_forests(g):
        prod = 1
        for eid in forest:
            prod *= g.edge_weight[eid]
        total += prod
    return total


def count_picb0(g) -> int:
    """Closed-form count of the balanced Jacobian (exact rationals)."""
    require_pleasant(g, "the balanced count")
    comps = g.components()
    if len(comps) > 1:
        out = 1
        for c in comps:
            out *= count_picb0(g.subgraph(c))
        return out
    weights = [g.vertex_weight[v] for v in g.vertices]
    prod = 1
    for w in weights:
        prod *= w
    val = Fraction(math.gcd(*weights), prod) * count_pic0(g)
    if val.denominator != 1:
        raise AssertionError(
            "balanced count came out non-integral; input was not pleasant")
    return int(val)


def balanced_divisor_of_degree(g, d):
    """Some balanced divisor of degree d, or None if the gcd obstruction bites."""
    weights = [g.vertex_weight[v] for v in g.vertices]
    a = intlinalg.solve([weights], [d])
    if a is None:
        return None
    return Divisor.from_vector(g, [ai * w for ai, w in zip(a, weights)])


def enumerate_coset_representatives_bruteforce(g, d, balanced_only=False):
    """One divisor per chip-firing class in degree d (balanced classes only
    if requested), by closing a base divisor under translation generators.

    Deterministic breadth-first order.  Connected graphs only.
    """
    if not g.is_connected():
        raise PreconditionError("brute-force enumeration requires a connected graph")
    if balanced_only:
        require_pleasant(g, "balanced enumeration")
        base = balanced_divisor_of_degree(g, d)
        if base is None:
            return []
        gens = _balanced_deg0_generators(g)
    else:
        base = Divisor.from_vector(g, [d] + [0] * (g.n - 1))
        gens = []
        for i in range(1, g.n):
            col = [0] * g.n
            col[0] = 1
            col[i] = -1
            gens.append(col)
    sys = LaplacianSystem(g)
    start = tuple(base.vector(g))
    seen = {sys.class_key(base): start}
    queue = [start]
    while queue:
        cur = queue.pop(0)
        for gen in gens:
            for sgn in (1, -1):
                nxt = tuple(c + sgn * x for c, x in zip(cur, gen))
                key = sys.class_key(Divisor.from_vector(g, list(nxt)))
                if key not in seen:
                    seen[key] = nxt
                    queue.append(nxt)
    return [Divisor.from_vector(g, list(vec)) for vec in seen.values()]
