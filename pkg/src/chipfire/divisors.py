"""Divisors on weighted graphs: degrees, balancedness, the weighted
Laplacian, and exact chip-firing equivalence with certificates."""

from __future__ import annotations

from dataclasses import dataclass

from . import intlinalg
from .errors import GraphInputError, PreconditionError
from .graphs import WeightedMultigraph, is_pleasant


@dataclass(frozen=True)
class Divisor:
    coefficients: dict  # vertex -> int

    def __add__(self, other):
        keys = dict(self.coefficients)
        for v, c in other.coefficients.items():
            keys[v] = keys.get(v, 0) + c
        return Divisor(keys)

    def __sub__(self, other):
        keys = dict(self.coefficients)
        for v, c in other.coefficients.items():
            keys[v] = keys.get(v, 0) - c
        return Divisor(keys)

    def __neg__(self):
        return Divisor({v: -c for v, c in self.coefficients.items()})

    def vector(self, g):
        return [self.coefficients.get(v, 0) for v in g.vertices]

    @classmethod
    def from_vector(cls, g, vec):
        return cls(dict(zip(g.vertices, vec)))

    @classmethod
    def zero(cls, g):
        return cls({v: 0 for v in g.vertices})


def check_on_graph(g, D):
    extra = set(D.coefficients) - set(g.vertices)
    if extra:
        raise GraphInputError(f"divisor mentions unknown vertices {sorted(extra)}")


def degree(D: Divisor) -> int:
    return sum(D.coefficients.values())


def is_balanced(g, D) -> bool:
    check_on_graph(g, D)
    return all(D.coefficients.get(v, 0) % g.vertex_weight[v] == 0
               for v in g.vertices)


@dataclass(frozen=True)
class UnbalancingClass:
    residues: dict  # vertex -> int in [0, w(v))


def unbalancing_class(g, D) -> UnbalancingClass:
    check_on_graph(g, D)
    return UnbalancingClass(
        {v: D.coefficients.get(v, 0) % g.vertex_weight[v] for v in g.vertices})


def laplacian(g, f) -> Divisor:
    """Weighted Laplacian of a potential f (vertex -> int); loops contribute 0."""
    missing = set(g.vertices) - set(f)
    if missing:
        raise PreconditionError(f"potential is undefined at {sorted(missing)}")
    out = {v: 0 for v in g.vertices}
    for e in g.edges:
        if e.is_loop:
            continue
        u, v = e.ends
        w = g.edge_weight[e.id]
        out[u] += w * (f[u] - f[v])
        out[v] += w * (f[v] - f[u])
    return Divisor(out)


def chip_fire(g, v) -> Divisor:
    """One chip-firing move: the Laplacian of the indicator of v."""
    return laplacian(g, {u: 1 if u == v else 0 for u in g.vertices})


@dataclass(frozen=True)
class EquivalenceCertificate:
    potential: dict  # vertex -> int, zero at the least vertex of each component


class LaplacianSystem:
    """Smith-form data of the weighted Laplacian of one graph.

    Gives O(1)-per-call class keys (two divisors are chip-firing
    equivalent iff their keys agree) and exact integer solves of
    Laplacian(f) = D.
    """

    def __init__(self, g: WeightedMultigraph):
        self.g = g
        self.L = g.laplacian_matrix()
        self.U, self.S, self.V = intlinalg.smith_normal_form(self.L)
        n = g.n
        self.diag = [self.S[i][i] for i in range(n)]

    def class_key(self, D: Divisor):
        vec = D.vector(self.g)
        n = self.g.n
        key = []
        for i in range(n):
            c = sum(self.U[i][k] * vec[k] for k in range(n))
            s = self.diag[i]
            key.append(c % s if s else c)
        return tuple(key)

    def solve_potential(self, D: Divisor):
        """Integer f with Laplacian(f) = D, normalized per component, or None."""
        vec = D.vector(self.g)
        n = self.g.n
        y = [0] * n
        for i in range(n):
            c = sum(self.U[i][k] * vec[k] for k in range(n))
            s = self.diag[i]
            if s:
                if c % s:
                    return None
                y[i] = c // s
            elif c:
                return None
        x = intlinalg.matvec(self.V, y)
        f = dict(zip(self.g.vertices, x))
        for comp in self.g.components():
            base = f[comp[0]]
            for v in comp:
                f[v] -= base
        return f


def equivalent(g, D1, D2):
    """Certificate f with Laplacian(f) = D1 - D2, or None if inequivalent."""
    check_on_graph(g, D1)
    check_on_graph(g, D2)
    if degree(D1) != degree(D2):
        return None
    f = LaplacianSystem(g).solve_potential(D1 - D2)
    if f is None:
        return None
    assert laplacian(g, f).vector(g) == (D1 - D2).vector(g)
    return EquivalenceCertificate(potential=f)


def require_pleasant(g, what="this operation"):
    if not is_pleasant(g):
        raise PreconditionError(f"{what} requires a pleasant weighting")
