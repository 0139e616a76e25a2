"""Gallai-Edmonds decomposition and the stability test."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .matching import max_cardinality_matching


@dataclass(frozen=True)
class GEDecomposition:
    """``V = X | Y | Z`` with the components of ``G[X]``.

    ``X`` are the inessential vertices (exposed by some maximum matching),
    ``Y = N(X) - X`` is the Tutte set and ``Z`` the rest.
    """

    X: frozenset[int]
    Y: frozenset[int]
    Z: frozenset[int]
    components: tuple[tuple[int, ...], ...]

    @property
    def trivial_flags(self) -> tuple[bool, ...]:
        return tuple(len(k) == 1 for k in self.components)

    @property
    def nontrivial(self) -> tuple[tuple[int, ...], ...]:
        return tuple(k for k in self.components if len(k) > 1)

    @property
    def deficiency(self) -> int:
        """``r``: components of ``G[X]`` minus ``|Y|`` (vertices every maximum matching exposes)."""
        return len(self.components) - len(self.Y)

    def to_json_obj(self) -> dict:
        return {
            "X": sorted(self.X),
            "Y": sorted(self.Y),
            "Z": sorted(self.Z),
            "components": [list(k) for k in self.components],
        }


def inessential_vertices(g: Graph) -> frozenset[int]:
    """``{v : nu(G - v) = nu(G)}``, one matching computation per vertex."""
    nu = len(max_cardinality_matching(g))
    return frozenset(
        v for v in range(g.n) if len(max_cardinality_matching(g.without_vertex(v))) == nu
    )


def decompose(g: Graph) -> GEDecomposition:
    x = inessential_vertices(g)
    y = g.neighbors_of_set(x)
    z = frozenset(range(g.n)) - x - y
    comps = tuple(g.components(x))
    return GEDecomposition(x, y, z, comps)


def is_stable(g: Graph) -> bool:
    """A unit-weight graph is stable iff its inessential vertices are independent."""
    x = inessential_vertices(g)
    return not any(u in x and v in x for u, v in g.edges)
