"""Polynomial min{OPT, sqrt(n)}-approximation for graphs without singleton components.

Outline: price every component of ``G[X]`` by ``f(K)``, contract the
components, pick a maximum-weight matching of the contracted bipartite
graph that covers the Tutte set (so the cheap components stay exposed),
then stabilize the exposed components with their ``ell``-optimal covers
and everything else at ``y = 1/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certificate import StabilizerSolution
from .errors import PreconditionError
from .factor_critical import ComponentContext, InternalCover, best_ell_cover, exposing_matching_in
from .gallai_edmonds import GEDecomposition, decompose, is_stable
from .graph import Graph, Matching
from .lp import Infeasible, solve_lp_gm
from .matching import WeightedBipartite, max_cardinality_matching, max_weight_covering_matching
from .numeric import HALF, HalfInt


@dataclass(frozen=True)
class ZReduction:
    """``G[X | Y]`` relabelled to ``0..|X|+|Y|-1`` plus a perfect matching of ``G[Z]``."""

    core: Graph
    z_matching: Matching
    vertices: tuple[int, ...]  # core index -> original vertex


def reduce_by_Z(g: Graph, ged: GEDecomposition | None = None) -> ZReduction:
    ged = ged or decompose(g)
    core, labels = g.induced(ged.X | ged.Y)
    return ZReduction(core, z_perfect_matching(g, ged), labels)


def z_perfect_matching(g: Graph, ged: GEDecomposition) -> Matching:
    zg, labels = g.induced(ged.Z)
    m = max_cardinality_matching(zg)
    if 2 * len(m) != zg.n:
        raise AssertionError("G[Z] has no perfect matching; Gallai-Edmonds invariant broken")
    return m.relabel(labels)


def zero_stabilizer(g: Graph) -> StabilizerSolution:
    """The cost-0 certificate of a stable graph: a maximum matching with an optimal cover."""
    sol = solve_lp_gm(g, max_cardinality_matching(g))
    if isinstance(sol, Infeasible) or sol.cost.doubled != 0:
        raise PreconditionError("graph is not stable")
    return sol


@dataclass(frozen=True)
class ContractionMap:
    """Components of ``G[X]`` as pseudo-vertices priced by ``f(K)``; ``E[Y]`` dropped."""

    components: tuple[tuple[int, ...], ...]
    f_values: tuple[Fraction, ...]
    best_covers: tuple[InternalCover, ...]
    edges: tuple[tuple[int, int], ...]  # (Tutte vertex, component index)

    def bipartite(self, tutte: frozenset[int]) -> WeightedBipartite:
        return WeightedBipartite(
            tuple(sorted(tutte)),
            tuple(range(len(self.components))),
            tuple((b, k, self.f_values[k]) for b, k in self.edges),
        )


def contract(g: Graph, ged: GEDecomposition) -> ContractionMap:
    covers = []
    for K in ged.components:
        covers.append(best_ell_cover(g, ComponentContext.of(g, K)))
    comp_of = {v: i for i, K in enumerate(ged.components) for v in K}
    edges = sorted({(b, comp_of[v]) for b in ged.Y for v in g.adj[b] if v in comp_of})
    return ContractionMap(ged.components, tuple(c.value for c in covers), tuple(covers), tuple(edges))


@dataclass(frozen=True)
class ApproxTrace:
    solution: StabilizerSolution
    ged: GEDecomposition
    contraction: ContractionMap | None
    covering: tuple[tuple[int, int], ...]
    exposed_components: tuple[int, ...]


def solve_approx(g: Graph) -> StabilizerSolution:
    """Feasible stabilizer of cost at most OPT^2 (graphs whose ``G[X]`` has no singletons)."""
    return approx_trace(g).solution


def approx_trace(g: Graph) -> ApproxTrace:
    ged = decompose(g)
    for K in ged.components:
        if len(K) == 1:
            raise PreconditionError(f"singleton component {{{K[0]}}} in G[X]; use the exact solver")
    if is_stable(g):
        return ApproxTrace(zero_stabilizer(g), ged, None, (), ())

    cmap = contract(g, ged)
    covering = max_weight_covering_matching(cmap.bipartite(ged.Y))
    if covering is None:  # pragma: no cover - Y is always coverable
        raise AssertionError("Tutte set cannot be covered")
    matched = {k: b for b, k in covering}
    exposed = tuple(k for k in range(len(ged.components)) if k not in matched)

    y = [HALF] * g.n
    edges = list(z_perfect_matching(g, ged).edges)
    for k, K in enumerate(ged.components):
        if k in matched:
            b = matched[k]
            u = min(v for v in K if g.has_edge(b, v))
            edges.append((b, u))
            edges.extend(exposing_matching_in(g, K, u).edges)
        else:
            cov = cmap.best_covers[k]
            for v in K:
                y[v] = cov.y[v]
            edges.extend(exposing_matching_in(g, K, cov.w).edges)
    for b in ged.Y:
        vals = [cmap.best_covers[k].y[b] for k in exposed if b in cmap.best_covers[k].y]
        y[b] = max(vals) if vals else HALF
    sol = StabilizerSolution.from_cover(Matching(tuple(edges)), tuple(y))
    return ApproxTrace(sol, ged, cmap, covering, exposed)
