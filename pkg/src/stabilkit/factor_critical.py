"""Stabilizing a single factor-critical component.

For a component ``K`` with outside neighbourhood ``N(K)`` and an exposed
vertex ``w`` the cheapest internal stabilization is a covering LP with
``y_w = 0`` and ``y >= 1/2`` on ``N(K)``; its value minus the matching size
is ``ell(K, w)``, and ``f(K)`` is the minimum over ``w``. On a
factor-critical graph (``N(K)`` empty) this is the exact optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .certificate import StabilizerSolution
from .errors import PreconditionError
from .graph import Graph, Matching
from .lp import CoveringLP, Infeasible, solve_covering_lp
from .matching import matching_exposing
from .numeric import HalfInt


class MustBeMatched:
    """Marker: the component cannot be left unmatched under this Tutte split."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "MUST_BE_MATCHED"


MUST_BE_MATCHED = MustBeMatched()


@dataclass(frozen=True)
class ComponentContext:
    """One factor-critical component, its Tutte-set neighbours and its y >= 1/2 pins."""

    K: frozenset[int]
    boundary: frozenset[int] = frozenset()
    pins: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "K", frozenset(self.K))
        object.__setattr__(self, "boundary", frozenset(self.boundary))
        object.__setattr__(self, "pins", frozenset(self.pins))
        if not self.K:
            raise ValueError("empty component")
        if self.boundary & self.K:
            raise ValueError("boundary intersects the component")
        if not self.pins <= self.K:
            raise ValueError("pins must lie inside the component")

    @classmethod
    def of(cls, g: Graph, K) -> ComponentContext:
        """Context with the full neighbourhood ``N_G(K)`` as boundary and no pins."""
        K = frozenset(K)
        return cls(K, g.neighbors_of_set(K))


@dataclass(frozen=True)
class InternalCover:
    """Optimal exposed-at-``w`` cover of a component and its cost."""

    value: Fraction
    w: int
    y: dict[int, HalfInt]


def _ell_cover(g: Graph, ctx: ComponentContext, w: int) -> InternalCover:
    if w not in ctx.K:
        raise ValueError(f"vertex {w} is not in the component")
    if w in ctx.pins:
        raise ValueError(f"vertex {w} is pinned to y >= 1/2 and cannot be exposed")
    lp = CoveringLP(
        g,
        vertices=ctx.K | ctx.boundary,
        zero_fixed=frozenset({w}),
        half_lower=ctx.boundary | ctx.pins,
    )
    sol = solve_covering_lp(lp)
    if isinstance(sol, Infeasible):  # pragma: no cover - w has no pinned-zero neighbour
        raise AssertionError("ell LP infeasible")
    offset = Fraction(len(ctx.K) - 1, 2) + Fraction(len(ctx.boundary), 2)
    return InternalCover(sol.objective.value - offset, w, sol.y)


def ell(g: Graph, ctx: ComponentContext, w: int) -> Fraction:
    """``ell_{K,w}``: LP lower bound on the cost of stabilizing ``K`` exposed at ``w``."""
    return _ell_cover(g, ctx, w).value


def best_ell_cover(g: Graph, ctx: ComponentContext) -> InternalCover:
    best: InternalCover | None = None
    for w in sorted(ctx.K - ctx.pins):
        cand = _ell_cover(g, ctx, w)
        if best is None or cand.value < best.value:
            best = cand
    if best is None:
        raise ValueError("every vertex of the component is pinned")
    return best


def f_of_K(g: Graph, ctx: ComponentContext) -> tuple[Fraction, int]:
    """``(min_w ell_{K,w}, argmin)``; ties go to the smallest vertex."""
    if ctx.pins:
        raise ValueError("f(K) is defined without pins")
    best = best_ell_cover(g, ctx)
    return best.value, best.w


def is_factor_critical(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    for w in range(g.n):
        m = matching_exposing(g, w)
        if m is None or 2 * len(m) != g.n - 1:
            return False
    return True


def solve_factor_critical(g: Graph) -> StabilizerSolution:
    """Exact minimum fractional additive stabilizer of a factor-critical graph."""
    if not is_factor_critical(g):
        raise PreconditionError("graph is not factor-critical")
    ctx = ComponentContext(frozenset(range(g.n)))
    best = best_ell_cover(g, ctx)
    m = matching_exposing(g, best.w)
    assert m is not None
    y = tuple(best.y[v] for v in range(g.n))
    sol = StabilizerSolution.from_cover(m, y)
    assert sol.cost.value == best.value
    return sol


def kappa(
    g: Graph, ctx: ComponentContext, split: tuple[frozenset[int], frozenset[int]]
) -> Union[Fraction, MustBeMatched]:
    """Cost of leaving ``K`` unmatched when ``split = (in_S, out_S)`` partitions its boundary.

    Vertices of ``K`` adjacent to ``out_S`` (Tutte vertices held at 1/2) are
    pinned to ``y >= 1/2``. Boundary values are not charged here.
    """
    in_s, out_s = frozenset(split[0]), frozenset(split[1])
    if in_s | out_s != ctx.boundary or in_s & out_s:
        raise ValueError("split must partition the component boundary")
    pins = frozenset(v for v in ctx.K if any(u in out_s for u in g.adj[v]))
    res = pinned_component_cover(g, ctx.K, pins)
    return res if isinstance(res, MustBeMatched) else res.value


def pinned_component_cover(
    g: Graph, K: frozenset[int], pins: frozenset[int]
) -> Union[InternalCover, MustBeMatched]:
    """Best internal cover of ``G[K]`` exposed at an unpinned vertex."""
    return _pinned_cached(g, frozenset(K), frozenset(pins))


@lru_cache(maxsize=4096)
def _pinned_cached(g: Graph, K: frozenset[int], pins: frozenset[int]):
    if pins == K:
        return MUST_BE_MATCHED
    if len(K) == 1:
        (u,) = K
        return InternalCover(Fraction(0), u, {u: HalfInt(0)})
    return best_ell_cover(g, ComponentContext(K, frozenset(), pins))


def exposing_matching_in(g: Graph, K, w: int) -> Matching:
    """Near-perfect matching of ``G[K]`` exposing ``w``, in original labels."""
    sub, labels = g.induced(K)
    local = labels.index(w)
    m = matching_exposing(sub, local)
    if m is None or 2 * len(m) != len(labels) - 1:
        raise PreconditionError(f"component {sorted(K)} is not factor-critical at {w}")
    return m.relabel(labels)
