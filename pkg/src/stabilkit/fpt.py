"""Exact stabilization in time exponential only in the Tutte set.

Fix ``S`` inside the Tutte set ``Y`` and require ``y = 1`` on ``S`` and
``y = 1/2`` on ``Y - S``. Each component of ``G[X]`` then either gets
matched into ``Y`` or pays its pinned internal cost ``kappa(K, S)``, and the
best choice is a maximum-weight ``Y``-covering matching of the contracted
graph. Minimizing over all ``2^|Y|`` choices of ``S`` gives the optimum.

Matching weights: ``g(K) = kappa(K, S)`` for ordinary components,
``g(K) = 1/2`` for singletons whose neighbours all lie in ``S`` (matching
one saves the 1/2 its partner would otherwise be charged), and a sentinel
``U`` larger than every finite total for components that cannot stay
unmatched. Then ``f(S) = |S|/2 + sum_K kappa(K, S) - sum_{matched K} g(K)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .approx import z_perfect_matching, zero_stabilizer
from .certificate import StabilizerSolution
from .factor_critical import InternalCover, MustBeMatched, exposing_matching_in, pinned_component_cover
from .gallai_edmonds import GEDecomposition, decompose, is_stable
from .graph import Graph, Matching
from .matching import WeightedBipartite, max_weight_covering_matching, optimal_covering_assignment
from .numeric import HALF, ONE, ZERO, HalfInt

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SubsetOutcome:
    S_hat: frozenset[int]
    feasible: bool
    f_value: Optional[Fraction] = None
    solution: Optional[StabilizerSolution] = None


@dataclass(frozen=True)
class _Pricing:
    """Per-component data for one choice of ``S``."""

    covers: tuple[InternalCover | MustBeMatched, ...]
    in_T: tuple[bool, ...]
    weights: dict[tuple[int, int], Fraction]
    must: frozenset[int]
    kappa_total: Fraction
    tutte: tuple[int, ...]


def _price(g: Graph, ged: GEDecomposition, S_hat: frozenset[int]) -> _Pricing:
    out_s = ged.Y - S_hat
    covers, in_T, gvals = [], [], []
    for K in ged.components:
        pins = frozenset(v for v in K if any(u in out_s for u in g.adj[v]))
        res = pinned_component_cover(g, frozenset(K), pins)
        covers.append(res)
        trivial_free = len(K) == 1 and not pins
        in_T.append(trivial_free)
        if isinstance(res, MustBeMatched):
            gvals.append(None)
        else:
            gvals.append(_HALF if trivial_free else res.value)
    finite = [x for x in gvals if x is not None]
    sentinel = 1 + sum(finite, Fraction(0)) + len(ged.Y)
    comp_of = {v: i for i, K in enumerate(ged.components) for v in K}
    weights: dict[tuple[int, int], Fraction] = {}
    for b in sorted(ged.Y):
        for v in g.adj[b]:
            k = comp_of.get(v)
            if k is not None:
                weights[(b, k)] = sentinel if gvals[k] is None else gvals[k]
    kappa_total = sum(
        (c.value for c, t in zip(covers, in_T) if isinstance(c, InternalCover) and not t), Fraction(0)
    )
    must = frozenset(k for k, x in enumerate(gvals) if x is None)
    return _Pricing(tuple(covers), tuple(in_T), weights, must, kappa_total, tuple(sorted(ged.Y)))


def _subset_value(g: Graph, ged: GEDecomposition, S_hat: frozenset[int]) -> Optional[Fraction]:
    """``f(S)`` without the tie-broken solution, or ``None`` if infeasible."""
    pr = _price(g, ged, S_hat)
    pairs = optimal_covering_assignment(list(pr.tutte), list(range(len(ged.components))), pr.weights)
    if pairs is None:
        return None
    return _f_value(pr, S_hat, {k: t for t, k in pairs})


def _f_value(pr: _Pricing, S_hat: frozenset[int], matched: dict[int, int]) -> Optional[Fraction]:
    if not pr.must <= matched.keys():
        return None
    credit = sum((pr.weights[(t, k)] for k, t in matched.items() if k not in pr.must), Fraction(0))
    return Fraction(len(S_hat), 2) + pr.kappa_total - credit


def mfasp_for_subset(g: Graph, ged: GEDecomposition, S_hat) -> SubsetOutcome:
    """Optimal stabilizer with ``y = 1`` on ``S_hat`` and ``y = 1/2`` on the rest of ``Y``."""
    S_hat = frozenset(S_hat)
    if not S_hat <= ged.Y:
        raise ValueError("S_hat must be a subset of the Tutte set")
    pr = _price(g, ged, S_hat)
    b = WeightedBipartite(
        pr.tutte,
        tuple(range(len(ged.components))),
        tuple((l, k, w) for (l, k), w in sorted(pr.weights.items())),
    )
    covering = max_weight_covering_matching(b)
    if covering is None:
        return SubsetOutcome(S_hat, False)
    matched = {k: t for t, k in covering}
    f_value = _f_value(pr, S_hat, matched)
    if f_value is None:
        return SubsetOutcome(S_hat, False)

    y = [HALF] * g.n
    edges = list(z_perfect_matching(g, ged).edges)
    for t in ged.Y:
        y[t] = ONE if t in S_hat else HALF
    for k, K in enumerate(ged.components):
        cover = pr.covers[k]
        if k in matched:
            t = matched[k]
            u = min(v for v in K if g.has_edge(t, v))
            edges.append((t, u))
            edges.extend(exposing_matching_in(g, K, u).edges)
            if pr.in_T[k]:
                y[u] = ZERO
        else:
            assert isinstance(cover, InternalCover)
            for v in K:
                y[v] = cover.y[v]
            edges.extend(exposing_matching_in(g, K, cover.w).edges)
    sol = StabilizerSolution.from_cover(Matching(tuple(edges)), tuple(y))
    assert sol.cost.value == f_value, (sol.cost, f_value)
    return SubsetOutcome(S_hat, True, f_value, sol)


def tutte_subsets(Y) -> list[frozenset[int]]:
    """All subsets of ``Y`` by increasing size, then lexicographically."""
    ys = sorted(Y)
    return [frozenset(c) for r in range(len(ys) + 1) for c in itertools.combinations(ys, r)]


def solve_exact(g: Graph) -> StabilizerSolution:
    """Exact minimum fractional additive stabilizer in ``O(2^|Y| poly(n))``."""
    if is_stable(g):
        return zero_stabilizer(g)
    ged = decompose(g)
    best_val: Optional[Fraction] = None
    best_s: Optional[frozenset[int]] = None
    for s in tutte_subsets(ged.Y):
        val = _subset_value(g, ged, s)
        if val is not None and (best_val is None or val < best_val):
            best_val, best_s = val, s
    if best_s is None:
        raise AssertionError("no feasible Tutte subset on an unstable graph")
    out = mfasp_for_subset(g, ged, best_s)
    assert out.feasible and out.f_value == best_val
    return out.solution


def solve_tutte_all(g: Graph) -> StabilizerSolution:
    """Stabilizer with ``y = 1`` on the whole Tutte set (always feasible)."""
    ged = decompose(g)
    out = mfasp_for_subset(g, ged, ged.Y)
    assert out.feasible
    return out.solution


def tutte_all_guarantee(g: Graph, ged: GEDecomposition | None = None) -> Optional[int]:
    """Smallest integer ``k >= 1`` with ``|C+| >= (1 + 1/k) |Y|``, or ``None``.

    When it exists, :func:`solve_tutte_all` is a ``(k/2 + 1)``-approximation.
    """
    ged = ged or decompose(g)
    c_plus = len(ged.nontrivial)
    y = len(ged.Y)
    if y == 0:
        return 1
    if c_plus <= y:
        return None
    # k (c_plus - y) >= y
    return max(1, -(-y // (c_plus - y)))
