"""Exact fractional vertex-cover LPs via bipartite doubling.

Every LP this package needs has the shape

    min sum_{v in U} y_v   s.t.  y_u + y_v >= 1 on edges of G[U],
                                 y_v = 0 on ``zero_fixed``,
                                 y_v >= 1/2 on ``half_lower``,  y >= 0.

Each vertex ``v`` is split into ``v1`` and ``v2``; edge ``uv`` becomes
``u1v2`` and ``u2v1``, and a half lower bound becomes the edge ``v1v2``
(the doubled form of a loop, ``2 y_v >= 1``). The doubled constraint
matrix is a bipartite incidence matrix, hence totally unimodular, so its
optimum is a 0/1 vertex cover. Averaging the two copies gives a
half-integral optimum of the original LP. Unit-demand programs are solved
combinatorially (Konig's theorem with forced and forbidden vertices);
programs with larger integral demands go through an exact simplex.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .certificate import StabilizerSolution
from .graph import Edge, Graph, Matching, norm_edge
from .matching import bipartite_max_matching
from .numeric import HalfInt, half_sum


class Infeasible:
    """Marker value returned by solvers when the LP has no feasible point."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFEASIBLE"

    def __bool__(self) -> bool:
        return False


INFEASIBLE = Infeasible()


@dataclass(frozen=True)
class CoveringLP:
    g: Graph
    vertices: frozenset[int] = field(default=None)  # type: ignore[assignment]
    zero_fixed: frozenset[int] = frozenset()
    half_lower: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        verts = frozenset(range(self.g.n)) if self.vertices is None else frozenset(self.vertices)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "zero_fixed", frozenset(self.zero_fixed))
        object.__setattr__(self, "half_lower", frozenset(self.half_lower))
        if self.zero_fixed & self.half_lower:
            raise ValueError("zero_fixed and half_lower overlap")
        if not (self.zero_fixed | self.half_lower) <= verts:
            raise ValueError("pinned vertices must lie in the LP vertex set")


@dataclass(frozen=True)
class CoverSolution:
    y: dict[int, HalfInt]
    objective: HalfInt


def solve_covering_lp(p: CoveringLP) -> Union[CoverSolution, Infeasible]:
    """Optimal half-integral cover for ``p`` or :data:`INFEASIBLE`."""
    verts = sorted(p.vertices)
    edges = [(u, v) for u, v in p.g.induced_edges(verts)]
    edges += [(v, v) for v in sorted(p.half_lower)]
    z = _unit_doubled_cover(verts, edges, p.zero_fixed)
    if z is None:
        return INFEASIBLE
    y = {v: HalfInt(z[(v, 1)] + z[(v, 2)]) for v in verts}
    return CoverSolution(y, half_sum(y.values()))


def _unit_doubled_cover(
    verts: list[int], edges: list[tuple[int, int]], zero_fixed: frozenset[int]
) -> dict[tuple[int, int], int] | None:
    """Minimum 0/1 cover of the doubled bipartite graph; ``None`` if infeasible."""
    forbidden = {(v, s) for v in zero_fixed for s in (1, 2)}
    pairs: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for u, v in edges:
        if u == v:
            pairs.append(((v, 1), (v, 2)))
        else:
            pairs.append(((u, 1), (v, 2)))
            pairs.append(((v, 1), (u, 2)))
    forced: set[tuple[int, int]] = set()
    for a, b in pairs:
        if a in forbidden and b in forbidden:
            return None
        if a in forbidden:
            forced.add(b)
        elif b in forbidden:
            forced.add(a)
    adj: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for a, b in pairs:
        if a in forced or b in forced or a in forbidden or b in forbidden:
            continue
        adj.setdefault(a, []).append(b)
    left = sorted(adj)
    for a in left:
        adj[a].sort()
    mate = bipartite_max_matching(left, adj)
    mate_r = {r: l for l, r in mate.items()}
    # Konig: alternating reachability from exposed left vertices
    reach_l = {a for a in left if a not in mate}
    reach_r: set = set()
    stack = list(reach_l)
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b not in reach_r:
                reach_r.add(b)
                l2 = mate_r.get(b)
                if l2 is not None and l2 not in reach_l:
                    reach_l.add(l2)
                    stack.append(l2)
    cover = {a for a in left if a not in reach_l} | reach_r | forced
    z = {(v, s): 0 for v in verts for s in (1, 2)}
    for node in cover:
        z[node] = 1
    return z


def solve_lp_gm(g: Graph, m: Matching) -> Union[StabilizerSolution, Infeasible]:
    """Cheapest stabilizer certifying ``m``: optimum of LP(G, M) in y-space.

    ``c`` is eliminated through ``c_uv = y_u + y_v - 1`` on matching edges, so
    the program is a covering LP with the exposed vertices pinned to zero.
    """
    exposed = frozenset(m.exposed(g.n))
    sol = solve_covering_lp(CoveringLP(g, zero_fixed=exposed))
    if isinstance(sol, Infeasible):
        return INFEASIBLE
    y = tuple(sol.y[v] for v in range(g.n))
    return StabilizerSolution.from_cover(m, y)


def tau_f(g: Graph, c: Mapping[Edge, HalfInt] | None = None) -> Fraction:
    """Minimum fractional (1+c)-vertex cover value, exact."""
    c = {norm_edge(*e): v for e, v in (c or {}).items() if v.doubled}
    for e, v in c.items():
        if not (0 < v.doubled <= 2) or e not in g.edge_set:
            raise ValueError(f"c{e} = {v} is not an edge weight in [0, 1]")
    if not c:
        sol = solve_covering_lp(CoveringLP(g))
        assert not isinstance(sol, Infeasible)
        return sol.objective.value
    # demands 2(1 + c_e) are integral; y_v = (z_v1 + z_v2) / 4
    demands = [(u, v, 2 + c.get((u, v), HalfInt(0)).doubled) for u, v in g.edges]
    z = doubled_cover_simplex(list(range(g.n)), demands, frozenset())
    assert z is not None
    return Fraction(sum(z.values()), 4)


def doubled_cover_simplex(
    verts: list[int],
    demands: Iterable[tuple[int, int, int]],
    zero_fixed: frozenset[int],
) -> dict[tuple[int, int], Fraction] | None:
    """Solve the doubled covering program with integral demands by simplex.

    ``demands`` holds ``(u, v, d)`` meaning ``y_u + y_v >= d`` in the scaled
    program (``u == v`` encodes ``2 y_v >= d``). Returns the optimal doubled
    vector ``z`` keyed by ``(v, copy)``, or ``None`` if infeasible. Because
    the doubled matrix is totally unimodular, the basic optimum is integral.
    """
    var_index: dict[tuple[int, int], int] = {}
    for v in verts:
        if v in zero_fixed:
            continue
        for s in (1, 2):
            var_index[(v, s)] = len(var_index)
    rows: list[tuple[list[int], int]] = []
    for u, v, d in demands:
        if d <= 0:
            continue
        cons = [((v, 1), (v, 2))] if u == v else [((u, 1), (v, 2)), ((v, 1), (u, 2))]
        for a, b in cons:
            cols = [var_index[x] for x in (a, b) if x in var_index]
            if not cols:
                return None
            rows.append((cols, d))
    z = _dual_simplex_cover(len(var_index), rows)
    out = {(v, s): Fraction(0) for v in verts for s in (1, 2)}
    for key, j in var_index.items():
        out[key] = z[j]
    return out


def _dual_simplex_cover(nvars: int, rows: list[tuple[list[int], int]]) -> list[Fraction]:
    """min 1.z s.t. sum_{j in cols} z_j >= d, z >= 0 -- solved through its dual.

    The dual ``max d.x s.t. A^T x <= 1, x >= 0`` starts feasible at the
    origin; Bland's rule guarantees termination. The primal optimum is read
    off the reduced costs of the dual slacks.
    """
    p = len(rows)
    width = p + nvars + 1
    # one tableau row per primal variable (dual constraint)
    tab = [[Fraction(0)] * width for _ in range(nvars)]
    for e, (cols, _) in enumerate(rows):
        for j in cols:
            tab[j][e] += 1
    for j in range(nvars):
        tab[j][p + j] = Fraction(1)
        tab[j][-1] = Fraction(1)
    obj = [Fraction(-d) for _, d in rows] + [Fraction(0)] * (nvars + 1)
    basis = [p + j for j in range(nvars)]
    while True:
        enter = next((k for k in range(width - 1) if obj[k] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(nvars):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # pragma: no cover - dual is bounded by construction
            raise ArithmeticError("unbounded dual: primal infeasible")
        piv = tab[leave][enter]
        prow = [x / piv for x in tab[leave]]
        tab[leave] = prow
        for i in range(nvars):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], prow)]
        f = obj[enter]
        obj = [a - f * b for a, b in zip(obj, prow)]
        basis[leave] = enter
    return [obj[p + j] for j in range(nvars)]


def solve_covering_lp_simplex(p: CoveringLP) -> Union[CoverSolution, Infeasible]:
    """Same contract as :func:`solve_covering_lp`, via the simplex route."""
    verts = sorted(p.vertices)
    demands = [(u, v, 1) for u, v in p.g.induced_edges(verts)]
    demands += [(v, v, 1) for v in sorted(p.half_lower)]
    z = doubled_cover_simplex(verts, demands, p.zero_fixed)
    if z is None:
        return INFEASIBLE
    y = {v: HalfInt.of((z[(v, 1)] + z[(v, 2)]) / 2) for v in verts}
    return CoverSolution(y, half_sum(y.values()))
