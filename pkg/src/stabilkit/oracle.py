"""Brute-force ground truth and certificate checking.

The oracle enumerates every maximum matching and solves LP(G, M) for each;
by the structure theorem an optimal stabilizer always certifies some
maximum-cardinality matching, so the minimum over them is exact.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .certificate import Certificate, StabilizerSolution
from .errors import SizeBoundError
from .graph import Graph, Matching, norm_edge
from .lp import Infeasible, solve_lp_gm

DEFAULT_MAX_N = 12


def oracle_max_n() -> int:
    raw = os.environ.get("STABILKIT_ORACLE_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise SizeBoundError(f"STABILKIT_ORACLE_MAX_N={raw!r} is not an integer") from None


def _check_bound(g: Graph, max_n: int | None) -> None:
    bound = oracle_max_n() if max_n is None else max_n
    if g.n > bound:
        raise SizeBoundError(f"oracle limited to n <= {bound}, got n = {g.n}")


def enumerate_matchings(g: Graph) -> list[Matching]:
    """Every matching of ``g`` (including the empty one)."""
    out: list[Matching] = []
    used = [False] * g.n

    def rec(v: int, acc: list[tuple[int, int]]) -> None:
        while v < g.n and used[v]:
            v += 1
        if v == g.n:
            out.append(Matching(tuple(acc)))
            return
        used[v] = True
        rec(v + 1, acc)
        for u in g.adj[v]:
            if u > v and not used[u]:
                used[u] = True
                acc.append((v, u))
                rec(v + 1, acc)
                acc.pop()
                used[u] = False
        used[v] = False

    rec(0, [])
    return out


def enumerate_maximum_matchings(g: Graph, max_n: int | None = None) -> list[Matching]:
    """All maximum-cardinality matchings, each once, in sorted edge order."""
    _check_bound(g, max_n)
    best = 0
    found: list[Matching] = []
    used = [False] * g.n

    def rec(v: int, acc: list[tuple[int, int]], free: int) -> None:
        nonlocal best, found
        # free counts unused vertices >= v; cardinality pruning
        if len(acc) + free // 2 < best:
            return
        while v < g.n and used[v]:
            v += 1
        if v == g.n:
            if len(acc) > best:
                best, found = len(acc), []
            if len(acc) == best:
                found.append(Matching(tuple(acc)))
            return
        used[v] = True
        for u in g.adj[v]:
            if u > v and not used[u]:
                used[u] = True
                acc.append((v, u))
                rec(v + 1, acc, free - 2)
                acc.pop()
                used[u] = False
        rec(v + 1, acc, free - 1)
        used[v] = False

    rec(0, [], g.n)
    return sorted(found, key=lambda m: m.edges)


def solve_oracle(g: Graph, max_n: int | None = None) -> StabilizerSolution:
    """Exact MFASP by exhaustion: ``min over maximum matchings M of LP(G, M)``.

    LP(G, M) depends on ``M`` only through its exposed set, so values are
    cached per exposed set. The first optimal matching in sorted order wins.
    """
    best: StabilizerSolution | None = None
    by_exposed: dict[tuple[int, ...], Union[StabilizerSolution, Infeasible]] = {}
    for m in enumerate_maximum_matchings(g, max_n):
        key = m.exposed(g.n)
        if key not in by_exposed:
            by_exposed[key] = solve_lp_gm(g, m)
        ref = by_exposed[key]
        if isinstance(ref, Infeasible):
            continue
        if best is not None and ref.cost >= best.cost:
            continue
        sol = ref if ref.matching == m else solve_lp_gm(g, m)
        assert isinstance(sol, StabilizerSolution)
        best = sol
    assert best is not None, "some maximum matching is always certifiable"
    return best


@dataclass(frozen=True)
class Verdict:
    violations: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def verify_certificate(g: Graph, s: Union[StabilizerSolution, Certificate]) -> Verdict:
    """List every violated condition of a claimed stabilizer of ``g``.

    Checks: matching validity, ``c`` supported on ``M`` with ``0 <= c <= 1``,
    cover feasibility ``y_u + y_v >= 1 + c_uv`` on every edge, complementary
    slackness, and ``sum_M (1 + c_e) = sum_v y_v = |M| + cost``. All
    comparisons are on doubled integers.
    """
    cert = s.to_certificate() if isinstance(s, StabilizerSolution) else s
    out: list[str] = []
    if cert.n != g.n:
        out.append(f"certificate has n={cert.n} but graph has n={g.n}")
    if len(cert.y2) != g.n:
        out.append(f"y2 has {len(cert.y2)} entries, expected {g.n}")
        return Verdict(tuple(out))
    y2 = cert.y2
    mate: dict[int, int] = {}
    medges: set[tuple[int, int]] = set()
    for u, v in cert.matching:
        e = norm_edge(u, v)
        if e not in g.edge_set:
            out.append(f"matching edge {e} is not an edge of the graph")
        if u in mate or v in mate or u == v:
            out.append(f"matching edges overlap at {e}")
        mate[u], mate[v] = v, u
        medges.add(e)
    c2: dict[tuple[int, int], int] = {}
    for u, v, d in cert.c2:
        e = norm_edge(u, v)
        if e in c2:
            out.append(f"c listed twice for {e}")
        c2[e] = d
        if e not in medges and d != 0:
            out.append(f"c{e} = {Fraction(d, 2)} on a non-matching edge")
        if not 0 <= d <= 2:
            out.append(f"c{e} = {Fraction(d, 2)} outside [0, 1]")
    for v, d in enumerate(y2):
        if d < 0:
            out.append(f"y[{v}] = {Fraction(d, 2)} is negative")
    for u, v in g.edges:
        need = 2 + c2.get((u, v), 0)
        if y2[u] + y2[v] < need:
            out.append(f"cover violated on edge {(u, v)}: y sum {Fraction(y2[u] + y2[v], 2)} < {Fraction(need, 2)}")
    for v in range(g.n):
        if v not in mate and y2[v] != 0:
            out.append(f"complementary slackness violated: exposed vertex {v} has y = {Fraction(y2[v], 2)}")
    for e in sorted(medges):
        u, v = e
        if 0 <= u < g.n and 0 <= v < g.n and y2[u] + y2[v] != 2 + c2.get(e, 0):
            out.append(f"complementary slackness violated: matching edge {e} is not tight")
    primal = sum(2 + c2.get(e, 0) for e in medges)
    dual = sum(y2)
    if primal != dual:
        out.append(f"primal-dual equality violated: sum over M of (1 + c) = {Fraction(primal, 2)} != sum y = {Fraction(dual, 2)}")
    if cert.cost2 != sum(c2.values()) or cert.cost2 != dual - 2 * len(medges):
        out.append(
            f"primal-dual equality violated: declared cost {Fraction(cert.cost2, 2)} "
            f"!= sum c = {Fraction(sum(c2.values()), 2)} / sum y - |M| = {Fraction(dual - 2 * len(medges), 2)}"
        )
    return Verdict(tuple(out))


def mkec_bruteforce(g: Graph, k: int, max_n: int | None = None) -> int:
    """Fewest vertices whose induced subgraph has at least ``k`` edges."""
    _check_bound(g, max_n)
    if k > g.m:
        raise ValueError(f"k = {k} exceeds the edge count {g.m}")
    if k <= 0:
        return 0
    for size in range(2, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            if len(g.induced_edges(subset)) >= k:
                return size
    raise AssertionError("unreachable: the full vertex set induces every edge")
