"""Matching primitives.

* maximum-cardinality matching in general graphs (Edmonds' blossom
  shrinking, O(n^3));
* maximum-cardinality matching avoiding / exposing a given vertex;
* maximum-weight bipartite matchings that must cover one side, solved
  exactly over fractions with the Hungarian method.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import Graph, Matching


def max_cardinality_matching(g: Graph) -> Matching:
    """Return a maximum matching of ``g``; deterministic for a fixed graph."""
    mate = _edmonds(g.n, g.adj)
    return Matching(tuple((v, mate[v]) for v in range(g.n) if mate[v] > v))


def matching_number(g: Graph) -> int:
    return len(max_cardinality_matching(g))


def matching_exposing(g: Graph, w: int) -> Optional[Matching]:
    """A maximum matching of ``g`` that leaves ``w`` exposed, or ``None`` if ``w`` is essential."""
    nu = matching_number(g)
    m = max_cardinality_matching(g.without_vertex(w))
    return m if len(m) == nu else None


def _edmonds(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    match = [-1] * n
    # greedy start; the blossom search only has to repair what is left
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break
    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = _augmenting_path(n, adj, match, root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return match


def _augmenting_path(n, adj, match, root) -> tuple[int, list[int]]:
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def bipartite_max_matching(
    left: Sequence[Hashable], adj: dict[Hashable, Sequence[Hashable]]
) -> dict[Hashable, Hashable]:
    """Kuhn's augmenting-path matching; returns the map left -> right."""
    match_r: dict[Hashable, Hashable] = {}

    def try_augment(u, visited) -> bool:
        for r in adj.get(u, ()):
            if r in visited:
                continue
            visited.add(r)
            if r not in match_r or try_augment(match_r[r], visited):
                match_r[r] = u
                return True
        return False

    for u in left:
        try_augment(u, set())
    return {u: r for r, u in match_r.items()}


@dataclass(frozen=True)
class WeightedBipartite:
    """Bipartite graph whose ``left`` side must be covered by the matching."""

    left: tuple
    right: tuple
    edges: tuple[tuple[Hashable, Hashable, Fraction], ...]

    def __post_init__(self) -> None:
        pairs = set()
        lset, rset = set(self.left), set(self.right)
        for l, r, w in self.edges:
            if (l, r) in pairs:
                raise ValueError(f"duplicate edge {(l, r)}")
            if l not in lset or r not in rset:
                raise ValueError(f"edge {(l, r)} leaves the vertex sets")
            if w < 0:
                raise ValueError(f"negative weight on {(l, r)}")
            pairs.add((l, r))


CoveringMatching = tuple[tuple[Hashable, Hashable], ...]


def max_weight_covering_matching(b: WeightedBipartite) -> Optional[CoveringMatching]:
    """Maximum-weight matching among those covering every left vertex.

    Returns sorted ``(l, r)`` pairs, or ``None`` when no matching covers the
    left side. Among optimal matchings the lexicographically smallest sorted
    pair sequence is returned.
    """
    left = sorted(b.left)
    weight = {(l, r): Fraction(w) for l, r, w in b.edges}
    best = covering_matching_weight(left, sorted(b.right), weight)
    if best is None:
        return None
    chosen: list[tuple[Hashable, Hashable]] = []
    used_r: set = set()
    acc = Fraction(0)
    for i, l in enumerate(left):
        rest_left = left[i + 1:]
        cands = sorted(r for (ll, r) in weight if ll == l and r not in used_r)
        for r in cands:
            rest_right = [x for x in sorted(b.right) if x not in used_r and x != r]
            tail = covering_matching_weight(rest_left, rest_right, weight)
            if tail is not None and acc + weight[(l, r)] + tail == best:
                chosen.append((l, r))
                used_r.add(r)
                acc += weight[(l, r)]
                break
        else:  # pragma: no cover - the optimum is always extendable
            raise AssertionError("lexicographic completion failed")
    return tuple(chosen)


def covering_matching_weight(
    left: Sequence[Hashable], right: Sequence[Hashable], weight: dict[tuple, Fraction]
) -> Optional[Fraction]:
    """Optimal weight of a left-covering matching, or ``None`` if none exists."""
    pairs = optimal_covering_assignment(left, right, weight)
    if pairs is None:
        return None
    return sum((weight[p] for p in pairs), Fraction(0))


def optimal_covering_assignment(
    left: Sequence[Hashable], right: Sequence[Hashable], weight: dict[tuple, Fraction]
) -> Optional[list[tuple[Hashable, Hashable]]]:
    """Some maximum-weight left-covering matching (no tie-break), or ``None``.

    Every edge weight is shifted by ``B = 1 + sum(weights)`` so that a
    maximum-weight assignment uses as many real edges as possible; it covers
    ``left`` iff all assigned pairs are real edges.
    """
    if not left:
        return []
    if len(left) > len(right):
        return None
    rset = set(right)
    lset = set(left)
    live = {k: Fraction(w) for k, w in weight.items() if k[0] in lset and k[1] in rset}
    # scale to integers so the assignment runs on machine ints, not fractions
    scale = math.lcm(*(w.denominator for w in live.values())) if live else 1
    ilive = {k: int(w * scale) for k, w in live.items()}
    shift = 1 + sum(ilive.values())
    # minimisation costs; a non-edge costs 0 (row left unassigned)
    cost = [[-(ilive[(l, r)] + shift) if (l, r) in ilive else 0 for r in right] for l in left]
    pairs = []
    for i, j in enumerate(_hungarian(cost)):
        key = (left[i], right[j])
        if key not in live:
            return None
        pairs.append(key)
    return pairs


def _hungarian(cost: list[list[int]]) -> list[int]:
    """Min-cost assignment of every row to a distinct column (rows <= cols)."""
    n, m = len(cost), len(cost[0])
    big = 1 + sum(abs(x) for row in cost for x in row)
    u = [0] * (n + 1)
    v = [0] * (m + 1)
    p = [0] * (m + 1)
    way = [0] * (m + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [big * 4] * (m + 1)
        used = [False] * (m + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = big * 4
            j1 = -1
            for j in range(1, m + 1):
                if not used[j]:
                    cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(m + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    assign = [-1] * n
    for j in range(1, m + 1):
        if p[j]:
            assign[p[j] - 1] = j - 1
    return assign
