"""Shared graph fixtures, strategies and brute-force references for the tests."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from pathlib import Path

from hypothesis import strategies as st

from stabilkit.graph import Graph

DATA = Path(__file__).parent / "data"


def G(n: int, edges) -> Graph:
    return Graph.from_edges(n, edges)


def path(n: int) -> Graph:
    return G(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return G(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return G(n, itertools.combinations(range(n), 2))


def disjoint(*gs: Graph) -> Graph:
    edges, off = [], 0
    for g in gs:
        edges += [(u + off, v + off) for u, v in g.edges]
        off += g.n
    return G(off, edges)


K3 = complete(3)
C5 = cycle(5)
C7 = cycle(7)
P3, P4, P5 = path(3), path(4), path(5)
EDGE = path(2)
STAR3 = G(4, [(0, 1), (0, 2), (0, 3)])
# triangles {0,1,2} and {3,4,5}, Tutte vertex 6 adjacent to 0 and 3, tail 6-7-8
TWO_TRIANGLES_TAIL = G(9, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 6), (3, 6), (6, 7), (7, 8)])
TWO_TRIANGLES_CORE = G(7, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 6), (3, 6)])
TRIANGLES_BRIDGED = G(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
TWO_K3 = disjoint(K3, K3)
PETERSEN = G(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)],
)

NAMED: dict[str, Graph] = {
    "K3": K3,
    "C5": C5,
    "C7": C7,
    "P3": P3,
    "P4": P4,
    "P5": P5,
    "edge": EDGE,
    "star3": STAR3,
    "two_triangles_tail": TWO_TRIANGLES_TAIL,
    "two_triangles_core": TWO_TRIANGLES_CORE,
    "triangles_bridged": TRIANGLES_BRIDGED,
    "two_K3": TWO_K3,
    "K4": complete(4),
    "K5": complete(5),
    "empty3": G(3, []),
}


def decode(n: int, mask: int) -> Graph:
    pairs = itertools.combinations(range(n), 2)
    return G(n, [p for b, p in enumerate(pairs) if mask >> b & 1])


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on ``n`` vertices up to isomorphism (pinned list)."""
    out = []
    for line in (DATA / f"connected_n{n}.txt").read_text().splitlines():
        size, mask = line.split()
        out.append(decode(int(size), int(mask, 16)))
    return tuple(out)


def all_connected_up_to(n: int) -> list[Graph]:
    return [g for k in range(1, n + 1) for g in connected_graphs(k)]


def random_graphs(count: int, n_lo: int, n_hi: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        p = rng.choice([0.2, 0.3, 0.45, 0.6, 0.8])
        out.append(G(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]))
    return out


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return G(n, chosen)


def brute_nu(g: Graph) -> int:
    best = 0

    def rec(v: int, used: frozenset, size: int) -> None:
        nonlocal best
        best = max(best, size)
        for e_idx in range(v, g.m):
            a, b = g.edges[e_idx]
            if a not in used and b not in used:
                rec(e_idx + 1, used | {a, b}, size + 1)

    rec(0, frozenset(), 0)
    return best
