"""Regenerate tests/data/connected_n{1..8}.txt: one line per isomorphism class.

Each line is ``n hexmask`` where bit ``b`` of the mask is the ``b``-th pair
``(i, j)``, ``i < j``, in lexicographic order. Every connected graph on ``n``
vertices arises from a connected graph on ``n - 1`` vertices by adding a
vertex (drop a leaf of a spanning tree), so classes are grown one vertex at
a time and deduplicated with networkx isomorphism tests. Needs networkx.
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "tests" / "data"


def pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def to_mask(g: nx.Graph, n: int) -> int:
    return sum(1 << b for b, (i, j) in enumerate(pairs(n)) if g.has_edge(i, j))


def canonical_mask(g: nx.Graph, n: int) -> int:
    # relabel by (degree, sorted neighbour degrees) so output is stable; uniqueness comes from iso checks
    order = sorted(g.nodes, key=lambda v: (-g.degree(v), sorted(g.degree(u) for u in g[v]), v))
    return to_mask(nx.relabel_nodes(g, {v: i for i, v in enumerate(order)}), n)


def extend(classes: list[nx.Graph], n: int) -> list[nx.Graph]:
    buckets: dict[str, list[nx.Graph]] = {}
    new = n - 1
    for base in classes:
        for r in range(1, n):
            for nbrs in itertools.combinations(range(new), r):
                h = base.copy()
                h.add_node(new)
                h.add_edges_from((new, u) for u in nbrs)
                key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(h, other) for other in bucket):
                    bucket.append(h)
    return [g for b in buckets.values() for g in b]


def main(max_n: int = 8) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    classes = [nx.empty_graph(1)]
    for n in range(1, max_n + 1):
        if n > 1:
            classes = extend(classes, n)
        masks = sorted(canonical_mask(g, n) for g in classes)
        lines = [f"{n} {m:x}" for m in masks]
        (OUT / f"connected_n{n}.txt").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(classes)} classes", file=sys.stderr)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
