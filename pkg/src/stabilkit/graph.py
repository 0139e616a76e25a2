"""Simple undirected graphs, matchings, and the edge-list instance format."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from .errors import GraphParseError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is a sorted tuple of pairs ``(u, v)`` with ``u < v``. Build
    instances through :meth:`from_edges` when the input is not already
    canonical.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        prev = None
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} is not a canonical pair on {self.n} vertices")
            if prev is not None and e <= prev:
                raise ValueError("edges must be sorted and distinct")
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        normed = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            normed.add(norm_edge(u, v))
        return cls(n, tuple(sorted(normed)))

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors_of_set(self, vertices: Iterable[int]) -> frozenset[int]:
        """Open neighbourhood N(S) minus S."""
        s = set(vertices)
        out = set()
        for v in s:
            out.update(self.adj[v])
        return frozenset(out - s)

    def induced_edges(self, vertices: Iterable[int]) -> tuple[Edge, ...]:
        s = set(vertices)
        return tuple(e for e in self.edges if e[0] in s and e[1] in s)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Return ``G[S]`` relabelled to ``0..|S|-1`` and the label map (new -> old)."""
        order = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in self.induced_edges(order)]
        return Graph(len(order), tuple(sorted(edges))), order

    def without_vertex(self, w: int) -> Graph:
        """Same vertex set, all edges at ``w`` removed."""
        return Graph(self.n, tuple(e for e in self.edges if w not in e))

    def components(self, vertices: Iterable[int] | None = None) -> list[tuple[int, ...]]:
        """Connected components of ``G[S]`` as sorted tuples, ordered by smallest vertex."""
        allowed = set(range(self.n)) if vertices is None else set(vertices)
        seen: set[int] = set()
        comps = []
        for s in sorted(allowed):
            if s in seen:
                continue
            seen.add(s)
            stack, comp = [s], [s]
            while stack:
                v = stack.pop()
                for u in self.adj[v]:
                    if u in allowed and u not in seen:
                        seen.add(u)
                        comp.append(u)
                        stack.append(u)
            comps.append(tuple(sorted(comp)))
        return comps

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, kept as a sorted tuple."""

    edges: tuple[Edge, ...] = ()
    mate: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        canon = tuple(sorted(norm_edge(u, v) for u, v in self.edges))
        object.__setattr__(self, "edges", canon)
        mate: dict[int, int] = {}
        for u, v in canon:
            if u == v:
                raise ValueError(f"self-loop {u} in matching")
            if u in mate or v in mate:
                raise ValueError(f"edges of a matching share a vertex at {(u, v)}")
            mate[u] = v
            mate[v] = u
        object.__setattr__(self, "mate", mate)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, e: object) -> bool:
        if not isinstance(e, tuple) or len(e) != 2:
            return False
        u, v = e
        return self.mate.get(u) == v

    def covers(self, v: int) -> bool:
        return v in self.mate

    def exposed(self, n: int) -> tuple[int, ...]:
        return tuple(v for v in range(n) if v not in self.mate)

    def is_matching_in(self, g: Graph) -> bool:
        return all(e in g.edge_set for e in self.edges)

    def relabel(self, mapping: tuple[int, ...] | dict[int, int]) -> Matching:
        return Matching(tuple((mapping[u], mapping[v]) for u, v in self.edges))

    def __or__(self, other: Matching) -> Matching:
        return Matching(self.edges + other.edges)


def parse_graph(text: str | bytes) -> Graph:
    """Parse the edge-list format: header ``n m`` then ``m`` lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphParseError(0, "malformed", "non-ascii input") from exc
    header: tuple[int, int] | None = None
    seen: dict[Edge, int] = {}
    edges: list[Edge] = []
    last = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        parts = line.split()
        if len(parts) != 2 or not all(_is_nat(p) for p in parts):
            raise GraphParseError(lineno, "malformed", repr(raw))
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            header = (a, b)
            continue
        n = header[0]
        if a >= n or b >= n:
            raise GraphParseError(lineno, "vertex-out-of-range", f"{a} {b} with n={n}")
        if a == b:
            raise GraphParseError(lineno, "self-loop", f"vertex {a}")
        e = norm_edge(a, b)
        if e in seen:
            raise GraphParseError(lineno, "duplicate-edge", f"{e} first seen on line {seen[e]}")
        seen[e] = lineno
        edges.append(e)
    if header is None:
        raise GraphParseError(1, "malformed", "missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphParseError(last, "edge-count-mismatch", f"header says {header[1]}, found {len(edges)}")
    return Graph(header[0], tuple(sorted(edges)))


def _is_nat(token: str) -> bool:
    return token.isascii() and token.isdigit()


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
