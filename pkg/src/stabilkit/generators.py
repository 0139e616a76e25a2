"""Instance generators: the two hardness reductions plus test families.

Every generator is a pure function of its arguments (and seed). The
reduction instances carry metadata describing where each gadget landed,
so tests can check structural claims without re-deriving the layout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .certificate import StabilizerSolution
from .factor_critical import is_factor_critical
from .graph import Edge, Graph, Matching
from .numeric import HALF, ONE, ZERO, HalfInt

Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class MkecInstance:
    """Stabilizer instance encoding minimum k-edge coverage on ``base``.

    Layout: ``y_copies[0]`` is ``Y'`` (base vertices first, then any padding
    Tutte vertices); the other copies follow; then the edge triangles,
    the padding triangles and finally the ``C'`` triangles.
    """

    graph: Graph
    base: Graph
    k: int
    q: int
    triangle_of_edge: dict[Edge, Triangle]
    y_copies: tuple[tuple[int, ...], ...]
    padding_triangles: tuple[Triangle, ...]
    padding_tutte: tuple[int, ...]
    c_prime_triangles: tuple[Triangle, ...]

    @property
    def tutte(self) -> frozenset[int]:
        return frozenset(v for copy in self.y_copies for v in copy)

    @property
    def triangles(self) -> tuple[Triangle, ...]:
        return tuple(self.triangle_of_edge.values()) + self.padding_triangles + self.c_prime_triangles

    def expected_cost(self, x_star: int) -> Fraction:
        return self.k + Fraction(self.q * x_star, 2)

    def to_json_obj(self) -> dict:
        return {
            "kind": "mkec",
            "base_n": self.base.n,
            "base_edges": [list(e) for e in self.base.edges],
            "k": self.k,
            "q": self.q,
            "triangle_of_edge": [[list(e), list(t)] for e, t in self.triangle_of_edge.items()],
            "y_copies": [list(c) for c in self.y_copies],
            "padding_triangles": [list(t) for t in self.padding_triangles],
            "padding_tutte": list(self.padding_tutte),
            "c_prime_triangles": [list(t) for t in self.c_prime_triangles],
        }


def gen_mkec(base: Graph, k: int, q: int = 0) -> MkecInstance:
    """Build the k-edge-coverage instance; ``q = 0`` picks ``max(k, max degree)``."""
    if k < 1 or k >= base.m:
        raise ValueError(f"need 1 <= k < |E| = {base.m}, got k = {k}")
    maxdeg = max((base.degree(v) for v in range(base.n)), default=0)
    if q == 0:
        q = max(k, maxdeg)
    if q < maxdeg:
        raise ValueError(f"q = {q} is below the maximum degree {maxdeg}")

    n_tri = base.m
    extra_y = max(0, n_tri - (base.n + k))
    extra_tri = max(0, base.n + k - n_tri)
    ysize = base.n + extra_y

    copies = tuple(tuple(range(i * ysize, (i + 1) * ysize)) for i in range(q))
    nxt = q * ysize

    def new_triangle() -> Triangle:
        nonlocal nxt
        t = (nxt, nxt + 1, nxt + 2)
        nxt += 3
        return t

    edges: list[Edge] = []
    triangle_of_edge: dict[Edge, Triangle] = {}
    # neighbours inside Y' of every triangle connected to Y'
    attach: list[tuple[Triangle, tuple[int, ...]]] = []
    padding_tutte = tuple(range(base.n, ysize))
    for u, v in base.edges:
        t = new_triangle()
        triangle_of_edge[(u, v)] = t
        attach.append((t, (u, v) + padding_tutte))
    padding = tuple(new_triangle() for _ in range(extra_tri))
    for t in padding:
        attach.append((t, tuple(range(ysize))))
    c_prime = tuple(new_triangle() for _ in range(ysize * (q - 1)))

    for t, ys in attach:
        a, b, c = t
        edges += [(a, b), (a, c), (b, c)]
        for y in ys:
            for copy in copies:
                edges += [(copy[y], x) for x in t]
    all_y = [v for copy in copies for v in copy]
    for a, b, c in c_prime:
        edges += [(a, b), (a, c), (b, c)]
        edges += [(y, x) for y in all_y for x in (a, b, c)]
    return MkecInstance(
        Graph.from_edges(nxt, edges), base, k, q, triangle_of_edge, copies, padding, padding_tutte, c_prime
    )


@dataclass(frozen=True)
class SetCoverInstance:
    """Stabilizer instance encoding set cover.

    ``tutte_of[(j, i)]`` is the ``i``-th copy of set ``j``; ``clique_of``
    maps the same key to ``(clique vertices, designated vertex)``;
    ``cycle_of[e]`` lists the odd cycle of element ``e`` in cyclic order,
    whose last vertex is a dummy when ``has_dummy[e]``. ``cycle_sets[e][k]``
    is the set attached to the ``k``-th cycle vertex.
    """

    graph: Graph
    sets: tuple[tuple[int, ...], ...]
    n_elems: int
    N: int
    tutte_of: dict[tuple[int, int], int]
    clique_of: dict[tuple[int, int], tuple[tuple[int, ...], int]]
    cycle_of: tuple[tuple[int, ...], ...]
    has_dummy: tuple[bool, ...]
    cycle_sets: tuple[tuple[int, ...], ...]
    meets_hardness_bound: bool = field(default=False)

    @property
    def tutte(self) -> frozenset[int]:
        return frozenset(self.tutte_of.values())

    def to_json_obj(self) -> dict:
        return {
            "kind": "setcover",
            "sets": [list(s) for s in self.sets],
            "n_elems": self.n_elems,
            "N": self.N,
            "meets_hardness_bound": self.meets_hardness_bound,
            "tutte_of": [[j, i, v] for (j, i), v in self.tutte_of.items()],
            "clique_of": [[j, i, list(vs), c] for (j, i), (vs, c) in self.clique_of.items()],
            "cycle_of": [list(c) for c in self.cycle_of],
            "has_dummy": list(self.has_dummy),
            "cycle_sets": [list(c) for c in self.cycle_sets],
        }


def gen_setcover(sets, n_elems: int, N: int) -> SetCoverInstance:
    """Build the set-cover instance; elements are ``0..n_elems-1``, sets are indexed ``0..m-1``."""
    sets = tuple(tuple(sorted(set(s))) for s in sets)
    m = len(sets)
    if N < 1:
        raise ValueError("N must be at least 1")
    for s in sets:
        for x in s:
            if not 0 <= x < n_elems:
                raise ValueError(f"element {x} out of range")
    containing = [tuple(j for j, s in enumerate(sets) if x in s) for x in range(n_elems)]
    for x, js in enumerate(containing):
        if len(js) < 2:
            raise ValueError(f"element {x} has frequency {len(js)}; every element needs at least two sets")

    edges: list[Edge] = []
    tutte_of: dict[tuple[int, int], int] = {}
    nxt = 0
    # block i holds the i-th copy of every set
    for i in range(n_elems):
        for j in range(m):
            tutte_of[(j, i)] = nxt
            nxt += 1
    clique_of: dict[tuple[int, int], tuple[tuple[int, ...], int]] = {}
    for i in range(n_elems):
        for j in range(m):
            vs = tuple(range(nxt, nxt + 2 * N + 1))
            nxt += 2 * N + 1
            clique_of[(j, i)] = (vs, vs[0])
            edges += [(a, b) for ai, a in enumerate(vs) for b in vs[ai + 1:]]
            edges.append((tutte_of[(j, i)], vs[0]))
    cycles, dummies = [], []
    all_y = sorted(tutte_of.values())
    for x, js in enumerate(containing):
        dummy = len(js) % 2 == 0
        length = len(js) + dummy
        cyc = tuple(range(nxt, nxt + length))
        nxt += length
        edges += [(cyc[a], cyc[(a + 1) % length]) for a in range(length)]
        for pos, j in enumerate(js):
            edges += [(cyc[pos], tutte_of[(j, i)]) for i in range(n_elems)]
        if dummy:
            edges += [(cyc[-1], y) for y in all_y]
        cycles.append(cyc)
        dummies.append(dummy)
    return SetCoverInstance(
        Graph.from_edges(nxt, edges),
        sets,
        n_elems,
        N,
        tutte_of,
        clique_of,
        tuple(cycles),
        tuple(dummies),
        tuple(containing),
        N > (n_elems * m) ** 2,
    )


def is_set_cover(inst: SetCoverInstance, chosen) -> bool:
    covered = {x for j in chosen for x in inst.sets[j]}
    return covered >= set(range(inst.n_elems))


def min_set_cover(inst: SetCoverInstance) -> tuple[int, ...]:
    """Smallest cover by exhaustion (lexicographically first among the smallest)."""
    import itertools

    m = len(inst.sets)
    for size in range(1, m + 1):
        for combo in itertools.combinations(range(m), size):
            if is_set_cover(inst, combo):
                return combo
    raise AssertionError("the family of all sets always covers")


def cover_certificate(inst: SetCoverInstance, cover) -> StabilizerSolution:
    """Stabilizer of cost ``n (1 + |T| / 2)`` built from a set cover ``T``."""
    cover = sorted(set(cover))
    if not is_set_cover(inst, cover):
        raise ValueError(f"{cover} is not a set cover")
    g = inst.graph
    y: list[HalfInt] = [HALF] * g.n
    edges: list[Edge] = []
    for (j, i), s in inst.tutte_of.items():
        vs, c = inst.clique_of[(j, i)]
        y[s] = ONE if j in cover else HALF
        edges.append((s, c))
        rest = vs[1:]
        edges += [(rest[a], rest[a + 1]) for a in range(0, len(rest), 2)]
    for x, cyc in enumerate(inst.cycle_of):
        pos = next(p for p, j in enumerate(inst.cycle_sets[x]) if j in cover)
        length = len(cyc)
        y[cyc[pos]] = ZERO
        y[cyc[(pos - 1) % length]] = ONE
        y[cyc[(pos + 1) % length]] = ONE
        path = [cyc[(pos + d) % length] for d in range(1, length)]
        edges += [(path[a], path[a + 1]) for a in range(0, len(path), 2)]
    return StabilizerSolution.from_cover(Matching(tuple(sorted(tuple(sorted(e)) for e in edges))), tuple(y))


def extract_cover(inst: SetCoverInstance, sol: StabilizerSolution) -> tuple[int, ...]:
    """Sets whose first copy neighbours an exposed vertex of ``sol``."""
    exposed = set(sol.matching.exposed(inst.graph.n))
    first = {inst.tutte_of[(j, 0)]: j for j in range(len(inst.sets))}
    return tuple(sorted(j for s, j in first.items() if any(u in exposed for u in inst.graph.adj[s])))


def gen_factor_critical(ear_lengths, seed: int = 0) -> Graph:
    """Random graph with an odd ear decomposition using the given ear lengths.

    Each ear is a path of the given number of edges between two existing
    vertices (or a cycle through one); the first ear is always closed.
    """
    lengths = list(ear_lengths)
    for length in lengths:
        if length < 1 or length % 2 == 0:
            raise ValueError(f"ear lengths must be odd and positive, got {length}")
    rng = random.Random(seed)
    n = 1
    edges: set[Edge] = set()
    for idx, length in enumerate(lengths):
        if length == 1:
            free = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
            if not free:
                raise ValueError(f"ear {idx} of length 1 has no non-adjacent pair to join")
            edges.add(rng.choice(free))
            continue
        a = rng.randrange(n)
        b = a if idx == 0 else rng.randrange(n)
        path = [a] + list(range(n, n + length - 1)) + [b]
        n += length - 1
        edges.update(tuple(sorted(p)) for p in zip(path, path[1:]))
    g = Graph.from_edges(n, sorted(edges))
    if not is_factor_critical(g):  # pragma: no cover - odd ear decompositions are factor-critical
        raise AssertionError("generated graph is not factor-critical")
    return g


def gen_random(n: int, p: Fraction | int | str, seed: int) -> Graph:
    """Seeded G(n, p) with an exact rational edge probability."""
    if n < 1:
        raise ValueError("n must be at least 1")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.randrange(p.denominator) < p.numerator]
    return Graph.from_edges(n, edges)
