"""Stabilizer triples ``(M, y, c)`` and their exact on-disk encoding.

A certificate file stores every half-integer doubled::

    {"n": 3, "matching": [[1, 2]], "y2": [0, 2, 2], "c2": [[1, 2, 2]], "cost2": 2}

Keys are always written in that order and only nonzero ``c`` entries appear.
"""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .errors import GraphParseError, InvalidSolutionError
from .graph import Edge, Matching, norm_edge
from .numeric import ZERO, HalfInt, half_sum

_KEYS = ("n", "matching", "y2", "c2", "cost2")


@dataclass(frozen=True)
class StabilizerSolution:
    """A matching, a fractional (1+c)-vertex cover and the edge-weight increase.

    The constructor enforces every invariant that does not need the graph:
    ``c`` lives on matching edges with ``0 <= c <= 1``, ``y >= 0``, exposed
    vertices have ``y = 0``, matching edges are tight and
    ``cost = sum(c) = sum(y) - |M|``. Cover feasibility on non-matching
    edges is checked by :func:`stabilkit.oracle.verify_certificate`.
    """

    matching: Matching
    y: tuple[HalfInt, ...]
    c: tuple[tuple[Edge, HalfInt], ...]
    cost: HalfInt

    def __post_init__(self) -> None:
        n = len(self.y)
        problems = _triple_violations(n, self.matching, self.y, dict(self.c), self.cost)
        if problems:
            raise InvalidSolutionError("; ".join(problems))

    @classmethod
    def build(cls, matching: Matching, y: Sequence[HalfInt], c: Mapping[Edge, HalfInt]) -> StabilizerSolution:
        """Assemble a solution, dropping zero ``c`` entries and computing the cost."""
        c_items = tuple(sorted((norm_edge(*e), v) for e, v in c.items() if v.doubled != 0))
        cost = half_sum(v for _, v in c_items)
        return cls(matching, tuple(y), c_items, cost)

    @classmethod
    def from_cover(cls, matching: Matching, y: Sequence[HalfInt]) -> StabilizerSolution:
        """Derive ``c`` from complementary slackness: ``c_uv = y_u + y_v - 1`` on ``M``."""
        c = {e: y[e[0]] + y[e[1]] - 1 for e in matching.edges}
        return cls.build(matching, y, c)

    @property
    def n(self) -> int:
        return len(self.y)

    @property
    def c_map(self) -> dict[Edge, HalfInt]:
        return dict(self.c)

    def c_of(self, u: int, v: int) -> HalfInt:
        return self.c_map.get(norm_edge(u, v), ZERO)

    def to_certificate(self) -> Certificate:
        return Certificate(
            n=self.n,
            matching=tuple(self.matching.edges),
            y2=tuple(v.doubled for v in self.y),
            c2=tuple((u, v, h.doubled) for (u, v), h in self.c),
            cost2=self.cost.doubled,
        )


def _triple_violations(
    n: int, matching: Matching, y: Sequence[HalfInt], c: Mapping[Edge, HalfInt], cost: HalfInt
) -> list[str]:
    out = []
    for v in matching.mate:
        if not 0 <= v < n:
            out.append(f"matching vertex {v} out of range")
    for e, val in c.items():
        if e not in matching and val.doubled != 0:
            out.append(f"c{e} = {val} on a non-matching edge")
        if val.doubled < 0 or val.doubled > 2:
            out.append(f"c{e} = {val} outside [0, 1]")
    for v, yv in enumerate(y):
        if yv.doubled < 0:
            out.append(f"y[{v}] = {yv} is negative")
        if v not in matching.mate and yv.doubled != 0:
            out.append(f"exposed vertex {v} has y = {yv} (complementary slackness)")
    for u, v in matching.edges:
        if u < n and v < n:
            cuv = c.get((u, v), ZERO)
            if y[u] + y[v] != cuv + 1:
                out.append(f"matching edge {(u, v)} not tight: y sum {y[u] + y[v]} != 1 + {cuv}")
    total_c = half_sum(c.values())
    if cost != total_c:
        out.append(f"cost {cost} != sum of c = {total_c}")
    if half_sum(y) - len(matching) != cost:
        out.append(f"primal-dual equality violated: sum y - |M| = {half_sum(y) - len(matching)} != cost {cost}")
    return out


@dataclass(frozen=True)
class Certificate:
    """Raw doubled-integer record as stored on disk; carries no invariants."""

    n: int
    matching: tuple[tuple[int, int], ...]
    y2: tuple[int, ...]
    c2: tuple[tuple[int, int, int], ...]
    cost2: int

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "matching": [list(e) for e in self.matching],
            "y2": list(self.y2),
            "c2": [list(t) for t in self.c2],
            "cost2": self.cost2,
        }

    def to_solution(self) -> StabilizerSolution:
        """Validate and convert; raises :class:`InvalidSolutionError`."""
        try:
            matching = Matching(tuple(self.matching))
        except ValueError as exc:
            raise InvalidSolutionError(str(exc)) from exc
        if len(self.y2) != self.n:
            raise InvalidSolutionError(f"y2 has {len(self.y2)} entries for n={self.n}")
        c: dict[Edge, HalfInt] = {}
        for u, v, d in self.c2:
            e = norm_edge(u, v)
            if e in c:
                raise InvalidSolutionError(f"c2 lists {e} twice")
            c[e] = HalfInt(d)
        return StabilizerSolution(
            matching,
            tuple(HalfInt(d) for d in self.y2),
            tuple(sorted(c.items())),
            HalfInt(self.cost2),
        )


def serialize_solution(s: StabilizerSolution) -> str:
    return serialize_certificate(s.to_certificate())


def serialize_certificate(cert: Certificate) -> str:
    return json.dumps(cert.to_json_obj()) + "\n"


def parse_certificate(text: str | bytes) -> Certificate:
    """Parse the certificate encoding without checking stabilizer invariants."""
    try:
        obj = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise GraphParseError(getattr(exc, "lineno", 1), "malformed", str(exc)) from exc
    if not isinstance(obj, dict) or tuple(obj) != _KEYS:
        raise GraphParseError(1, "malformed", f"expected keys {list(_KEYS)}")
    try:
        n = _int(obj["n"])
        matching = tuple(_pair(e) for e in obj["matching"])
        y2 = tuple(_int(d) for d in obj["y2"])
        c2 = tuple(_triple(t) for t in obj["c2"])
        cost2 = _int(obj["cost2"])
    except (TypeError, ValueError) as exc:
        raise GraphParseError(1, "malformed", str(exc)) from exc
    return Certificate(n, matching, y2, c2, cost2)


def parse_solution(text: str | bytes) -> StabilizerSolution:
    return parse_certificate(text).to_solution()


def _int(x: object) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise TypeError(f"expected integer, got {x!r}")
    return x


def _pair(x: object) -> tuple[int, int]:
    if not isinstance(x, list) or len(x) != 2:
        raise TypeError(f"expected [u, v], got {x!r}")
    return (_int(x[0]), _int(x[1]))


def _triple(x: object) -> tuple[int, int, int]:
    if not isinstance(x, list) or len(x) != 3:
        raise TypeError(f"expected [u, v, c2], got {x!r}")
    return (_int(x[0]), _int(x[1]), _int(x[2]))
