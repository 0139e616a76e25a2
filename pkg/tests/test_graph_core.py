from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _graphs import EDGE, K3, NAMED, P3, graphs
from stabilkit.certificate import (
    Certificate,
    StabilizerSolution,
    parse_certificate,
    parse_solution,
    serialize_solution,
)
from stabilkit.errors import GraphParseError, InvalidSolutionError
from stabilkit.graph import Graph, Matching, format_graph, parse_graph
from stabilkit.numeric import HALF, ONE, ZERO, HalfInt
from stabilkit.oracle import solve_oracle


class TestHalfInt:
    def test_of_and_value(self):
        assert HalfInt.of(Fraction(3, 2)).doubled == 3
        assert HalfInt.of(2).value == 2
        assert str(HalfInt(3)) == "3/2" and str(HalfInt(4)) == "2"

    def test_rejects_quarters(self):
        with pytest.raises(ValueError):
            HalfInt.of(Fraction(1, 4))

    @given(st.integers(-50, 50), st.integers(-50, 50))
    def test_arithmetic_matches_fractions(self, a, b):
        x, y = HalfInt(a), HalfInt(b)
        assert (x + y).value == x.value + y.value
        assert (x - y).value == x.value - y.value
        assert (x < y) == (x.value < y.value)
        assert (x + 1).value == x.value + 1


class TestParse:
    def test_path(self):
        assert parse_graph("3 2\n0 1\n1 2\n") == P3

    def test_triangle_any_order_and_comments(self):
        assert parse_graph(b"# triangle\n3 3\n\n0 1\n2 1\n0 2\n") == K3

    @pytest.mark.parametrize(
        "text, kind, line",
        [
            ("2 1\n0 0\n", "self-loop", 2),
            ("2 1\n0 2\n", "vertex-out-of-range", 2),
            ("3 2\n0 1\n1 0\n", "duplicate-edge", 3),
            ("3 2\n0 1\n", "edge-count-mismatch", 2),
            ("3 1\n0 x\n", "malformed", 2),
            ("3 1\n0 1 2\n", "malformed", 2),
            ("", "malformed", 1),
            ("3 1\n-1 2\n", "malformed", 2),
        ],
    )
    def test_errors_are_distinct(self, text, kind, line):
        with pytest.raises(GraphParseError) as exc:
            parse_graph(text)
        assert exc.value.kind == kind
        assert exc.value.line == line
        assert f"line {line}" in str(exc.value)

    @given(graphs(max_n=9))
    def test_format_round_trip(self, g):
        assert parse_graph(format_graph(g)) == g


class TestGraph:
    def test_rejects_non_canonical(self):
        with pytest.raises(ValueError):
            Graph(3, ((1, 0),))
        with pytest.raises(ValueError):
            Graph(3, ((1, 2), (0, 1)))
        with pytest.raises(ValueError):
            Graph(2, ((0, 0),))

    def test_from_edges_canonicalizes(self):
        assert Graph.from_edges(3, [(2, 1), (1, 0)]) == P3

    def test_induced_relabels(self):
        sub, labels = K3.induced([0, 2])
        assert sub == EDGE and labels == (0, 2)

    def test_components_ordered(self):
        g = Graph.from_edges(5, [(3, 4), (0, 2)])
        assert g.components() == [(0, 2), (1,), (3, 4)]

    def test_matching_rejects_overlap(self):
        with pytest.raises(ValueError):
            Matching(((0, 1), (1, 2)))
        assert Matching(((1, 2),)).exposed(3) == (0,)


def _k3_optimum() -> StabilizerSolution:
    return StabilizerSolution.from_cover(Matching(((1, 2),)), (ZERO, ONE, ONE))


class TestSolution:
    def test_stable_edge_serialization(self):
        s = StabilizerSolution.from_cover(Matching(((0, 1),)), (HALF, HALF))
        assert serialize_solution(s) == '{"n": 2, "matching": [[0, 1]], "y2": [1, 1], "c2": [], "cost2": 0}\n'

    def test_k3_cost2(self):
        s = _k3_optimum()
        assert s.cost.doubled == 2
        assert solve_oracle(K3).cost == s.cost

    def test_round_trip_named(self):
        for g in NAMED.values():
            s = solve_oracle(g)
            assert parse_solution(serialize_solution(s)) == s

    @pytest.mark.parametrize(
        "y, c, cost",
        [
            ((ZERO, ONE, ONE), (((0, 1), ONE),), ONE),  # c off the matching
            ((HALF, ONE, ONE), (((1, 2), ONE),), ONE),  # exposed vertex with y > 0
            ((ZERO, ONE, ONE), (((1, 2), HALF),), HALF),  # matching edge not tight
            ((ZERO, ONE, ONE), (((1, 2), ONE),), HALF),  # declared cost wrong
            ((ZERO, HalfInt(4), HalfInt(2)), (((1, 2), HalfInt(4)),), HalfInt(4)),  # c > 1
        ],
    )
    def test_invariants_enforced(self, y, c, cost):
        with pytest.raises(InvalidSolutionError):
            StabilizerSolution(Matching(((1, 2),)), y, c, cost)

    def test_parse_certificate_strict(self):
        with pytest.raises(GraphParseError):
            parse_certificate('{"n": 2, "y2": [], "matching": [], "c2": [], "cost2": 0}')
        with pytest.raises(GraphParseError):
            parse_certificate('{"n": 2, "matching": [[0, 1]], "y2": [1, 1.0], "c2": [], "cost2": 0}')
        with pytest.raises(GraphParseError):
            parse_certificate("not json")

    def test_certificate_keeps_broken_values(self):
        cert = parse_certificate('{"n": 3, "matching": [[1, 2]], "y2": [1, 1, 1], "c2": [], "cost2": 0}')
        assert cert == Certificate(3, ((1, 2),), (1, 1, 1), (), 0)
        with pytest.raises(InvalidSolutionError):
            cert.to_solution()
