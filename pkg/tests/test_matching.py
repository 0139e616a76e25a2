from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from _graphs import C5, K3, P3, P4, PETERSEN, brute_nu, graphs
from stabilkit.matching import (
    WeightedBipartite,
    covering_matching_weight,
    matching_exposing,
    max_cardinality_matching,
    max_weight_covering_matching,
)
from stabilkit.oracle import enumerate_maximum_matchings


def test_small_named():
    assert len(max_cardinality_matching(K3)) == 1
    assert max_cardinality_matching(P4).edges == ((0, 1), (2, 3))
    assert len(max_cardinality_matching(PETERSEN)) == 5 == brute_nu(PETERSEN)


def test_matching_exposing_examples():
    assert matching_exposing(K3, 0).edges == ((1, 2),)
    assert matching_exposing(P3, 1) is None
    assert matching_exposing(C5, 0).edges == ((1, 2), (3, 4))


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_cardinality_against_enumeration(g):
    m = max_cardinality_matching(g)
    assert m.is_matching_in(g)
    assert len(m) == brute_nu(g)
    assert max_cardinality_matching(g) == m


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9), st.data())
def test_exposing_iff_some_maximum_matching_exposes(g, data):
    w = data.draw(st.integers(0, g.n - 1))
    exposers = [m for m in enumerate_maximum_matchings(g) if not m.covers(w)]
    got = matching_exposing(g, w)
    assert (got is not None) == bool(exposers)
    if got is not None:
        assert not got.covers(w) and len(got) == brute_nu(g) and got.is_matching_in(g)


def test_covering_examples():
    one = Fraction(1)
    b = WeightedBipartite(("a",), ("p", "q"), (("a", "p", one), ("a", "q", Fraction(0))))
    assert max_weight_covering_matching(b) == (("a", "p"),)
    b = WeightedBipartite(("a", "b"), ("p",), (("a", "p", one), ("b", "p", one)))
    assert max_weight_covering_matching(b) is None
    b = WeightedBipartite(("a",), ("p", "q"), (("a", "p", one), ("a", "q", one)))
    assert max_weight_covering_matching(b) == (("a", "p"),)


def test_covering_empty_left():
    assert max_weight_covering_matching(WeightedBipartite((), (0,), ())) == ()


def _brute_covering(left, right, weight):
    best, best_pairs = None, None
    for perm in itertools.permutations(right, len(left)):
        pairs = tuple(zip(left, perm))
        if all(p in weight for p in pairs):
            w = sum((weight[p] for p in pairs), Fraction(0))
            key = sorted(pairs)
            if best is None or w > best or (w == best and key < best_pairs):
                best, best_pairs = w, key
    return best, best_pairs


@st.composite
def bipartites(draw):
    nl = draw(st.integers(0, 4))
    nr = draw(st.integers(0, 10 - nl))
    left, right = tuple(range(nl)), tuple(range(100, 100 + nr))
    edges = []
    for l in left:
        for r in right:
            if draw(st.booleans()):
                edges.append((l, r, Fraction(draw(st.integers(0, 6)), draw(st.sampled_from([1, 2, 3])))))
    return WeightedBipartite(left, right, tuple(edges))


@settings(max_examples=300, deadline=None)
@given(bipartites())
def test_covering_against_brute_force(b):
    weight = {(l, r): w for l, r, w in b.edges}
    best, best_pairs = _brute_covering(list(b.left), list(b.right), weight)
    assert covering_matching_weight(list(b.left), list(b.right), weight) == best
    got = max_weight_covering_matching(b)
    if best is None:
        assert got is None
    else:
        assert list(got) == best_pairs
