from __future__ import annotations

import pytest
from hypothesis import given, settings

from _graphs import C5, EDGE, K3, P3, P4, TRIANGLES_BRIDGED, complete, graphs, path
from stabilkit.certificate import Certificate, StabilizerSolution
from stabilkit.errors import SizeBoundError
from stabilkit.gallai_edmonds import is_stable
from stabilkit.graph import Matching
from stabilkit.lp import tau_f
from stabilkit.matching import matching_number
from stabilkit.numeric import HALF
from stabilkit.oracle import enumerate_maximum_matchings, mkec_bruteforce, solve_oracle, verify_certificate


def test_enumeration_counts():
    assert len(enumerate_maximum_matchings(K3)) == 3
    assert len(enumerate_maximum_matchings(P3)) == 2
    ms = enumerate_maximum_matchings(C5)
    assert len(ms) == 5 and all(len(m) == 2 for m in ms)
    assert ms == sorted(ms, key=lambda m: m.edges)


def test_size_bound(monkeypatch):
    with pytest.raises(SizeBoundError):
        enumerate_maximum_matchings(path(13))
    monkeypatch.setenv("STABILKIT_ORACLE_MAX_N", "4")
    with pytest.raises(SizeBoundError):
        solve_oracle(C5)
    assert solve_oracle(P4).cost.doubled == 0


def test_named_costs():
    assert solve_oracle(K3).cost.value == 1
    assert solve_oracle(C5).cost.value == 1
    for g in (P3, P4, TRIANGLES_BRIDGED):
        assert solve_oracle(g).cost.doubled == 0


def test_verify_examples():
    good = solve_oracle(K3)
    assert verify_certificate(K3, good).valid
    bad = Certificate(3, ((0, 1),), (1, 1, 1), (), 0)
    v = verify_certificate(K3, bad)
    assert not v.valid
    assert any("exposed vertex 2" in s for s in v.violations)
    assert any("primal-dual equality violated" in s for s in v.violations)
    edge = StabilizerSolution.from_cover(Matching(((0, 1),)), (HALF, HALF))
    assert verify_certificate(EDGE, edge).valid


def test_verify_catches_uncovered_edge_and_wrong_graph():
    # zero stabilizer of P3 does not cover K3's extra edge
    sol = solve_oracle(P3)
    assert verify_certificate(P3, sol).valid
    assert not verify_certificate(K3, sol).valid
    assert not verify_certificate(path(4), sol).valid


def test_mkec_bruteforce():
    assert mkec_bruteforce(P3, 1) == 2
    assert mkec_bruteforce(complete(4), 3) == 3
    assert mkec_bruteforce(K3, 3) == 3
    with pytest.raises(ValueError):
        mkec_bruteforce(P3, 3)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_oracle_self_consistency(g):
    sol = solve_oracle(g)
    assert verify_certificate(g, sol).valid
    assert len(sol.matching) == matching_number(g)
    assert (sol.cost.doubled == 0) == is_stable(g)
    assert sol.cost.value == tau_f(g, sol.c_map) - matching_number(g)
