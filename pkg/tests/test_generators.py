from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _graphs import C5, K3, P3, STAR3, complete, cycle, path
from stabilkit.factor_critical import is_factor_critical
from stabilkit.gallai_edmonds import decompose
from stabilkit.generators import (
    cover_certificate,
    gen_factor_critical,
    gen_mkec,
    gen_random,
    gen_setcover,
    is_set_cover,
    min_set_cover,
)
from stabilkit.matching import max_cardinality_matching, matching_number
from stabilkit.oracle import verify_certificate

FIGURE2 = ([[0, 1], [1, 2], [0, 1, 2]], 3)


class TestMkec:
    def test_path_counts(self):
        inst = gen_mkec(P3, 1, 2)
        assert inst.graph.n == 27 and len(inst.triangles) == 7 and len(inst.tutte) == 6

    def test_triangle_counts(self):
        inst = gen_mkec(K3, 1, 2)
        assert len(inst.triangle_of_edge) + len(inst.padding_triangles) == 4
        assert len(inst.c_prime_triangles) == 3 and len(inst.tutte) == 6

    def test_k_must_be_below_edge_count(self):
        with pytest.raises(ValueError):
            gen_mkec(path(2), 1, 0)
        with pytest.raises(ValueError):
            gen_mkec(P3, 2, 0)

    def test_q_auto_and_lower_bound(self):
        assert gen_mkec(STAR3, 1, 0).q == 3
        assert gen_mkec(K3, 2, 0).q == 2
        with pytest.raises(ValueError):
            gen_mkec(STAR3, 1, 2)

    def test_padding_tutte_vertices_when_dense(self):
        inst = gen_mkec(complete(5), 1, 0)  # 10 edges > 5 + 1
        assert len(inst.padding_tutte) == 4 and not inst.padding_triangles
        assert len(inst.y_copies[0]) == 9
        check_mkec_structure(inst)

    def test_metadata_is_json(self):
        obj = gen_mkec(P3, 1, 2).to_json_obj()
        assert json.loads(json.dumps(obj)) == obj
        assert obj["triangle_of_edge"][0] == [[0, 1], [6, 7, 8]]


def check_mkec_structure(inst):
    g = inst.graph
    ged = decompose(g)
    assert ged.Y == inst.tutte and not ged.Z
    assert ged.X == frozenset(range(g.n)) - inst.tutte
    assert matching_number(g) == 2 * len(inst.tutte) + inst.k
    assert len(inst.triangle_of_edge) + len(inst.padding_triangles) == len(inst.y_copies[0]) + inst.k
    assert len(inst.c_prime_triangles) == len(inst.y_copies[0]) * (inst.q - 1)


@pytest.mark.parametrize("base, k", [(P3, 1), (K3, 1), (K3, 2), (cycle(4), 2), (STAR3, 1)])
def test_mkec_structure(base, k):
    inst = gen_mkec(base, k)
    check_mkec_structure(inst)
    # any k edge triangles can be exposed together by a maximum matching
    g = inst.graph
    nu = matching_number(g)
    for chosen in itertools.combinations(inst.triangle_of_edge.values(), k):
        drop = [t[0] for t in chosen]
        keep = [v for v in range(g.n) if v not in drop]
        sub, _ = g.induced(keep)
        assert len(max_cardinality_matching(sub)) == nu


class TestSetCover:
    def test_duplicate_sets_counts(self):
        inst = gen_setcover([[0, 1], [0, 1]], 2, 3)
        assert [len(c) for c in inst.cycle_of] == [3, 3] and inst.has_dummy == (True, True)
        assert len(inst.clique_of) == 4
        assert all(len(vs) == 7 for vs, _ in inst.clique_of.values())

    def test_figure2_cycles(self):
        inst = gen_setcover(*FIGURE2, 1)
        assert [len(c) for c in inst.cycle_of] == [3, 3, 3]
        assert inst.has_dummy == (True, False, True)
        assert not inst.meets_hardness_bound

    def test_frequency_one_rejected(self):
        with pytest.raises(ValueError, match="frequency"):
            gen_setcover([[0, 1], [1]], 2, 1)

    @pytest.mark.parametrize("N", [1, 2])
    def test_tutte_set_is_all_set_copies(self, N):
        inst = gen_setcover(*FIGURE2, N)
        ged = decompose(inst.graph)
        assert ged.Y == inst.tutte and not ged.Z

    @pytest.mark.parametrize("N", [1, 2])
    def test_cover_certificates(self, N):
        inst = gen_setcover(*FIGURE2, N)
        for size in range(1, 4):
            for T in itertools.combinations(range(3), size):
                if not is_set_cover(inst, T):
                    with pytest.raises(ValueError):
                        cover_certificate(inst, T)
                    continue
                sol = cover_certificate(inst, T)
                assert verify_certificate(inst.graph, sol).valid
                assert sol.cost.value * 2 == inst.n_elems * (2 + len(T))

    def test_min_set_cover(self):
        assert min_set_cover(gen_setcover(*FIGURE2, 1)) == (2,)


class TestFactorCritical:
    def test_single_ears(self):
        assert gen_factor_critical([3]) == K3
        assert gen_factor_critical([5]) == C5

    def test_two_ears(self):
        g = gen_factor_critical([3, 3], seed=1)
        assert g.n == 5 and is_factor_critical(g)
        assert g.edges == ((0, 1), (0, 2), (0, 4), (1, 2), (2, 3), (3, 4))

    def test_even_ear_rejected(self):
        with pytest.raises(ValueError):
            gen_factor_critical([3, 2])

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.sampled_from([1, 3, 5, 7]), min_size=1, max_size=5), st.integers(0, 99))
    def test_always_factor_critical(self, lengths, seed):
        lengths[0] = max(lengths[0], 3)
        try:
            g = gen_factor_critical(lengths, seed)
        except ValueError:
            return
        assert is_factor_critical(g)
        assert g == gen_factor_critical(lengths, seed)


class TestRandom:
    def test_extremes(self):
        assert gen_random(5, 0, 3).m == 0
        assert gen_random(5, 1, 3) == complete(5)

    def test_pinned(self):
        g = gen_random(8, "1/2", 42)
        assert g.edges == (
            (0, 1), (0, 2), (0, 4), (0, 5), (0, 6), (0, 7), (1, 2), (1, 4), (1, 5), (1, 6),
            (1, 7), (2, 3), (2, 4), (2, 5), (2, 7), (3, 6), (3, 7), (5, 6), (5, 7),
        )  # fmt: skip

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            gen_random(0, 1, 0)
        with pytest.raises(ValueError):
            gen_random(3, 2, 0)
