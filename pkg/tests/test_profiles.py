import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centersets import (
    BadParamsError,
    CenterSetFamily,
    EmptyProfileError,
    Graph,
    TooLargeError,
    block_decomposition,
    center_number,
    enumerate_center_sets,
    is_center_set,
    profile_center,
    profile_eccentricity,
)
from centersets.generators import complete, complete_bipartite, cycle, path, wheel

from conftest import seeded_connected_graph

graph_params = st.tuples(
    st.integers(min_value=2, max_value=8),
    st.integers(min_value=0, max_value=10**6),
    st.sampled_from([0.0, 0.15, 0.35, 0.7]),
)


class TestProfileEccentricity:
    def test_own_singleton_is_zero(self):
        g = cycle(6)
        for v in range(6):
            assert profile_eccentricity(g, {v}, v) == 0

    def test_cycle_pair(self):
        assert profile_eccentricity(cycle(6), {0, 3}, 1) == 2

    def test_bipartite_part(self):
        # profile inside one part of K_{2,3} is at distance 1 from the other part
        g = complete_bipartite(2, 3)
        assert profile_eccentricity(g, {2, 3}, 0) == 1

    def test_empty_profile_rejected(self):
        with pytest.raises(EmptyProfileError):
            profile_eccentricity(cycle(6), set(), 0)

    def test_stray_vertex_rejected(self):
        with pytest.raises(BadParamsError):
            profile_center(cycle(6), {0, 9})


class TestProfileCenter:
    def test_singleton_profile_centers_on_itself(self):
        for g in (cycle(6), path(5), wheel(6)):
            for v in range(g.n):
                assert profile_center(g, {v}) == (v,)

    def test_wheel_spoke_profile(self):
        # hub plus one rim vertex pulls in the rim neighbors as well
        assert profile_center(wheel(7), {2, 6}) == (1, 2, 3, 6)

    def test_cycle_antipodal_profile(self):
        assert profile_center(cycle(6), {0, 3}) == (1, 2, 4, 5)

    @settings(max_examples=60, deadline=None)
    @given(graph_params, st.data())
    def test_monotone_in_profile(self, params, data):
        g = seeded_connected_graph(*params)
        vertices = list(range(g.n))
        t = data.draw(st.sets(st.sampled_from(vertices), min_size=1))
        s = data.draw(st.sets(st.sampled_from(sorted(t)), min_size=1))
        for v in vertices:
            assert profile_eccentricity(g, s, v) <= profile_eccentricity(g, t, v)

    @settings(max_examples=60, deadline=None)
    @given(graph_params, st.data())
    def test_relabeling_invariance(self, params, data):
        g = seeded_connected_graph(*params)
        perm = data.draw(st.permutations(range(g.n)))
        s = data.draw(st.sets(st.sampled_from(range(g.n)), min_size=1))
        h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
        image = profile_center(h, {perm[v] for v in s})
        assert image == tuple(sorted(perm[v] for v in profile_center(g, s)))


class TestEnumeration:
    def test_triangle(self):
        fam = enumerate_center_sets(complete(3))
        assert fam.sets == ((0,), (1,), (2,), (0, 1, 2))

    def test_path(self):
        fam = enumerate_center_sets(path(3))
        assert fam.sets == ((0,), (1,), (2,), (0, 1), (1, 2))

    def test_five_cycle(self):
        fam = enumerate_center_sets(cycle(5))
        assert fam.count == 11
        assert fam.sets == (
            (0,), (1,), (2,), (3,), (4,),
            (0, 1), (0, 4), (1, 2), (2, 3), (3, 4),
            (0, 1, 2, 3, 4),
        )

    def test_single_vertex_graph(self):
        assert enumerate_center_sets(Graph(1)).sets == ((0,),)

    def test_center_numbers(self):
        assert center_number(complete(4)) == 5
        # complete bipartite: V, both parts, singletons, and all cross pairs
        assert center_number(complete_bipartite(2, 3)) == 14
        assert center_number(wheel(5)) == 19

    def test_cap_enforced(self):
        with pytest.raises(TooLargeError):
            enumerate_center_sets(cycle(6), max_n=5)

    def test_singletons_always_present(self, corpus):
        for label, g in corpus:
            fam = enumerate_center_sets(g)
            for v in range(g.n):
                assert (v,) in fam, label

    def test_centers_stay_inside_one_block(self, corpus):
        for label, g in corpus:
            if g.n > 10:
                continue
            blocks = [set(b) for b in block_decomposition(g).blocks]
            for s in enumerate_center_sets(g):
                assert any(set(s) <= b for b in blocks), (label, s)


class TestIsCenterSet:
    def test_alternate_pair_never_a_center(self):
        assert is_center_set(cycle(5), {0, 2}) is None

    def test_adjacent_pair_witness(self):
        assert is_center_set(cycle(5), {0, 1}) == (0, 1)

    def test_full_set_witness_on_five_cycle(self):
        # first profile (in mask order) whose center is everything
        assert is_center_set(cycle(5), range(5)) == (0, 1, 3)

    def test_singleton_witness(self):
        # {v} always witnesses itself, but an earlier profile in mask order
        # may get there first (the wheel hub is hit by rim profiles)
        g = wheel(6)
        for v in range(g.n):
            witness = is_center_set(g, {v})
            assert witness is not None
            assert profile_center(g, witness) == (v,)
        assert is_center_set(g, {0}) == (0,)

    def test_witness_actually_works(self):
        g = cycle(6)
        witness = is_center_set(g, {0, 1, 3, 4})
        assert witness is not None
        assert profile_center(g, witness) == (0, 1, 3, 4)

    def test_empty_candidate_rejected(self):
        with pytest.raises(BadParamsError):
            is_center_set(cycle(5), set())

    def test_cap_enforced(self):
        with pytest.raises(TooLargeError):
            is_center_set(path(6), {0}, max_n=5)

    def test_cap_override(self):
        assert is_center_set(path(17), {0}, max_n=17) == (0,)


class TestCenterSetFamily:
    def test_canonical_order_and_dedup(self):
        fam = CenterSetFamily([(2, 1), (0,), (1, 2), (3,)])
        assert fam.sets == ((0,), (3,), (1, 2))
        assert fam.count == 3

    def test_contains_normalizes(self):
        fam = CenterSetFamily([(1, 2)])
        assert {2, 1} in fam and (1,) not in fam

    def test_empty_member_rejected(self):
        with pytest.raises(BadParamsError):
            CenterSetFamily([()])


class TestRealizableSizes:
    @pytest.mark.parametrize("n", [5, 7, 9, 11])
    def test_odd_cycle_sizes(self, n):
        half = (n - 1) // 2
        sizes = sorted({len(s) for s in enumerate_center_sets(cycle(n))})
        assert sizes == list(range(1, half + 1)) + [n]

    @pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
    def test_even_cycle_sizes(self, n):
        bound = 2 * n // 3
        sizes = sorted({len(s) for s in enumerate_center_sets(cycle(n))})
        assert sizes == list(range(1, bound + 1)) + [n]
