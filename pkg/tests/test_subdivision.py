import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geocover.multigraph import Multigraph, automorphisms, build_standard, canonical_key
from geocover.subdivision import (contract_midpoints, lift_automorphism,
                                  two_subdivision)


def random_graph():
    def build(draw):
        n = draw(st.integers(1, 4))
        m = draw(st.integers(0, 5))
        edges = tuple(
            (draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1)))
            for _ in range(m)
        )
        return Multigraph(n, edges)
    return st.composite(build)()


class TestTwoSubdivision:
    def test_k4_counts(self, k4, k4_sub):
        assert k4_sub.graph.num_vertices == 10
        assert k4_sub.num_segments == 12

    def test_p2(self, p2_sub):
        assert p2_sub.graph.num_vertices == 3
        assert p2_sub.num_segments == 2

    def test_loop_splits_into_parallel_pair(self):
        g = Multigraph(1, ((0, 0),))
        sub = two_subdivision(g)
        assert sub.graph.num_vertices == 2
        assert sub.num_segments == 2
        assert sub.graph.edges[0] == sub.graph.edges[1][::-1] or \
            set(sub.graph.edges[0]) == set(sub.graph.edges[1])

    def test_midpoint_degree_two(self, k4, k4_sub):
        for eid in range(k4.num_edges):
            assert k4_sub.graph.degree(k4_sub.midpoint_of(eid)) == 2

    def test_original_degrees_preserved(self, k4, k4_sub):
        for v in range(k4.num_vertices):
            assert k4_sub.graph.degree(v) == k4.degree(v)

    def test_segment_pairs_dense(self, k4_sub):
        seen = set()
        for eid in range(k4_sub.origin.num_edges):
            seen.update(k4_sub.segment_pair_of(eid))
        assert seen == set(range(k4_sub.num_segments))

    def test_labels(self):
        g = build_standard("path", [1])
        sub = two_subdivision(g)
        assert sub.graph.labels == ("a", "b", "a-b")

    def test_parallel_edge_labels_distinct(self):
        g = Multigraph(2, ((0, 1), (0, 1)))
        sub = two_subdivision(g)
        assert len(set(sub.graph.labels)) == 4

    def test_segment_label_roundtrip(self, k4_sub):
        for s in range(k4_sub.num_segments):
            assert k4_sub.segment_by_label(k4_sub.segment_label(s)) == s

    @given(random_graph())
    @settings(max_examples=50, deadline=None)
    def test_roundtrip_contraction(self, g):
        sub = two_subdivision(g)
        assert sub.graph.num_vertices == g.num_vertices + g.num_edges
        assert sub.num_segments == 2 * g.num_edges
        back = contract_midpoints(sub)
        assert canonical_key(back) == canonical_key(g)


class TestLift:
    def test_identity_lifts_to_identity(self, k4, k4_sub):
        from geocover.multigraph import identity_automorphism
        lifted = lift_automorphism(identity_automorphism(k4), k4_sub)
        assert lifted.vertex_perm == tuple(range(10))
        assert lifted.edge_perm == tuple(range(12))

    def test_p3_reversal_swaps_midpoints(self):
        g = build_standard("path", [2])
        sub = two_subdivision(g)
        rev = [a for a in automorphisms(g) if a.vertex_perm != (0, 1, 2)][0]
        lifted = lift_automorphism(rev, sub)
        # middle original vertex fixed, the two midpoints swap
        assert lifted.vertex_perm[1] == 1
        assert lifted.vertex_perm[sub.midpoint_of(0)] == sub.midpoint_of(1)
        assert lifted.vertex_perm[sub.midpoint_of(1)] == sub.midpoint_of(0)

    @pytest.mark.parametrize("tag,params", [
        ("complete", [4]),
        ("complete_bipartite", [2, 3]),
        ("sawtooth", [2]),
        ("cycle", [1]),
    ])
    def test_lift_is_automorphism_of_subdivision(self, tag, params):
        g = build_standard(tag, params)
        sub = two_subdivision(g)
        for a in automorphisms(g):
            lifted = lift_automorphism(a, sub)
            for sid, (u, v) in enumerate(sub.graph.edges):
                tu, tv = sub.graph.edges[lifted.edge_perm[sid]]
                assert {lifted.vertex_perm[u], lifted.vertex_perm[v]} == {tu, tv}
            assert sorted(lifted.vertex_perm) == list(range(sub.graph.num_vertices))
            assert sorted(lifted.edge_perm) == list(range(sub.num_segments))
