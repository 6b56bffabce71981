import pytest

from bicyclic_spectra import (
    Graph,
    TransformError,
    attach_pendants,
    base_graph,
    canonical_form,
    graph_g1,
    graph_g2,
    graph_g4,
    kelmans,
    make_infinity,
    make_theta,
    pendant_shift,
    rho_f,
)
from bicyclic_spectra.verify import random_connected_graph


def star(n):
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def double_star(a, b):
    """Centers 0-1 with a pendants on 0 and b pendants on 1."""
    g = Graph.from_edges(2, [(0, 1)])
    g = attach_pendants(g, 0, a)
    return attach_pendants(g, 1, b)


class TestKelmans:
    @pytest.mark.parametrize("n", [6, 8, 10])
    def test_g2_reduces_to_g1(self, n):
        # two degree-2 vertices in different triangles of G2
        out = kelmans(graph_g2(n), 1, 3)
        assert out.changed and not out.probable
        assert canonical_form(out.result) == canonical_form(graph_g1(n))

    def test_star_leaves_identity(self):
        g = star(6)
        out = kelmans(g, 2, 4)
        assert not out.changed
        assert out.moved_edges == ()
        assert out.result.edges == g.edges

    def test_b413_example(self):
        g = make_infinity(4, 1, 3)
        # vertex 0 is the shared degree-4 vertex; vertex 1 its cycle neighbor
        out = kelmans(g, 0, 1)
        assert out.result.m == g.m and out.result.n == g.n
        info = base_graph(out.result)
        assert info.kind == "infinity" and info.params == (3, 1, 3)

    def test_moved_edges_bookkeeping(self):
        g = make_infinity(4, 1, 3)
        out = kelmans(g, 0, 1)
        edges = set(g.edges)
        for old, new in out.moved_edges:
            assert old in edges and old not in out.result.edges
            assert new in out.result.edges
        assert len(out.result.edges) == len(g.edges)

    def test_direction_symmetry(self, rng):
        for _ in range(60):
            n = rng.randint(4, 8)
            g = random_connected_graph(rng, n)
            u = rng.randrange(n)
            v = (u + rng.randrange(1, n)) % n
            a = kelmans(g, u, v).result
            b = kelmans(g, v, u).result
            assert canonical_form(a) == canonical_form(b)

    def test_preserves_counts(self, rng):
        for _ in range(60):
            n = rng.randint(4, 9)
            g = random_connected_graph(rng, n)
            u, v = rng.sample(range(n), 2)
            out = kelmans(g, u, v)
            assert out.result.n == n and out.result.m == g.m

    def test_disconnect_flagged(self):
        path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        out = kelmans(path, 0, 3)
        assert out.disconnects
        assert not out.result.is_connected()

    def test_monotone_for_pstar_weights(self, rng, weight_zagreb1, weight_hyper):
        checked = 0
        while checked < 80:
            n = rng.randint(4, 8)
            g = random_connected_graph(rng, n)
            u, v = rng.sample(range(n), 2)
            out = kelmans(g, u, v)
            if not out.changed:
                continue
            checked += 1
            for f in (weight_zagreb1, weight_hyper):
                assert rho_f(out.result, f) > rho_f(g, f) - 1e-9

    def test_vertex_validation(self):
        g = star(5)
        with pytest.raises(TransformError):
            kelmans(g, 2, 2)
        with pytest.raises(TransformError):
            kelmans(g, 0, 9)

    def test_probable_flag_beyond_iso_bound(self):
        # one edge plus 12 isolated vertices: rerouting through an isolated
        # vertex relabels the edge, so the result is isomorphic; above the
        # certificate bound, that verdict comes from invariants only
        g = Graph.from_edges(14, [(0, 1)])
        out = kelmans(g, 0, 2)
        assert out.moved_edges == (((0, 1), (1, 2)),)
        assert not out.changed
        assert out.probable

    def test_certain_changed_beyond_iso_bound(self):
        g = attach_pendants(graph_g2(14), 1, 1)  # 15 vertices
        out = kelmans(g, 1, 3)
        assert out.changed and not out.probable  # degree sequences differ


class TestReductionReplay:
    """Step-by-step reroute chains from arbitrary shapes down to the extremal
    graphs, with the spectral radius strictly increasing at every step (labels
    are preserved by kelmans, so the chains can use fixed indices)."""

    def _steps_increase(self, chain, f):
        for before, after in zip(chain, chain[1:]):
            assert rho_f(after, f) > rho_f(before, f)

    def test_infinity_side_chain_to_g1(self, weight_zagreb1, weight_forgotten):
        g = make_infinity(4, 2, 3)          # junctions 0 and 4, joined by an edge
        s1 = kelmans(g, 0, 1).result        # shrink the 4-cycle: base (3,2,3)
        assert base_graph(s1).params == (3, 2, 3)
        s2 = kelmans(s1, 1, 4).result       # collapse the bridge: G2(7)
        assert canonical_form(s2) == canonical_form(graph_g2(7))
        s3 = kelmans(s2, 2, 5).result       # nonadjacent degree-2 pair: G1(7)
        assert canonical_form(s3) == canonical_form(graph_g1(7))
        for f in (weight_zagreb1, weight_forgotten):
            self._steps_increase([g, s1, s2, s3], f)

    def test_theta_side_chain_to_g1(self, weight_zagreb1):
        g = make_theta(3, 2, 2)             # hubs 0, 1; middle path through 4
        s1 = kelmans(g, 0, 4).result        # shorten the middle path
        assert base_graph(s1).params == (2, 1, 3)
        s2 = kelmans(s1, 4, 2).result       # shorten the long path: G1(6)
        assert canonical_form(s2) == canonical_form(graph_g1(6))
        self._steps_increase([g, s1, s2], weight_zagreb1)

    def test_caterpillar_collapse(self, weight_zagreb1):
        # hanging path 0-5-6 on the B(3,1,3) junction folds into a star
        g = attach_pendants(attach_pendants(make_infinity(3, 1, 3), 0, 1), 5, 1)
        collapsed = kelmans(g, 5, 0).result
        assert canonical_form(collapsed) == canonical_form(graph_g2(7))
        self._steps_increase([g, collapsed], weight_zagreb1)


class TestPendantShift:
    def test_double_star_moves_one_leaf(self):
        g = double_star(2, 3)  # N1 at vertex 0 has size 2, N2 at vertex 1 size 3
        w = 2  # first pendant attached to 0
        shifted = pendant_shift(g, 0, 1, w)
        assert canonical_form(shifted) == canonical_form(double_star(1, 4))

    def test_one_three_becomes_zero_four(self):
        g = double_star(1, 3)
        shifted = pendant_shift(g, 0, 1, 2)
        assert canonical_form(shifted) == canonical_form(double_star(0, 4))
        assert shifted.degrees()[1] == 5

    def test_g4_shift_gives_g1_and_increases_rho(self, weight_zagreb1):
        g = graph_g4(7)  # hub 0 has degree 5; hub 1 carries pendant 6
        shifted = pendant_shift(g, 1, 0, 6)
        assert canonical_form(shifted) == canonical_form(graph_g1(7))
        assert rho_f(shifted, weight_zagreb1) > rho_f(g, weight_zagreb1)

    def test_simple_graph_preserved(self):
        g = double_star(2, 2)
        shifted = pendant_shift(g, 0, 1, 2)
        assert shifted.m == g.m and shifted.n == g.n

    def test_rejects_w_outside_private_neighborhood(self):
        g = double_star(1, 2)
        with pytest.raises(TransformError, match="N\\(v\\)-N\\[u\\]"):
            pendant_shift(g, 0, 1, 3)  # w = 3 is a pendant of u, not of v

    def test_rejects_non_pendant_bundles(self):
        g = graph_g2(7)  # cycle vertices are degree 2, not pendant
        with pytest.raises(TransformError, match="non-pendant"):
            pendant_shift(g, 0, 1, 3)

    def test_rejects_size_violation(self):
        g = double_star(3, 1)
        with pytest.raises(TransformError, match="bundle sizes"):
            pendant_shift(g, 0, 1, 2)

    def test_rejects_bad_vertices(self):
        g = double_star(1, 1)
        with pytest.raises(TransformError):
            pendant_shift(g, 0, 0, 2)
        with pytest.raises(TransformError):
            pendant_shift(g, 0, 1, 99)

    def test_monotone_for_pstar_weights(self, rng, weight_forgotten):
        for a in (1, 2):
            for b in (2, 3):
                g = double_star(a, b)
                w = 2  # first pendant at vertex 0
                shifted = pendant_shift(g, 0, 1, w)
                if canonical_form(shifted) == canonical_form(g):
                    continue
                assert rho_f(shifted, weight_forgotten) > rho_f(g, weight_forgotten) - 1e-9
