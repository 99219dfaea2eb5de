import random

import pytest

from treehom import (
    GraphParseError,
    TargetGraph,
    Tree,
    add_looped_dominating,
    bipartition,
    blow_up,
    components,
    disjoint_union,
    format_graph,
    hom_brute_force,
    induced_subgraph,
    is_isomorphic,
    is_regular,
    parse_graph,
    remove_isolated,
    tensor_product,
)


def tg(n, *edges):
    return TargetGraph.from_edges(n, edges)


def random_target(rng, n):
    edges = [(u, v) for u in range(n) for v in range(u, n) if rng.random() < 0.5]
    return TargetGraph.from_edges(n, edges)


class TestTargetGraph:
    def test_loop_counts_once_in_degree(self):
        h = tg(2, (0, 0), (0, 1))
        assert h.degree(0) == 2  # loop once, plus the edge
        assert h.degree(1) == 1
        assert h.has_loop(0) and not h.has_loop(1)

    def test_neighbors_contains_self_iff_looped(self):
        h = tg(2, (0, 0), (0, 1))
        assert h.neighbors(0) == {0, 1}
        assert h.neighbors(1) == {0}

    def test_edge_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            tg(2, (0, 2))

    def test_hashable_and_equal_by_value(self):
        assert tg(2, (0, 1)) == tg(2, (1, 0))
        assert len({tg(2, (0, 1)), tg(2, (1, 0))}) == 1


class TestTree:
    def test_rejects_wrong_edge_count(self):
        with pytest.raises(ValueError, match="edges"):
            Tree.from_edges(3, [(0, 1)])

    def test_rejects_cycle(self):
        with pytest.raises(ValueError, match="cycle"):
            Tree.from_edges(4, [(0, 1), (1, 2), (0, 2)])

    def test_rejects_loop(self):
        with pytest.raises(ValueError, match="loop"):
            Tree.from_edges(2, [(0, 0)])

    def test_bipartition_sizes(self):
        t = Tree.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        x, y = bipartition(t)
        assert len(x) == 2 and len(y) == 2
        assert set(x) | set(y) == {0, 1, 2, 3}


class TestParsing:
    def test_round_trip(self):
        rng = random.Random(7)
        for _ in range(20):
            h = random_target(rng, rng.randint(1, 8))
            assert parse_graph(format_graph(h)) == h

    def test_comments_and_blank_lines_skipped(self):
        h = parse_graph("# a target\n\n2 2\n0 0\n# loop above\n0 1\n")
        assert h == tg(2, (0, 0), (0, 1))

    def test_bad_header(self):
        with pytest.raises(GraphParseError, match="line 1"):
            parse_graph("2\n0 1")

    def test_out_of_range_names_line(self):
        with pytest.raises(GraphParseError, match="line 3"):
            parse_graph("2 2\n0 1\n0 5")

    def test_duplicate_edge(self):
        with pytest.raises(GraphParseError, match="duplicate"):
            parse_graph("2 2\n0 1\n1 0")

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphParseError, match="announces"):
            parse_graph("2 2\n0 1")


class TestConstructions:
    def test_disjoint_union_hom_additive(self):
        # colorings of a connected graph into a union split by component
        t = Tree.from_edges(3, [(0, 1), (1, 2)])
        h1, h2 = tg(2, (0, 1)), tg(2, (0, 0), (0, 1))
        u = disjoint_union(h1, h2)
        assert hom_brute_force(t, u) == hom_brute_force(t, h1) + hom_brute_force(t, h2)

    def test_tensor_product_hom_multiplicative(self):
        t = Tree.from_edges(4, [(0, 1), (1, 2), (1, 3)])
        h1, h2 = tg(2, (0, 0), (0, 1)), tg(3, (0, 1), (1, 2), (1, 1))
        p = tensor_product(h1, h2)
        assert hom_brute_force(t, p) == hom_brute_force(t, h1) * hom_brute_force(t, h2)

    def test_blow_up_shapes(self):
        # looped vertex -> fully looped clique; unlooped -> empty set
        h = tg(2, (0, 0), (0, 1))
        b = blow_up(h, [2, 3])
        assert b.n == 5
        assert b.has_edge(0, 1) and b.has_loop(0) and b.has_loop(1)
        assert not b.has_edge(2, 3) and not b.has_loop(2)
        assert all(b.has_edge(i, j) for i in (0, 1) for j in (2, 3, 4))

    def test_blow_up_by_ones_is_identity(self):
        h = tg(3, (0, 1), (1, 1), (1, 2))
        assert blow_up(h, [1, 1, 1]) == h

    def test_add_looped_dominating(self):
        h = tg(2, (0, 1))
        d = add_looped_dominating(h, 2)
        assert d.n == 4
        for w in (2, 3):
            assert d.has_loop(w)
            assert all(d.has_edge(w, v) for v in range(4) if v != w or v == w)

    def test_remove_isolated_drops_lone_looped_vertex(self):
        h = tg(3, (0, 1), (2, 2))
        assert remove_isolated(h) == tg(2, (0, 1))

    def test_is_regular(self):
        assert is_regular(tg(3, (0, 1), (0, 2), (1, 2))) == 2
        # loop counts once: fully looped K_2 is 2-regular
        assert is_regular(tg(2, (0, 0), (1, 1), (0, 1))) == 2
        assert is_regular(tg(2, (0, 0), (0, 1))) is None

    def test_components(self):
        h = tg(5, (0, 3), (1, 1), (2, 4))
        assert components(h) == [[0, 3], [1], [2, 4]]

    def test_induced_subgraph_relabels(self):
        h = tg(4, (0, 2), (2, 2), (2, 3))
        assert induced_subgraph(h, [2, 3]) == tg(2, (0, 0), (0, 1))


class TestIsomorphism:
    def test_relabeled_graphs_isomorphic(self):
        rng = random.Random(11)
        for _ in range(30):
            n = rng.randint(1, 7)
            h = random_target(rng, n)
            perm = list(range(n))
            rng.shuffle(perm)
            g = TargetGraph.from_edges(n, [(perm[u], perm[v]) for u, v in h.edges])
            assert is_isomorphic(h, g)

    def test_loop_placement_distinguishes(self):
        # path with a loop at an end vs at the middle
        a = tg(3, (0, 1), (1, 2), (0, 0))
        b = tg(3, (0, 1), (1, 2), (1, 1))
        assert not is_isomorphic(a, b)

    def test_different_sizes(self):
        assert not is_isomorphic(tg(2, (0, 1)), tg(3, (0, 1)))
