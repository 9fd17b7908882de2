import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquespectra.graphs import (
    Graph,
    ParseError,
    Partition,
    ValidationError,
    complement,
    complete_multipartite,
    complete_multipartite_partition,
    connected_components,
    cycle_graph,
    edge_pairs,
    gnp_random,
    induced_subgraph,
    parse_dimacs,
    parse_edge_list,
    path_graph,
    petersen_graph,
    serialize_dimacs,
    serialize_edge_list,
    turan_graph,
)


@st.composite
def graphs(draw, max_n=8, min_n=1):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_edge_mask(n, mask)


class TestConstruction:
    def test_from_edges_basic(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3), (1, 0)])
        assert g.n == 4
        assert g.edge_count == 2
        assert g.has_edge(0, 1) and g.has_edge(1, 0)
        assert not g.has_edge(0, 2)
        assert g.degree(0) == 1
        assert g.neighbors(1) == [0]

    def test_from_edges_rejects_self_loop(self):
        with pytest.raises(ValidationError):
            Graph.from_edges(3, [(1, 1)])

    def test_from_edges_rejects_out_of_range(self):
        with pytest.raises(ValidationError):
            Graph.from_edges(3, [(0, 3)])

    def test_edge_mask_roundtrip_explicit(self):
        # mask bit order must follow edge_pairs
        pairs = edge_pairs(4)
        assert pairs == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        g = Graph.from_edge_mask(4, 0b100101)
        assert set(g.edges()) == {(0, 1), (0, 3), (2, 3)}
        assert g.edge_mask() == 0b100101

    @given(graphs())
    def test_edge_mask_roundtrip(self, g):
        assert Graph.from_edge_mask(g.n, g.edge_mask()) == g

    @given(graphs())
    def test_edges_sorted_and_consistent(self, g):
        es = g.edges()
        assert es == sorted(es)
        assert all(u < v for u, v in es)
        assert len(es) == g.edge_count
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count

    def test_add_edge_is_persistent(self):
        g = Graph.empty(3)
        h = g.add_edge(0, 2)
        assert g.edge_count == 0
        assert h.has_edge(0, 2)
        assert h.add_edge(0, 2) == h

    def test_to_numpy_symmetric(self):
        a = Graph.from_edges(3, [(0, 1), (1, 2)]).to_numpy()
        assert a.tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]


class TestTransforms:
    @given(graphs())
    def test_complement_involution(self, g):
        assert complement(complement(g)) == g

    @given(graphs())
    def test_complement_edge_count(self, g):
        assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2

    def test_induced_subgraph_relabels(self):
        g = Graph.from_edges(5, [(0, 2), (2, 4), (1, 3)])
        h, old = induced_subgraph(g, [4, 0, 2])
        assert old == [0, 2, 4]
        assert h.n == 3
        assert set(h.edges()) == {(0, 1), (1, 2)}

    @given(graphs(max_n=7))
    def test_induced_subgraph_preserves_adjacency(self, g):
        verts = [v for v in range(g.n) if v % 2 == 0]
        h, old = induced_subgraph(g, verts)
        for i, j in itertools.combinations(range(h.n), 2):
            assert h.has_edge(i, j) == g.has_edge(old[i], old[j])

    def test_connected_components(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (4, 5)])
        assert connected_components(g) == [[0, 1, 2], [3], [4, 5]]

    @given(graphs())
    def test_components_partition_vertices(self, g):
        comps = connected_components(g)
        flat = sorted(v for c in comps for v in c)
        assert flat == list(range(g.n))


class TestGenerators:
    def test_complete_multipartite_shape(self):
        g = complete_multipartite([2, 3])
        assert g.n == 5
        assert g.edge_count == 6
        assert not g.has_edge(0, 1) and not g.has_edge(2, 4)
        assert g.has_edge(0, 2)

    def test_complete_multipartite_rejects_empty_part(self):
        with pytest.raises(ValidationError):
            complete_multipartite([2, 0])

    def test_turan_graph_sizes(self):
        g = turan_graph(7, 3)
        part = complete_multipartite_partition(g)
        assert sorted(part.sizes) == [2, 2, 3]
        # Turan graph maximizes edges among K_4-free graphs on 7 vertices
        assert g.edge_count == 16

    def test_turan_degenerate(self):
        assert turan_graph(2, 5) == complete_multipartite([1, 1])

    def test_gnp_deterministic(self):
        a = gnp_random(8, 0.5, seed=123)
        b = gnp_random(8, 0.5, seed=123)
        c = gnp_random(8, 0.5, seed=124)
        assert a == b
        assert a != c  # overwhelmingly likely and fixed by the seeds

    def test_gnp_extremes(self):
        assert gnp_random(6, 0.0, seed=1).edge_count == 0
        assert gnp_random(6, 1.0, seed=1).edge_count == 15
        with pytest.raises(ValidationError):
            gnp_random(4, 1.5, seed=0)

    def test_path_and_cycle(self):
        assert path_graph(4).edges() == [(0, 1), (1, 2), (2, 3)]
        assert cycle_graph(4).edge_count == 4
        with pytest.raises(ValidationError):
            cycle_graph(2)

    def test_petersen(self):
        g = petersen_graph()
        assert g.n == 10
        assert g.edge_count == 15
        assert all(g.degree(v) == 3 for v in range(10))
        # triangle-free
        for u, v in g.edges():
            assert g.adj[u] & g.adj[v] == 0


class TestEdgeListFormat:
    def test_parse_simple(self):
        g = parse_edge_list("0 1\n1 2\n")
        assert g.n == 3 and g.edge_count == 2

    def test_parse_header_comments_blank(self):
        text = "# demo\nn 5\n\n0 1  # inline\n3 4\n"
        g = parse_edge_list(text)
        assert g.n == 5
        assert set(g.edges()) == {(0, 1), (3, 4)}

    def test_parse_duplicate_edges_collapse(self):
        g = parse_edge_list("0 1\n1 0\n0 1\n")
        assert g.edge_count == 1

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(ParseError) as e:
            parse_edge_list("0 1\n0 1 2\n")
        assert e.value.line == 2
        assert "line 2" in str(e.value)
        with pytest.raises(ParseError, match="line 1"):
            parse_edge_list("0 x\n")
        with pytest.raises(ParseError, match="line 2"):
            parse_edge_list("0 1\nn 4\n")  # header after edges
        with pytest.raises(ParseError):
            parse_edge_list("n 3\n0 5\n")  # beyond declared count
        with pytest.raises(ValidationError):
            parse_edge_list("2 2\n")

    def test_roundtrip_with_isolated_vertices(self):
        g = Graph.from_edges(6, [(1, 4)])
        assert parse_edge_list(serialize_edge_list(g)) == g

    @given(graphs())
    def test_roundtrip_random(self, g):
        assert parse_edge_list(serialize_edge_list(g)) == g


class TestDimacsFormat:
    def test_parse_simple(self):
        g = parse_dimacs("c comment\np edge 4 2\ne 1 2\ne 3 4\n")
        assert g.n == 4
        assert set(g.edges()) == {(0, 1), (2, 3)}

    def test_parse_errors(self):
        with pytest.raises(ParseError, match="problem line"):
            parse_dimacs("e 1 2\n")
        with pytest.raises(ParseError, match="line 2"):
            parse_dimacs("p edge 3 1\np edge 3 1\n")
        with pytest.raises(ParseError):
            parse_dimacs("p edge 3 1\ne 1 4\n")
        with pytest.raises(ParseError):
            parse_dimacs("")

    def test_count_mismatch_warns_but_parses(self, caplog):
        import logging

        with caplog.at_level(logging.WARNING):
            g = parse_dimacs("p edge 3 5\ne 1 2\n")
        assert g.edge_count == 1
        assert any("declares 5" in r.getMessage() for r in caplog.records)

    @given(graphs())
    def test_roundtrip_random(self, g):
        assert parse_dimacs(serialize_dimacs(g)) == g


class TestMultipartiteRecognition:
    def test_complete_graph(self):
        g = complete_multipartite([1] * 4)
        part = complete_multipartite_partition(g)
        assert part.sizes == (1, 1, 1, 1)
        assert part.is_regular
        assert part.isolated == ()

    def test_cycle4_is_k22(self):
        part = complete_multipartite_partition(cycle_graph(4))
        assert part is not None
        assert sorted(part.parts) == [(0, 2), (1, 3)]
        assert part.is_regular

    def test_cycle5_is_not_multipartite(self):
        assert complete_multipartite_partition(cycle_graph(5)) is None

    def test_path3_is_star(self):
        part = complete_multipartite_partition(path_graph(3))
        assert part is not None
        assert sorted(part.sizes) == [1, 2]
        assert not part.is_regular

    def test_diamond(self, diamond):
        part = complete_multipartite_partition(diamond)
        assert part is not None
        assert sorted(part.sizes) == [1, 1, 2]

    def test_petersen_is_not_multipartite(self):
        assert complete_multipartite_partition(petersen_graph()) is None

    def test_edgeless(self):
        part = complete_multipartite_partition(Graph.empty(3))
        assert part == Partition(parts=(), isolated=(0, 1, 2))

    def test_isolated_vertices_kept_aside(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2)])  # K_3 plus two isolated
        part = complete_multipartite_partition(g)
        assert part.sizes == (1, 1, 1)
        assert part.isolated == (3, 4)

    def test_near_multipartite_rejected(self):
        # paw: triangle with a pendant; the pendant vertex misses two of
        # the vertices outside its complement-component
        g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
        assert complete_multipartite_partition(g) is None

    @given(st.lists(st.integers(1, 3), min_size=1, max_size=4))
    def test_recognizes_generated_multipartite(self, sizes):
        g = complete_multipartite(sizes)
        part = complete_multipartite_partition(g)
        if len(sizes) == 1:
            # single part means no edges at all: every vertex is isolated
            assert part.parts == ()
            assert len(part.isolated) == sizes[0]
        else:
            assert part is not None
            assert sorted(part.sizes) == sorted(sizes)

    @settings(max_examples=60)
    @given(graphs(max_n=7))
    def test_partition_faithful_when_found(self, g):
        part = complete_multipartite_partition(g)
        if part is None:
            return
        sizes = [len(p) for p in part.parts]
        if sizes:
            assert complete_multipartite(sizes).edge_count == g.edge_count
        covered = [v for p in part.parts for v in p] + list(part.isolated)
        assert sorted(covered) == list(range(g.n))
        # parts are mutually completely joined and internally independent
        for p in part.parts:
            for u, v in itertools.combinations(p, 2):
                assert not g.has_edge(u, v)
        for p, q in itertools.combinations(part.parts, 2):
            for u in p:
                for v in q:
                    assert g.has_edge(u, v)
