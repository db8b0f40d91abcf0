import pytest

from cdc5 import (
    EdgeSet,
    Graph6Error,
    MultiGraph,
    PreconditionError,
    UnsupportedFormatError,
    bridges,
    components,
    delete_edges,
    is_matching,
    parse_graph6,
    petersen_graph,
    suppress_degree2,
    write_graph6,
)

from .oracles import (
    bridged_cubic_graph,
    bridged_cubic_multigraph,
    brute_bridges,
    complete_graph,
    prism_graph,
    subdivide,
    theta_multigraph,
)


class TestMultiGraph:
    def test_basic_accessors(self):
        g = MultiGraph(3, [(0, 1), (1, 2), (2, 2)])
        assert g.n == 3 and g.m == 3
        assert g.edges == ((0, 1), (1, 2), (2, 2))
        assert g.endpoints(1) == (1, 2)
        assert g.other_end(0, 1) == 0
        assert g.incident(2) == (1, 2)

    def test_loop_counts_twice_toward_degree(self):
        g = MultiGraph(2, [(0, 1), (1, 1)])
        assert g.degree(0) == 1
        assert g.degree(1) == 3
        assert g.is_loop(1) and not g.is_loop(0)
        assert g.loop_mask() == 0b10

    def test_parallel_edges_have_distinct_ids(self):
        g = theta_multigraph()
        assert g.m == 3
        assert g.is_cubic()
        assert not g.is_simple()
        assert g.incident(0) == (0, 1, 2)

    def test_endpoint_range_checked(self):
        with pytest.raises(ValueError):
            MultiGraph(2, [(0, 2)])
        with pytest.raises(ValueError):
            MultiGraph(-1, [])

    def test_equality_is_exact_edge_list(self):
        a = MultiGraph(3, [(0, 1), (1, 2)])
        b = MultiGraph(3, [(0, 1), (1, 2)])
        c = MultiGraph(3, [(1, 2), (0, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != c

    def test_is_cubic_and_simple(self):
        assert complete_graph(4).is_cubic()
        assert complete_graph(4).is_simple()
        assert not complete_graph(5).is_cubic()
        assert not MultiGraph(2, [(0, 1), (0, 1)]).is_simple()
        assert not MultiGraph(1, [(0, 0)]).is_simple()


class TestEdgeSet:
    def test_constructors_and_algebra(self):
        g = complete_graph(4)
        a = EdgeSet.of(g, [0, 2, 5])
        b = EdgeSet.of(g, [2, 3])
        assert (a | b).ids() == (0, 2, 3, 5)
        assert (a & b).ids() == (2,)
        assert (a ^ b).ids() == (0, 3, 5)
        assert (a - b).ids() == (0, 5)
        assert EdgeSet.empty(g).mask == 0
        assert EdgeSet.full(g).ids() == (0, 1, 2, 3, 4, 5)

    def test_predicates_and_iteration(self):
        g = complete_graph(4)
        a = EdgeSet.of(g, [1, 4])
        assert 1 in a and 4 in a and 0 not in a
        assert list(a) == [1, 4]
        assert len(a) == 2
        assert bool(a) and not bool(EdgeSet.empty(g))
        assert a <= EdgeSet.full(g)
        assert not (EdgeSet.full(g) <= a)

    def test_host_identity_enforced(self):
        g1 = complete_graph(4)
        g2 = complete_graph(4)
        with pytest.raises(ValueError):
            EdgeSet.of(g1, [0]) | EdgeSet.of(g2, [0])
        assert EdgeSet.of(g1, [0]) != EdgeSet.of(g2, [0])

    def test_range_checked(self):
        g = complete_graph(4)
        with pytest.raises(ValueError):
            EdgeSet.of(g, [6])
        with pytest.raises(ValueError):
            EdgeSet(g, 1 << 6)


class TestIsMatching:
    def test_disjoint_pair_is_matching(self):
        g = complete_graph(4)
        # ids: (0,1)=0 (0,2)=1 (1,2)=2 (0,3)=3 (1,3)=4 (2,3)=5
        assert is_matching(g, EdgeSet.of(g, [0, 5]))

    def test_shared_endpoint_is_not(self):
        g = complete_graph(4)
        assert not is_matching(g, EdgeSet.of(g, [0, 2]))

    def test_empty_is_vacuously_matching(self):
        g = complete_graph(4)
        assert is_matching(g, EdgeSet.empty(g))

    def test_loops_never_match(self):
        g = MultiGraph(2, [(0, 1), (1, 1)])
        assert not is_matching(g, EdgeSet.of(g, [1]))

    def test_wrong_host_rejected(self):
        g = complete_graph(4)
        with pytest.raises(ValueError):
            is_matching(g, EdgeSet.empty(complete_graph(4)))


class TestGraph6:
    def test_k4_parses_from_c_tilde(self):
        g = parse_graph6("C~")
        assert g.n == 4 and g.m == 6
        assert g.is_cubic() and g.is_simple()
        assert g.edges == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))

    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.m == 0

    def test_header_prefix_accepted(self):
        assert parse_graph6(">>graph6<<C~") == parse_graph6("C~")

    def test_write_k4(self):
        assert write_graph6(complete_graph(4)) == "C~"

    def test_write_single_vertex(self):
        assert write_graph6(MultiGraph(1, [])) == "@"

    def test_roundtrip_catalog(self, catalog_lines):
        for line in catalog_lines:
            assert write_graph6(parse_graph6(line)) == line

    def test_roundtrip_is_edge_order_insensitive(self):
        g = petersen_graph()
        line = write_graph6(g)
        h = parse_graph6(line)
        assert write_graph6(h) == line
        assert sorted(tuple(sorted(p)) for p in h.edges) == sorted(
            tuple(sorted(p)) for p in g.edges
        )

    def test_empty_input_rejected(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("")
        assert exc.value.offset == 0

    def test_long_form_rejected(self):
        with pytest.raises(UnsupportedFormatError):
            parse_graph6("~??~?????")

    def test_bad_header_byte(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("\x1e")
        assert exc.value.offset == 0

    def test_truncated_payload(self):
        with pytest.raises(Graph6Error):
            parse_graph6("C")
        with pytest.raises(Graph6Error):
            parse_graph6("C~~")

    def test_payload_byte_out_of_range(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("C\x1e")
        assert exc.value.offset == 1

    def test_nonzero_padding_rejected(self):
        # n=3 uses 3 bits plus 3 padding bits; 'F' = 63 + 0b000111.
        with pytest.raises(Graph6Error):
            parse_graph6("BF")

    def test_non_ascii_rejected(self):
        with pytest.raises(Graph6Error):
            parse_graph6("Bé")

    def test_multigraph_not_writable(self):
        with pytest.raises(UnsupportedFormatError):
            write_graph6(theta_multigraph())
        with pytest.raises(UnsupportedFormatError):
            write_graph6(MultiGraph(1, [(0, 0)]))

    def test_large_graph_not_writable(self):
        with pytest.raises(UnsupportedFormatError):
            write_graph6(MultiGraph(63, []))


class TestDeleteEdges:
    def test_deletion_renumbers_densely(self):
        g = complete_graph(4)
        deletion = delete_edges(g, EdgeSet.of(g, [1, 3]))
        assert deletion.graph.n == 4
        assert deletion.graph.edges == ((0, 1), (1, 2), (1, 3), (2, 3))
        assert deletion.kept == (0, 2, 4, 5)
        assert deletion.old_to_new == (0, None, 1, None, 2, 3)

    def test_translation_roundtrip(self):
        g = complete_graph(4)
        deletion = delete_edges(g, EdgeSet.of(g, [1, 3]))
        survivors = EdgeSet.of(g, [0, 4, 5])
        new = deletion.to_new(survivors)
        assert deletion.to_old(g, new) == survivors

    def test_deleted_member_not_translatable(self):
        g = complete_graph(4)
        deletion = delete_edges(g, EdgeSet.of(g, [1]))
        with pytest.raises(ValueError):
            deletion.to_new(EdgeSet.of(g, [1]))

    def test_delete_matching_from_k4_leaves_4cycle(self):
        g = complete_graph(4)
        deletion = delete_edges(g, EdgeSet.of(g, [0, 5]))
        h = deletion.graph
        assert h.m == 4
        assert all(h.degree(v) == 2 for v in range(4))
        assert len(components(h)) == 1

    def test_delete_nothing_is_identity(self):
        g = complete_graph(4)
        assert delete_edges(g, EdgeSet.empty(g)).graph == g


class TestBridges:
    def test_k4_has_none(self):
        assert bridges(complete_graph(4)).mask == 0

    def test_two_triangles_joined_by_one_edge(self):
        edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
        g = MultiGraph(6, edges)
        assert bridges(g).ids() == (6,)

    def test_circuit_has_none(self):
        g = MultiGraph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert bridges(g).mask == 0

    def test_parallel_pair_is_no_bridge(self):
        g = MultiGraph(2, [(0, 1), (0, 1)])
        assert bridges(g).mask == 0

    def test_loop_is_no_bridge(self):
        g = MultiGraph(2, [(0, 1), (1, 1), (0, 0)])
        assert bridges(g).ids() == (0,)

    def test_tree_is_all_bridges(self):
        g = MultiGraph(4, [(0, 1), (1, 2), (1, 3)])
        assert bridges(g).ids() == (0, 1, 2)

    @pytest.mark.parametrize(
        "builder",
        [
            bridged_cubic_graph,
            bridged_cubic_multigraph,
            prism_graph,
            theta_multigraph,
            petersen_graph,
            lambda: MultiGraph(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 6)]),
        ],
    )
    def test_agrees_with_removal_oracle(self, builder):
        g = builder()
        assert sorted(bridges(g).ids()) == brute_bridges(g)

    def test_agrees_with_removal_oracle_on_catalog(self, catalog):
        for g in catalog:
            assert bridges(g).mask == 0
            assert brute_bridges(g) == []

    def test_subdivision_turns_no_edge_into_bridge(self):
        g = subdivide(complete_graph(4), 2, times=2)
        assert sorted(bridges(g).ids()) == brute_bridges(g) == []


class TestComponents:
    def test_connected_graph(self):
        assert components(complete_graph(4)) == [[0, 1, 2, 3]]

    def test_two_triangles(self):
        g = MultiGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert components(g) == [[0, 1, 2], [3, 4, 5]]

    def test_isolated_vertices(self):
        assert components(MultiGraph(3, [])) == [[0], [1], [2]]

    def test_empty_graph(self):
        assert components(MultiGraph(0, [])) == []


class TestSuppression:
    def test_three_paths_between_two_vertices(self):
        # 0 and 1 joined by three length-2 paths through 2, 3, 4.
        g = MultiGraph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
        smap = suppress_degree2(g)
        assert smap.suppressed_graph.n == 2
        assert smap.suppressed_graph.edges == ((0, 1), (0, 1), (0, 1))
        assert smap.path_of == ((0, 1), (2, 3), (4, 5))
        assert smap.circuit_components == ()
        assert smap.vertex_map == (0, 1)

    def test_subdivided_k4_suppresses_back(self):
        g = subdivide(complete_graph(4), 0, times=1)
        smap = suppress_degree2(g)
        h = smap.suppressed_graph
        assert h.n == 4 and h.m == 6
        assert h.is_cubic()
        assert sum(len(p) for p in smap.path_of) == g.m
        assert sorted(len(p) for p in smap.path_of) == [1, 1, 1, 1, 1, 2]

    def test_lone_circuit_becomes_component(self):
        g = MultiGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        smap = suppress_degree2(g)
        assert smap.suppressed_graph.n == 0
        assert len(smap.circuit_components) == 1
        assert smap.circuit_components[0].ids() == (0, 1, 2, 3)

    def test_cubic_graph_keeps_every_edge_as_singleton_path(self):
        g = petersen_graph()
        smap = suppress_degree2(g)
        h = smap.suppressed_graph
        assert h.n == g.n and h.m == g.m
        assert smap.vertex_map == tuple(range(10))
        assert all(len(p) == 1 for p in smap.path_of)
        assert sorted(p[0] for p in smap.path_of) == list(range(15))
        for e, path in enumerate(smap.path_of):
            assert sorted(h.endpoints(e)) == sorted(g.endpoints(path[0]))

    def test_bridged_dumbbell_suppresses_to_loops(self):
        # Two triangles joined by a bridge: each triangle's far side walks
        # back to its degree-3 corner, so suppression produces loops.
        g = MultiGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
        smap = suppress_degree2(g)
        h = smap.suppressed_graph
        assert h.edges == ((0, 0), (0, 1), (1, 1))
        assert smap.path_of == ((0, 1, 2), (6,), (3, 4, 5))
        assert smap.circuit_components == ()

    def test_wrong_degrees_rejected(self):
        with pytest.raises(PreconditionError):
            suppress_degree2(MultiGraph(2, [(0, 1)]))


class TestPetersenFixture:
    def test_shape(self):
        g = petersen_graph()
        assert g.n == 10 and g.m == 15
        assert g.is_cubic() and g.is_simple()

    def test_matches_frozen_file(self, data_dir):
        from .conftest import read_graph6_lines

        (line,) = read_graph6_lines("petersen.g6")
        assert write_graph6(petersen_graph()) == line
