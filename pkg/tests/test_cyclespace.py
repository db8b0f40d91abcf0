import random

import pytest

from cdc5 import (
    CapacityError,
    EdgeSet,
    MultiGraph,
    coordinates_of,
    cycle_space_basis,
    edge_set_connected,
    enumerate_circuits,
    enumerate_even_subgraphs,
    is_circuit,
    is_even_subgraph,
    parse_graph6,
    petersen_graph,
    solve_affine,
    sym_diff,
)

from .oracles import (
    bridged_cubic_graph,
    bridged_cubic_multigraph,
    circuit_subsets,
    complete_graph,
    even_subsets,
    prism_graph,
    theta_multigraph,
)

SMALL_HOSTS = [
    complete_graph(4),
    prism_graph(),
    theta_multigraph(),
    bridged_cubic_multigraph(),
    MultiGraph(3, [(0, 1), (1, 2), (0, 2)]),
    MultiGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]),
    MultiGraph(4, [(0, 1), (1, 2), (2, 3)]),
    MultiGraph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]),
]


class TestBasis:
    @pytest.mark.parametrize("g", SMALL_HOSTS, ids=lambda g: f"n{g.n}m{g.m}")
    def test_dimension_formula(self, g):
        from cdc5 import components

        basis = cycle_space_basis(g)
        assert basis.dim == g.m - g.n + len(components(g))
        assert len(basis.vectors) == basis.dim
        assert len(basis.chords) == basis.dim

    def test_dimension_on_catalog(self, catalog):
        for g in catalog:
            assert cycle_space_basis(g).dim == g.m - g.n + 1

    def test_vectors_are_even_and_contain_their_chord(self):
        g = petersen_graph()
        basis = cycle_space_basis(g)
        for chord, vec in zip(basis.chords, basis.vectors):
            assert is_even_subgraph(g, vec)
            assert chord in vec

    def test_loops_are_not_part_of_the_space(self):
        # Even subgraphs exclude loops by convention, so a loop is neither
        # a tree edge nor a chord.
        g = MultiGraph(2, [(0, 1), (1, 1), (0, 1)])
        basis = cycle_space_basis(g)
        assert basis.dim == 1
        assert basis.chords == (2,)
        assert basis.vectors[0].ids() == (0, 2)


class TestEvenSubgraphs:
    @pytest.mark.parametrize("g", SMALL_HOSTS, ids=lambda g: f"n{g.n}m{g.m}")
    def test_enumeration_matches_parity_oracle(self, g):
        basis = cycle_space_basis(g)
        got = {frozenset(s.ids()) for s in enumerate_even_subgraphs(basis)}
        assert got == even_subsets(g)

    def test_enumeration_on_a_loop_host_skips_loop_subsets(self):
        # A loop adds two to its vertex degree, so the parity oracle admits
        # arbitrary loop subsets; the package convention excludes loops
        # from even subgraphs, leaving exactly the loop-free parity sets.
        g = MultiGraph(2, [(0, 1), (1, 1), (0, 1), (0, 0)])
        basis = cycle_space_basis(g)
        got = {frozenset(s.ids()) for s in enumerate_even_subgraphs(basis)}
        assert got == {s for s in even_subsets(g) if not (1 in s or 3 in s)}

    def test_enumeration_matches_parity_oracle_small_catalog(self, catalog):
        for g in catalog:
            if g.m > 12:
                continue
            basis = cycle_space_basis(g)
            got = {frozenset(s.ids()) for s in enumerate_even_subgraphs(basis)}
            assert got == even_subsets(g)

    def test_count_and_distinctness(self, petersen):
        basis = cycle_space_basis(petersen)
        sets = list(enumerate_even_subgraphs(basis))
        assert len(sets) == 64
        assert len({s.mask for s in sets}) == 64
        assert sets[0].mask == 0
        assert all(is_even_subgraph(petersen, s) for s in sets)

    def test_gray_order_changes_one_basis_vector_per_step(self, petersen):
        basis = cycle_space_basis(petersen)
        masks = [v.mask for v in basis.vectors]
        sets = list(enumerate_even_subgraphs(basis))
        for k in range(1, len(sets)):
            assert sets[k].mask ^ sets[k - 1].mask in masks

    def test_guard(self, petersen):
        basis = cycle_space_basis(petersen)
        with pytest.raises(CapacityError):
            list(enumerate_even_subgraphs(basis, guard=5))
        assert len(list(enumerate_even_subgraphs(basis, guard=6))) == 64

    def test_k4_inventory(self):
        g = complete_graph(4)
        sets = {frozenset(s.ids()) for s in enumerate_even_subgraphs(cycle_space_basis(g))}
        triangles = {
            frozenset({0, 1, 2}),  # 0-1-2
            frozenset({0, 3, 4}),  # 0-1-3
            frozenset({1, 3, 5}),  # 0-2-3
            frozenset({2, 4, 5}),  # 1-2-3
        }
        quads = {
            frozenset({0, 2, 3, 5}),
            frozenset({1, 2, 3, 4}),
            frozenset({0, 1, 4, 5}),
        }
        assert sets == {frozenset()} | triangles | quads


class TestPredicates:
    def test_even_subgraph_examples(self):
        g = complete_graph(4)
        assert is_even_subgraph(g, EdgeSet.empty(g))
        assert is_even_subgraph(g, EdgeSet.of(g, [0, 1, 2]))
        assert not is_even_subgraph(g, EdgeSet.of(g, [0]))

    def test_loops_are_not_even(self):
        g = MultiGraph(1, [(0, 0)])
        assert not is_even_subgraph(g, EdgeSet.of(g, [0]))

    def test_connectivity(self):
        g = MultiGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert edge_set_connected(g, EdgeSet.of(g, [0, 1, 2]))
        assert not edge_set_connected(g, EdgeSet.of(g, [0, 1, 2, 3, 4, 5]))
        assert edge_set_connected(g, EdgeSet.empty(g))

    def test_is_circuit(self):
        g = MultiGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert is_circuit(g, EdgeSet.of(g, [0, 1, 2]))
        assert not is_circuit(g, EdgeSet.of(g, [0, 1, 2, 3, 4, 5]))
        assert not is_circuit(g, EdgeSet.empty(g))

    def test_parallel_pair_is_a_circuit(self):
        g = theta_multigraph()
        assert is_circuit(g, EdgeSet.of(g, [0, 1]))
        assert not is_circuit(g, EdgeSet.of(g, [0]))


class TestEnumerateCircuits:
    def test_k4(self):
        g = complete_graph(4)
        circuits = enumerate_circuits(g)
        assert len(circuits) == 7
        assert [len(c) for c in circuits] == [3, 3, 3, 3, 4, 4, 4]

    def test_petersen_census(self, petersen):
        circuits = enumerate_circuits(petersen)
        assert len(circuits) == 57
        by_len: dict[int, int] = {}
        for c in circuits:
            by_len[len(c)] = by_len.get(len(c), 0) + 1
        assert by_len == {5: 12, 6: 10, 8: 15, 9: 20}

    @pytest.mark.parametrize(
        "g", [complete_graph(4), prism_graph(), theta_multigraph(), petersen_graph()],
        ids=lambda g: f"n{g.n}m{g.m}",
    )
    def test_matches_subset_oracle(self, g):
        got = {frozenset(c.ids()) for c in enumerate_circuits(g)}
        assert got == circuit_subsets(g)

    def test_sorted_by_size_then_ids(self, petersen):
        circuits = enumerate_circuits(petersen)
        assert circuits == sorted(circuits, key=lambda c: (len(c), c.ids()))

    def test_guard(self, petersen):
        with pytest.raises(CapacityError):
            enumerate_circuits(petersen, guard=5)


class TestSymDiff:
    def test_self_cancels(self):
        g = complete_graph(4)
        a = EdgeSet.of(g, [0, 1, 2])
        assert sym_diff([a, a]).mask == 0

    def test_identity_with_empty(self):
        g = complete_graph(4)
        a = EdgeSet.of(g, [0, 1, 2])
        assert sym_diff([a, EdgeSet.empty(g)]) == a

    def test_two_triangles_sharing_an_edge(self):
        g = complete_graph(4)
        t1 = EdgeSet.of(g, [0, 1, 2])  # 0-1-2
        t2 = EdgeSet.of(g, [2, 4, 5])  # 1-2-3
        assert sym_diff([t1, t2]).ids() == (0, 1, 4, 5)
        assert is_circuit(g, sym_diff([t1, t2]))

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            sym_diff([])

    def test_mixed_hosts_rejected(self):
        with pytest.raises(ValueError):
            sym_diff([EdgeSet.empty(complete_graph(4)), EdgeSet.empty(complete_graph(4))])


class TestCoordinates:
    def test_roundtrip_over_whole_space(self, petersen):
        basis = cycle_space_basis(petersen)
        rng = random.Random(7)
        sets = list(enumerate_even_subgraphs(basis))
        for s in rng.sample(sets, 16):
            coeffs = coordinates_of(basis, s)
            assert coeffs is not None
            rebuilt = sym_diff(
                [EdgeSet.empty(petersen)]
                + [basis.vectors[i] for i in range(basis.dim) if coeffs >> i & 1]
            )
            assert rebuilt == s

    def test_non_member_has_no_coordinates(self, petersen):
        basis = cycle_space_basis(petersen)
        assert coordinates_of(basis, EdgeSet.of(petersen, [0])) is None


class TestSolveAffine:
    def test_unique_solution_when_fully_pinned(self):
        g = complete_graph(4)
        basis = cycle_space_basis(g)
        triangle = EdgeSet.of(g, [0, 1, 2])
        sol = solve_affine(basis, triangle, EdgeSet.full(g) - triangle)
        assert sol is not None
        assert sol.dimension == 0
        assert sol.particular_set() == triangle

    def test_one_forced_edge_leaves_dimension_2(self):
        g = complete_graph(4)
        basis = cycle_space_basis(g)
        edge01 = EdgeSet.of(g, [0])
        sol = solve_affine(basis, edge01, EdgeSet.empty(g))
        assert sol is not None
        assert sol.dimension == 2
        solutions = {sol.solution(k).mask for k in range(4)}
        assert len(solutions) == 4
        expected = {
            s.mask
            for s in enumerate_even_subgraphs(basis)
            if edge01 <= s
        }
        assert solutions == expected

    def test_bridge_infeasible(self):
        g = bridged_cubic_graph()
        basis = cycle_space_basis(g)
        bridge = EdgeSet.of(g, [14])
        from cdc5 import bridges

        assert bridges(g) == bridge
        assert solve_affine(basis, bridge, EdgeSet.empty(g)) is None

    def test_conflicting_constraints_infeasible(self):
        g = complete_graph(4)
        basis = cycle_space_basis(g)
        e = EdgeSet.of(g, [0])
        assert solve_affine(basis, e, e) is None

    @pytest.mark.parametrize("g", SMALL_HOSTS[:4], ids=lambda g: f"n{g.n}m{g.m}")
    def test_matches_filter_oracle(self, g):
        basis = cycle_space_basis(g)
        space = list(enumerate_even_subgraphs(basis))
        rng = random.Random(g.m)
        for _ in range(20):
            ones = EdgeSet.of(g, [e for e in range(g.m) if rng.random() < 0.3])
            zeros = EdgeSet.of(
                g, [e for e in range(g.m) if e not in ones and rng.random() < 0.3]
            )
            expected = {
                s.mask for s in space if ones <= s and not (s & zeros)
            }
            sol = solve_affine(basis, ones, zeros)
            if sol is None:
                assert expected == set()
            else:
                got = {sol.solution(k).mask for k in range(1 << sol.dimension)}
                assert got == expected

    def test_wrong_host_rejected(self, petersen):
        basis = cycle_space_basis(petersen)
        other = complete_graph(4)
        with pytest.raises(ValueError):
            solve_affine(basis, EdgeSet.empty(other), EdgeSet.empty(other))
