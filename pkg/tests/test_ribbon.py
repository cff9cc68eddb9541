from fractions import Fraction
from math import factorial

import pytest

import oracle_ribbon as oracle
from ribbonvol.exact import mat_rank, transpose
from ribbonvol.ribbon import (
    InvalidRibbonGraph,
    RibbonGraph,
    UnsupportedGraph,
    enumerate_graphs,
    enumerate_trivalent,
)

# one-face torus graph: two trivalent vertices joined by three edges
G11 = RibbonGraph((1, 2, 0, 4, 5, 3), (3, 4, 5, 0, 1, 2), (1,))


def test_degree_two_vertex_rejected():
    # a 2-cycle in s0 is a degree-2 vertex
    with pytest.raises(InvalidRibbonGraph):
        RibbonGraph((1, 0, 3, 2), (2, 3, 0, 1), (1, 2))


def test_s1_must_be_fixed_point_free_involution():
    with pytest.raises(InvalidRibbonGraph):
        RibbonGraph((1, 2, 0, 4, 5, 3), (0, 1, 2, 3, 4, 5), (1,))


def test_disconnected_rejected():
    s0 = (1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9)
    s1 = (3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8)
    with pytest.raises(InvalidRibbonGraph):
        RibbonGraph(s0, s1, (1, 2))


def test_face_labels_must_be_bijection():
    with pytest.raises(InvalidRibbonGraph):
        RibbonGraph((1, 2, 0, 4, 5, 3), (3, 4, 5, 0, 1, 2), (2,))


def test_faces_partition_darts():
    faces = G11.faces()
    assert len(faces) == 1
    assert sorted(d for f in faces for d in f) == list(range(6))
    assert sum(len(f) for f in faces) == 2 * G11.num_edges


def test_genus_bookkeeping():
    # V=2, E=3, F=1 -> genus 1; V=2, E=3, F=3 -> genus 0
    assert G11.genus == 1
    theta = enumerate_graphs(0, 3, [3, 3])[0][0]
    assert theta.genus == 0 and theta.num_faces == 3


def test_face_edge_matrix_properties():
    A = G11.face_edge_matrix()
    assert A == [[2, 2, 2]]
    for graph, _ in enumerate_trivalent(0, 4):
        A = graph.face_edge_matrix()
        E = graph.num_edges
        for e in range(E):
            assert sum(A[i][e] for i in range(len(A))) == 2
        # total perimeter is twice the total edge length
        assert sum(sum(row) for row in A) == 2 * E


def test_face_edge_matrix_full_rank():
    for g, n in [(0, 3), (1, 1), (0, 4), (1, 2)]:
        for graph, _ in enumerate_trivalent(g, n):
            assert mat_rank([[Fraction(x) for x in row]
                             for row in graph.face_edge_matrix()]) == n


def test_oriented_adjacency_skew_and_rank():
    for g, n in [(0, 3), (1, 1), (0, 4), (1, 2)]:
        for graph, _ in enumerate_trivalent(g, n):
            B = graph.oriented_adjacency()
            E = graph.num_edges
            assert all(B[i][j] == -B[j][i] for i in range(E) for j in range(E))
            BQ = [[Fraction(x) for x in row] for row in B]
            assert mat_rank(BQ) == 6 * g - 6 + 2 * n


def test_kernel_of_B_is_image_of_A_transpose():
    for g, n in [(0, 3), (1, 1), (1, 2)]:
        for graph, _ in enumerate_trivalent(g, n):
            A = [[Fraction(x) for x in row] for row in graph.face_edge_matrix()]
            B = [[Fraction(x) for x in row] for row in graph.oriented_adjacency()]
            E = graph.num_edges
            # B annihilates every row of A
            for row in A:
                assert all(sum(B[i][j] * row[j] for j in range(E)) == 0
                           for i in range(E))
            # and the kernel has no more than that: rank B = E - n
            assert mat_rank(B) == E - n


def test_oriented_adjacency_needs_trivalent():
    graph = enumerate_graphs(1, 2, [5, 3])[0][0]
    with pytest.raises(UnsupportedGraph):
        graph.oriented_adjacency()


def test_automorphisms_identity_counted():
    assert G11.automorphism_group_order() == 6
    for graph, aut in enumerate_trivalent(0, 3):
        assert aut >= 1
        assert graph.automorphism_group_order() == aut


def test_enumeration_matches_brute_force_oracle():
    for g, n in [(0, 3), (1, 1)]:
        fast = enumerate_graphs(g, n, [3, 3])
        brute = oracle.orbit_classes(g, n, [3, 3])
        assert len(fast) == len(brute)
        assert sorted(a for _, a in fast) == sorted(a for _, a in brute)


@pytest.mark.parametrize("g,n,degrees", [
    (0, 3, [3, 3]), (1, 1, [3, 3]), (0, 4, [3] * 4), (1, 2, [3] * 4),
])
def test_orbit_counting_mass_identity(g, n, degrees):
    """Sum over classes of (2E)!/|Aut| equals the number of labelled
    permutation triples, counted independently by the oracle."""
    total = oracle.total_labelled_structures(g, n, degrees)
    N = sum(degrees)
    fast = enumerate_graphs(g, n, degrees)
    assert sum(factorial(N) // aut for _, aut in fast) == total


def test_enumeration_is_deterministic_and_idempotent():
    a = enumerate_graphs(1, 2, [5, 3])
    b = enumerate_graphs(1, 2, [5, 3])
    assert [(g.to_json(), aut) for g, aut in a] == [(g.to_json(), aut) for g, aut in b]


def test_enumerated_graphs_have_requested_invariants():
    for g, n, degrees in [(0, 4, [3] * 4), (1, 2, [5, 3]), (1, 2, [3] * 4)]:
        for graph, _ in enumerate_graphs(g, n, degrees):
            assert graph.genus == g
            assert graph.num_faces == n
            assert graph.degree_sequence == tuple(sorted(degrees, reverse=True))


def test_example_cycle_cells():
    out = enumerate_graphs(1, 2, [5, 3])
    assert len(out) == 8
    assert all(aut == 1 for _, aut in out)


def test_inconsistent_input_gives_empty_list():
    assert enumerate_graphs(0, 1, [3]) == []
    assert enumerate_graphs(2, 1, [3, 3]) == []
    assert enumerate_graphs(0, 3, [3]) == []
    assert enumerate_graphs(1, 2, [7, 3]) == []  # half-integer genus


def test_degree_order_does_not_matter():
    a = enumerate_graphs(1, 2, [3, 5])
    b = enumerate_graphs(1, 2, [5, 3])
    assert [(g.to_json(), aut) for g, aut in a] == [(g.to_json(), aut) for g, aut in b]


def test_json_roundtrip_and_version_check():
    j = G11.to_json()
    assert j["v"] == 1
    assert RibbonGraph.from_json(j).canonical_form() == G11.canonical_form()
    j["v"] = 2
    with pytest.raises(InvalidRibbonGraph):
        RibbonGraph.from_json(j)


def test_parallel_enumeration_matches(monkeypatch):
    monkeypatch.setenv("MODULI_THREADS", "2")
    par = enumerate_graphs(0, 3, [3, 3])
    monkeypatch.setenv("MODULI_THREADS", "1")
    seq = enumerate_graphs(0, 3, [3, 3])
    assert [(g.to_json(), a) for g, a in par] == [(g.to_json(), a) for g, a in seq]
