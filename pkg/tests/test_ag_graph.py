import csv
import io
import json

import numpy as np
import pytest

from annigraph import ag_graph
from annigraph.ag_graph import (
    adjacent,
    bfs_matrix,
    build,
    closed_form_matrix,
    closed_neighborhood,
    distance_bfs,
    distance_branch,
    distance_closed_form,
    export,
    open_neighborhood,
    zero_product_set,
)
from annigraph.errors import DomainError, GraphSizeError
from annigraph.ring_model import IdealVector, RingSpec, product

from .helpers import divisor_to_exps, prime_factors, small_specs, zn_ideal_graph

SPECS_200 = small_specs(200)


def iv(*e):
    return IdealVector(e)


def test_adjacent_examples():
    s4 = RingSpec((4,))
    assert adjacent(s4, iv(1), iv(3))
    assert not adjacent(s4, iv(1), iv(2))
    assert not adjacent(s4, iv(2), iv(2))
    assert adjacent(RingSpec((2, 1)), iv(0, 1), iv(2, 0))


def test_adjacent_rejects_non_vertices():
    with pytest.raises(DomainError):
        adjacent(RingSpec((4,)), iv(0), iv(2))
    with pytest.raises(DomainError):
        adjacent(RingSpec((2, 1)), iv(2, 1), iv(1, 0))


@pytest.mark.parametrize("orders", small_specs(60))
def test_adjacent_is_product_zero(orders):
    spec = RingSpec(orders)
    vs = build(spec).vertices
    for a in vs:
        for b in vs:
            expected = a != b and product(spec, a, b).exps == spec.orders
            assert adjacent(spec, a, b) == expected


@pytest.mark.parametrize("N", [12, 16, 18, 30, 36, 60, 72, 81, 100, 210])
def test_exponent_model_matches_zn_elements(N):
    """AG(Z/N) computed from element products equals the exponent-tuple graph."""
    divisors, edges = zn_ideal_graph(N)
    primes = prime_factors(N)
    graph = build(RingSpec(divisor_to_exps(N, N, primes)))
    mapped = {d: IdealVector(divisor_to_exps(N, d, primes)) for d in divisors}
    assert sorted(mapped.values()) == list(graph.vertices)
    expected = {frozenset((mapped[a], mapped[b])) for a, b in map(tuple, edges)}
    got = {frozenset((graph.vertices[u], graph.vertices[v])) for u, v in graph.edges()}
    assert got == expected


@pytest.mark.parametrize(
    "orders, m, l, d",
    [((2, 1), (0, 1), (1, 0), 3), ((4,), (1,), (2,), 2), ((4,), (3,), (3,), 0), ((1, 1), (0, 1), (1, 0), 1)],
)
def test_distance_examples(orders, m, l, d):
    spec = RingSpec(orders)
    graph = build(spec)
    assert distance_closed_form(spec, IdealVector(m), IdealVector(l)) == d
    assert distance_bfs(graph, IdealVector(m), IdealVector(l)) == d


def test_distance_branch_names():
    assert distance_branch(RingSpec((2, 1)), iv(0, 1), iv(1, 0)) == (3, "lemma-3")
    assert distance_branch(RingSpec((4,)), iv(1), iv(3)) == (1, "product-zero")
    assert distance_branch(RingSpec((4,)), iv(2), iv(2)) == (0, "equal")
    assert distance_branch(RingSpec((4,)), iv(1), iv(2)) == (2, "default-2")


def test_distance_rejects_non_vertex():
    with pytest.raises(DomainError):
        distance_closed_form(RingSpec((4,)), iv(4), iv(1))
    graph = build(RingSpec((4,)))
    with pytest.raises(DomainError):
        distance_bfs(graph, iv(0), iv(1))


def test_closed_form_equals_bfs_on_all_small_specs():
    for orders in SPECS_200:
        spec = RingSpec(orders)
        graph = build(spec)
        assert np.array_equal(bfs_matrix(graph), closed_form_matrix(spec, graph.exps)), orders


@pytest.mark.parametrize("orders", small_specs(40))
def test_scalar_distance_matches_matrix(orders):
    spec = RingSpec(orders)
    graph = build(spec)
    for i, a in enumerate(graph.vertices):
        for j, b in enumerate(graph.vertices):
            assert distance_closed_form(spec, a, b) == graph.distances[i, j]


def test_structure_invariants_on_all_small_specs():
    for orders in SPECS_200:
        spec = RingSpec(orders)
        graph = build(spec)
        A = graph.adjacency
        assert np.array_equal(A, A.T)
        assert not A.diagonal().any()
        if len(graph):
            D = graph.distances
            assert D.max() <= 3
            if spec.n == 1:
                assert graph.diameter() <= 2
            # the distance-3 case never fires on an adjacent pair
            assert not (A & (D == 3)).any()


@pytest.mark.parametrize("orders", small_specs(60))
def test_edge_count_matches_pairwise_adjacent(orders):
    spec = RingSpec(orders)
    graph = build(spec)
    brute_edges = sum(
        adjacent(spec, a, b) for i, a in enumerate(graph.vertices) for b in graph.vertices[i + 1:]
    )
    assert graph.edge_count == brute_edges


@pytest.mark.parametrize("n1", range(3, 14))
def test_local_zero_product_sets_grow_by_one(n1):
    # the nesting holds for {u : uv = 0}; N[v] differs from it by v itself
    graph = build(RingSpec((n1,)))
    for k in range(1, n1 - 1):
        assert zero_product_set(graph, iv(k + 1)) == zero_product_set(graph, iv(k)) | {iv(n1 - k - 1)}


def test_closed_neighborhood_nesting_fails_literally():
    graph = build(RingSpec((4,)))
    assert closed_neighborhood(graph, iv(2)) == {iv(2), iv(3)}
    assert closed_neighborhood(graph, iv(1)) | {iv(2)} == {iv(1), iv(2), iv(3)}


@pytest.mark.parametrize("orders", small_specs(40))
def test_closed_neighborhood_is_zero_product_set_plus_self(orders):
    graph = build(RingSpec(orders))
    for v in graph.vertices:
        assert closed_neighborhood(graph, v) == zero_product_set(graph, v) | {v}
        assert open_neighborhood(graph, v) == zero_product_set(graph, v) - {v}


def test_closed_neighborhood_examples():
    graph = build(RingSpec((4,)))
    assert closed_neighborhood(graph, iv(3)) == {iv(1), iv(2), iv(3)}
    assert closed_neighborhood(graph, iv(1)) == {iv(1), iv(3)}
    single = build(RingSpec((2,)))
    assert closed_neighborhood(single, iv(1)) == {iv(1)}


def test_build_examples():
    g4 = build(RingSpec((4,)))
    assert (len(g4), g4.edge_count) == (3, 2)
    g21 = build(RingSpec((2, 1)))
    assert (len(g21), g21.edge_count) == (4, 3)
    assert len(build(RingSpec((1,)))) == 0


def test_build_cap(monkeypatch):
    with pytest.raises(GraphSizeError) as exc:
        build(RingSpec((3, 3)), cap=10)
    assert exc.value.vertex_count == 14
    monkeypatch.setenv("ANNIGRAPH_VERTEX_CAP", "5")
    with pytest.raises(GraphSizeError):
        build(RingSpec((2, 2)))
    assert len(build(RingSpec((4,)))) == 3


def test_bfs_oracle_graph_matches_closed():
    spec = RingSpec((3, 2, 1))
    assert np.array_equal(build(spec, oracle="bfs").distances, build(spec).distances)


def test_empty_and_singleton_graphs_are_total():
    for orders in [(1,), (2,)]:
        graph = build(RingSpec(orders))
        assert graph.distances.shape == (len(graph), len(graph))
        assert graph.diameter() == 0
        export(graph, "json")


def test_export_dot_k2():
    text = export(build(RingSpec((1, 1))), "dot").decode()
    assert text.count("[label=") == 2
    assert text.count("--") == 1
    assert 'label="(0,1)"' in text


def test_export_csv_path():
    text = export(build(RingSpec((4,))), "csv").decode()
    assert text.splitlines() == ["0,2", "1,2"]


def test_export_csv_rows_ordered():
    rows = list(csv.reader(io.StringIO(export(build(RingSpec((2, 2))), "csv").decode())))
    pairs = [(int(u), int(v)) for u, v in rows]
    assert all(u < v for u, v in pairs)
    assert pairs == sorted(pairs)


def test_export_json():
    assert json.loads(export(build(RingSpec((1,))), "json")) == {"spec": [1], "vertices": [], "edges": []}
    doc = json.loads(export(build(RingSpec((2, 1))), "json"))
    assert doc["vertices"] == [[0, 1], [1, 0], [1, 1], [2, 0]]
    assert doc["edges"] == [[0, 3], [1, 2], [2, 3]]


def test_export_unknown_format():
    with pytest.raises(DomainError):
        export(build(RingSpec((4,))), "gml")


def test_unreachable_sentinel():
    assert ag_graph.UNREACHABLE == -1


@pytest.mark.parametrize("orders", small_specs(50))
def test_bfs_matrix_matches_single_source_bfs(orders):
    graph = build(RingSpec(orders))
    D = bfs_matrix(graph)
    for i, a in enumerate(graph.vertices):
        for j, b in enumerate(graph.vertices):
            assert distance_bfs(graph, a, b) == D[i, j]
