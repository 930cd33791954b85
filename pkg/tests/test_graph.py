"""Exact coloring, distance-graph construction, and forced-relation tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scavenger.graph import (
    AbstractGraph,
    Coloring,
    DistGraph,
    GROTZSCH_LABELS,
    H_LABELS,
    build_graph,
    chromatic_number,
    critical_reduce,
    forced_relations,
    grotzsch_graph,
    h_graph,
    is_proper,
    is_triangle_free,
    k_colorable,
    mod3_color,
)
from scavenger.qcore import QPoint3, dist_sq, parse_point, point


def brute_colorable(g: AbstractGraph, k: int) -> bool:
    """Exhaustive reference decision: scan all k^(n-1) assignments with the
    first vertex pinned (sound for a yes/no answer)."""
    n = g.order
    if n == 0:
        return True
    edges = sorted(g.edges)
    for rest in product(range(k), repeat=n - 1):
        assignment = (0,) + rest
        if all(assignment[u] != assignment[v] for u, v in edges):
            return True
    return False


def random_graph(rng: random.Random, n: int, p: float) -> AbstractGraph:
    pairs = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return AbstractGraph.from_edges(n, pairs)


# --- solver vs exhaustive reference ---------------------------------------------------


def test_solver_matches_exhaustive_reference():
    rng = random.Random(20260817)
    for trial in range(80):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
        k = rng.choice([2, 3, 4])
        got = k_colorable(g, k)
        want = brute_colorable(g, k)
        assert (got is not None) == want, f"trial {trial}: order {n}, k={k}"
        if got is not None:
            assert is_proper(g, got)
            assert got.color_count() <= k


def test_solver_edge_cases():
    empty = AbstractGraph.from_edges(0, [])
    assert k_colorable(empty, 1) == Coloring(())
    single = AbstractGraph.from_edges(1, [])
    assert k_colorable(single, 1) is not None
    k2 = AbstractGraph.from_edges(2, [(0, 1)])
    assert k_colorable(k2, 1) is None
    assert k_colorable(k2, 2) is not None
    with pytest.raises(ValueError):
        k_colorable(k2, 0)


def test_five_cycle_chromatic():
    c5 = AbstractGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert k_colorable(c5, 2) is None
    assert k_colorable(c5, 3) is not None
    assert chromatic_number(c5) == 3


def test_complete_graphs():
    for n in range(2, 7):
        kn = AbstractGraph.from_edges(n, combinations(range(n), 2))
        assert chromatic_number(kn) == n


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.randoms(use_true_random=False))
def test_coloring_reported_is_proper(n, rng):
    g = random_graph(rng, n, 0.5)
    coloring = k_colorable(g, 3)
    if coloring is not None:
        assert is_proper(g, coloring)
        assert max(coloring.assignment) <= 2


# --- named graphs ---------------------------------------------------------------------


def test_small_mycielskian_shape():
    g = grotzsch_graph()
    assert g.order == 11 == len(GROTZSCH_LABELS)
    assert len(g.edges) == 20
    degrees = sorted(len(a) for a in g.adjacency())
    assert degrees == [3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5]
    assert is_triangle_free(g)
    assert chromatic_number(g) == 4


def test_small_mycielskian_is_vertex_critical():
    g = grotzsch_graph()
    reduced = critical_reduce(g, 4)
    assert reduced.order == 11
    assert reduced.edges == g.edges


def test_hub_deleted_graph_shape():
    h = h_graph()
    assert h.order == 10 == len(H_LABELS)
    assert len(h.edges) == 17
    assert chromatic_number(h) == 3
    # h is the order-11 graph with one inner vertex removed; its neighbors there
    # were x1, x3, and z.
    g = grotzsch_graph()
    y2 = 7
    keep = [v for v in range(11) if v != y2]
    relabel = {v: i for i, v in enumerate(keep)}
    expected = frozenset(
        (min(relabel[u], relabel[v]), max(relabel[u], relabel[v]))
        for u, v in g.edges
        if y2 not in (u, v)
    )
    assert h.edges == expected


def test_forced_relations_of_hub_deleted_graph():
    h = h_graph()
    same, different = forced_relations(h, 3)
    x1, x2, x3 = 1, 2, 3
    z = H_LABELS.index("z")
    assert same == {(1, 8), (2, 9), (3, 5)}
    assert (x2, z) in same
    assert (x1, x3) in different
    # all three of x1, x3, z pairwise differ in every proper 3-coloring
    assert (x1, z) in different and (x3, z) in different


def test_forced_relations_bounds_and_errors():
    k4 = AbstractGraph.from_edges(4, combinations(range(4), 2))
    with pytest.raises(ValueError):
        forced_relations(k4, 3)  # admits no proper 3-coloring
    big = AbstractGraph.from_edges(21, [])
    with pytest.raises(ValueError):
        forced_relations(big, 2)


def test_forced_relations_versus_unrestricted_enumeration():
    # the symmetry-broken enumeration must agree with brute force over all
    # k^n assignments
    rng = random.Random(7)
    for _ in range(15):
        n = rng.randint(2, 6)
        g = random_graph(rng, n, 0.4)
        k = rng.choice([2, 3])
        if k_colorable(g, k) is None:
            continue
        edges = sorted(g.edges)
        same_ref = {(u, v): True for u in range(n) for v in range(u + 1, n)}
        diff_ref = {(u, v): True for u in range(n) for v in range(u + 1, n)}
        for assignment in product(range(k), repeat=n):
            if all(assignment[u] != assignment[v] for u, v in edges):
                for u in range(n):
                    for v in range(u + 1, n):
                        if assignment[u] == assignment[v]:
                            diff_ref[(u, v)] = False
                        else:
                            same_ref[(u, v)] = False
        same, different = forced_relations(g, k)
        assert same == {p for p, f in same_ref.items() if f}
        assert different == {p for p, f in diff_ref.items() if f}


# --- criticality ----------------------------------------------------------------------


def test_critical_reduce_strips_padding():
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(0, 5)]
    g = AbstractGraph.from_edges(7, edges)  # C5 + pendant + isolated vertex
    reduced = critical_reduce(g, 3)
    assert reduced.order == 5
    assert len(reduced.edges) == 5
    assert chromatic_number(reduced) == 3
    with pytest.raises(ValueError):
        critical_reduce(g, 4)


def test_critical_reduce_on_distance_graph():
    pts = [point(0, 0, 0), point(1, 0, 0), point(2, 0, 0), point(Fraction(1, 2), 1, 0)]
    g = build_graph(pts, 1)
    reduced = critical_reduce(g, 2)
    assert isinstance(reduced, DistGraph)
    assert reduced.order == 2
    assert reduced.t == 1


# --- distance graphs ------------------------------------------------------------------


def test_build_graph_exact_adjacency():
    pts = [parse_point(s) for s in ["0 0 0", "14/3 1/3 1/3", "19/3 -1/3 14/3", "6 0 0", "3 3 2"]]
    g = build_graph(pts, 22)
    assert g.edges == frozenset([(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)])
    for u, v in g.edges:
        assert dist_sq(g.vertices[u], g.vertices[v]) == 22
    non_edges = set(combinations(range(5), 2)) - set(g.edges)
    for u, v in non_edges:
        assert dist_sq(g.vertices[u], g.vertices[v]) != 22


def test_build_graph_deduplicates_preserving_order():
    pts = [point(0, 0, 0), point(1, 0, 0), point(0, 0, 0), point(2, 0, 0)]
    g = build_graph(pts, 1)
    assert g.duplicates_merged == 1
    assert g.vertices == (point(0, 0, 0), point(1, 0, 0), point(2, 0, 0))
    assert g.edges == frozenset([(0, 1), (1, 2)])


def test_build_graph_rejections():
    with pytest.raises(ValueError):
        build_graph([], 5)
    with pytest.raises(ValueError):
        build_graph([point(0, 0, 0)], 0)


def test_fractional_adjacency_is_exact():
    # (1/3)-scaled lattice: squared distances are multiples of 1/9; any
    # floating treatment of 22 = 198/9 would misclassify near misses
    a = point(0, 0, 0)
    b = point(Fraction(14, 3), Fraction(1, 3), Fraction(1, 3))
    assert dist_sq(a, b) == 22
    g = build_graph([a, b], 22)
    assert g.edges == frozenset([(0, 1)])


coord = st.integers(-3, 3)
point_triples = st.lists(
    st.tuples(coord, coord, coord), min_size=2, max_size=6, unique=True
)


@settings(max_examples=40, deadline=None)
@given(point_triples, st.sampled_from([1, 2, 3, 5, 9]))
def test_distance_graph_edges_rescan(triples, t):
    pts = [point(*tr) for tr in triples]
    g = build_graph(pts, t)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            assert ((i, j) in g.edges) == (dist_sq(pts[i], pts[j]) == t)


# --- abstract graph text format -------------------------------------------------------


def test_edge_list_roundtrip():
    g = grotzsch_graph()
    again = AbstractGraph.from_text(g.to_text())
    assert again == g


def test_edge_list_parsing():
    g = AbstractGraph.from_text("# a comment\n0 1\n1 2 # trailing\n\n")
    assert g.order == 3
    assert g.edges == frozenset([(0, 1), (1, 2)])
    for bad in ["0", "0 1 2", "0 a", "-1 2", "3 3"]:
        with pytest.raises(ValueError):
            AbstractGraph.from_text(bad)


def test_abstract_graph_validation():
    with pytest.raises(ValueError):
        AbstractGraph(2, frozenset([(0, 2)]))
    with pytest.raises(ValueError):
        AbstractGraph(2, frozenset([(1, 0)]))


# --- triangle freeness ----------------------------------------------------------------


def test_triangle_detection():
    tri = AbstractGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert not is_triangle_free(tri)
    path = AbstractGraph.from_edges(3, [(0, 1), (1, 2)])
    assert is_triangle_free(path)


# --- the lattice 3-coloring -----------------------------------------------------------


@pytest.mark.parametrize("d", [5, 11, 17, 23])
def test_lattice_coloring_separates_small_vectors(d):
    # x+y+z mod 3 splits every pair at squared distance 2d (d odd, d = 3m+2):
    # spot range here; the wide-range scan lives in the acceptance suite
    target = 2 * d
    vectors = [
        (a, b, c)
        for a in range(-7, 8)
        for b in range(-7, 8)
        for c in range(-7, 8)
        if a * a + b * b + c * c == target
    ]
    assert vectors, f"no lattice vectors of squared length {target} in range"
    for v in vectors:
        assert sum(v) % 3 != 0
        assert mod3_color((0, 0, 0)) != mod3_color(v)


def test_lattice_coloring_rejects_fractional_points():
    assert mod3_color(point(1, 2, 3)) == 0
    assert mod3_color(point(1, 2, 4)) == 1
    with pytest.raises(ValueError):
        mod3_color(point(Fraction(1, 2), 0, 0))


def test_lattice_coloring_is_proper_on_a_patch():
    d = 5
    pts = [point(x, y, z) for x in range(4) for y in range(4) for z in range(4)]
    g = build_graph(pts, 2 * d)
    assert g.edges
    for u, v in g.edges:
        assert mod3_color(g.vertices[u]) != mod3_color(g.vertices[v])
