from fractions import Fraction

import pytest

from sl3cycles.control.links import (
    DescentFailed,
    act_on_edge,
    apartment_desc_link_connected,
    descending_link,
    descending_path,
    descending_star,
    descending_two_cells,
    link_graph_connected,
    quotient_descending_link,
    star_meets_midpoint,
)
from sl3cycles.model.apartment import (
    X0,
    ApartmentVertex,
    Cell,
    SectorWindow,
    chambers_above_below_eta,
    eta,
    subdivide,
    y,
    z,
)
from sl3cycles.model.chains import QuotientLinkEdge
from sl3cycles.model.poly import T
from sl3cycles.model.unipotent import Unipotent

V = ApartmentVertex


def test_standard_vertex_has_empty_descending_link(small_table):
    assert descending_link(X0, small_table).is_empty()
    assert descending_link(X0, small_table, apartment=True).is_empty()
    assert not apartment_desc_link_connected(X0, small_table)


def test_descending_link_of_first_flat_vertex_is_the_standard_vertex(small_table):
    lower = descending_link(V(1, 0), small_table, apartment=True)
    assert lower.vertices == {X0}
    assert not lower.edges
    assert lower.is_connected()


def test_descending_link_of_midpoint_is_a_path_of_two_edges(table):
    for n in range(8):
        a, b = eta(n).vertices
        lower = descending_link(y(n), table, apartment=True)
        assert len(lower.edges) == 2
        assert lower.vertices == {a, b, z(n)}
        assert lower.is_connected()


def test_descending_star_of_midpoint_is_the_lower_chamber(table):
    for n in range(8):
        _, below = chambers_above_below_eta(n)
        two_cells = {cell for cell in descending_star(y(n), table) if cell.dimension == 2}
        assert two_cells == {subdivide(below)}


def test_apartment_descending_links_are_connected(table):
    window = SectorWindow(12)
    for vertex in window.vertices() + window.midpoints():
        if vertex == X0:
            continue
        lower = descending_link(vertex, table, apartment=True)
        assert lower.is_connected(), vertex
        assert len(lower.edges) <= 2, vertex


def test_star_meets_midpoint_only_near_flat_edges(table):
    assert star_meets_midpoint(z(3), table, apartment=True)
    assert all(star_meets_midpoint(v, table, apartment=True) for v in eta(2).vertices)
    assert not star_meets_midpoint(V(3, 0), table, apartment=True)


def test_vertices_next_to_a_midpoint_have_at_most_one_descending_two_cell(table):
    window = SectorWindow(12)
    checked = [
        vertex
        for vertex in window.vertices()
        if vertex != X0 and star_meets_midpoint(vertex, table, apartment=True)
    ]
    assert {z(n) for n in range(1, 6)} <= set(checked)

    for vertex in checked:
        assert len(descending_two_cells(vertex, table, apartment=True)) <= 1, vertex


def test_sector_link_is_smaller_than_apartment_link(small_table):
    sector = descending_link(V(3, 0), small_table)
    apartment = descending_link(V(3, 0), small_table, apartment=True)
    assert sector.cells <= apartment.cells


def test_link_graph_connectivity():
    a, b, c = V(1, 0), V(1, 1), V(2, 1)
    assert link_graph_connected([a, b], [Cell.edge(a, b)])
    assert not link_graph_connected([a, b, c], [Cell.edge(a, b)])
    assert not link_graph_connected([], [])
    assert link_graph_connected([c], [])


def test_standard_vertex_needs_no_descent(small_table):
    assert descending_path(X0, small_table) == []


def test_descent_into_base_chamber(small_table):
    assert descending_path(V(2, 1), small_table) == [V(1, 0)]
    assert descending_path(y(0), small_table) == [V(1, 0)]


def test_descending_paths_strictly_descend(small_table):
    for vertex in SectorWindow(8).vertices():
        path = descending_path(vertex, small_table)
        heights = [small_table.h(vertex)] + [small_table.h(step) for step in path]
        assert all(a > b for a, b in zip(heights, heights[1:]))


def test_descent_fails_at_a_planted_local_minimum(small_table):
    planted = small_table.with_value(V(2, 1), 0)
    with pytest.raises(DescentFailed):
        descending_path(V(2, 1), planted)


def test_unipotent_shifts_quotient_edges():
    u = Unipotent.e12(3 * T**2 + T) * Unipotent.e23(5 * T**2)
    edge = QuotientLinkEdge(Fraction(1), Fraction(-1))
    assert act_on_edge(u, edge, 2) == QuotientLinkEdge(Fraction(4), Fraction(4))
    assert act_on_edge(u, edge, 1) == QuotientLinkEdge(Fraction(2), Fraction(-1))


def test_quotient_link_is_complete_bipartite():
    sample = [0, 1, 2, Fraction(1, 2), -1, 3]
    for n in range(4):
        edges = quotient_descending_link(n, sample)
        assert len(edges) == 36
        assert {edge.q for edge in edges} == {Fraction(v) for v in sample}
