from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from sl3cycles.control.morse import MorseTable
from sl3cycles.enums import CellKind
from sl3cycles.model.apartment import (
    X0,
    ApartmentVertex,
    Cell,
    Midpoint,
    SectorWindow,
    Vertex,
    link,
    neighbours,
    star,
    vertex_sort_key,
)
from sl3cycles.model.chains import QuotientLinkEdge
from sl3cycles.model.poly import Poly
from sl3cycles.model.unipotent import Unipotent

log = logging.getLogger("links")

BASE_CHAMBER_VERTICES = frozenset((X0, ApartmentVertex(1, 0), ApartmentVertex(1, 1)))


class DescentFailed(Exception):
    pass


@dataclass(frozen=True)
class DescendingLink:
    center: Vertex
    cells: frozenset[Cell]

    @property
    def vertices(self) -> frozenset[Vertex]:
        return frozenset(v for cell in self.cells for v in cell.vertices)

    @property
    def edges(self) -> frozenset[Cell]:
        return frozenset(cell for cell in self.cells if cell.kind == CellKind.EDGE)

    def is_empty(self) -> bool:
        return not self.cells

    def is_connected(self) -> bool:
        return link_graph_connected(self.vertices, self.edges)


def link_graph_connected(vertices: Iterable[Vertex], edges: Iterable[Cell]) -> bool:
    """Nonempty and connected."""
    vertices = set(vertices)
    if not vertices:
        return False

    adjacency = {v: set() for v in vertices}
    for edge in edges:
        first, second = edge.vertices
        adjacency[first].add(second)
        adjacency[second].add(first)

    start = min(vertices, key=vertex_sort_key)
    seen = {start}
    pending = [start]
    while pending:
        for other in adjacency[pending.pop()]:
            if other not in seen:
                seen.add(other)
                pending.append(other)
    return seen == vertices


def _window(
    table: MorseTable, window: Optional[SectorWindow], apartment: bool
) -> Optional[SectorWindow]:
    if apartment:
        return None
    return window if window is not None else table.window


def descending_star(
    vertex: Vertex,
    table: MorseTable,
    window: Optional[SectorWindow] = None,
    apartment: bool = False,
) -> frozenset[Cell]:
    """Positive dimensional star cells whose other vertices are all lower."""
    height = table.h(vertex)
    cells = star(vertex, _window(table, window, apartment), apartment)
    return frozenset(
        cell
        for cell in cells
        if cell.dimension > 0 and all(table.h(v) < height for v in cell.vertices if v != vertex)
    )


def descending_two_cells(
    vertex: Vertex,
    table: MorseTable,
    window: Optional[SectorWindow] = None,
    apartment: bool = False,
) -> frozenset[Cell]:
    return frozenset(
        cell for cell in descending_star(vertex, table, window, apartment) if cell.dimension == 2
    )


def star_meets_midpoint(
    vertex: Vertex,
    table: MorseTable,
    window: Optional[SectorWindow] = None,
    apartment: bool = False,
) -> bool:
    cells = star(vertex, _window(table, window, apartment), apartment)
    return any(isinstance(v, Midpoint) for cell in cells for v in cell.vertices if v != vertex)


def descending_link(
    vertex: Vertex,
    table: MorseTable,
    window: Optional[SectorWindow] = None,
    apartment: bool = False,
) -> DescendingLink:
    height = table.h(vertex)
    cells = link(vertex, _window(table, window, apartment), apartment)
    lower = frozenset(cell for cell in cells if all(table.h(v) < height for v in cell.vertices))
    return DescendingLink(vertex, lower)


def apartment_desc_link_connected(vertex: Vertex, table: MorseTable) -> bool:
    return descending_link(vertex, table, apartment=True).is_connected()


def descending_path(
    vertex: Vertex, table: MorseTable, window: Optional[SectorWindow] = None
) -> list[Vertex]:
    """
    Greedy walk through the subdivided sector to the base chamber, always stepping to the
    lowest neighbour, ties broken by vertex order. The start vertex is not included.
    """
    window = window if window is not None else table.window
    steps: list[Vertex] = []
    current = vertex
    while current not in BASE_CHAMBER_VERTICES:
        height = table.h(current)
        lower = [w for w in neighbours(current, window) if table.h(w) < height]
        if not lower:
            raise DescentFailed(f"no lower neighbour at {current}")

        current = min(lower, key=lambda w: (table.h(w), vertex_sort_key(w)))
        steps.append(current)

    log.debug("Descended from %s in %d steps", vertex, len(steps))
    return steps


def act_on_edge(u: Unipotent, edge: QuotientLinkEdge, n: int) -> QuotientLinkEdge:
    q, r = u.label(n)
    return QuotientLinkEdge(edge.q + q, edge.r + r)


def quotient_descending_link(n: int, sample: Iterable) -> frozenset[QuotientLinkEdge]:
    """Edges reached from the base edge by e12(a t^n) e23(b t^n) for a, b in the sample."""
    values = [Fraction(value) for value in sample]
    base = QuotientLinkEdge(Fraction(0), Fraction(0))
    edges = set()
    for a in values:
        for b in values:
            u = Unipotent.e12(Poly.monomial(a, n)) * Unipotent.e23(Poly.monomial(b, n))
            edges.add(act_on_edge(u, base, n))
    return frozenset(edges)
