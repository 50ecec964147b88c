from __future__ import annotations

import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from sl3cycles.architecture.profiler import timing
from sl3cycles.enums import CellKind
from sl3cycles.model.apartment import (
    ApartmentVertex,
    Cell,
    Midpoint,
    SectorWindow,
    Vertex,
    WindowOverflow,
    chambers_on_edge,
    subdivide,
    vertex_sort_key,
)

log = logging.getLogger("morse")


def hhat_sq(vertex: ApartmentVertex) -> int:
    """Squared distance to the standard vertex, up to the factor 1/2 dropped everywhere."""
    return vertex.norm_sq


@dataclass(frozen=True, order=True)
class HeightKey:
    """Ordering key of a vertex. A midpoint sits just above the endpoints of its edge."""

    qsq: int
    tie: int


def height_key(vertex: Vertex) -> HeightKey:
    if isinstance(vertex, Midpoint):
        return HeightKey(hhat_sq(vertex.a), 1)
    return HeightKey(hhat_sq(vertex), 0)


def sector_representative(vertex: Vertex) -> Vertex:
    """Image in the sector under the Weyl group fixing the standard vertex."""
    if isinstance(vertex, Midpoint):
        # one permutation for both endpoints, sorted by the first and then the second
        first, second = vertex.a.exponents, vertex.b.exponents
        order = sorted(range(3), key=lambda k: (-first[k], -second[k]))
        a = _normalize(tuple(first[k] for k in order))
        b = _normalize(tuple(second[k] for k in order))
        return Midpoint.of(a, b)

    largest, middle, smallest = sorted(vertex.exponents, reverse=True)
    return ApartmentVertex(largest - smallest, middle - smallest)


def _normalize(d: tuple[int, int, int]) -> ApartmentVertex:
    return ApartmentVertex(d[0] - d[2], d[1] - d[2])


@dataclass(frozen=True, eq=False)
class MorseTable:
    """Discrete height h on the subdivided window; other vertices resolve through the sector."""

    i_max: int
    values: Mapping[Vertex, int]

    @property
    def window(self) -> SectorWindow:
        return SectorWindow(self.i_max)

    def h(self, vertex: Vertex) -> int:
        value = self.values.get(vertex)
        if value is not None:
            return value

        value = self.values.get(sector_representative(vertex))
        if value is None:
            raise WindowOverflow(f"{vertex} has no height in the window i <= {self.i_max}")
        return value

    def __contains__(self, vertex: Vertex) -> bool:
        return vertex in self.values

    def with_value(self, vertex: Vertex, value: int) -> MorseTable:
        values = dict(self.values)
        values[vertex] = value
        return MorseTable(self.i_max, MappingProxyType(values))

    def items(self) -> list[tuple[Vertex, int]]:
        return sorted(self.values.items(), key=lambda item: (item[1], vertex_sort_key(item[0])))


def subdivided_cells(window: SectorWindow) -> list[Cell]:
    two_cells = [subdivide(chamber) for chamber in window.chambers()]
    one_cells = {edge for cell in two_cells for edge in cell.edges()}
    zero_cells = {Cell.point(v) for cell in two_cells for v in cell.vertices}
    if not two_cells:
        zero_cells = {Cell.point(v) for v in window.vertices()}
    return sorted(zero_cells, key=_cell_key) + sorted(one_cells, key=_cell_key) + two_cells


def _cell_key(cell: Cell) -> list:
    return [vertex_sort_key(v) for v in cell.vertices]


def flat_edges(window: SectorWindow) -> list[Cell]:
    """Edges of constant height whose two sector chambers both lie in the window."""
    found = []
    for edge in window.edges():
        first, second = edge.vertices
        if hhat_sq(first) != hhat_sq(second):
            continue
        chambers = [
            c for c in chambers_on_edge(first, second) if all(v in window for v in c.vertices)
        ]
        if len(chambers) == 2:
            found.append(edge)

    log.debug("Found %d flat edges below i = %d", len(found), window.i_max)
    return found


@timing
def morse_table(window: SectorWindow) -> MorseTable:
    vertices: list[Vertex] = list(window.vertices()) + list(window.midpoints())
    keys = {vertex: height_key(vertex) for vertex in vertices}
    ranks = {key: rank for rank, key in enumerate(sorted(set(keys.values())))}
    values = {vertex: ranks[key] for vertex, key in keys.items()}
    return MorseTable(window.i_max, MappingProxyType(values))


def is_morse(table: MorseTable) -> bool:
    """h is non-constant on every 1-cell and has a unique maximum on every 2-cell."""
    for cell in subdivided_cells(table.window):
        if cell.dimension == 0:
            continue

        try:
            heights = sorted((table.h(v) for v in cell.vertices), reverse=True)
        except WindowOverflow:
            log.debug("No height for a vertex of %s", cell)
            return False

        if cell.kind == CellKind.EDGE and heights[0] == heights[1]:
            log.debug("Height is constant on %s", cell)
            return False
        if cell.dimension == 2 and heights[0] == heights[1]:
            log.debug("Maximum of %s is not unique", cell)
            return False
    return True
