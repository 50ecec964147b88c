from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from sl3cycles.enums import BoundaryClass, CellKind

log = logging.getLogger("apartment")


class NotInSector(Exception):
    pass


class WindowOverflow(Exception):
    pass


@dataclass(frozen=True, order=True)
class ApartmentVertex:
    """Homothety class of the lattice with exponent triple (i, j, 0)."""

    i: int
    j: int

    @classmethod
    def in_sector(cls, i: int, j: int) -> ApartmentVertex:
        vertex = cls(i, j)
        if not sector_contains(vertex):
            raise NotInSector(f"({i}, {j}) is not in the sector i >= j >= 0")
        return vertex

    @property
    def exponents(self) -> tuple[int, int, int]:
        return self.i, self.j, 0

    @property
    def norm_sq(self) -> int:
        """i^2 - ij + j^2: squared distance to the standard vertex, up to a factor 1/2."""
        return self.i * self.i - self.i * self.j + self.j * self.j

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


SectorVertex = ApartmentVertex


@dataclass(frozen=True)
class Midpoint:
    """Vertex inserted on a height-flat edge. Endpoints are stored in order."""

    a: ApartmentVertex
    b: ApartmentVertex

    @classmethod
    def of(cls, first: ApartmentVertex, second: ApartmentVertex) -> Midpoint:
        low, high = sorted((first, second))
        return cls(low, high)

    def __str__(self) -> str:
        return f"mid[{self.a},{self.b}]"


Vertex = Union[ApartmentVertex, Midpoint]

X0 = ApartmentVertex(0, 0)


def vertex_sort_key(vertex: Vertex) -> tuple:
    if isinstance(vertex, Midpoint):
        return 1, vertex.a.i, vertex.a.j, vertex.b.i, vertex.b.j
    return 0, vertex.i, vertex.j


@dataclass(frozen=True)
class Cell:
    kind: CellKind
    vertices: tuple[Vertex, ...]

    @classmethod
    def point(cls, vertex: Vertex) -> Cell:
        kind = CellKind.MIDPOINT if isinstance(vertex, Midpoint) else CellKind.VERTEX
        return cls(kind, (vertex,))

    @classmethod
    def edge(cls, first: Vertex, second: Vertex) -> Cell:
        if first == second:
            raise ValueError(f"degenerate edge at {first}")
        return cls(CellKind.EDGE, tuple(sorted((first, second), key=vertex_sort_key)))

    @classmethod
    def chamber(
        cls, first: ApartmentVertex, second: ApartmentVertex, third: ApartmentVertex
    ) -> Cell:
        return cls(CellKind.CHAMBER, tuple(sorted((first, second, third))))

    @property
    def dimension(self) -> int:
        if self.kind in (CellKind.VERTEX, CellKind.MIDPOINT):
            return 0
        if self.kind == CellKind.EDGE:
            return 1
        return 2

    @property
    def midpoint(self) -> Optional[Midpoint]:
        return next((v for v in self.vertices if isinstance(v, Midpoint)), None)

    @property
    def original_vertices(self) -> tuple[ApartmentVertex, ...]:
        """Apartment vertices of the cell; a midpoint contributes its endpoints."""
        found = set()
        for vertex in self.vertices:
            if isinstance(vertex, Midpoint):
                found.update((vertex.a, vertex.b))
            else:
                found.add(vertex)
        return tuple(sorted(found))

    def boundary_cycle(self) -> tuple[Vertex, ...]:
        """Vertices of a 2-cell in cyclic order."""
        if self.kind == CellKind.CHAMBER:
            return self.vertices

        if self.kind == CellKind.SUBDIVIDED_CHAMBER:
            middle = self.midpoint
            third = next(v for v in self.vertices if v not in (middle, middle.a, middle.b))
            return third, middle.a, middle, middle.b

        raise ValueError(f"{self.kind} has no boundary cycle")

    def edges(self) -> tuple[Cell, ...]:
        if self.dimension < 2:
            return ()
        cycle = self.boundary_cycle()
        return tuple(Cell.edge(cycle[k], cycle[(k + 1) % len(cycle)]) for k in range(len(cycle)))

    def faces(self) -> tuple[Cell, ...]:
        """Cells of codimension one."""
        if self.dimension == 2:
            return self.edges()
        if self.dimension == 1:
            return tuple(Cell.point(v) for v in self.vertices)
        return ()

    def __contains__(self, vertex) -> bool:
        return vertex in self.vertices

    def __str__(self) -> str:
        return f"{self.kind.name.lower()}{{{', '.join(str(v) for v in self.vertices)}}}"


@dataclass(frozen=True)
class SectorWindow:
    """The part of the sector with i <= i_max."""

    i_max: int

    def __contains__(self, vertex: Vertex) -> bool:
        if isinstance(vertex, Midpoint):
            return vertex.a in self and vertex.b in self
        return sector_contains(vertex) and vertex.i <= self.i_max

    def contains_cell(self, cell: Cell) -> bool:
        return all(vertex in self for vertex in cell.original_vertices)

    def vertices(self) -> list[ApartmentVertex]:
        return [ApartmentVertex(i, j) for i in range(self.i_max + 1) for j in range(i + 1)]

    def chambers(self) -> list[Cell]:
        chambers = []
        for i in range(self.i_max):
            for j in range(i + 1):
                corner, across = ApartmentVertex(i, j), ApartmentVertex(i + 1, j + 1)
                chambers.append(Cell.chamber(corner, ApartmentVertex(i + 1, j), across))
                if j < i:
                    chambers.append(Cell.chamber(corner, ApartmentVertex(i, j + 1), across))
        return chambers

    def edges(self) -> list[Cell]:
        edges = {edge for chamber in self.chambers() for edge in chamber.edges()}
        return sorted(edges, key=lambda e: [vertex_sort_key(v) for v in e.vertices])

    def midpoints(self) -> list[Midpoint]:
        """Midpoints of every flat edge with both endpoints in the window."""
        return [y(n) for n in range((self.i_max - 1) // 2 + 1) if 2 * n + 1 <= self.i_max]


# Hexagonal order around a vertex.
NEIGHBOUR_STEPS = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))

WEYL_GROUP = tuple(itertools.permutations(range(3)))


def sector_contains(vertex: Vertex) -> bool:
    if isinstance(vertex, Midpoint):
        return sector_contains(vertex.a) and sector_contains(vertex.b)
    return vertex.i >= vertex.j >= 0


def boundary_class(vertex: ApartmentVertex) -> BoundaryClass:
    if not sector_contains(vertex):
        raise NotInSector(f"{vertex} is not in the sector")
    if vertex == X0:
        return BoundaryClass.STANDARD
    if vertex.j == 0:
        return BoundaryClass.BOUNDARY_J0
    if vertex.i == vertex.j:
        return BoundaryClass.BOUNDARY_IJ
    return BoundaryClass.INTERIOR


def adjacent(first: ApartmentVertex, second: ApartmentVertex) -> bool:
    return (second.i - first.i, second.j - first.j) in NEIGHBOUR_STEPS


def lattice_adjacent(first: ApartmentVertex, second: ApartmentVertex) -> bool:
    """
    Adjacency read off lattice inclusion: some homothety shift of the second lattice
    lies between the first lattice L and t^-1 L, equal to neither.
    """
    reach = abs(first.i - second.i) + abs(first.j - second.j) + 2
    for shift in range(-reach, reach + 1):
        gaps = [d - (e + shift) for d, e in zip(first.exponents, second.exponents)]
        if all(gap in (0, 1) for gap in gaps) and len(set(gaps)) == 2:
            return True
    return False


def apartment_neighbours(vertex: ApartmentVertex) -> list[ApartmentVertex]:
    return [ApartmentVertex(vertex.i + di, vertex.j + dj) for di, dj in NEIGHBOUR_STEPS]


def weyl_act(permutation: tuple[int, int, int], vertex: ApartmentVertex) -> ApartmentVertex:
    d = vertex.exponents
    permuted = (d[permutation[0]], d[permutation[1]], d[permutation[2]])
    return ApartmentVertex(permuted[0] - permuted[2], permuted[1] - permuted[2])


def eta_endpoints(n: int) -> tuple[ApartmentVertex, ApartmentVertex]:
    if n < 0:
        raise ValueError(f"no flat edge with index {n}")
    return ApartmentVertex(2 * n + 1, n), ApartmentVertex(2 * n + 1, n + 1)


def eta(n: int) -> Cell:
    return Cell.edge(*eta_endpoints(n))


def y(n: int) -> Midpoint:
    return Midpoint.of(*eta_endpoints(n))


def z(n: int) -> ApartmentVertex:
    if n < 0:
        raise ValueError(f"no vertex z with index {n}")
    return ApartmentVertex(2 * n, n)


def flat_edge_index(first: ApartmentVertex, second: ApartmentVertex) -> Optional[int]:
    """n when the edge is a Weyl image of the n-th flat edge through the sector, else None."""
    if not adjacent(first, second):
        return None

    for permutation in WEYL_GROUP:
        low, high = sorted((weyl_act(permutation, first), weyl_act(permutation, second)))
        n = low.j
        if n >= 0 and (low, high) == eta_endpoints(n):
            return n
    return None


def midpoint_index(midpoint: Midpoint) -> int:
    n = flat_edge_index(midpoint.a, midpoint.b)
    if n is None:
        raise ValueError(f"{midpoint} does not sit on a flat edge")
    return n


def apartment_chambers(vertex: ApartmentVertex) -> list[Cell]:
    """The six chambers of the apartment around the vertex, in hexagonal order."""
    ring = apartment_neighbours(vertex)
    return [Cell.chamber(vertex, ring[k], ring[(k + 1) % 6]) for k in range(6)]


def chambers_on_edge(first: ApartmentVertex, second: ApartmentVertex) -> list[Cell]:
    return [chamber for chamber in apartment_chambers(first) if second in chamber]


def subdivide(chamber: Cell) -> Cell:
    """A chamber with a flat edge becomes one 2-cell with the midpoint on that edge."""
    if chamber.kind != CellKind.CHAMBER:
        return chamber

    for edge in chamber.edges():
        first, second = edge.vertices
        if flat_edge_index(first, second) is not None:
            midpoint = Midpoint.of(first, second)
            return Cell(CellKind.SUBDIVIDED_CHAMBER, chamber.vertices + (midpoint,))
    return chamber


def chambers_above_below_eta(n: int) -> tuple[Cell, Cell]:
    """
    (above, below): the two sector chambers on the n-th flat edge, told apart by
    the height of their third vertex.
    """
    first, second = eta_endpoints(n)
    chambers = chambers_on_edge(first, second)

    def third(chamber: Cell) -> ApartmentVertex:
        return next(v for v in chamber.vertices if v not in (first, second))

    below, above = sorted(chambers, key=lambda chamber: third(chamber).norm_sq)
    return above, below


def base_edge(n: int) -> Cell:
    if n < 1:
        raise ValueError("the base chamber at the standard vertex has no link edge")
    return eta(n - 1)


def base_chamber(n: int) -> Cell:
    """
    The chamber of the descending star of z_n in the apartment, subdivided.
    For n = 0 this degenerates to the standard vertex.
    """
    if n == 0:
        return Cell.point(X0)
    above, _ = chambers_above_below_eta(n - 1)
    return subdivide(above)


def two_cells(
    vertex: Vertex, window: Optional[SectorWindow] = None, apartment: bool = False
) -> list[Cell]:
    """
    2-cells containing the vertex in the subdivided sector, or in the subdivided
    apartment when apartment is set. A window bounds the sector computation.
    """
    if isinstance(vertex, Midpoint):
        midpoint_index(vertex)
        chambers = chambers_on_edge(vertex.a, vertex.b)
    else:
        chambers = apartment_chambers(vertex)

    if not apartment:
        if not sector_contains(vertex):
            raise NotInSector(f"{vertex} is not in the sector")
        chambers = [c for c in chambers if all(sector_contains(v) for v in c.vertices)]
        if window is not None:
            outside = [chamber for chamber in chambers if not window.contains_cell(chamber)]
            if outside:
                raise WindowOverflow(f"star of {vertex} leaves the window i <= {window.i_max}")

    cells = [subdivide(chamber) for chamber in chambers]
    return [cell for cell in cells if vertex in cell.vertices]


def star(
    vertex: Vertex, window: Optional[SectorWindow] = None, apartment: bool = False
) -> frozenset[Cell]:
    cells = {Cell.point(vertex)}
    for cell in two_cells(vertex, window, apartment):
        cells.add(cell)
        cells.update(edge for edge in cell.edges() if vertex in edge)
    return frozenset(cells)


def link(
    vertex: Vertex, window: Optional[SectorWindow] = None, apartment: bool = False
) -> frozenset[Cell]:
    """Faces of star cells that miss the vertex: link edges and link vertices."""
    cells = set()
    for cell in star(vertex, window, apartment):
        if cell.dimension == 0:
            continue
        for face in cell.faces():
            if vertex not in face:
                cells.add(face)
                cells.update(Cell.point(v) for v in face.vertices)
    return frozenset(cells)


def neighbours(
    vertex: Vertex, window: Optional[SectorWindow] = None, apartment: bool = False
) -> list[Vertex]:
    """Vertices joined to the vertex by an edge of the subdivided complex."""
    found = set()
    for cell in star(vertex, window, apartment):
        if cell.kind == CellKind.EDGE:
            found.update(v for v in cell.vertices if v != vertex)
    return sorted(found, key=vertex_sort_key)


def link_vertices(cells: Iterable[Cell]) -> frozenset[Vertex]:
    return frozenset(v for cell in cells for v in cell.vertices)
