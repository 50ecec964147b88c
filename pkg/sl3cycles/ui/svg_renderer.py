import logging
import math
from pathlib import Path
from typing import Optional
from xml.sax.saxutils import quoteattr

from sl3cycles.control.morse import MorseTable, flat_edges, height_key, morse_table
from sl3cycles.model.apartment import ApartmentVertex, Cell, Midpoint, SectorWindow, Vertex

log = logging.getLogger("svg")

SCALE = 40.0

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%(width).2f" height="%(height).2f" viewBox="%(min_x).2f %(min_y).2f %(width).2f %(height).2f">
<style>
.edge { stroke: #888888; stroke-width: 1.5; }
.flat { stroke: #c0392b; stroke-width: 4; }
.vertex { fill: #2c3e50; }
.midpoint { fill: #c0392b; }
.height { font-family: monospace; font-size: 10px; fill: #2c3e50; }
</style>
"""

POSTAMBLE = """\
</svg>
"""


def position(vertex: Vertex) -> tuple[float, float]:
    """
    Plane position with j measured along the direction at 120 degrees, so the
    chambers are equilateral and the distance to the origin is the height.
    """
    if isinstance(vertex, Midpoint):
        (ax, ay), (bx, by) = position(vertex.a), position(vertex.b)
        return (ax + bx) / 2, (ay + by) / 2

    x = (vertex.i - vertex.j / 2) * SCALE
    y = -(vertex.j * math.sqrt(3) / 2) * SCALE
    return x, y


def edge_label(edge: Cell) -> str:
    return ";".join(f"{v.i},{v.j}" for v in edge.vertices)


class SectorRenderer:
    def __init__(self):
        self.min_x = None
        self.max_x = None
        self.min_y = None
        self.max_y = None
        self.commands: list[str] = []

    def require(self, x: float, y: float):
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
        else:
            self.min_x = min(self.min_x, x)
            self.max_x = max(self.max_x, x)
            self.min_y = min(self.min_y, y)
            self.max_y = max(self.max_y, y)

    def line(self, first: Vertex, second: Vertex, css_class: str, data: Optional[str] = None):
        (x1, y1), (x2, y2) = position(first), position(second)
        self.require(x1, y1)
        self.require(x2, y2)
        extra = f" data-edge={quoteattr(data)}" if data else ""
        self.commands.append(
            f'<line class="{css_class}" x1="{x1:.2f}" y1="{y1:.2f}" '
            f'x2="{x2:.2f}" y2="{y2:.2f}"{extra}/>'
        )

    def circle(self, vertex: Vertex, radius: float, css_class: str):
        x, y = position(vertex)
        self.require(x - radius, y - radius)
        self.require(x + radius, y + radius)
        label = quoteattr(str(vertex))
        self.commands.append(
            f'<circle class="{css_class}" cx="{x:.2f}" cy="{y:.2f}" r="{radius:.2f}" '
            f"data-vertex={label}/>"
        )

    def text(self, vertex: Vertex, text: str):
        x, y = position(vertex)
        x, y = x + 5, y - 5
        self.require(x, y - 10)
        self.require(x + 8 * len(text), y)
        key = height_key(vertex)
        label = quoteattr(f"{key.qsq}+{key.tie}")
        attributes = f"data-vertex={quoteattr(str(vertex))} data-key={label}"
        self.commands.append(
            f'<text class="height" x="{x:.2f}" y="{y:.2f}" {attributes}>{text}</text>'
        )

    def to_string(self) -> str:
        if self.min_x is None:
            bounds = {"min_x": 0.0, "min_y": 0.0, "width": 0.0, "height": 0.0}
        else:
            pad = SCALE / 2
            bounds = {
                "min_x": self.min_x - pad,
                "min_y": self.min_y - pad,
                "width": self.max_x - self.min_x + 2 * pad,
                "height": self.max_y - self.min_y + 2 * pad,
            }
        return PREAMBLE % bounds + "".join(command + "\n" for command in self.commands) + POSTAMBLE


def render_sector(
    window: SectorWindow, output: Optional[Path] = None, table: Optional[MorseTable] = None
) -> str:
    """
    Draw the window with flat edges highlighted and midpoints marked. Every vertex,
    midpoints included, carries its height.
    Writes the document when an output path is given.
    """
    renderer = SectorRenderer()
    table = table if table is not None else morse_table(window)

    highlighted = set(flat_edges(window))
    for edge in window.edges():
        if edge not in highlighted:
            renderer.line(*edge.vertices, "edge")
    for edge in sorted(highlighted, key=edge_label):
        renderer.line(*edge.vertices, "flat", edge_label(edge))

    for midpoint in window.midpoints():
        renderer.circle(midpoint, 3, "midpoint")
        renderer.text(midpoint, str(table.h(midpoint)))
    for vertex in window.vertices():
        renderer.circle(vertex, 2.5, "vertex")
        renderer.text(vertex, str(table.h(vertex)))

    document = renderer.to_string()
    if output is not None:
        output.write_text(document)
        log.info("Wrote sector drawing for i <= %d to %s", window.i_max, output)
    return document


def parse_edge_label(label: str) -> Cell:
    first, second = (ApartmentVertex(*map(int, part.split(","))) for part in label.split(";"))
    return Cell.edge(first, second)
