import math
import xml.etree.ElementTree as ElementTree

from sl3cycles.control.morse import flat_edges
from sl3cycles.model.apartment import X0, ApartmentVertex, SectorWindow, eta, y
from sl3cycles.ui.svg_renderer import edge_label, parse_edge_label, position, render_sector

SVG = "{http://www.w3.org/2000/svg}"

V = ApartmentVertex


def _parse(document: str) -> ElementTree.Element:
    return ElementTree.fromstring(document.encode())


def test_chambers_are_equilateral():
    corners = [position(X0), position(V(1, 0)), position(V(1, 1))]
    sides = [math.dist(corners[k], corners[(k + 1) % 3]) for k in range(3)]
    assert all(math.isclose(side, 40.0) for side in sides)


def test_distance_to_origin_follows_the_height():
    assert math.isclose(math.dist(position(X0), position(V(3, 1))) ** 2, 7 * 40.0**2)


def test_midpoint_is_drawn_between_its_endpoints():
    (ax, ay), (bx, by) = position(V(1, 0)), position(V(1, 1))
    assert position(y(0)) == ((ax + bx) / 2, (ay + by) / 2)


def test_highlighted_edges_are_the_flat_edges(small_table):
    window = SectorWindow(9)
    document = _parse(render_sector(window, table=small_table))
    highlighted = {
        parse_edge_label(line.get("data-edge"))
        for line in document.iter(f"{SVG}line")
        if line.get("class") == "flat"
    }
    assert highlighted == set(flat_edges(window))


def test_every_vertex_and_midpoint_is_marked():
    document = _parse(render_sector(SectorWindow(9)))
    circles = [circle.get("class") for circle in document.iter(f"{SVG}circle")]
    assert circles.count("vertex") == 55
    assert circles.count("midpoint") == 5
    assert len(list(document.iter(f"{SVG}text"))) == 60


def test_midpoints_are_labelled_with_their_height(small_table):
    document = _parse(render_sector(SectorWindow(9), table=small_table))
    labels = {text.get("data-vertex"): text for text in document.iter(f"{SVG}text")}

    for n in range(5):
        label = labels[str(y(n))]
        assert label.text == str(small_table.h(y(n)))
        assert label.get("data-key") == f"{y(n).a.norm_sq}+1"
    assert labels["(3,1)"].get("data-key") == "7+0"


def test_empty_window_is_still_a_document():
    document = _parse(render_sector(SectorWindow(-1)))
    assert list(document.iter(f"{SVG}line")) == []
    assert document.get("width") == "0.00"


def test_drawing_is_written_to_file(tmp_path):
    output = tmp_path / "sector.svg"
    document = render_sector(SectorWindow(3), output)
    assert output.read_text() == document


def test_edge_labels_parse_back():
    edge = eta(1)
    assert edge_label(edge) == "3,1;3,2"
    assert parse_edge_label(edge_label(edge)) == edge
