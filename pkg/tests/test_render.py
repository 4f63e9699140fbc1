import xml.etree.ElementTree as ET

import numpy as np

from canonical_arcs.render import render_svg
from canonical_arcs.solver import build_configuration
from canonical_arcs.sphere import INF

NS = "{http://www.w3.org/2000/svg}"


def _parse(svg):
    root = ET.fromstring(svg.encode())
    assert root.tag == NS + "svg" and root.get("version") == "1.1"
    return root


def test_arc_through_infinity_is_split_and_marked(oracle_configs):
    c = oracle_configs[("lemniscatic", (1, 0))]
    root = _parse(render_svg(c, width=400))
    assert root.get("width") == root.get("height") == "400"
    lines = root.findall(NS + "polyline")
    assert len(lines) >= 2
    for pl in lines:
        xy = np.array([p.split(",") for p in pl.get("points").split()], float)
        assert np.all((xy >= -1e-9) & (xy <= 400 + 1e-9))
    # three finite marked points plus one open exit marker at the viewport edge
    circles = root.findall(NS + "circle")
    filled = [e for e in circles if e.get("fill") == "black"]
    open_ = [e for e in circles if e.get("fill") == "white"]
    assert len(filled) == 3 and len(open_) >= 1
    for e in open_:
        x, y = float(e.get("cx")), float(e.get("cy"))
        assert min(x, y, 400 - x, 400 - y) < 1e-6
    texts = "".join(t.text for t in root.findall(NS + "text"))
    assert "a0 = ∞" in texts and "pairing 01|23" in texts


def test_finite_configuration(oracle_configs):
    c = oracle_configs[("complex", (1, 2))]
    root = _parse(render_svg(c))
    assert len([e for e in root.findall(NS + "circle") if e.get("fill") == "black"]) == 4


def test_interior_infinity_sample():
    # for (0, 1, 2, 3) and class 1/1 the arc from 1 to 2 runs through infinity
    c = build_configuration((0, 1, 2, 3), (1, 1))
    assert INF in c.arc1.points
    root = _parse(render_svg(c, width=300))
    lines = root.findall(NS + "polyline")
    assert len(lines) >= 3
    for pl in lines:
        xy = np.array([p.split(",") for p in pl.get("points").split()], float)
        assert np.all((xy >= -1e-9) & (xy <= 300 + 1e-9))
    assert len([e for e in root.findall(NS + "circle") if e.get("fill") == "white"]) >= 2
