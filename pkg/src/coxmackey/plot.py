"""SVG drawing of a rank-2 arrangement with one label per cell."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

from .arrangement import arrangement_of
from .linalg import primitive

SIZE = 480
RADIUS = 200


def _unit(v):
    x, y = float(v[0]), float(v[1])
    n = math.hypot(x, y)
    return (x / n, y / n) if n else (0.0, 0.0)


def _screen(p, scale):
    # y axis points up in the drawing
    return SIZE / 2 + scale * p[0], SIZE / 2 - scale * p[1]


def arrangement_svg(spec) -> str:
    if spec.r != 2:
        raise ValueError(f"plotting needs rank_t = 2, got {spec.r}")
    arr = arrangement_of(spec)
    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg", "version": "1.1",
        "width": str(SIZE), "height": str(SIZE), "viewBox": f"0 0 {SIZE} {SIZE}",
    })
    ET.SubElement(svg, "title").text = f"Coxeter complex of {spec.name}"
    ET.SubElement(svg, "rect", {"width": str(SIZE), "height": str(SIZE), "fill": "white"})
    for a in arr.normals:
        d = _unit((-a[1], a[0]))
        x1, y1 = _screen((-d[0], -d[1]), RADIUS)
        x2, y2 = _screen(d, RADIUS)
        ET.SubElement(svg, "line", {
            "class": "hyperplane", "x1": f"{x1:.2f}", "y1": f"{y1:.2f}",
            "x2": f"{x2:.2f}", "y2": f"{y2:.2f}", "stroke": "black", "stroke-width": "1.5",
        })
    cells = arr.cells()
    rays = [c for c in cells if arr.span_flat(c).dim == 1]
    for c in cells:
        dim = arr.span_flat(c).dim
        if dim == 0:
            pos, scale = (0.0, 0.0), 0
        elif dim == 1:
            pos, scale = _unit(c.witness), RADIUS * 0.92
        else:
            # aim between the bounding rays so labels sit inside their sector
            bound = [_unit(r.witness) for r in rays if arr.cell_leq(c, r)]
            if len(bound) == 2:
                pos = _unit((bound[0][0] + bound[1][0], bound[0][1] + bound[1][1]))
                if pos == (0.0, 0.0):
                    pos = _unit(c.witness)
            else:
                pos = _unit(c.witness)
            scale = RADIUS * 0.62
        x, y = _screen(pos, scale)
        lab = "(" + ",".join(str(v) for v in primitive(c.witness)) + ")"
        ET.SubElement(svg, "text", {
            "class": "cell-label", "x": f"{x:.2f}", "y": f"{y + 4:.2f}",
            "font-family": "monospace", "font-size": "12", "text-anchor": "middle",
            "fill": "black" if dim == 2 else "#a00",
        }).text = lab
    return ET.tostring(svg, encoding="unicode", xml_declaration=False)


def write_svg(spec, path):
    text = arrangement_svg(spec)
    with open(path, "w") as fh:
        fh.write('<?xml version="1.0" encoding="UTF-8"?>\n')
        fh.write(text)
        fh.write("\n")
    return text
