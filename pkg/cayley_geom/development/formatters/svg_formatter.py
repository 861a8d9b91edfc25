import sys
from typing import Dict, List, TextIO, Tuple

import numpy as np
from lxml import etree

from cayley_geom.numeric import Backend
from ..development import Development, Node, Edge, Defect
from ..development_exception import DevelopmentException
from ..development_visitor import DevelopmentVisitor

SVG_NAMESPACE = "http://www.w3.org/2000/svg"
SVG_NS = {None: SVG_NAMESPACE}
UNIT = 40
MARGIN = 40
PRIMES = "′″‴"


def svg_ns(tag: str) -> str:
    return f"{{{SVG_NAMESPACE}}}{tag}"


def _number(value: float) -> str:
    return f"{value:.2f}".rstrip("0").rstrip(".")


def prime_label(label: str, count: int) -> str:
    if count == 0:
        return label
    if count <= len(PRIMES):
        return label + PRIMES[count - 1]
    return f"{label}({count})"


class SvgFormatter(DevelopmentVisitor):
    """
    Draws a development projected on two tangent-space axes: solid black lattice arrows,
    dashed red defect vectors, 40px per unit. Nodes are labelled with their group element,
    primed for every further distinct image of the same element.
    """

    def __init__(self, development: Development, out: TextIO = sys.stdout, projection: Tuple[int, int] = (0, 1)):
        n = development.lattice.n
        a, b = projection
        if a == b or not (0 <= a < n and 0 <= b < n):
            raise DevelopmentException(f"unknown projection {a},{b} for a {n}-dimensional development")
        self._development = development
        self._out = out
        self._projection = (a, b)
        self._labels: Dict[Tuple[float, float], str] = {}
        self._images: Dict[int, List[Tuple[float, float]]] = {}
        self._points: List[Tuple[float, float]] = []
        self._lines: List[Tuple[str, Tuple[float, float], Tuple[float, float], str]] = []

    def _project(self, vector: np.ndarray) -> Tuple[float, float]:
        values = Backend.FLOAT.convert(vector)
        a, b = self._projection
        return round(float(values[a]) * UNIT, 6) + 0.0, round(-float(values[b]) * UNIT, 6) + 0.0

    def visit_node(self, node: Node) -> bool:
        point = self._project(node.position)
        images = self._images.setdefault(node.site, [])
        if point not in images:
            images.append(point)
            label = prime_label(self._development.lattice.site_label(node.site), len(images) - 1)
            if point in self._labels:
                self._labels[point] += f", {label}"
            else:
                self._labels[point] = label
        self._points.append(point)
        return True

    def visit_edge(self, edge: Edge) -> bool:
        start = self._project(self._development.position(edge.source))
        end = self._project(self._development.position(edge.target))
        if start != end:
            self._lines.append(("edge", start, end, self._development.lattice.arrow_label(edge.arrow)))
        return True

    def visit_defect(self, defect: Defect) -> bool:
        if Backend.of(defect.vector).is_zero(defect.vector):
            return True
        start = self._project(defect.origin)
        end = self._project(defect.origin + defect.vector)
        self._points.extend([start, end])
        if start != end:
            self._lines.append(("defect", start, end, defect.type))
        return True

    def _marker(self, defs: etree._Element, marker_id: str, colour: str):
        marker = etree.SubElement(defs, svg_ns("marker"),
                                  {"id": marker_id, "orient": "auto", "markerWidth": "8", "markerHeight": "8",
                                   "refX": "8", "refY": "4", "markerUnits": "userSpaceOnUse"})
        etree.SubElement(marker, svg_ns("path"), {"d": "M0,0 L8,4 L0,8 z", "fill": colour})

    def document(self) -> etree._ElementTree:
        xs = [p[0] for p in self._points]
        ys = [p[1] for p in self._points]
        left, top = min(xs) - MARGIN, min(ys) - MARGIN
        width, height = max(xs) - min(xs) + 2 * MARGIN, max(ys) - min(ys) + 2 * MARGIN
        root = etree.Element(svg_ns("svg"), nsmap=SVG_NS)
        root.set("width", _number(width))
        root.set("height", _number(height))
        root.set("viewBox", " ".join(_number(v) for v in (left, top, width, height)))
        defs = etree.SubElement(root, svg_ns("defs"))
        self._marker(defs, "arrow", "black")
        self._marker(defs, "defect", "red")

        edges = etree.SubElement(root, svg_ns("g"), {"id": "edges", "stroke": "black", "stroke-width": "1.5"})
        defects = etree.SubElement(root, svg_ns("g"), {"id": "defects", "stroke": "red", "stroke-width": "1",
                                                       "stroke-dasharray": "4 3"})
        for kind, start, end, title in self._lines:
            parent, marker = (edges, "arrow") if kind == "edge" else (defects, "defect")
            line = etree.SubElement(parent, svg_ns("line"),
                                    {"x1": _number(start[0]), "y1": _number(start[1]),
                                     "x2": _number(end[0]), "y2": _number(end[1]),
                                     "marker-end": f"url(#{marker})"})
            etree.SubElement(line, svg_ns("title")).text = title

        nodes = etree.SubElement(root, svg_ns("g"), {"id": "nodes"})
        for (x, y), label in self._labels.items():
            etree.SubElement(nodes, svg_ns("circle"), {"cx": _number(x), "cy": _number(y), "r": "3", "fill": "black"})
            text = etree.SubElement(nodes, svg_ns("text"), {"x": _number(x + 5), "y": _number(y - 5),
                                                            "font-size": "12", "font-family": "serif"})
            text.text = label
        return etree.ElementTree(root)

    def finalize(self):
        self._out.write(etree.tostring(self.document(), pretty_print=True, encoding="unicode"))
