"""
SVG export and import of full drawings.

Drawings are scaled into a square viewport with the y-axis flipped. The
affine map is recorded in a comment and every element carries its exact
screen coordinates as rationals, so ``parse_svg_drawing`` recovers the
drawing without rounding.
"""

import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .config import DrawConfig
from .core.geometry import Point
from .core.graph import Edge
from .core.io import edge_key, parse_edge_key
from .core.model import FullDrawing, Route, UpeInstance
from .exceptions import InstanceValidationError, ValidationReason

SVG_NS = "http://www.w3.org/2000/svg"
AFFINE_TAG = "upex-affine"

EDGE_STYLE = "fill:none;stroke:#555;stroke-width:2"
H_EDGE_STYLE = "fill:none;stroke:#c0392b;stroke-width:4"
VERTEX_STYLE = "fill:#fff;stroke:#222;stroke-width:2"
PINNED_STYLE = "fill:#c0392b;stroke:#222;stroke-width:2"


class Affine:
    """Maps drawing coordinates into the viewport: y up becomes y down"""

    def __init__(self, min_x: Fraction, min_y: Fraction, scale: Fraction, viewport: int, margin: int):
        self.min_x, self.min_y, self.scale = min_x, min_y, scale
        self.viewport, self.margin = viewport, margin

    @classmethod
    def fit(cls, points: Iterable[Point], config: DrawConfig) -> "Affine":
        pts = list(points) or [Point.of(0, 0)]
        min_x, max_x = min(p.x for p in pts), max(p.x for p in pts)
        min_y, max_y = min(p.y for p in pts), max(p.y for p in pts)
        span = max(max_x - min_x, max_y - min_y) or Fraction(1)
        return cls(min_x, min_y, Fraction(config.viewport - 2 * config.margin) / span, config.viewport, config.margin)

    def forward(self, p: Point) -> Tuple[Fraction, Fraction]:
        return (
            self.margin + (p.x - self.min_x) * self.scale,
            self.viewport - self.margin - (p.y - self.min_y) * self.scale,
        )

    def inverse(self, sx: Fraction, sy: Fraction) -> Point:
        return Point(
            self.min_x + (sx - self.margin) / self.scale,
            self.min_y + (self.viewport - self.margin - sy) / self.scale,
        )

    def to_comment(self) -> str:
        return (
            f" {AFFINE_TAG} min_x={self.min_x} min_y={self.min_y} scale={self.scale} "
            f"viewport={self.viewport} margin={self.margin} "
        )

    @classmethod
    def from_comment(cls, text: str) -> "Affine":
        fields = dict(part.split("=", 1) for part in text.split() if "=" in part)
        try:
            return cls(
                Fraction(fields["min_x"]),
                Fraction(fields["min_y"]),
                Fraction(fields["scale"]),
                int(fields["viewport"]),
                int(fields["margin"]),
            )
        except (KeyError, ValueError, ZeroDivisionError):
            raise _malformed("affine comment is incomplete") from None


def _malformed(message: str) -> InstanceValidationError:
    return InstanceValidationError(f"malformed SVG: {message}", engine_type="svg", reason=ValidationReason.FILE_FORMAT)


def _fmt(value: Fraction) -> str:
    return f"{float(value):.3f}"


def _exact(points: List[Tuple[Fraction, Fraction]]) -> str:
    return " ".join(f"{x},{y}" for x, y in points)


def render_svg(inst: UpeInstance, drawing: FullDrawing, config: Optional[DrawConfig] = None) -> str:
    """
    Render a drawing of the instance's graph.

    Vertices are labelled circles (filled when pinned); edges are
    polylines, drawn thicker when they belong to H.
    """
    config = config or DrawConfig()
    everything = list(drawing.vertex_pos.values()) + [p for r in drawing.edge_routes.values() for p in r]
    affine = Affine.fit(everything, config)

    ET.register_namespace("", SVG_NS)
    root = ET.Element(
        f"{{{SVG_NS}}}svg",
        {
            "width": str(config.viewport),
            "height": str(config.viewport),
            "viewBox": f"0 0 {config.viewport} {config.viewport}",
        },
    )
    root.append(ET.Comment(affine.to_comment()))
    if config.title:
        ET.SubElement(root, f"{{{SVG_NS}}}title").text = config.title

    edges = ET.SubElement(root, f"{{{SVG_NS}}}g", {"class": "edges"})
    for e, route in sorted(drawing.edge_routes.items()):
        screen = [affine.forward(p) for p in route]
        ET.SubElement(edges, f"{{{SVG_NS}}}polyline", {
            "points": " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in screen),
            "style": H_EDGE_STYLE if e in inst.partial_edges else EDGE_STYLE,
            "data-edge": edge_key(e),
            "data-exact": _exact(screen),
        })

    vertices = ET.SubElement(root, f"{{{SVG_NS}}}g", {"class": "vertices"})
    for v, p in sorted(drawing.vertex_pos.items()):
        sx, sy = affine.forward(p)
        ET.SubElement(vertices, f"{{{SVG_NS}}}circle", {
            "cx": _fmt(sx),
            "cy": _fmt(sy),
            "r": str(config.radius),
            "style": PINNED_STYLE if inst.is_pinned(v) else VERTEX_STYLE,
            "data-vertex": str(v),
            "data-exact": _exact([(sx, sy)]),
        })
        label = ET.SubElement(vertices, f"{{{SVG_NS}}}text", {
            "x": _fmt(sx + config.radius + 2),
            "y": _fmt(sy - config.radius - 2),
            "font-size": "14",
        })
        label.text = str(v)
    return ET.tostring(root, encoding="unicode")


def _parse_exact(raw: Optional[str]) -> List[Tuple[Fraction, Fraction]]:
    if not raw:
        raise _malformed("element lacks exact coordinates")
    try:
        return [tuple(Fraction(c) for c in pair.split(",")) for pair in raw.split()]
    except (ValueError, ZeroDivisionError):
        raise _malformed(f"bad coordinates {raw!r}") from None


def parse_svg_drawing(text: str) -> FullDrawing:
    """
    Recover the drawing from ``render_svg`` output.

    Raises:
        InstanceValidationError: the document is not an SVG written by
            render_svg
    """
    parser = ET.XMLParser(target=ET.TreeBuilder(insert_comments=True))
    try:
        root = ET.fromstring(text, parser=parser)
    except ET.ParseError as exc:
        raise _malformed(str(exc)) from None

    affine = None
    for node in root.iter():
        if node.tag is ET.Comment and node.text and AFFINE_TAG in node.text:
            affine = Affine.from_comment(node.text)
            break
    if affine is None:
        raise _malformed("no affine comment")

    vertex_pos: Dict[int, Point] = {}
    routes: Dict[Edge, Route] = {}
    for node in root.iter(f"{{{SVG_NS}}}circle"):
        (sx, sy), = _parse_exact(node.get("data-exact"))
        vertex_pos[int(node.get("data-vertex"))] = affine.inverse(sx, sy)
    for node in root.iter(f"{{{SVG_NS}}}polyline"):
        e = parse_edge_key(node.get("data-edge", ""))
        routes[e] = tuple(affine.inverse(sx, sy) for sx, sy in _parse_exact(node.get("data-exact")))
    return FullDrawing(vertex_pos, routes)
