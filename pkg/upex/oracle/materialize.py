"""
Drawing materialization from certificate lines.

Every class gets its own horizontal line. Lines of pinned classes sit at
their pinned y, the others are spread evenly between them. On each line
the pinned vertices and the H-edges are anchors at their fixed x; the
remaining elements are spread evenly between consecutive anchors. Every
other edge becomes the polyline through its points on the lines it
crosses.
"""

from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence

from ..core.geometry import Point, route_x_at
from ..core.graph import Edge
from ..core.model import FullDrawing, Route, UpeInstance
from .certificate import Element
from .search import Line


def spread(values: Sequence[Optional[Fraction]]) -> List[Fraction]:
    """
    Fill the gaps of an increasing sequence.

    A run of r missing values between known a and b becomes
    a + (b - a) * j / (r + 1); a run before the first known value counts down
    from it in unit steps and a run after the last one counts up. With no
    known value at all, the result is 1, 2, 3, ...
    """
    out: List[Fraction] = [Fraction(0)] * len(values)
    i = 0
    while i < len(values):
        if values[i] is not None:
            out[i] = values[i]
            i += 1
            continue
        j = i
        while j < len(values) and values[j] is None:
            j += 1
        r = j - i
        below = out[i - 1] if i > 0 else None
        above = values[j] if j < len(values) else None
        for t in range(1, r + 1):
            if below is not None and above is not None:
                out[i + t - 1] = below + (above - below) * Fraction(t, r + 1)
            elif above is not None:
                out[i + t - 1] = above - (r + 1 - t)
            elif below is not None:
                out[i + t - 1] = below + t
            else:
                out[i + t - 1] = Fraction(t)
        i = j
    return out


def _anchors(inst: UpeInstance, sigma: Sequence[Element], y: Fraction, guides: Mapping[Edge, Route]) -> List[Optional[Fraction]]:
    pos = inst.drawing.vertex_pos
    h_routes = inst.drawing.edge_routes
    anchors: List[Optional[Fraction]] = []
    for item in sigma:
        if isinstance(item, tuple):
            route = h_routes.get(item) or guides.get(item)
            anchors.append(route_x_at(route, y) if route is not None else None)
        else:
            anchors.append(pos[item].x if item in inst.partial_vertices else None)
    return anchors


def _increasing(values: Sequence[Optional[Fraction]]) -> bool:
    known = [x for x in values if x is not None]
    return all(a < b for a, b in zip(known, known[1:]))


def materialize_drawing(
    inst: UpeInstance,
    lines: Sequence[Line],
    guides: Optional[Mapping[Edge, Route]] = None,
) -> FullDrawing:
    """
    Draw a straight-edged instance along certificate lines.

    Args:
        inst: Instance the lines were found for (H-edges straight)
        lines: (class, sigma) pairs from bottom to top
        guides: Optional routes for non-H edges; an edge with a guide is
            anchored on it on every line where that keeps the anchors
            strictly increasing
    """
    pos = inst.drawing.vertex_pos
    h_routes = inst.drawing.edge_routes
    guides = guides or {}

    pinned_y: List[Optional[Fraction]] = []
    for cls, _ in lines:
        pinned = [v for v in cls if v in inst.partial_vertices]
        pinned_y.append(pos[pinned[0]].y if pinned else None)
    ys = spread(pinned_y)

    vertex_pos: Dict[int, Point] = {}
    crossing: Dict[Edge, List[Point]] = {}
    for (cls, sigma), y in zip(lines, ys):
        anchors = _anchors(inst, sigma, y, guides)
        if guides and not _increasing(anchors):
            anchors = _anchors(inst, sigma, y, {})
        for item, x in zip(sigma, spread(anchors)):
            if isinstance(item, tuple):
                crossing.setdefault(item, []).append(Point(x, y))
            else:
                vertex_pos[item] = Point(x, y)

    routes: Dict[Edge, Route] = {}
    for e in inst.graph.edges:
        if e in h_routes:
            routes[e] = tuple(h_routes[e])
        else:
            routes[e] = (vertex_pos[e[0]], *crossing.get(e, ()), vertex_pos[e[1]])
    return FullDrawing(vertex_pos, routes)
