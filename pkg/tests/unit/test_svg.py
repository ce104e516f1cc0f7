"""
Unit tests for SVG export and import
"""

from fractions import Fraction

import pytest

from upex import (
    DrawConfig,
    InstanceValidationError,
    UpeInstance,
    ValidationReason,
    parse_svg_drawing,
    render_svg,
    solve_st_fue,
)
from upex.core.geometry import Point
from upex.core.model import FullDrawing
from upex.svg import Affine


@pytest.fixture
def drawn_diamond(diamond_instance):
    """A pinned diamond with its witness drawing"""
    inst = diamond_instance({0: (0, 0), 1: ("-1/3", 1), 2: (1, 1), 3: (0, 2)})
    return inst, solve_st_fue(inst).drawing


class TestAffine:
    """Test the viewport map"""

    def test_fit_and_flip(self):
        """The lower left corner maps to the bottom margin"""
        affine = Affine.fit([Point.of(0, 0), Point.of(2, 1)], DrawConfig(viewport=100, margin=10))
        assert affine.scale == 40
        assert affine.forward(Point.of(0, 0)) == (10, 90)
        assert affine.forward(Point.of(2, 1)) == (90, 50)

    def test_inverse(self):
        """forward and inverse agree exactly"""
        affine = Affine.fit([Point.of(0, 0), Point.of(3, 7)], DrawConfig())
        p = Point.of("1/3", "5/2")
        assert affine.inverse(*affine.forward(p)) == p

    def test_single_point(self):
        """A lone vertex still gets a scale"""
        affine = Affine.fit([Point.of(4, 4)], DrawConfig(viewport=100, margin=10))
        assert affine.scale == 80

    def test_comment_round_trip(self):
        """The map survives its comment"""
        affine = Affine.fit([Point.of(0, "-1/2"), Point.of(3, 2)], DrawConfig())
        again = Affine.from_comment(affine.to_comment())
        assert (again.min_x, again.min_y, again.scale) == (affine.min_x, affine.min_y, affine.scale)

    def test_incomplete_comment(self):
        """Missing fields are a format error"""
        with pytest.raises(InstanceValidationError) as exc_info:
            Affine.from_comment(" upex-affine min_x=0 ")
        assert exc_info.value.reason == ValidationReason.FILE_FORMAT


class TestRenderSvg:
    """Test SVG output"""

    def test_elements(self, drawn_diamond):
        """One circle and label per vertex, one polyline per edge"""
        inst, drawing = drawn_diamond
        svg = render_svg(inst, drawing)
        assert svg.count("<circle") == 4
        assert svg.count("<polyline") == 4
        assert svg.count("<text") == 4
        assert 'data-edge="0-1"' in svg
        assert "upex-affine" in svg

    def test_title(self, drawn_diamond):
        """An optional title element"""
        inst, drawing = drawn_diamond
        assert "<title>diamond</title>" in render_svg(inst, drawing, DrawConfig(title="diamond"))
        assert "<title>" not in render_svg(inst, drawing)

    def test_partial_edges_stand_out(self):
        """H-edges get their own style"""
        inst = UpeInstance.build(2, [(0, 1)], positions={0: (0, 0), 1: (0, 1)}, routes={(0, 1): []})
        drawing = FullDrawing(dict(inst.drawing.vertex_pos), dict(inst.drawing.edge_routes))
        assert "stroke:#c0392b;stroke-width:4" in render_svg(inst, drawing)


class TestParseSvg:
    """Test SVG input"""

    def test_round_trip(self, drawn_diamond):
        """Exact coordinates come back"""
        inst, drawing = drawn_diamond
        again = parse_svg_drawing(render_svg(inst, drawing))
        assert again.vertex_pos == drawing.vertex_pos
        assert again.edge_routes == drawing.edge_routes
        assert again.vertex_pos[1].x == Fraction(-1, 3)

    @pytest.mark.parametrize("text", [
        "<svg",
        '<svg xmlns="http://www.w3.org/2000/svg"></svg>',
        '<svg xmlns="http://www.w3.org/2000/svg"><!-- upex-affine min_x=0 min_y=0 scale=1 viewport=10 margin=0 -->'
        '<circle data-vertex="0"/></svg>',
    ])
    def test_malformed(self, text):
        """Foreign or damaged documents are format errors"""
        with pytest.raises(InstanceValidationError) as exc_info:
            parse_svg_drawing(text)
        assert exc_info.value.reason == ValidationReason.FILE_FORMAT
