from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from canonbasis.arquiver import components_of, slices_for
from canonbasis.cones import l_pbw_cone
from canonbasis.crystal import Triangle
from canonbasis.render import UnknownFormatError, render, render_components
from canonbasis.typea import QuiverA
from goldens import RLRL_TEXT

RLRL = QuiverA("RLRL")


RLRL_PANEL_TEXT = [
    "1 2 3 4 5\n 1 2 3 4\n  o o o\n   o o\n    o",
    "o o o o o\n 1 2 3 4\n  2 3 4\n   o o\n    o",
    "o o o o o\n o o o o\n  2 3 4\n   2 3\n    o",
    "o o o o o\n o o o o\n  o o o\n   2 3\n    3",
]


def test_rlrl_slice_grid():
    assert render(slices_for(RLRL)) == RLRL_TEXT


def test_rlrl_component_views():
    assert render_components(slices_for(RLRL)) == RLRL_PANEL_TEXT


def test_triangle_text():
    assert render(Triangle.zero(3)) == "0 0 0\n 0 0\n  0"
    t = Triangle.from_entries(2, {(1, 2): 12})
    assert render(t).splitlines() == [" 0   0", "  12"]


def test_svg_is_well_formed_and_deterministic():
    p = slices_for(RLRL)
    a, b = render(p, "svg"), render(p, "svg")
    assert a == b
    root = ET.fromstring(a)
    texts = [e.text for e in root.iter("{http://www.w3.org/2000/svg}text")]
    assert sorted(texts) == sorted(RLRL_TEXT.split())
    for view in render_components(p, "svg"):
        ET.fromstring(view)
    ET.fromstring(render(l_pbw_cone(RLRL), "svg"))


def test_cone_text_lists_every_row():
    cone = l_pbw_cone(QuiverA("L"))
    assert render(cone).startswith("c_2_2 >= c_1_1")


def test_bad_inputs():
    with pytest.raises(UnknownFormatError):
        render(Triangle.zero(2), "png")
    with pytest.raises(TypeError):
        render(42)
    assert len(render_components(slices_for(QuiverA.all_left(4)))) == len(components_of(QuiverA.all_left(4)))
