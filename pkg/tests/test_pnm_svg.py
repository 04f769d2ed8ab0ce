import xml.etree.ElementTree as ET

import numpy as np
import pytest

from gallai import ConstantColoring, build_family, checkerboard, make_pointset
from gallai.errors import EmptyPayload, InputError, MalformedImage, TooManyColors
from gallai.pnm import load_grid_image, parse_pnm
from gallai.serialize import WitnessDocument, encode_family, encode_threshold
from gallai.svg import render_svg
from gallai import gallai_number

NS = {"svg": "http://www.w3.org/2000/svg"}


def test_p2_examples(tmp_path):
    g = parse_pnm("P2\n2 2\n255\n0 0\n0 0\n")
    assert g.colors == 1 and g.cells.tolist() == [[0, 0], [0, 0]]
    f = tmp_path / "board.pgm"
    f.write_text("P2\n# a comment\n2 2 255\n0 255\n255 0\n")
    g = load_grid_image(f)
    assert g.colors == 2 and g.cells.tolist() == [[0, 1], [1, 0]]
    with pytest.raises(MalformedImage):
        parse_pnm("P2\n2 2\n255\n0 255\n255\n")


def test_orientation_and_p3():
    # 3 wide, 1 tall: cell [x, 0] is pixel x
    g = parse_pnm("P3 3 1 255  9 9 9  0 0 0  9 9 9")
    assert g.cells.shape == (3, 1) and g.cells[:, 0].tolist() == [0, 1, 0]


def test_image_errors():
    with pytest.raises(MalformedImage):
        parse_pnm("P5 1 1 255 0")
    with pytest.raises(MalformedImage):
        parse_pnm("P2 1 1 3 7")
    with pytest.raises(MalformedImage):
        parse_pnm("P2 1 x 3 0")
    values = " ".join(str(v) for v in range(17))
    with pytest.raises(TooManyColors):
        parse_pnm(f"P2 17 1 255 {values}")
    assert parse_pnm(f"P2 17 1 255 {values}", max_colors=17).colors == 17


def family_doc(chi, S, k):
    F = build_family(chi, S, k)
    return WitnessDocument("family", {"coloring": chi.spec()}, encode_family(F))


def parse_svg(text):
    root = ET.fromstring(text.encode())
    members = root.findall(".//svg:g[@class='member']", NS)
    markers = root.findall(".//svg:circle[@class='marker']", NS)
    return root, members, markers


def test_marker_counts(triangle):
    root, members, markers = parse_svg(render_svg(family_doc(ConstantColoring(), make_pointset([[0], [1]]), 1)))
    assert root.tag == "{http://www.w3.org/2000/svg}svg" and len(markers) == 2
    text = render_svg(family_doc(checkerboard(), triangle, 3))
    _, members, markers = parse_svg(text)
    assert len(markers) == 9 and len({m.get("stroke") for m in members}) == 3
    assert 'class="bg"' in text


def test_window_and_empty(triangle):
    doc = family_doc(checkerboard(), triangle, 2)
    _, _, markers = parse_svg(render_svg(doc, window=(-1, -1, 5, 5), samples=4))
    assert len(markers) == 6
    empty = WitnessDocument("family", {}, dict(doc.result, members=[]))
    with pytest.raises(EmptyPayload):
        render_svg(empty)
    t = WitnessDocument("threshold", {}, encode_threshold(gallai_number(make_pointset([[0], [1]]), 2, 4)))
    with pytest.raises(InputError):
        render_svg(t)
