import hashlib
import re
import xml.etree.ElementTree as ET

import pytest

from helpers import PRISM, prism_framework
from troprig import corpus, curve, parse_polynomial
from troprig.render import RenderError, render_complex, render_curve, render_framework, render_subdivision
from troprig.rigidity import Framework

NS = "{http://www.w3.org/2000/svg}"
# Frozen after drawing the output and comparing it with the published prism figure by eye.
PRISM_CURVE_SHA256 = "6928a9e63246e69e32f441eb3901c8bce02eba51014ab638e5ec05c1074b014a"


def _parse(svg):
    root = ET.fromstring(svg)
    return root, [el for el in root if el.tag == NS + "line"], [el for el in root if el.tag == NS + "text"]


def _inside(root, lines):
    w, h = float(root.get("width")), float(root.get("height"))
    for el in lines:
        for k in ("x1", "x2"):
            assert -1e-6 <= float(el.get(k)) <= w + 1e-6
        for k in ("y1", "y2"):
            assert -1e-6 <= float(el.get(k)) <= h + 1e-6


def test_prism_curve_golden_hash():
    svg = render_curve(curve(parse_polynomial(PRISM)))
    assert hashlib.sha256(svg.encode()).hexdigest() == PRISM_CURVE_SHA256


def test_tropical_line_has_three_rays_and_no_labels():
    root, lines, texts = _parse(render_curve(curve(parse_polynomial("x + y + 0"))))
    assert [el.get("class") for el in lines] == ["ray"] * 3
    assert texts == []
    _inside(root, lines)


def test_weight_labels_match_heavy_edges():
    c = curve(parse_polynomial(PRISM))
    _, lines, texts = _parse(render_curve(c))
    heavy = sorted(str(e.weight) for e in c.edges if e.weight > 1)
    assert sorted(t.text for t in texts) == heavy
    assert len(lines) == len(c.edges)


def test_viewbox_pads_bounded_part_by_a_fifth():
    c = curve(parse_polynomial(PRISM))
    root, lines, _ = _parse(render_curve(c))
    circles = [el for el in root if el.tag == NS + "circle"]
    xs = [float(el.get("cx")) for el in circles]
    ys = [float(el.get("cy")) for el in circles]
    w = float(root.get("width"))
    # bounded extent occupies 1/(1 + 2/5) of the box, centred
    assert max(xs) - min(xs) == pytest.approx(w / 1.4, abs=1e-2)
    assert min(xs) == pytest.approx(w - max(xs), abs=1e-2)
    assert max(ys) - min(ys) == pytest.approx(float(root.get("height")) / 1.4, abs=1e-2)
    _inside(root, lines)


def test_framework_render_has_lattice():
    svg = render_framework(prism_framework())
    root, lines, _ = _parse(svg)
    assert sum(el.get("class") == "lattice" for el in lines) > 0
    assert sum(el.get("class") == "bar" for el in lines) == 9


def test_subdivision_and_lines():
    svg = render_subdivision(curve(parse_polynomial(PRISM)).subdivision)
    _, lines, _ = _parse(svg)
    assert sum(el.get("class") == "sd-edge" for el in lines) == 9
    root, lines, _ = _parse(render_curve(curve(parse_polynomial("0 + (1) x + (-1) x^3"))))
    assert [el.get("class") for el in lines] == ["line", "line"]
    _inside(root, lines)


def test_renders_are_deterministic():
    c = curve(parse_polynomial(PRISM))
    assert render_curve(c) == render_curve(curve(parse_polynomial(PRISM)))
    assert not re.search(r"\d\.\d{4,}", render_curve(c))


def test_unrenderable_dimensions():
    with pytest.raises(RenderError):
        render_framework(Framework(3, {"a": (0, 0, 0), "b": (1, 0, 0)}, (("a", "b"),)))
    with pytest.raises(RenderError):
        render_complex(corpus.load("hyperplane3d").complex)
    root, lines, _ = _parse(render_complex(corpus.load("six-ray-fan").complex))
    assert len(lines) == 6
