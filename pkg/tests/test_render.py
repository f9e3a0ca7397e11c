import math
import re
import xml.etree.ElementTree as ET

import pytest

from geolab.cli import main
from geolab.render import SCALE, geodesic_path, render_svg
from geolab.words import CyclicWord

NS = "{http://www.w3.org/2000/svg}"


def _parse(svg: str):
    root = ET.fromstring(svg)
    lifts = [e for e in root.iter(f"{NS}path") if e.get("class") == "lift"]
    dots = [e for e in root.iter(f"{NS}circle") if (e.get("class") or "").startswith("crossing")]
    return root, lifts, dots


def test_figure_curve_has_twelve_inner_dots():
    _, lifts, dots = _parse(render_svg("pants", CyclicWord("aaBaBaB")))
    assert len(lifts) == 7
    assert sum(d.get("class") == "crossing inside" for d in dots) == 12


def test_simple_curve_has_no_dots():
    _, lifts, dots = _parse(render_svg("torus", CyclicWord("ab")))
    assert len(lifts) == 2 and dots == []


def test_structure():
    root, _, _ = _parse(render_svg("pants", CyclicWord("aaB")))
    sides = [e for e in root.iter(f"{NS}path") if e.get("class") == "side"]
    caps = [e for e in root.iter(f"{NS}path") if e.get("class") == "cap"]
    assert len(sides) == 4 and len(caps) == 4


def _arc_center(d: str):
    m = re.match(r"M ([-\d.]+),([-\d.]+) A ([\d.]+) [\d.]+ 0 (\d) (\d) ([-\d.]+),([-\d.]+)", d)
    x1, y1, r, fa, fs, x2, y2 = (float(v) for v in m.groups())
    hx, hy = (x1 - x2) / 2, (y1 - y2) / 2
    coef = math.sqrt(max(0.0, r * r - hx * hx - hy * hy) / (hx * hx + hy * hy))
    if fa == fs:
        coef = -coef
    return coef * hy + (x1 + x2) / 2, -coef * hx + (y1 + y2) / 2


@pytest.mark.parametrize("t1, t2", [(0.0, 1.0), (1.0, 0.0), (2.0, 5.0), (5.5, 0.4), (3.0, 3.2)])
def test_geodesic_arcs_are_orthogonal_circles(t1, t2):
    # the SVG arc's circle must be the one orthogonal to the unit circle
    cx, cy = _arc_center(geodesic_path(t1, t2))
    delta = min(abs(t2 - t1), 2 * math.pi - abs(t2 - t1))
    assert math.hypot(cx, cy) == pytest.approx(SCALE / math.cos(delta / 2), rel=1e-4)


def test_cli_render(tmp_path, capsys):
    out = tmp_path / "fig.svg"
    assert main(["render", "--surface", "pants", "aaBaBaB", "--out", str(out)]) == 0
    _, lifts, dots = _parse(out.read_text())
    assert len(lifts) == 7
