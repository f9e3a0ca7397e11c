"""SVG pictures of a curve's lifts through the fundamental domain.

The drawing shows the unit circle, the domain P (shaded disk with the four
half-spaces D(e) cut out in white), the sides of P, one arc per lift of the
curve and one dot per crossing of two lifts. Dots inside P are the ones that
count towards the self-intersection number.
"""

from __future__ import annotations

import math
from pathlib import Path
from xml.sax.saxutils import escape

from . import oracle
from .chart import SurfaceKind
from .words import CHARS, CyclicWord

SIZE = 520
SCALE = 240.0

STYLE = """
.boundary { fill: none; stroke: #000; stroke-width: 1.2; }
.domain { fill: #d9d9d9; stroke: none; }
.cap { fill: #fff; stroke: none; }
.side { fill: none; stroke: #555; stroke-width: 1; stroke-dasharray: 4 3; }
.lift { fill: none; stroke: #1f4e9c; stroke-width: 1.1; }
.crossing.inside { fill: #c0392b; }
.crossing.outside { fill: #9aa5b1; }
.label { font: 13px sans-serif; fill: #333; }
"""


def _pt(x: float, y: float) -> str:
    # SVG y grows downward
    return f"{x * SCALE:.4f},{-y * SCALE:.4f}"


def _on_circle(theta: float) -> tuple[float, float]:
    return math.cos(theta), math.sin(theta)


def geodesic_path(t1: float, t2: float) -> str:
    """SVG path of the geodesic between boundary angles t1 and t2 (radians)."""
    delta = (t2 - t1) % (2 * math.pi)
    p, q = _on_circle(t1), _on_circle(t2)
    if abs(delta - math.pi) < 1e-9:
        return f"M {_pt(*p)} L {_pt(*q)}"
    small = min(delta, 2 * math.pi - delta)
    r = math.tan(small / 2) * SCALE
    # the arc bends toward the origin: with q counterclockwise of p by less than
    # pi its circle's center lies beyond the chord, which SVG calls sweep 1
    sweep = 1 if delta < math.pi else 0
    return f"M {_pt(*p)} A {r:.4f} {r:.4f} 0 0 {sweep} {_pt(*q)}"


def _cap_path(phi: float, alpha: float) -> str:
    p, q = _on_circle(phi - alpha), _on_circle(phi + alpha)
    r = math.tan(alpha) * SCALE
    return f"M {_pt(*p)} A {r:.4f} {r:.4f} 0 0 1 {_pt(*q)} A {SCALE:.4f} {SCALE:.4f} 0 0 1 {_pt(*p)} Z"


def render_svg(kind, w: CyclicWord, cfg: oracle.SchottkyConfig | None = None) -> str:
    kind = SurfaceKind.parse(kind)
    if cfg is None:
        cfg = oracle.standard_config(kind)
    half = SIZE / 2
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="{-half} {-half} {SIZE} {SIZE}">',
        f"<title>{escape(kind.value)} {escape(w.text)}</title>",
        f"<style>{STYLE}</style>",
        f'<circle class="domain" cx="0" cy="0" r="{SCALE:.4f}"/>',
    ]
    for e in CHARS:
        phi, alpha = float(cfg.centers[e]), float(cfg.half_widths[e])
        parts.append(f'<path class="cap" data-letter="{e}" d="{_cap_path(phi, alpha)}"/>')
    for e in CHARS:
        phi, alpha = float(cfg.centers[e]), float(cfg.half_widths[e])
        parts.append(f'<path class="side" data-letter="{e}" d="{geodesic_path(phi - alpha, phi + alpha)}"/>')
        lx, ly = _on_circle(phi)
        parts.append(f'<text class="label" x="{lx * (SCALE + 14):.2f}" y="{-ly * (SCALE + 14):.2f}" text-anchor="middle">D({e})</text>')
    parts.append(f'<circle class="boundary" cx="0" cy="0" r="{SCALE:.4f}"/>')

    for idx, (minus, plus) in enumerate(oracle.lift_axes(cfg, w), start=1):
        d = geodesic_path(float(minus.angle), float(plus.angle))
        parts.append(f'<path class="lift" data-lift="{idx}" d="{d}"/>')
    for i, j, z, inside in oracle.crossings(cfg, w):
        x, y = z.xy
        cls = "inside" if inside else "outside"
        parts.append(f'<circle class="crossing {cls}" data-pair="{i},{j}" cx="{x * SCALE:.4f}" cy="{-y * SCALE:.4f}" r="3.2"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(path, kind, w: CyclicWord, cfg: oracle.SchottkyConfig | None = None) -> Path:
    path = Path(path)
    path.write_text(render_svg(kind, w, cfg), encoding="utf-8")
    return path
