"""Static SVG figures for CLI output. Deterministic text, no plotting deps."""

from __future__ import annotations

from .fps import FpsCloud
from .mixture import ternary_xy


def _color(value: float) -> str:
    """Map [0, 1] to a blue->red ramp."""
    v = min(1.0, max(0.0, value))
    r = int(40 + 215 * v)
    b = int(255 - 215 * v)
    return f"rgb({r},60,{b})"


def fps_svg(cloud: FpsCloud, size: int = 480) -> str:
    """Scatter of the feasible property space, colored by x1 fraction."""
    lo1, hi1 = cloud.y1_range
    lo2, hi2 = cloud.y2_range
    pad = 30
    span = size - 2 * pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for i, comp in enumerate(cloud.compositions):
        px = pad + span * (float(cloud.y1[i]) - lo1) / (hi1 - lo1)
        py = size - pad - span * (float(cloud.y2[i]) - lo2) / (hi2 - lo2)
        parts.append(
            f'<circle cx="{px:.1f}" cy="{py:.1f}" r="1.5" '
            f'fill="{_color(comp.x1 / 100.0)}"/>'
        )
    parts.append(
        f'<text x="{size // 2}" y="{size - 8}" text-anchor="middle" '
        f'font-size="12">transparency</text>'
    )
    parts.append(
        f'<text x="12" y="{size // 2}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 12 {size // 2})">hardness</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def ternary_svg(compositions, size: int = 480) -> str:
    """Scatter of compositions on the ternary triangle."""
    pad = 30
    span = size - 2 * pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    corners = [(0.0, 0.0), (1.0, 0.0), (0.5, 0.8660254037844386)]
    pts = " ".join(
        f"{pad + span * x:.1f},{size - pad - span * y:.1f}" for x, y in corners
    )
    parts.append(f'<polygon points="{pts}" fill="none" stroke="black"/>')
    for comp in compositions:
        x, y = ternary_xy(comp)
        parts.append(
            f'<circle cx="{pad + span * x:.1f}" cy="{size - pad - span * y:.1f}" '
            f'r="2" fill="rgb(60,60,200)"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
