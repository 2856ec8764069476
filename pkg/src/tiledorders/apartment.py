"""SVG pictures of tiled orders of degree 3 in the standard apartment.

A homothety class ``[x1, x2, x3]`` is normalized to ``[0, a, b]`` with
``a = x2 - x1`` and ``b = x3 - x1``.  The plane embedding puts ``[0,0,0]`` at the
origin, the ``b`` direction along the x axis and the ``a`` direction at 120
degrees, so the walls ``x_i - x_j = const`` form the triangular tiling.

The polytope of an order is ``{x : x_i - x_j <= mu_ij}``; its corners are
lattice points, and the columns of the exponent matrix (the distinguished
vertices) lie on it.
"""
import math
from dataclasses import dataclass

from .errors import UnsupportedDimension

__all__ = [
    "PALETTE",
    "ApartmentScene",
    "hull_vertices",
    "polytope_points",
    "polytope_corners",
    "embed",
    "render_svg",
]

SCALE = 40
MARGIN = 30
# 50% tints of blue, green, yellow, purple
PALETTE = ("#7f7fff", "#7fff7f", "#ffff7f", "#df7f9f")
_SIN120 = math.sqrt(3) / 2


def _require_three(E):
    if E.n != 3:
        raise UnsupportedDimension(f"only n = 3 can be drawn, got n = {E.n}")


def hull_vertices(E):
    """Distinguished vertices ``(0, mu_2j - mu_1j, mu_3j - mu_1j)``, duplicates removed."""
    _require_three(E)
    out = []
    for j in range(3):
        v = (0, E.mu[1][j] - E.mu[0][j], E.mu[2][j] - E.mu[0][j])
        if v not in out:
            out.append(v)
    return out


def _bounds(E):
    mu = E.mu
    return (-mu[0][1], mu[1][0]), (-mu[0][2], mu[2][0]), (-mu[2][1], mu[1][2])


def polytope_points(E):
    """All lattice points ``(0, a, b)`` of the polytope, sorted."""
    _require_three(E)
    (a0, a1), (b0, b1), (c0, c1) = _bounds(E)
    return [(0, a, b) for a in range(a0, a1 + 1) for b in range(b0, b1 + 1) if c0 <= a - b <= c1]


def _cross(o, p, q):
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def _convex_hull(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polytope_corners(E):
    """Corners of the polytope in cyclic order; affine maps preserve hulls, so (a, b) suffices."""
    hull = _convex_hull([(a, b) for _, a, b in polytope_points(E)])
    return [(0, a, b) for a, b in hull]


def embed(a, b):
    """Plane coordinates (x, y) of ``[0, a, b]`` with unit edge length, y pointing up."""
    return b - a / 2, a * _SIN120


@dataclass(frozen=True)
class ApartmentScene:
    """Orders to draw, each with a fill colour (None picks from the palette).

    ``window`` is ``((a_min, a_max), (b_min, b_max))``; by default it is the box
    around all polytopes widened by one step.
    """

    polytopes: tuple = ()
    window: tuple = None
    labels: bool = True

    def __post_init__(self):
        items = []
        for k, item in enumerate(self.polytopes):
            E, color = item if isinstance(item, tuple) else (item, None)
            _require_three(E)
            items.append((E, color or PALETTE[k % len(PALETTE)]))
        object.__setattr__(self, "polytopes", tuple(items))
        if self.window is None:
            pts = [p for E, _ in items for p in polytope_points(E)] or [(0, 0, 0)]
            a = [p[1] for p in pts]
            b = [p[2] for p in pts]
            window = ((min(a) - 1, max(a) + 1), (min(b) - 1, max(b) + 1))
        else:
            window = tuple(tuple(int(x) for x in r) for r in self.window)
        (a0, a1), (b0, b1) = window
        for E, _ in items:
            for _, a, b in hull_vertices(E):
                if not (a0 <= a <= a1 and b0 <= b <= b1):
                    raise ValueError(f"vertex [0,{a},{b}] lies outside the window {window}")
        object.__setattr__(self, "window", window)


def _fmt(v):
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(scene):
    """Deterministic SVG 1.1 text for the scene."""
    (a0, a1), (b0, b1) = scene.window
    corners = [embed(a, b) for a in (a0, a1) for b in (b0, b1)]
    xmin = min(x for x, _ in corners)
    xmax = max(x for x, _ in corners)
    ymin = min(y for _, y in corners)
    ymax = max(y for _, y in corners)
    width = (xmax - xmin) * SCALE + 2 * MARGIN
    height = (ymax - ymin) * SCALE + 2 * MARGIN

    def px(a, b):
        x, y = embed(a, b)
        return _fmt((x - xmin) * SCALE + MARGIN), _fmt((ymax - y) * SCALE + MARGIN)

    def line(p, q):
        (x1, y1), (x2, y2) = px(*p), px(*q)
        return f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<g class="walls" stroke="#888888" stroke-width="1">',
    ]
    for a in range(a0, a1 + 1):
        out.append(line((a, b0), (a, b1)))
    for b in range(b0, b1 + 1):
        out.append(line((a0, b), (a1, b)))
    for c in range(a0 - b1, a1 - b0 + 1):
        lo, hi = max(b0, a0 - c), min(b1, a1 - c)
        if lo < hi:
            out.append(line((c + lo, lo), (c + hi, hi)))
    out.append("</g>")

    for k, (E, color) in enumerate(scene.polytopes):
        pts = " ".join(",".join(px(a, b)) for _, a, b in polytope_corners(E))
        out.append(
            f'<polygon class="polytope" data-index="{k}" points="{pts}" '
            f'fill="{color}" fill-opacity="0.8" stroke="#000000" stroke-width="1.5"/>'
        )
        for _, a, b in hull_vertices(E):
            x, y = px(a, b)
            out.append(f'<circle class="vertex" data-index="{k}" cx="{x}" cy="{y}" r="3" fill="#000000"/>')

    if scene.labels:
        out.append('<g class="labels" font-family="sans-serif" font-size="8" fill="#333333">')
        for a in range(a0, a1 + 1):
            for b in range(b0, b1 + 1):
                x, y = px(a, b)
                out.append(f'<text x="{x}" y="{y}" dx="3" dy="-3">[0,{a},{b}]</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
