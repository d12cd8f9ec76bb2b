"""Explicit drawings: alternating 3-line, 2-line and convex max-crossing."""

from __future__ import annotations

import math
from fractions import Fraction

from .exact_geom import Point2, RectilinearDrawing, count_crossings, intersection_point

# Rational stand-ins for three rays at 120 degrees: points on the unit circle
# from the 3-4-5 triple.  Pairwise angles are 126.87, 106.26 and 126.87 degrees,
# which keeps the same two-rays-per-half-plane structure as the 120 degree drawing.
RAY_DIRECTIONS = (
    (Fraction(1), Fraction(0)),
    (Fraction(-3, 5), Fraction(4, 5)),
    (Fraction(-3, 5), Fraction(-4, 5)),
)


def ray_layout(n1: int, n2: int, n3: int) -> list[tuple[int, str, Fraction]]:
    """Per vertex: (part, "large" | "small", distance from the center)."""
    out = []
    for i, n in enumerate((n1, n2, n3)):
        a, b = (n + 1) // 2, n // 2
        out += [(i, "large", Fraction(k, a + 1)) for k in range(1, a + 1)]
        out += [(i, "small", Fraction(k)) for k in range(3, b + 3)]
    return out


def alternating_3line(n1: int, n2: int, n3: int) -> RectilinearDrawing:
    """Alternating 3-line drawing of K_{n1,n2,n3}.

    Part i sits on line i: ceil(n_i/2) points on the large ray at distances
    k/(a_i+1) and floor(n_i/2) points on the opposite small ray at 3, 4, ...
    """
    if min(n1, n2, n3) < 1:
        raise ValueError("part sizes must be >= 1")
    positions = []
    for part, side, dist in ray_layout(n1, n2, n3):
        ux, uy = RAY_DIRECTIONS[part]
        s = dist if side == "large" else -dist
        positions.append(Point2(s * ux, s * uy))
    return RectilinearDrawing((n1, n2, n3), tuple(positions))


def two_line(n: int, m: int) -> RectilinearDrawing:
    """Zarankiewicz drawing of K_{n,m}: one part per coordinate axis, split about the origin."""
    if n < 1 or m < 1:
        raise ValueError("part sizes must be >= 1")

    def axis(k):
        return [Fraction(i) for i in range(1, (k + 1) // 2 + 1)] + [Fraction(-i) for i in range(1, k // 2 + 1)]

    pts = [Point2(x, 0) for x in axis(n)] + [Point2(0, y) for y in axis(m)]
    return RectilinearDrawing((n, m), tuple(pts))


def _circle_point(theta: float) -> Point2:
    # rational point on the unit circle via the tangent half-angle map
    t = Fraction(round(math.tan(theta / 2) * 10**6), 10**6)
    den = 1 + t * t
    return Point2((1 - t * t) / den, 2 * t / den)


def convex_max(r: int, n: int) -> RectilinearDrawing:
    """rn points on the unit circle near a regular polygon, each part a consecutive block."""
    if r < 2 or n < 1 or r * n < 3:
        raise ValueError("need r >= 2, n >= 1 and rn >= 3")
    total = r * n
    pts = [_circle_point(-math.pi + 2 * math.pi * (k + 0.5) / total) for k in range(total)]
    if len(set(pts)) != total:
        raise RuntimeError("rational circle points collided; increase resolution")
    return RectilinearDrawing(tuple([n] * r), tuple(pts))


PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf")


def export_svg(
    d: RectilinearDrawing,
    size: int = 600,
    margin: int = 20,
    show_crossings: bool = True,
    precision: int = 3,
) -> str:
    """Render a drawing as a standalone SVG string.

    Floats appear only in the output text; nothing here feeds back into counting.
    """
    xs = [p.x for p in d.positions]
    ys = [p.y for p in d.positions]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or Fraction(1)
    scale = Fraction(size - 2 * margin) / span
    x0, y1 = min(xs), max(ys)

    def sx(p):
        return f"{float((p.x - x0) * scale + margin):.{precision}f}"

    def sy(p):
        return f"{float((y1 - p.y) * scale + margin):.{precision}f}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<g stroke="#555" stroke-width="0.6" opacity="0.7">',
    ]
    for u, v in d.edges():
        a, b = d.positions[u], d.positions[v]
        lines.append(f'<line x1="{sx(a)}" y1="{sy(a)}" x2="{sx(b)}" y2="{sy(b)}"/>')
    lines.append("</g>")
    if show_crossings:
        report = count_crossings(d, collect=True)
        lines.append('<g class="crossings" fill="none" stroke="black" stroke-width="0.8">')
        for (a, b), (c, e) in report.crossing_list:
            p = intersection_point(d.positions[a], d.positions[b], d.positions[c], d.positions[e])
            lines.append(f'<circle cx="{sx(p)}" cy="{sy(p)}" r="2.5"/>')
        lines.append("</g>")
    lines.append('<g class="vertices" stroke="black" stroke-width="0.8">')
    for p, k in zip(d.positions, d.part_of):
        lines.append(f'<circle cx="{sx(p)}" cy="{sy(p)}" r="5" fill="{PALETTE[k % len(PALETTE)]}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
