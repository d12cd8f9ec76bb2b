"""Exact rational planar geometry for multipartite rectilinear drawings.

Coordinates are :class:`fractions.Fraction`; no tolerance is used anywhere.
Counting scales a drawing to a common denominator and hands integer
coordinates to :mod:`crossnum.kernels`.
"""

from __future__ import annotations

import enum
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import kernels
from .errors import DegenerateConfiguration

ExactScalar = Fraction


def to_exact(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` / decimal strings to a Fraction.

    Floats are refused: they would smuggle rounding into exact code.
    """
    if isinstance(value, float):
        raise TypeError("float coordinates are not exact; pass a Fraction or 'p/q' string")
    return Fraction(value)


@dataclass(frozen=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_exact(self.x))
        object.__setattr__(self, "y", to_exact(self.y))


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class PartitionType(str, enum.Enum):
    FOUR = "FOUR"
    THREE_ONE = "THREE_ONE"
    TWO_TWO = "TWO_TWO"
    TWO_ONE_ONE = "TWO_ONE_ONE"
    ONE_ONE_ONE_ONE = "ONE_ONE_ONE_ONE"

    @property
    def disjoint_pairs(self) -> int:
        """Number of vertex-disjoint edge pairs four such vertices span."""
        return _DISJOINT_PAIRS[self]


_DISJOINT_PAIRS = {
    PartitionType.FOUR: 0,
    PartitionType.THREE_ONE: 0,
    PartitionType.TWO_TWO: 2,
    PartitionType.TWO_ONE_ONE: 2,
    PartitionType.ONE_ONE_ONE_ONE: 3,
}

CROSSING_TYPES = (PartitionType.TWO_TWO, PartitionType.TWO_ONE_ONE, PartitionType.ONE_ONE_ONE_ONE)


def classify_quadruple(parts: Sequence[int]) -> PartitionType:
    if len(parts) != 4:
        raise ValueError("need exactly four part labels")
    shape = tuple(sorted(Counter(parts).values(), reverse=True))
    return {
        (4,): PartitionType.FOUR,
        (3, 1): PartitionType.THREE_ONE,
        (2, 2): PartitionType.TWO_TWO,
        (2, 1, 1): PartitionType.TWO_ONE_ONE,
        (1, 1, 1, 1): PartitionType.ONE_ONE_ONE_ONE,
    }[shape]


def _cross(p: Point2, q: Point2, r: Point2) -> Fraction:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orient(p: Point2, q: Point2, r: Point2) -> Orientation:
    """Sign of (q - p) x (r - p)."""
    d = _cross(p, q, r)
    return Orientation((d > 0) - (d < 0))


def _strictly_between(p: Point2, a: Point2, b: Point2) -> bool:
    # assumes p collinear with ab
    return (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y) > 0 and (
        (p.x - b.x) * (a.x - b.x) + (p.y - b.y) * (a.y - b.y) > 0
    )


def segments_cross_properly(a1: Point2, a2: Point2, b1: Point2, b2: Point2) -> bool:
    """True iff the open segments a1a2 and b1b2 meet in exactly one interior point.

    Shared endpoints and touching return False.  Collinear segments that
    overlap in more than a point raise :class:`DegenerateConfiguration`.
    """
    if a1 == a2 or b1 == b2:
        raise ValueError("segment endpoints must differ")
    o1, o2 = orient(a1, a2, b1), orient(a1, a2, b2)
    o3, o4 = orient(b1, b2, a1), orient(b1, b2, a2)
    if o1 == o2 == 0:
        # all four collinear: overlap iff some endpoint is inside the other segment
        # or the segments coincide
        if {a1, a2} == {b1, b2} or any(
            _strictly_between(p, s, t)
            for p, (s, t) in ((b1, (a1, a2)), (b2, (a1, a2)), (a1, (b1, b2)), (a2, (b1, b2)))
        ):
            raise DegenerateConfiguration("collinear segments overlap")
        return False
    return o1 * o2 < 0 and o3 * o4 < 0


@dataclass(frozen=True)
class RectilinearDrawing:
    """Straight-line drawing of the complete multipartite graph on ``part_sizes``.

    ``positions`` lists vertices part by part unless ``part_of`` says
    otherwise.  Edges are implicit: every pair of vertices in distinct parts.
    """

    part_sizes: tuple[int, ...]
    positions: tuple[Point2, ...]
    part_of: tuple[int, ...] = field(default=())

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.part_sizes)
        object.__setattr__(self, "part_sizes", sizes)
        object.__setattr__(self, "positions", tuple(self.positions))
        if not self.part_of:
            object.__setattr__(self, "part_of", tuple(i for i, s in enumerate(sizes) for _ in range(s)))
        else:
            object.__setattr__(self, "part_of", tuple(int(p) for p in self.part_of))
        if len(sizes) < 2 or any(s < 1 for s in sizes):
            raise ValueError(f"need at least two positive part sizes, got {sizes}")
        if len(self.positions) != sum(sizes):
            raise ValueError("number of positions does not match part sizes")
        if Counter(self.part_of) != Counter({i: s for i, s in enumerate(sizes)}):
            raise ValueError("part labels do not match part sizes")
        if len(set(self.positions)) != len(self.positions):
            raise DegenerateConfiguration("drawing has coincident vertices")

    @property
    def num_vertices(self) -> int:
        return len(self.positions)

    def edges(self) -> list[tuple[int, int]]:
        return kernels.edge_list(self.part_of)

    def integer_coordinates(self) -> tuple[list[int], list[int]]:
        """Coordinates scaled by the lcm of all denominators (orientation-preserving)."""
        scale = 1
        for p in self.positions:
            scale = math.lcm(scale, p.x.denominator, p.y.denominator)
        xs = [int(p.x * scale) for p in self.positions]
        ys = [int(p.y * scale) for p in self.positions]
        return xs, ys

    def to_json(self) -> dict:
        return drawing_to_json(self)


@dataclass(frozen=True)
class CrossingReport:
    total: int
    by_type: dict
    crossing_list: list | None = None

    def to_json(self) -> dict:
        out = {
            "schema": 1,
            "total": self.total,
            "by_type": {t.value: self.by_type.get(t, 0) for t in CROSSING_TYPES},
        }
        if self.crossing_list is not None:
            out["crossings"] = [[list(e), list(f)] for e, f in self.crossing_list]
        return out


def count_crossings(d: RectilinearDrawing, collect: bool = False, backend: str = "auto") -> CrossingReport:
    """Count properly crossing pairs of vertex-disjoint edges by an all-pairs scan.

    Raises :class:`VertexOnEdge` if a vertex sits inside a non-incident edge.
    """
    xs, ys = d.integer_coordinates()
    n22, n211, n1111, pairs = kernels.scan(xs, ys, d.part_of, collect, backend=backend)
    by_type = {
        PartitionType.TWO_TWO: n22,
        PartitionType.TWO_ONE_ONE: n211,
        PartitionType.ONE_ONE_ONE_ONE: n1111,
    }
    return CrossingReport(total=n22 + n211 + n1111, by_type=by_type, crossing_list=pairs)


def intersection_point(a1: Point2, a2: Point2, b1: Point2, b2: Point2) -> Point2:
    """Exact intersection of the lines through a1a2 and b1b2 (must not be parallel)."""
    dx1, dy1 = a2.x - a1.x, a2.y - a1.y
    dx2, dy2 = b2.x - b1.x, b2.y - b1.y
    den = dx1 * dy2 - dy1 * dx2
    if den == 0:
        raise DegenerateConfiguration("parallel lines")
    t = ((b1.x - a1.x) * dy2 - (b1.y - a1.y) * dx2) / den
    return Point2(a1.x + t * dx1, a1.y + t * dy1)


# -- drawing file format -------------------------------------------------------


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def drawing_to_json(d: RectilinearDrawing) -> dict:
    return {
        "schema": 1,
        "part_sizes": list(d.part_sizes),
        "points": [
            {"x": format_rational(p.x), "y": format_rational(p.y), "part": k}
            for p, k in zip(d.positions, d.part_of)
        ],
    }


def drawing_from_json(obj: dict) -> RectilinearDrawing:
    pts = obj["points"]
    for p in pts:
        for key in ("x", "y"):
            if isinstance(p[key], float):
                raise ValueError("coordinates must be exact 'p/q' strings or integers")
    return RectilinearDrawing(
        part_sizes=tuple(obj["part_sizes"]),
        positions=tuple(Point2(Fraction(p["x"]), Fraction(p["y"])) for p in pts),
        part_of=tuple(int(p["part"]) for p in pts),
    )


def save_drawing(d: RectilinearDrawing, path) -> None:
    with open(path, "w") as fh:
        json.dump(drawing_to_json(d), fh, indent=1)
        fh.write("\n")


def load_drawing(path) -> RectilinearDrawing:
    with open(path) as fh:
        return drawing_from_json(json.load(fh))
