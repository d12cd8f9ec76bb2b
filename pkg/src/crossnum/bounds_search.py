"""Lower-bound arithmetic and a stochastic rectilinear crossing minimiser."""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from . import kernels
from .constructions import alternating_3line, two_line
from .errors import DegenerateConfiguration
from .exact_geom import Point2, RectilinearDrawing, count_crossings
from .formulas import bound_A, known_small_cr
from .spherical import make_rng

log = logging.getLogger(__name__)

# 7-vertex sub-configurations have C(7, 4) = 35 four-point subsets
QUADRUPLES_IN_7 = 35


@dataclass(frozen=True)
class CountingBound:
    n: int
    total_weight: Fraction
    mult_22: Fraction
    mult_211: Fraction
    bound: Fraction
    ratio_to_A: Fraction


def counting_bound(n: int) -> CountingBound:
    """Double-counting lower bound on cr(K_{n,n,n}) from copies of K_{2,3,n}.

    Each copy carries at least cr(K_{2,3,n}) crossings; a crossing is seen by
    ``mult_22`` or ``mult_211`` copies depending on how its endpoints split
    across parts, so dividing by the larger multiplicity gives a valid bound
    at every finite n.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    copies = 6 * comb(n, 2) * comb(n, 3)
    total = Fraction(copies * known_small_cr((2, 3), n))
    m22 = Fraction(2 * ((n - 2) + comb(n, 3) + comb(n, 2) * (n - 2)))
    m211 = Fraction(2 * (comb(n - 1, 2) + (n - 1) * (n - 2) + (n - 1) * comb(n - 1, 2)))
    bound = total / max(m22, m211)
    return CountingBound(n, total, m22, m211, bound, bound / bound_A(n, n, n))


def flag_extrapolation(c) -> Fraction:
    """Coefficient of A(n,n,n) implied by an average of ``c`` crossings per K_{3,2,2}.

    Density c/35 per four-tuple, times C(3n,4) ~ 6 A(n,n,n) four-tuples.
    ``c`` may be an int, Fraction or decimal string; floats are converted via
    their shortest decimal repr.
    """
    c = Fraction(repr(c)) if isinstance(c, float) else Fraction(c)
    if not 0 <= c <= QUADRUPLES_IN_7:
        raise ValueError("c must lie in [0, 35]")
    return 6 * c / QUADRUPLES_IN_7


def naive_density_bound(min_c: int) -> Fraction:
    """Coefficient from the plain minimum over 7-vertex sub-drawings (no SDP)."""
    if min_c < 0:
        raise ValueError("min_c must be >= 0")
    return Fraction(6 * min_c, QUADRUPLES_IN_7)


# -- local search --------------------------------------------------------------


@dataclass
class SearchResult:
    best_drawing: RectilinearDrawing
    best_count: int
    iterations: int
    seed: int
    history: list = field(default_factory=list)
    best_restart: int = 0
    degenerate_rejections: int = 0


def _labels(part_sizes):
    return [i for i, s in enumerate(part_sizes) for _ in range(s)]


def _seeded_start(part_sizes):
    if len(part_sizes) == 3:
        d = alternating_3line(*part_sizes)
    elif len(part_sizes) == 2:
        d = two_line(*part_sizes)
    else:
        return None
    xs, ys = d.integer_coordinates()
    return xs, ys


def _random_start(parts, rng, grid):
    n = len(parts)
    while True:
        flat = rng.choice(grid * grid, size=n, replace=False)
        xs, ys = [int(v) for v in flat % grid], [int(v) for v in flat // grid]
        try:
            kernels.validate(xs, ys, parts)
            return xs, ys
        except DegenerateConfiguration:
            continue


# moves are drawn at a few scales relative to the drawing's extent
STEP_DIVISORS = (2, 8, 32)


def _search_restart(part_sizes, iterations, seed, restart, seeded):
    rng = make_rng(seed, restart)
    parts = _labels(part_sizes)
    n = len(parts)
    grid = 4 * n
    if seeded:
        xs, ys = _seeded_start(part_sizes)
    else:
        xs, ys = _random_start(parts, rng, grid)
    # moves stay inside the starting box padded by its own extent
    pad = max(max(xs) - min(xs), max(ys) - min(ys), grid)
    lo_x, hi_x, lo_y, hi_y = min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad
    current = sum(kernels.scan(xs, ys, parts)[:3])
    history = [(0, current)]
    rejected = 0
    it = 0
    for it in range(1, iterations + 1):
        if current == 0:
            it -= 1
            break
        v = int(rng.integers(n))
        span = max(max(xs) - min(xs), max(ys) - min(ys))
        step = max(1, span // STEP_DIVISORS[int(rng.integers(len(STEP_DIVISORS)))])
        dx, dy = (int(t) for t in rng.integers(-step, step + 1, size=2))
        nx, ny = xs[v] + dx, ys[v] + dy
        if (dx == 0 and dy == 0) or not (lo_x <= nx <= hi_x and lo_y <= ny <= hi_y):
            continue
        before = kernels.vertex_crossings(xs, ys, parts, v)
        ox, oy = xs[v], ys[v]
        xs[v], ys[v] = nx, ny
        after = kernels.vertex_crossings(xs, ys, parts, v)
        if after < 0:
            rejected += 1
            xs[v], ys[v] = ox, oy
        elif after < before:
            current += after - before
            history.append((it, current))
        elif after > before:
            xs[v], ys[v] = ox, oy
    return current, list(xs), list(ys), history, rejected, it


def minimize_crossings(
    part_sizes, iterations: int, restarts: int, seed: int, workers: int = 1, seeded_every: int = 4
) -> SearchResult:
    """Random-restart local search for a straight-line drawing with few crossings.

    Each restart makes single-vertex moves to nearby integer points and keeps
    any move that does not add crossings (sideways moves let it drift across
    plateaus); the best count only ever drops on strict improvements.
    Restart 0 and every ``seeded_every``-th after it start from the
    alternating 3-line (or 2-line) drawing, so the result never exceeds that
    drawing's count; ``seeded_every=0`` makes every start random.  Restart k
    draws from the stream keyed by (seed, k), so results do not depend on
    ``workers``.
    """
    part_sizes = tuple(int(s) for s in part_sizes)
    if sum(part_sizes) > 12:
        raise ValueError("desk-scale search needs at most 12 vertices")
    if iterations < 1 or restarts < 1:
        raise ValueError("iterations and restarts must be >= 1")
    has_seed = _seeded_start(part_sizes) is not None
    jobs = [(part_sizes, iterations, seed, k, has_seed and seeded_every > 0 and k % seeded_every == 0) for k in range(restarts)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_search_restart, *zip(*jobs)))
    else:
        results = [_search_restart(*j) for j in jobs]

    best_k = min(range(restarts), key=lambda k: (results[k][0], k))
    history, best, total_iters = [], None, 0
    for k, (count, _, _, hist, _, used) in enumerate(results):
        for it, c in hist:
            if best is None or c < best:
                best = c
                history.append((total_iters + it, c))
        total_iters += used
    count, xs, ys, *_ = results[best_k]
    drawing = RectilinearDrawing(part_sizes, tuple(Point2(x, y) for x, y in zip(xs, ys)))
    assert count_crossings(drawing).total == count
    return SearchResult(
        best_drawing=drawing,
        best_count=count,
        iterations=total_iters,
        seed=seed,
        history=history,
        best_restart=best_k,
        degenerate_rejections=sum(r[4] for r in results),
    )


# -- sampled crossing distribution --------------------------------------------


def _general_position(pts: np.ndarray) -> np.ndarray:
    """Mask of samples (S, N, 2) with no three collinear points (exact int64)."""
    n = pts.shape[1]
    ok = np.ones(pts.shape[0], dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a, b, c = pts[:, i], pts[:, j], pts[:, k]
                det = (b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0])
                ok &= det != 0
    return ok


def crossing_distribution(part_sizes, samples: int, seed: int, include_alternating: bool = False, grid: int = 10_000) -> Counter:
    """Histogram of crossing counts over random general-position integer drawings.

    With ``include_alternating`` the alternating 3-line drawing is added as one
    extra sample (it is not in general position, but it is a valid drawing).
    """
    part_sizes = tuple(int(s) for s in part_sizes)
    if sum(part_sizes) > 9:
        raise ValueError("at most 9 vertices")
    parts = _labels(part_sizes)
    rng = make_rng(seed)
    hist = Counter()
    drawn = 0
    while drawn < samples:
        pts = rng.integers(0, grid, size=(samples - drawn, len(parts), 2), dtype=np.int64)
        for p in pts[_general_position(pts)]:
            n22, n211, n1111, _ = kernels.scan(p[:, 0].tolist(), p[:, 1].tolist(), parts)
            hist[n22 + n211 + n1111] += 1
            drawn += 1
    if include_alternating and len(part_sizes) == 3:
        hist[count_crossings(alternating_3line(*part_sizes)).total] += 1
    return hist
