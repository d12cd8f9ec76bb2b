"""Random geodesic drawings on the unit sphere.

Vertices are unit vectors, edges minor great-circle arcs.  Predicates run in
double precision: crossing is an open condition and degenerate placements
have probability zero, so near-degenerate samples are rejected and redrawn.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import DegenerateArc
from .exact_geom import PartitionType, classify_quadruple
from .formulas import crmax, zeta

log = logging.getLogger(__name__)

PREDICATE_TOL = 1e-12
RESAMPLE_TOL = 1e-9


def make_rng(seed, *key) -> np.random.Generator:
    """PCG64 generator for ``seed``, optionally specialised by an integer key path."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), *map(int, key)])))


def sample_uniform_sphere(rng: np.random.Generator, size=None) -> np.ndarray:
    """Uniform point(s) on S^2 from normalised standard Gaussians.

    Returns shape ``(3,)`` when ``size`` is None, else ``(*size, 3)``.
    """
    shape = (3,) if size is None else (*np.atleast_1d(size), 3)
    g = rng.standard_normal(shape)
    norm = np.linalg.norm(g, axis=-1, keepdims=True)
    while np.any(norm == 0):  # pragma: no cover - measure zero
        g = np.where(norm == 0, rng.standard_normal(shape), g)
        norm = np.linalg.norm(g, axis=-1, keepdims=True)
    return g / norm


def arcs_cross(a1, a2, b1, b2, tol: float = PREDICATE_TOL) -> bool:
    """True iff minor arcs a1a2 and b1b2 share an interior point.

    Intersects the two great circles, then checks whether either of the two
    antipodal intersection points lies strictly inside both arcs.
    """
    a1, a2, b1, b2 = (np.asarray(p, dtype=float) for p in (a1, a2, b1, b2))
    for p, q in ((a1, b1), (a1, b2), (a2, b1), (a2, b2)):
        if np.linalg.norm(p - q) < RESAMPLE_TOL:
            return False  # incident arcs never cross
    na = np.cross(a1, a2)
    nb = np.cross(b1, b2)
    if np.linalg.norm(na) < RESAMPLE_TOL or np.linalg.norm(nb) < RESAMPLE_TOL:
        raise DegenerateArc("arc endpoints equal or antipodal")
    na, nb = na / np.linalg.norm(na), nb / np.linalg.norm(nb)
    d = np.cross(na, nb)
    if np.linalg.norm(d) < tol:
        raise DegenerateArc("arcs lie on the same great circle")
    d /= np.linalg.norm(d)

    def inside(p, s, t, n):
        return np.dot(np.cross(s, p), n) > tol and np.dot(np.cross(p, t), n) > tol

    return any(inside(s * d, a1, a2, na) and inside(s * d, b1, b2, nb) for s in (1.0, -1.0))


def _det(a, b, c):
    return np.einsum("...i,...i->...", np.cross(a, b), c)


def arcs_cross_batch(a1, a2, b1, b2, tol: float = PREDICATE_TOL):
    """Vectorised crossing test for arrays of arcs, shape ``(..., 3)`` each.

    Uses orientation signs: the arcs cross iff each separates the other's
    endpoints and det(a1,a2,b1) has the opposite sign of det(b1,b2,a1).
    Returns ``(crosses, ambiguous)`` boolean arrays; ``ambiguous`` marks
    determinants within ``tol`` of zero.
    """
    s1 = _det(a1, a2, b1)
    s2 = _det(a1, a2, b2)
    s3 = _det(b1, b2, a1)
    s4 = _det(b1, b2, a2)
    ambiguous = np.minimum(np.minimum(abs(s1), abs(s2)), np.minimum(abs(s3), abs(s4))) < tol
    crosses = (s1 * s2 < 0) & (s3 * s4 < 0) & (s1 * s3 < 0)
    return crosses & ~ambiguous, ambiguous


@dataclass(frozen=True)
class SphericalDrawing:
    part_sizes: tuple
    positions: np.ndarray  # (N, 3) unit vectors
    part_of: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "part_sizes", tuple(int(s) for s in self.part_sizes))
        if not self.part_of:
            labels = tuple(i for i, s in enumerate(self.part_sizes) for _ in range(s))
            object.__setattr__(self, "part_of", labels)
        pos = np.asarray(self.positions, dtype=float)
        if pos.shape != (sum(self.part_sizes), 3):
            raise ValueError("positions must be an (N, 3) array matching part sizes")
        object.__setattr__(self, "positions", pos)


def _well_separated(pos: np.ndarray) -> bool:
    g = pos @ pos.T
    np.fill_diagonal(g, 0.0)
    # |p - q|^2 = 2 - 2 p.q and |p + q|^2 = 2 + 2 p.q
    return bool(np.all(np.abs(g) < 1 - RESAMPLE_TOL**2 / 2))


def _separated_batch(pos: np.ndarray) -> np.ndarray:
    g = np.abs(np.einsum("bij,bkj->bik", pos, pos))
    g[:, np.arange(pos.shape[1]), np.arange(pos.shape[1])] = 0.0
    return (g < 1 - RESAMPLE_TOL**2 / 2).all(axis=(1, 2))


def random_spherical_drawing(part_sizes, rng: np.random.Generator) -> SphericalDrawing:
    total = sum(part_sizes)
    while True:
        pos = sample_uniform_sphere(rng, total)
        if _well_separated(pos):
            return SphericalDrawing(tuple(part_sizes), pos)
        log.info("resampling spherical drawing: near-equal or antipodal vertices")


def _edge_pairs(part_of):
    """Edges ``(E, 2)`` and vertex-disjoint edge pairs ``(P, 2)`` as edge indices."""
    parts = np.asarray(part_of)
    u, v = np.triu_indices(len(parts), 1)
    keep = parts[u] != parts[v]
    edges = np.stack([u[keep], v[keep]], axis=1)
    i, j = np.triu_indices(len(edges), 1)
    ei, ej = edges[i], edges[j]
    disjoint = (ei[:, :1] != ej).all(axis=1) & (ei[:, 1:] != ej).all(axis=1)
    return edges, np.stack([i[disjoint], j[disjoint]], axis=1)


def disjoint_pair_indices(part_of) -> np.ndarray:
    """Rows ``(a, b, c, d)`` for each unordered pair of vertex-disjoint edges ab, cd."""
    edges, pairs = _edge_pairs(part_of)
    return np.concatenate([edges[pairs[:, 0]], edges[pairs[:, 1]]], axis=1)


def _count_batch(pos: np.ndarray, structure):
    """Crossings per drawing for positions of shape (B, N, 3).

    Builds every det(a, b, w) = (a x b) . w for edge ab and vertex w once,
    then reads the four signs of each pair out of that table.
    """
    edges, pairs = structure
    b = pos.shape[0]
    if len(pairs) == 0:
        return np.zeros(b, dtype=np.int64), np.zeros(b, dtype=bool)
    normals = np.cross(pos[:, edges[:, 0]], pos[:, edges[:, 1]])
    table = np.einsum("bei,bvi->bev", normals, pos)
    e1, e2 = pairs[:, 0], pairs[:, 1]
    s1 = table[:, e1, edges[e2, 0]]
    s2 = table[:, e1, edges[e2, 1]]
    s3 = table[:, e2, edges[e1, 0]]
    s4 = table[:, e2, edges[e1, 1]]
    amb = np.minimum(np.minimum(abs(s1), abs(s2)), np.minimum(abs(s3), abs(s4))) < PREDICATE_TOL
    crosses = (s1 * s2 < 0) & (s3 * s4 < 0) & (s1 * s3 < 0) & ~amb
    return crosses.sum(axis=1), amb.any(axis=1)


def count_geodesic_crossings(d: SphericalDrawing) -> int:
    counts, amb = _count_batch(d.positions[None], _edge_pairs(d.part_of))
    if amb[0]:
        raise DegenerateArc("near-degenerate arc pair; resample the drawing")
    return int(counts[0])


def geodesic_crossings_by_type(d: SphericalDrawing) -> dict:
    idx = disjoint_pair_indices(d.part_of)
    crosses, amb = arcs_cross_batch(*(d.positions[idx[:, k]] for k in range(4)))
    if amb.any():
        raise DegenerateArc("near-degenerate arc pair; resample the drawing")
    out = {}
    for row in idx[crosses]:
        t = classify_quadruple([d.part_of[k] for k in row])
        out[t] = out.get(t, 0) + 1
    return out


def disjoint_edge_pairs(r: int, n: int) -> int:
    """Unordered vertex-disjoint edge pairs in the balanced complete r-partite graph."""
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    edges = comb(r, 2) * n * n
    return comb(edges, 2) - r * n * comb((r - 1) * n, 2)


def exact_expected_crossings(r: int, n: int) -> Fraction:
    # each disjoint pair crosses with probability 1/8
    return Fraction(disjoint_edge_pairs(r, n), 8)


def ratio_to_max(r: int, n: int) -> Fraction:
    m = crmax(r, n)
    if m == 0:
        raise ZeroDivisionError(f"K_{r}x{n} admits no crossing")
    return exact_expected_crossings(r, n) / m


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    trials: int
    seed: int
    workers: int = 1
    resampled: int = 0


def _mc_chunk(part_sizes, trials, seed, worker, batch):
    rng = make_rng(seed, worker)
    part_of = tuple(i for i, s in enumerate(part_sizes) for _ in range(s))
    structure = _edge_pairs(part_of)
    total = sum(part_sizes)
    if len(structure[1]):
        batch = max(1, min(batch, 4_000_000 // len(structure[1])))
    s = s2 = 0.0
    done = resampled = 0
    while done < trials:
        b = min(batch, trials - done)
        pos = sample_uniform_sphere(rng, (b, total))
        ok = _separated_batch(pos)
        counts, amb = _count_batch(pos, structure)
        ok &= ~amb
        resampled += int(b - ok.sum())
        c = counts[ok].astype(float)
        s += c.sum()
        s2 += (c * c).sum()
        done += int(ok.sum())
    return s, s2, done, resampled


def monte_carlo_s(r: int, n: int, trials: int, seed: int, workers: int = 1, batch: int = 256) -> McEstimate:
    """Monte Carlo estimate of the expected geodesic crossing count of K_{r x n}.

    Trials are split across ``workers``; worker k draws from the stream keyed by
    (seed, k), so output is deterministic for a fixed worker count.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    workers = max(1, min(workers, trials))
    sizes = (n,) * r
    shares = [trials // workers + (k < trials % workers) for k in range(workers)]
    if workers == 1:
        parts = [_mc_chunk(sizes, shares[0], seed, 0, batch)]
    else:
        with ProcessPoolExecutor(workers) as ex:
            futs = [ex.submit(_mc_chunk, sizes, shares[k], seed, k, batch) for k in range(workers)]
            parts = [f.result() for f in futs]
    s = sum(p[0] for p in parts)
    s2 = sum(p[1] for p in parts)
    resampled = sum(p[3] for p in parts)
    if resampled:
        log.info("monte_carlo_s(r=%d, n=%d): resampled %d degenerate drawings", r, n, resampled)
    mean = s / trials
    if trials > 1:
        var = max(s2 - trials * mean * mean, 0.0) / (trials - 1)
        se = math.sqrt(var / trials)
    else:
        se = float("nan")
    return McEstimate(mean=mean, std_error=se, trials=trials, seed=seed, workers=workers, resampled=resampled)


def zeta_ratio_row(r: int, n: int, est: McEstimate) -> dict:
    """One row of the ``crossnum sphere`` CSV: estimate, exact mean, ratio to CRmax, zeta."""
    m = crmax(r, n)
    return {
        "r": r,
        "n": n,
        "trials": est.trials,
        "mean": f"{est.mean:.6f}",
        "std_error": f"{est.std_error:.6f}",
        "exact": f"{float(exact_expected_crossings(r, n)):.6f}",
        "ratio": f"{est.mean / m:.6f}" if m else "nan",
        "zeta": f"{float(zeta(r)):.6f}",
        "seed": est.seed,
    }


def pair_crossing_probability(samples: int, seed: int, batch: int = 200_000) -> tuple[float, float]:
    """Fraction of random disjoint arc pairs that cross, with its standard error."""
    rng = make_rng(seed)
    hits = done = 0
    while done < samples:
        b = min(batch, samples - done)
        p = sample_uniform_sphere(rng, (b, 4))
        crosses, amb = arcs_cross_batch(p[:, 0], p[:, 1], p[:, 2], p[:, 3])
        ok = ~amb
        hits += int(crosses[ok].sum())
        done += int(ok.sum())
    frac = hits / done
    return frac, math.sqrt(frac * (1 - frac) / done)


__all__ = [
    "McEstimate",
    "PartitionType",
    "SphericalDrawing",
    "arcs_cross",
    "arcs_cross_batch",
    "count_geodesic_crossings",
    "disjoint_edge_pairs",
    "exact_expected_crossings",
    "geodesic_crossings_by_type",
    "monte_carlo_s",
    "pair_crossing_probability",
    "random_spherical_drawing",
    "ratio_to_max",
    "sample_uniform_sphere",
    "zeta_ratio_row",
]
