import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossnum import formulas as fm
from crossnum.errors import DegenerateArc
from crossnum.exact_geom import PartitionType
from crossnum.spherical import (
    SphericalDrawing,
    arcs_cross,
    arcs_cross_batch,
    count_geodesic_crossings,
    disjoint_edge_pairs,
    exact_expected_crossings,
    geodesic_crossings_by_type,
    make_rng,
    monte_carlo_s,
    random_spherical_drawing,
    ratio_to_max,
    sample_uniform_sphere,
)

from oracles import enumerate_disjoint_pairs

S3 = 1 / math.sqrt(3)


def test_samples_are_unit_vectors():
    pts = sample_uniform_sphere(make_rng(0), 1000)
    assert pts.shape == (1000, 3)
    assert np.allclose(np.linalg.norm(pts, axis=1), 1.0, atol=1e-12, rtol=0)
    assert sample_uniform_sphere(make_rng(0)).shape == (3,)


def test_sample_moments():
    n = 10**6
    pts = sample_uniform_sphere(make_rng(11), n)
    sigma = 1 / math.sqrt(3 * n)
    assert np.all(np.abs(pts.mean(axis=0)) < 4 * sigma)
    # second moments of each coordinate are 1/3
    assert np.allclose((pts**2).mean(axis=0), 1 / 3, atol=5e-3)


def test_sampling_is_seed_deterministic():
    a = sample_uniform_sphere(make_rng(42), 50)
    b = sample_uniform_sphere(make_rng(42), 50)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, sample_uniform_sphere(make_rng(43), 50))


def test_arcs_cross_analytic_examples():
    x, y, z = np.eye(3)
    assert arcs_cross(x, y, np.array([1, 1, 1]) * S3, np.array([1, 1, -1]) * S3)
    assert not arcs_cross(x, y, z, np.array([1, 1, 1]) * S3)
    assert not arcs_cross(x, y, y, z)


def test_arcs_cross_degenerate():
    x, y, z = np.eye(3)
    with pytest.raises(DegenerateArc):
        arcs_cross(x, -x, y, z)
    # both arcs on the equator
    with pytest.raises(DegenerateArc):
        arcs_cross(x, y, -x, (-x - y) / math.sqrt(2))


def test_k11_plus_isolated_has_no_crossings():
    d = SphericalDrawing((1, 1, 1, 1), sample_uniform_sphere(make_rng(3), 4))
    assert count_geodesic_crossings(d) >= 0
    two = SphericalDrawing((1, 1), sample_uniform_sphere(make_rng(3), 2))
    assert count_geodesic_crossings(two) == 0


def test_k22_antipodal_is_degenerate():
    pos = np.array([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0]], dtype=float)
    with pytest.raises(DegenerateArc):
        count_geodesic_crossings(SphericalDrawing((2, 2), pos))


@pytest.mark.parametrize("r,n", [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3), (4, 1), (4, 2), (3, 3), (5, 2)])
def test_disjoint_edge_pairs_matches_enumeration(r, n):
    assert disjoint_edge_pairs(r, n) == enumerate_disjoint_pairs(r, n)


def test_disjoint_edge_pairs_examples():
    assert disjoint_edge_pairs(2, 2) == 2
    assert disjoint_edge_pairs(2, 1) == 0
    assert disjoint_edge_pairs(3, 1) == 0


def test_exact_expected_crossings():
    assert exact_expected_crossings(2, 2) == Fraction(1, 4)
    assert exact_expected_crossings(3, 1) == 0
    assert exact_expected_crossings(3, 3) == Fraction(enumerate_disjoint_pairs(3, 3), 8)


def _rotation(rng):
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_arcs_cross_rotation_invariant(seed):
    rng = make_rng(seed)
    pts = sample_uniform_sphere(rng, 4)
    rot = _rotation(rng)
    assert np.allclose(rot @ rot.T, np.eye(3), atol=1e-9)
    assert arcs_cross(*pts) == arcs_cross(*(pts @ rot.T))


def test_scalar_and_batch_routes_agree():
    p = sample_uniform_sphere(make_rng(5), (5000, 4))
    crosses, amb = arcs_cross_batch(p[:, 0], p[:, 1], p[:, 2], p[:, 3])
    assert not amb.any()
    scalar = np.array([arcs_cross(*row) for row in p])
    assert np.array_equal(scalar, crosses)
    assert 0.09 < crosses.mean() < 0.16


def test_drawing_count_matches_scalar_predicate():
    rng = make_rng(8)
    d = random_spherical_drawing((3, 2, 2), rng)
    edges = [(u, v) for u in range(7) for v in range(u + 1, 7) if d.part_of[u] != d.part_of[v]]
    ref = sum(
        arcs_cross(*d.positions[[a, b, c, e]])
        for i, (a, b) in enumerate(edges) for (c, e) in edges[i + 1:]
        if not {a, b} & {c, e}
    )
    assert count_geodesic_crossings(d) == ref


def test_only_crossable_types_contribute():
    rng = make_rng(9)
    seen = set()
    for _ in range(30):
        d = random_spherical_drawing((3, 3, 2, 2), rng)
        by_type = geodesic_crossings_by_type(d)
        assert sum(by_type.values()) == count_geodesic_crossings(d)
        seen |= set(by_type)
    assert PartitionType.FOUR not in seen and PartitionType.THREE_ONE not in seen
    assert PartitionType.ONE_ONE_ONE_ONE in seen


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_monte_carlo_matches_exact(r, n):
    est = monte_carlo_s(r, n, 10_000, seed=1000 * r + n)
    exact = float(exact_expected_crossings(r, n))
    if exact == 0:
        assert est.mean == 0
    else:
        assert abs(est.mean - exact) <= 4 * est.std_error


@pytest.mark.slow
@pytest.mark.parametrize("r,n,trials", [(5, 3, 10_000), (6, 2, 10_000), (5, 8, 2000), (6, 10, 500), (2, 30, 2000)])
def test_monte_carlo_matches_exact_larger(r, n, trials):
    est = monte_carlo_s(r, n, trials, seed=7)
    assert abs(est.mean - float(exact_expected_crossings(r, n))) <= 4 * est.std_error


def test_monte_carlo_triangle_is_zero():
    est = monte_carlo_s(3, 1, 200, seed=4)
    assert est.mean == 0 and est.std_error == 0


def test_monte_carlo_deterministic_and_worker_split():
    a = monte_carlo_s(3, 2, 600, seed=5)
    b = monte_carlo_s(3, 2, 600, seed=5)
    assert a == b
    w1 = monte_carlo_s(3, 2, 600, seed=5, workers=2)
    w2 = monte_carlo_s(3, 2, 600, seed=5, workers=2)
    assert w1 == w2 and w1.workers == 2
    assert math.isnan(monte_carlo_s(2, 2, 1, seed=5).std_error)
    with pytest.raises(ValueError):
        monte_carlo_s(2, 2, 0, seed=5)


def test_ratio_to_max_converges_to_zeta():
    assert ratio_to_max(2, 1000) - Fraction(1, 4) == 0
    assert ratio_to_max(3, 1000) - Fraction(1, 4) == 0
    for r in range(2, 11):
        z = fm.zeta(r)
        assert abs(ratio_to_max(r, 1000) - z) < Fraction(1, 1000)
        assert abs(ratio_to_max(r, 100) - z) <= abs(ratio_to_max(r, 4) - z)


def test_ratio_to_max_without_crossings():
    with pytest.raises(ZeroDivisionError):
        ratio_to_max(3, 1)
    with pytest.raises(ZeroDivisionError):
        ratio_to_max(2, 1)
