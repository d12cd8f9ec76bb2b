import random

import pytest

from crossnum import _pykernels, kernels
from crossnum.errors import DegenerateConfiguration, VertexOnEdge

from oracles import multipartite_labels

needs_compiled = pytest.mark.skipif(not kernels.has_compiled(), reason="compiled extension not built")


def _drawing(rng, sizes, span):
    pts = rng.sample([(x, y) for x in range(span) for y in range(span)], sum(sizes))
    return [p[0] for p in pts], [p[1] for p in pts], multipartite_labels(sizes)


def _outcome(fn, *args):
    try:
        return fn(*args)
    except VertexOnEdge:
        return "vertex-on-edge"
    except DegenerateConfiguration:
        return "degenerate"


@needs_compiled
@pytest.mark.parametrize("seed", range(40))
def test_backends_agree(seed):
    rng = random.Random(seed)
    sizes = rng.choice([(2, 2), (3, 3, 2), (4, 3, 3), (2, 2, 2, 2), (5, 1, 3)])
    xs, ys, parts = _drawing(rng, sizes, 5)
    py = _outcome(kernels.scan, xs, ys, parts, True, "python")
    cy = _outcome(kernels.scan, xs, ys, parts, True, "cython")
    assert py == cy
    for v in range(len(parts)):
        assert kernels.vertex_crossings(xs, ys, parts, v, "python") == kernels.vertex_crossings(xs, ys, parts, v, "cython")


@needs_compiled
def test_duplicate_points_rejected_by_both():
    for backend in ("python", "cython"):
        with pytest.raises(DegenerateConfiguration):
            kernels.scan([0, 0, 1], [0, 0, 1], [0, 1, 2], backend=backend)
        assert kernels.vertex_crossings([0, 0, 1], [0, 0, 1], [0, 1, 2], 0, backend) == -1


@pytest.mark.parametrize("seed", range(30))
def test_vertex_crossings_gives_move_delta(seed):
    rng = random.Random(seed)
    while True:
        xs, ys, parts = _drawing(rng, (3, 3, 3), 40)
        try:
            before = sum(kernels.scan(xs, ys, parts)[:3])
            break
        except DegenerateConfiguration:
            continue
    v = rng.randrange(len(parts))
    vc_before = kernels.vertex_crossings(xs, ys, parts, v)
    xs[v], ys[v] = rng.randrange(40), rng.randrange(40)
    vc_after = kernels.vertex_crossings(xs, ys, parts, v)
    try:
        after = sum(kernels.scan(xs, ys, parts)[:3])
    except DegenerateConfiguration:
        assert vc_after == -1
        return
    assert vc_after >= 0
    assert after - before == vc_after - vc_before


def test_large_coordinates_route_to_python():
    big = 1 << 40
    xs, ys, parts = [0, big, 0, big], [0, big, big, 0], [0, 0, 1, 1]
    # the unit square scaled by 2**40 with consecutive parts: one crossing
    assert kernels.scan([0, big, big, 0], [0, 0, big, big], parts)[0] == 1
    assert kernels._pick(xs, ys, "auto")[0] is _pykernels
