# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled crossing kernels on int64 coordinates.

Same contract as ``crossnum._pykernels``.  Callers must keep every
coordinate within +/-2**29 so that cross and dot products fit in int64;
``crossnum.kernels`` enforces that bound and routes larger inputs to the
pure-Python backend.
"""

import numpy as np

from crossnum.errors import DegenerateConfiguration, VertexOnEdge

BACKEND = "cython"

ctypedef long long i64


cdef inline int _orient(const i64[:] xs, const i64[:] ys, Py_ssize_t a, Py_ssize_t b, Py_ssize_t c) noexcept nogil:
    cdef i64 d = (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])
    return (d > 0) - (d < 0)


cdef inline bint _inside(const i64[:] xs, const i64[:] ys, Py_ssize_t w, Py_ssize_t u, Py_ssize_t v) noexcept nogil:
    cdef i64 dux, duy
    if _orient(xs, ys, u, v, w) != 0:
        return False
    dux = xs[v] - xs[u]
    duy = ys[v] - ys[u]
    return ((xs[w] - xs[u]) * dux + (ys[w] - ys[u]) * duy > 0
            and (xs[v] - xs[w]) * dux + (ys[v] - ys[w]) * duy > 0)


cdef inline bint _cross(const i64[:] xs, const i64[:] ys, Py_ssize_t a, Py_ssize_t b, Py_ssize_t c, Py_ssize_t d) noexcept nogil:
    cdef int o1 = _orient(xs, ys, a, b, c)
    cdef int o2 = _orient(xs, ys, a, b, d)
    cdef int o3, o4
    if o1 == 0 or o2 == 0 or o1 == o2:
        return False
    o3 = _orient(xs, ys, c, d, a)
    o4 = _orient(xs, ys, c, d, b)
    return o3 != 0 and o4 != 0 and o3 != o4


def edge_list(parts):
    n = len(parts)
    return [(u, v) for u in range(n) for v in range(u + 1, n) if parts[u] != parts[v]]


def _edges_array(const i64[:] parts):
    cdef Py_ssize_t n = parts.shape[0], u, v, k = 0
    out = np.empty((n * (n - 1) // 2, 2), dtype=np.int64)
    cdef i64[:, :] e = out
    for u in range(n):
        for v in range(u + 1, n):
            if parts[u] != parts[v]:
                e[k, 0] = u
                e[k, 1] = v
                k += 1
    return out[:k]


def validate(const i64[:] xs, const i64[:] ys, const i64[:] parts):
    cdef Py_ssize_t n = parts.shape[0], i, j, k, w, u, v
    for i in range(n):
        for j in range(i + 1, n):
            if xs[i] == xs[j] and ys[i] == ys[j]:
                raise DegenerateConfiguration(f"vertices {i} and {j} coincide")
    cdef i64[:, :] e = _edges_array(parts)
    for k in range(e.shape[0]):
        u = e[k, 0]
        v = e[k, 1]
        for w in range(n):
            if w != u and w != v and _inside(xs, ys, w, u, v):
                raise VertexOnEdge(w, (u, v))


def scan(const i64[:] xs, const i64[:] ys, const i64[:] parts, bint collect=False):
    validate(xs, ys, parts)
    cdef i64[:, :] e = _edges_array(parts)
    cdef Py_ssize_t m = e.shape[0], i, j, a, b, c, d
    cdef i64 pa, pb, pc, pd
    cdef i64 counts[5]
    cdef int distinct
    counts[:] = [0, 0, 0, 0, 0]
    pairs = [] if collect else None
    for i in range(m):
        a = e[i, 0]
        b = e[i, 1]
        pa = parts[a]
        pb = parts[b]
        for j in range(i + 1, m):
            c = e[j, 0]
            d = e[j, 1]
            if c == a or c == b or d == a or d == b:
                continue
            if _cross(xs, ys, a, b, c, d):
                pc = parts[c]
                pd = parts[d]
                # pa != pb and pc != pd, so only the cross matches matter
                distinct = 4 - ((pc == pa or pc == pb) + (pd == pa or pd == pb))
                counts[distinct] += 1
                if collect:
                    pairs.append(((a, b), (c, d)))
    return counts[2], counts[3], counts[4], pairs


cdef i64 _vertex_crossings(const i64[:] xs, const i64[:] ys, const i64[:] parts,
                           const i64[:, :] e, Py_ssize_t v) noexcept nogil:
    cdef Py_ssize_t n = parts.shape[0], m = e.shape[0], w, k, a, b, c, d
    cdef i64 pv = parts[v]
    cdef i64 total = 0
    for w in range(n):
        if w != v and xs[w] == xs[v] and ys[w] == ys[v]:
            return -1
    for k in range(m):
        a = e[k, 0]
        b = e[k, 1]
        if a != v and b != v:
            if _inside(xs, ys, v, a, b):
                return -1
        else:
            for w in range(n):
                if w != a and w != b and _inside(xs, ys, w, a, b):
                    return -1
    for w in range(n):
        if parts[w] == pv:
            continue
        for k in range(m):
            c = e[k, 0]
            d = e[k, 1]
            if c == v or d == v or c == w or d == w:
                continue
            if _cross(xs, ys, v, w, c, d):
                total += 1
    return total


def vertex_crossings(const i64[:] xs, const i64[:] ys, const i64[:] parts, Py_ssize_t v):
    cdef const i64[:, :] e = _edges_array(parts)
    cdef i64 result
    with nogil:
        result = _vertex_crossings(xs, ys, parts, e, v)
    return result
