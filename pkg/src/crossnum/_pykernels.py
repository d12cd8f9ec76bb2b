"""Pure-Python crossing kernels.

Reference backend, and the fallback when the compiled extension is absent.
Coordinates are integers (rational drawings are scaled to a common
denominator before they get here), so every predicate is exact.  Python ints
never overflow, so this backend handles coordinates of any size.
"""

from .errors import DegenerateConfiguration, VertexOnEdge

BACKEND = "python"


def edge_list(parts):
    n = len(parts)
    return [(u, v) for u in range(n) for v in range(u + 1, n) if parts[u] != parts[v]]


def _orient(xs, ys, a, b, c):
    d = (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])
    return (d > 0) - (d < 0)


def _inside(xs, ys, w, u, v):
    """True if point w lies strictly inside segment uv."""
    if _orient(xs, ys, u, v, w) != 0:
        return False
    dux, duy = xs[v] - xs[u], ys[v] - ys[u]
    return (
        (xs[w] - xs[u]) * dux + (ys[w] - ys[u]) * duy > 0
        and (xs[w] - xs[v]) * -dux + (ys[w] - ys[v]) * -duy > 0
    )


def _cross(xs, ys, a, b, c, d):
    o1 = _orient(xs, ys, a, b, c)
    o2 = _orient(xs, ys, a, b, d)
    if o1 == 0 or o2 == 0 or o1 == o2:
        return False
    o3 = _orient(xs, ys, c, d, a)
    o4 = _orient(xs, ys, c, d, b)
    return o3 != 0 and o4 != 0 and o3 != o4


def validate(xs, ys, parts):
    n = len(parts)
    seen = {}
    for i in range(n):
        key = (xs[i], ys[i])
        if key in seen:
            raise DegenerateConfiguration(f"vertices {seen[key]} and {i} coincide")
        seen[key] = i
    for u, v in edge_list(parts):
        for w in range(n):
            if w != u and w != v and _inside(xs, ys, w, u, v):
                raise VertexOnEdge(w, (u, v))


def scan(xs, ys, parts, collect=False):
    """Count proper crossings over all vertex-disjoint edge pairs.

    Returns ``(two_two, two_one_one, one_one_one_one, pairs)``; ``pairs`` is
    the list of crossing edge pairs when ``collect`` is set, else None.
    """
    validate(xs, ys, parts)
    edges = edge_list(parts)
    counts = [0, 0, 0, 0, 0]
    pairs = [] if collect else None
    m = len(edges)
    for i in range(m):
        a, b = edges[i]
        pa, pb = parts[a], parts[b]
        for j in range(i + 1, m):
            c, d = edges[j]
            if c == a or c == b or d == a or d == b:
                continue
            if _cross(xs, ys, a, b, c, d):
                counts[len({pa, pb, parts[c], parts[d]})] += 1
                if collect:
                    pairs.append(((a, b), (c, d)))
    return counts[2], counts[3], counts[4], pairs


def vertex_crossings(xs, ys, parts, v):
    """Crossings on edges incident to ``v``; -1 if ``v`` makes the drawing degenerate.

    Only the degeneracies that involve ``v`` are checked: ``v`` coinciding with
    another vertex, ``v`` inside an edge, or a vertex inside an edge at ``v``.
    """
    n = len(parts)
    pv = parts[v]
    for w in range(n):
        if w != v and xs[w] == xs[v] and ys[w] == ys[v]:
            return -1
    edges = edge_list(parts)
    for a, b in edges:
        if a != v and b != v:
            if _inside(xs, ys, v, a, b):
                return -1
        else:
            for w in range(n):
                if w != a and w != b and _inside(xs, ys, w, a, b):
                    return -1
    total = 0
    for w in range(n):
        if parts[w] == pv:
            continue
        for c, d in edges:
            if c == v or d == v or c == w or d == w:
                continue
            if _cross(xs, ys, v, w, c, d):
                total += 1
    return total
