"""Closed-form crossing quantities, evaluated exactly.

Integer-valued quantities return ``int``; ratios return ``Fraction``.
Zero part sizes are accepted where a formula stays meaningful (an empty
part just drops out of the graph).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import UnknownFamily


def _f(n: int) -> int:
    """floor(n/2) * floor((n-1)/2), the per-part factor shared by Z, H and A."""
    return (n // 2) * ((n - 1) // 2)


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def zarankiewicz_Z(n: int, m: int) -> int:
    if n < 0 or m < 0:
        raise ValueError("sizes must be nonnegative")
    return _f(n) * _f(m)


def hill_H(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    prod = (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2)
    return prod // 4


def _rotations(n1, n2, n3):
    yield n1, n2, n3
    yield n2, n1, n3
    yield n3, n1, n2


def bound_A(n1: int, n2: int, n3: int) -> int:
    """Zarankiewicz-style upper bound for the complete tripartite graph."""
    return sum(_f(nj) * _f(nk) + _f(ni) * ((nj * nk) // 2) for ni, nj, nk in _rotations(n1, n2, n3))


def bound_A3L_parts(n1: int, n2: int, n3: int) -> tuple[int, int]:
    """The two brackets of the alternating 3-line count: (2,2)-type and (2,1,1)-type."""
    t22 = t211 = 0
    for ni, nj, nk in _rotations(n1, n2, n3):
        aj, bj = _ceil_half(nj), nj // 2
        ak, bk = _ceil_half(nk), nk // 2
        ai, bi = _ceil_half(ni), ni // 2
        t22 += (comb(aj, 2) + comb(bj, 2)) * (comb(ak, 2) + comb(bk, 2))
        t211 += (comb(ai, 2) + comb(bi, 2)) * (bj * ak + aj * bk)
    return t22, t211


def bound_A3L(n1: int, n2: int, n3: int) -> int:
    return sum(bound_A3L_parts(n1, n2, n3))


def crmax(r: int, n: int) -> int:
    """Maximum crossing number of the balanced complete r-partite graph, parts of size n."""
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    return comb(r, 2) * comb(n, 2) ** 2 + r * comb(r - 1, 2) * comb(n, 2) * n**2 + comb(r, 4) * n**4


def zeta(r: int) -> Fraction:
    if r < 2:
        raise ValueError("r must be >= 2")
    return Fraction(3 * (r * r - r), 8 * (r * r + r - 3))


def type_probabilities(r: int) -> tuple[Fraction, Fraction, Fraction]:
    """Asymptotic (n -> infinity) probabilities that four random vertices are of
    the zero-pair, two-pair and three-pair partition types."""
    if r < 2:
        raise ValueError("r must be >= 2")
    alpha = Fraction(4 * r - 3, r**3)
    gamma = Fraction((r - 1) * (r - 2) * (r - 3), r**3)
    return alpha, 1 - alpha - gamma, gamma


def s_asymptotic_ratio(r: int) -> Fraction:
    alpha, _, gamma = type_probabilities(r)
    return Fraction(1, 8) * (2 + gamma - 2 * alpha) / (1 - alpha)


KNOWN_FAMILIES = {
    (1, 3): lambda n: 2 * _f(n) + n // 2,
    (2, 3): lambda n: 4 * _f(n) + n,
    (1, 4): lambda n: n * (n - 1),
    (2, 4): lambda n: 6 * _f(n) + 2 * n,
}


def known_small_cr(family, n: int) -> int:
    """Published crossing numbers of K_{1,3,n}, K_{2,3,n}, K_{1,4,n}, K_{2,4,n}.

    ``family`` is the pair of fixed sizes, e.g. ``(2, 3)``; a trailing ``"n"``
    as in ``(2, 3, "n")`` is tolerated.
    """
    key = tuple(family[:2])
    if key not in KNOWN_FAMILIES or (len(family) == 3 and family[2] not in ("n", n)):
        raise UnknownFamily(f"no known closed form for {family}")
    if n < 1:
        raise ValueError("n must be >= 1")
    return KNOWN_FAMILIES[key](n)


def floor_identity_a(a: int) -> bool:
    return comb(_ceil_half(a), 2) + comb(a // 2, 2) == _f(a)


def floor_identity_ab(a: int, b: int) -> bool:
    return (a // 2) * _ceil_half(b) + _ceil_half(a) * (b // 2) == (a * b) // 2


@dataclass
class BoundTable:
    parameters: tuple
    entries: dict = field(default_factory=dict)

    def rows(self):
        return [(k, v) for k, v in self.entries.items()]


def bound_table(profile) -> BoundTable:
    """Every closed form that applies to ``profile`` (a tuple of part sizes).

    One size gives H for K_n; two give Z; three give A and A_3L; equal sizes
    add the balanced-graph quantities.
    """
    profile = tuple(int(p) for p in profile)
    t = BoundTable(parameters=profile)
    e = t.entries
    if len(profile) == 1:
        e["H"] = hill_H(profile[0])
        return t
    if len(profile) == 2:
        e["Z"] = zarankiewicz_Z(*profile)
    if len(profile) == 3:
        e["A"] = bound_A(*profile)
        e["A_3L"] = bound_A3L(*profile)
    if len(set(profile)) == 1 and profile[0] >= 1:
        r, n = len(profile), profile[0]
        alpha, beta, gamma = type_probabilities(r)
        e["CRmax"] = crmax(r, n)
        e["zeta"] = zeta(r)
        e["alpha"] = alpha
        e["beta"] = beta
        e["gamma"] = gamma
        e["s_asym"] = s_asymptotic_ratio(r)
    return t
