"""Identity checks run by ``crossnum verify``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from . import formulas as fm
from .bounds_search import counting_bound, flag_extrapolation
from .constructions import alternating_3line, convex_max, two_line
from .exact_geom import count_crossings
from .spherical import pair_crossing_probability, ratio_to_max


@dataclass
class Check:
    name: str
    ok: bool
    detail: str
    seconds: float


def _a_equals_a3l(m):
    bad = [(a, b, c) for a in range(1, m + 1) for b in range(1, m + 1) for c in range(1, m + 1)
           if fm.bound_A(a, b, c) != fm.bound_A3L(a, b, c)]
    return not bad, f"{m**3} triples, {len(bad)} mismatches"


def _small_cases(m):
    bad = [(fam, n) for fam in fm.KNOWN_FAMILIES for n in range(1, m + 1)
           if fm.bound_A(fam[0], fam[1], n) != fm.known_small_cr(fam, n)]
    return not bad, f"4 families x n<={m}, {len(bad)} mismatches"


def _alternating(m):
    bad = []
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            for c in range(1, m + 1):
                if count_crossings(alternating_3line(a, b, c)).total != fm.bound_A(a, b, c):
                    bad.append((a, b, c))
    k555 = count_crossings(alternating_3line(5, 5, 5)).total
    return not bad and k555 == 192, f"n_i<={m}: {len(bad)} mismatches; K_5,5,5 -> {k555}"


def _max_and_twoline(rmax, nmax, zmax):
    bad = [(r, n) for r in range(2, rmax + 1) for n in range(1, nmax + 1)
           if r * n >= 3 and count_crossings(convex_max(r, n)).total != fm.crmax(r, n)]
    bad += [(n, m) for n in range(1, zmax + 1) for m in range(1, zmax + 1)
            if count_crossings(two_line(n, m)).total != fm.zarankiewicz_Z(n, m)]
    return not bad, f"{len(bad)} mismatches"


def _zeta(rmax, n):
    worst = max(abs(ratio_to_max(r, n) - fm.zeta(r)) for r in range(2, 11))
    ident = all(fm.s_asymptotic_ratio(r) == fm.zeta(r) for r in range(2, rmax + 1))
    base = fm.zeta(2) == fm.zeta(3) == Fraction(1, 4)
    return worst < Fraction(1, 1000) and ident and base, f"max |ratio - zeta| = {float(worst):.2e}"


def _pair_probability(samples):
    p, se = pair_crossing_probability(samples, seed=20240101)
    return abs(p - 0.125) <= 4 * se, f"{p:.5f} +/- {se:.5f} over {samples} samples"


def _counting(n):
    r = counting_bound(n).ratio_to_A
    return abs(r - Fraction(2, 3)) < Fraction(1, 100), f"ratio_to_A({n}) = {float(r):.6f}"


def _flag():
    exact = flag_extrapolation(Fraction(1419186177261, 250000000000))
    approx = flag_extrapolation("5.6767")
    return approx > Fraction(973, 1000) and exact > Fraction(973, 1000), f"{float(approx):.5f}, exact {exact}"


def _floor_identities(m):
    ok = all(fm.floor_identity_a(a) for a in range(m + 1))
    ok &= all(fm.floor_identity_ab(a, b) for a in range(0, m + 1, max(1, m // 200)) for b in range(m + 1))
    return ok, f"a, b <= {m}"


def run_checks(quick: bool = False) -> list[Check]:
    plan = [
        ("A = A_3L", lambda: _a_equals_a3l(12 if quick else 50)),
        ("small-case cr formulas", lambda: _small_cases(100 if quick else 1000)),
        ("alternating 3-line = A", lambda: _alternating(5 if quick else 10)),
        ("convex = CRmax, 2-line = Z", lambda: _max_and_twoline(5, 3 if quick else 4, 8 if quick else 15)),
        ("spherical ratio -> zeta", lambda: _zeta(100, 1000)),
        ("pair crossing prob 1/8", lambda: _pair_probability(10**5 if quick else 10**6)),
        ("counting bound -> 2/3", lambda: _counting(10**4)),
        ("flag extrapolation > 0.973", _flag),
        ("floor identities", lambda: _floor_identities(1000 if quick else 10**4)),
    ]
    out = []
    for name, fn in plan:
        t = time.perf_counter()
        ok, detail = fn()
        out.append(Check(name, bool(ok), detail, time.perf_counter() - t))
    return out
