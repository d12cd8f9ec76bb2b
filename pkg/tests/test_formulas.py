import itertools
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from crossnum import formulas as fm
from crossnum.errors import UnknownFamily

from oracles import enumerate_crossable_quadruples, enumerate_type_probabilities


def test_zarankiewicz():
    assert fm.zarankiewicz_Z(3, 3) == 1
    assert fm.zarankiewicz_Z(5, 5) == 16
    assert fm.zarankiewicz_Z(4, 5) == 8
    assert all(fm.zarankiewicz_Z(1, m) == 0 for m in range(20))


def test_hill():
    assert [fm.hill_H(n) for n in (4, 5, 7)] == [0, 1, 9]
    # K_5..K_10 values of H
    assert [fm.hill_H(n) for n in range(5, 11)] == [1, 3, 9, 18, 36, 60]


def test_bound_A_examples():
    assert fm.bound_A(1, 1, 1) == 0
    assert fm.bound_A(5, 5, 5) == 192
    assert fm.bound_A(2, 2, 3) == 2


def test_bound_A3L_examples():
    assert fm.bound_A3L(5, 5, 5) == 192
    assert fm.bound_A3L_parts(5, 5, 5) == (48, 144)
    assert fm.bound_A3L(1, 1, 1) == 0
    assert fm.bound_A3L(2, 2, 3) == 2


def test_A_equals_A3L_small_cube():
    for t in itertools.product(range(1, 21), repeat=3):
        assert fm.bound_A(*t) == fm.bound_A3L(*t), t


@given(st.permutations([1, 2, 3]), st.tuples(*(st.integers(0, 200),) * 3))
def test_A_symmetric(perm, sizes):
    permuted = tuple(sizes[i - 1] for i in perm)
    assert fm.bound_A(*sizes) == fm.bound_A(*permuted)
    assert fm.bound_A3L(*sizes) == fm.bound_A3L(*permuted)


def test_crmax_examples():
    assert fm.crmax(3, 2) == 15
    assert fm.crmax(4, 1) == 1
    assert all(fm.crmax(2, n) == comb(n, 2) ** 2 for n in range(1, 50))
    assert all(fm.crmax(r, 1) == comb(r, 4) for r in range(2, 50))


@pytest.mark.parametrize("r,n", [(2, 3), (3, 2), (3, 3), (4, 2), (5, 2), (4, 3), (6, 1)])
def test_crmax_matches_quadruple_enumeration(r, n):
    assert fm.crmax(r, n) == enumerate_crossable_quadruples(r, n)


def test_crmax_rejects_bad_input():
    with pytest.raises(ValueError):
        fm.crmax(1, 3)


def test_zeta_values():
    assert fm.zeta(2) == fm.zeta(3) == Fraction(1, 4)
    assert fm.zeta(4) == Fraction(9, 34)


def test_zeta_monotone_and_limit():
    vals = [fm.zeta(r) for r in range(3, 500)]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert all(v < Fraction(3, 8) for v in vals)
    assert abs(fm.zeta(10**6) - Fraction(3, 8)) < Fraction(1, 10**5)


def test_type_probability_examples():
    assert fm.type_probabilities(2) == (Fraction(5, 8), Fraction(3, 8), 0)
    assert fm.type_probabilities(3) == (Fraction(1, 3), Fraction(2, 3), 0)
    assert fm.type_probabilities(4)[2] == Fraction(3, 32)


@pytest.mark.parametrize("r", range(2, 9))
def test_type_probabilities_match_enumeration(r):
    assert fm.type_probabilities(r) == enumerate_type_probabilities(r)


def test_s_ratio_equals_zeta():
    assert fm.s_asymptotic_ratio(2) == Fraction(1, 4)
    assert fm.s_asymptotic_ratio(3) == Fraction(1, 4)
    assert all(fm.s_asymptotic_ratio(r) == fm.zeta(r) for r in range(2, 101))


def test_s_ratio_symbolic_identity():
    r = sympy.symbols("r", positive=True)
    alpha = (4 * r - 3) / r**3
    gamma = (r - 1) * (r - 2) * (r - 3) / r**3
    s = sympy.Rational(1, 8) * (2 + gamma - 2 * alpha) / (1 - alpha)
    zeta = 3 * (r**2 - r) / (8 * (r**2 + r - 3))
    assert sympy.simplify(s - zeta) == 0


def test_known_small_cr_examples():
    assert fm.known_small_cr((2, 3), 2) == 2
    assert fm.known_small_cr((1, 4), 3) == 6
    assert fm.known_small_cr((1, 3, "n"), 1) == 0
    with pytest.raises(UnknownFamily):
        fm.known_small_cr((3, 3), 4)


@pytest.mark.parametrize("family", sorted(fm.KNOWN_FAMILIES))
def test_known_small_cr_equals_A(family):
    for n in range(1, 1001):
        assert fm.known_small_cr(family, n) == fm.bound_A(family[0], family[1], n)


def test_floor_identities_examples():
    assert fm.floor_identity_a(5) and fm.floor_identity_a(0) and fm.floor_identity_a(6)
    assert fm.floor_identity_ab(3, 5) and fm.floor_identity_ab(7, 7)
    assert all(fm.floor_identity_ab(2, b) for b in range(100))


@given(st.integers(0, 10**4), st.integers(0, 10**4))
def test_floor_identities_property(a, b):
    assert fm.floor_identity_a(a)
    assert fm.floor_identity_ab(a, b)


def test_A_over_crmax_tends_to_quarter():
    n = 10**4
    assert abs(Fraction(fm.bound_A(n, n, n), fm.crmax(3, n)) - Fraction(1, 4)) < Fraction(1, 1000)


def test_bound_table_entries():
    t = fm.bound_table((5, 5, 5))
    assert t.entries["A"] == 192 and t.entries["A_3L"] == 192
    assert t.entries["CRmax"] == fm.crmax(3, 5)
    a, b, g = t.entries["alpha"], t.entries["beta"], t.entries["gamma"]
    assert a + b + g == 1
    assert Fraction(1, 4) <= t.entries["zeta"] < Fraction(3, 8)
    assert fm.bound_table((4, 5)).entries == {"Z": 8}
    assert fm.bound_table((7,)).entries == {"H": 9}
