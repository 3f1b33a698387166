from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from bowtie_spectra.polynomial import Polynomial, cauchy_bound, count_roots_above

X = sympy.Symbol("x")
coeff_lists = st.lists(st.integers(-20, 20), min_size=0, max_size=7)


def to_sympy(p: Polynomial):
    return sympy.Poly(p.descending() or [0], X)


def from_sympy(q) -> Polynomial:
    return Polynomial.from_descending([Fraction(int(c.p), int(c.q)) for c in q.all_coeffs()])


def test_string_form():
    p = Polynomial.from_descending([1, 0, -3, -2])
    assert str(p) == "x^3 - 3*x - 2"
    assert str(Polynomial()) == "0"
    assert str(-Polynomial.x()) == "-x"
    assert p.to_strings() == ["1", "0", "-3", "-2"]


def test_trailing_zeros_stripped():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1 and p.lead == 2
    assert Polynomial([0, 0]).is_zero()


def test_rejects_floats():
    with pytest.raises(TypeError):
        Polynomial([1.5])


@given(coeff_lists, coeff_lists)
def test_ring_operations_match_sympy(a, b):
    p, q = Polynomial(a), Polynomial(b)
    assert to_sympy(p + q) == to_sympy(p) + to_sympy(q)
    assert to_sympy(p - q) == to_sympy(p) - to_sympy(q)
    assert to_sympy(p * q) == to_sympy(p) * to_sympy(q)


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_division_identity(a, b):
    p, q = Polynomial(a), Polynomial(b)
    quot, rem = p.divmod(q)
    assert quot * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree
    sq, sr = sympy.div(to_sympy(p), to_sympy(q), domain="QQ")
    assert from_sympy(sq) == quot and from_sympy(sr) == rem


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Polynomial([1]).divmod(Polynomial())


@given(coeff_lists.filter(lambda c: any(c)), coeff_lists.filter(lambda c: any(c)))
def test_gcd_matches_sympy(a, b):
    p, q = Polynomial(a), Polynomial(b)
    expected = sympy.gcd(to_sympy(p), to_sympy(q)).monic()
    assert p.gcd(q) == from_sympy(expected)


def test_squarefree_and_derivative():
    p = Polynomial.from_descending([1, 0, -3, -2])  # (x-2)(x+1)^2
    assert p.derivative() == Polynomial.from_descending([3, 0, -3])
    assert p.squarefree() == Polynomial.from_descending([1, -1, -2])


def test_exact_div_x():
    assert Polynomial([0, 3, 1]).exact_div_x() == Polynomial([3, 1])
    with pytest.raises(ArithmeticError):
        Polynomial([1, 1]).exact_div_x()


def test_evaluation_exact_and_float():
    p = Polynomial.from_descending([1, -1, -8])
    assert p(Fraction(1, 2)) == Fraction(-33, 4)
    assert p.eval_float(2.0) == -6.0


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5), st.integers(-8, 8))
def test_root_count_matches_construction(roots, probe):
    p = Polynomial([1])
    for r in roots:
        p = p * Polynomial([-r, 1])
    assert count_roots_above(p, probe) == len({r for r in roots if r > probe})


@given(coeff_lists.filter(lambda c: len(c) > 1 and c[-1] != 0))
def test_cauchy_bound_encloses_roots(c):
    p = Polynomial(c)
    bound = float(cauchy_bound(p))
    for r in sympy.Poly(p.descending(), X).nroots():
        assert abs(complex(r)) < bound + 1e-9


def test_power():
    assert (Polynomial([1, 1]) ** 3).descending() == [1, 3, 3, 1]
    assert Polynomial([2]) ** 0 == Polynomial([1])
