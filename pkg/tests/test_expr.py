from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import XI_SYM, Z_SYM, rand_expr, rand_poly, to_sympy, poly_to_sympy, sympy_zero
from holoconn.errors import InputSyntaxError, PoleAtBase, PoleCreated, UnknownVariable
from holoconn.expr import (
    I, ONE, ZERO, ChartPoint, Expr, Poly, Scalar, SeriesJet, as_scalar, jet, parse_expr, poly_gcd,
)

Z, XI = Expr.var(0), Expr.var(1)


# scalars

def test_scalar_arithmetic():
    a = Scalar(Fraction(1, 2), 3)
    assert a * a.inverse() == ONE
    assert I * I == -ONE
    assert (a + a.conjugate()) == Scalar(1)
    assert a.norm() == Fraction(1, 4) + 9
    assert complex(a) == complex(0.5, 3)


def test_scalar_printing():
    assert Scalar(3).to_string() == "3"
    assert Scalar(Fraction(-3, 2)).to_string() == "-3/2"
    assert I.to_string() == "i"
    assert Scalar(0, 2).to_string() == "2*i"
    assert Scalar(1, 2).to_string() == "1 + 2*i"


def test_scalar_rejects_float():
    with pytest.raises(TypeError):
        as_scalar(0.5)


def test_scalar_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


# polynomials and gcd

def test_poly_leading_term_grlex_z_first():
    p = Poly({(0, 2): 1, (1, 1): 5, (2, 0): 3, (0, 0): 7})
    assert p.lead()[0] == (2, 0)


def test_poly_gcd_known():
    x = Poly.var(0)
    y = Poly.var(1)
    a = (x + y) * (x - y) * (x * y + Poly.const(2))
    b = (x + y) ** 2 * (x * y + Poly.const(2))
    g = poly_gcd(a, b)
    assert g == ((x + y) * (x * y + Poly.const(2))).monic()


@pytest.mark.parametrize("seed", range(25))
def test_poly_gcd_against_sympy(seed):
    rng = random.Random(seed)
    c = rand_poly(rng, 2)
    a = rand_poly(rng, 2) * c
    b = rand_poly(rng, 2) * c
    g = poly_gcd(a, b)
    ref = sp.gcd(sp.Poly(poly_to_sympy(a), Z_SYM, XI_SYM, extension=sp.I),
                 sp.Poly(poly_to_sympy(b), Z_SYM, XI_SYM, extension=sp.I))
    ratio = sp.cancel(poly_to_sympy(g) / ref.as_expr())
    assert ratio.free_symbols == set()


# rational expressions

def test_canonical_form_cancels():
    e = (Z ** 2 - XI ** 2) / (Z - XI)
    assert e == Z + XI
    assert e.is_polynomial()


def test_canonical_form_monic_denominator():
    e = Expr.const(1) / (2 * Z + 4)
    assert e.den.lead()[1] == ONE
    assert e.den == Poly.var(0) + Poly.const(2)
    assert e.num == Poly.const(Fraction(1, 2))


@pytest.mark.parametrize("seed", range(40))
def test_arithmetic_against_sympy(seed):
    rng = random.Random(1000 + seed)
    a, b = rand_expr(rng), rand_expr(rng)
    sa, sb = to_sympy(a), to_sympy(b)
    assert sympy_zero(to_sympy(a + b) - (sa + sb))
    assert sympy_zero(to_sympy(a * b) - sa * sb)
    if not b.is_zero():
        assert sympy_zero(to_sympy(a / b) - sa / sb)
    assert sympy_zero(to_sympy(a.diff(0)) - sp.diff(sa, Z_SYM))
    assert sympy_zero(to_sympy(a.diff(1)) - sp.diff(sa, XI_SYM))


def test_subs_composes():
    e = Z * XI + 1
    assert e.subs(1, Z + 1) == Z ** 2 + Z + 1
    assert (1 / (XI - 1)).subs(1, Expr.const(2)) == Expr.const(1)


def test_subs_pole_created():
    with pytest.raises(PoleCreated):
        (1 / XI).subs(1, Expr.const(0))


def test_division_by_zero_expr():
    with pytest.raises(ZeroDivisionError):
        Z / Expr.const(0)


def test_depends_on():
    assert (XI ** 2 / (XI + 1)).depends_on(1)
    assert not (XI ** 2 / (XI + 1)).depends_on(0)
    assert not ((Z * XI - Z * XI) + 3).depends_on(0)


# parser

def test_parse_simple():
    assert parse_expr("z*xi + 1") == Z * XI + 1
    assert parse_expr("(1 + 2*i)*z^2 / (xi - i)") == (1 + 2 * I) * Z ** 2 / (XI - I)
    assert parse_expr("-xi^2") == -(XI ** 2)
    assert parse_expr(" 3 / 4 ") == Expr.const(Fraction(3, 4))


def test_parse_custom_names():
    assert parse_expr("u*v", ("u", "v")) == Z * XI


@pytest.mark.parametrize("text,column", [("xi ^ -1", 6), ("z +", 4), ("(z", 3), ("z ^ xi", 5), ("2 ^ 2 ^ 2", 7),
                                         ("z $ 1", 3), ("1/0", 2)])
def test_parse_errors(text, column):
    with pytest.raises(InputSyntaxError) as info:
        parse_expr(text)
    assert info.value.column == column


def test_parse_negative_exponent_position():
    with pytest.raises(InputSyntaxError) as info:
        parse_expr("xi ^ -1")
    assert info.value.column == 6


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariable) as info:
        parse_expr("z + w")
    assert info.value.column == 5


@pytest.mark.parametrize("seed", range(60))
def test_print_parse_round_trip(seed):
    e = rand_expr(random.Random(2000 + seed))
    assert (parse_expr(e.to_string()) - e).is_zero()


# jets

def test_jet_of_polynomial_offsets():
    j = jet(Z * XI, ChartPoint(1, 2), 2)
    # z xi = (1 + u)(2 + v) = 2 + 2u + v + uv
    assert dict(j.coefficients) == {(0, 0): Scalar(2), (1, 0): Scalar(2), (0, 1): ONE, (1, 1): ONE}


def test_jet_pole_at_base():
    with pytest.raises(PoleAtBase):
        jet(1 / (Z + XI), ChartPoint.origin(), 3)


def test_jet_finite_difference_oracle():
    """Taylor coefficients of 1/(z + xi) at (1, 1) against central differences."""
    f = lambda z, w: 1.0 / (z + w)  # noqa: E731
    h = 1e-3
    base = (1.0, 1.0)
    j = jet(1 / (Z + XI), ChartPoint(1, 1), 2)

    def fd(p, q):
        z, w = base
        if (p, q) == (0, 0):
            return f(z, w)
        if (p, q) == (1, 0):
            return (f(z + h, w) - f(z - h, w)) / (2 * h)
        if (p, q) == (0, 1):
            return (f(z, w + h) - f(z, w - h)) / (2 * h)
        if (p, q) == (2, 0):
            return (f(z + h, w) - 2 * f(z, w) + f(z - h, w)) / h ** 2 / 2
        if (p, q) == (0, 2):
            return (f(z, w + h) - 2 * f(z, w) + f(z, w - h)) / h ** 2 / 2
        return (f(z + h, w + h) - f(z + h, w - h) - f(z - h, w + h) + f(z - h, w - h)) / (4 * h * h)

    for pq in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]:
        assert abs(complex(j[pq]) - fd(*pq)) < 1e-5


def test_jet_derivative_matches_diff():
    e = (Z ** 3 + XI) / (1 + Z * XI)
    base = ChartPoint(Fraction(1, 2), -1)
    assert jet(e, base, 5).derivative(0) == jet(e.diff(0), base, 4)
    assert jet(e, base, 5).derivative(1) == jet(e.diff(1), base, 4)


def test_jet_product():
    e1, e2 = 1 / (1 - Z), XI + Z
    b = ChartPoint.origin()
    assert jet(e1, b, 4) * jet(e2, b, 4) == jet(e1 * e2, b, 4)


def test_series_jet_validation():
    with pytest.raises(ValueError):
        SeriesJet(ChartPoint.origin(), 1, {(2, 0): 1})


# property suites

_bases = st.tuples(st.integers(-2, 2), st.integers(-2, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_prop_mixed_partials(seed):
    e = rand_expr(random.Random(seed))
    assert e.diff(0).diff(1) == e.diff(1).diff(0)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), _bases)
def test_prop_jet_derivative(seed, base):
    e = rand_expr(random.Random(seed))
    if e.den.evaluate(base).is_zero():
        return
    for v in (0, 1):
        assert jet(e, base, 4).derivative(v) == jet(e.diff(v), base, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_prop_canonical_idempotent(seed):
    e = rand_expr(random.Random(seed))
    again = Expr(e.num, e.den)
    assert again.num == e.num and again.den == e.den
    assert parse_expr(e.to_string()).to_string() == e.to_string()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), _bases)
def test_prop_zero_jet(seed, base):
    e = rand_expr(random.Random(seed))
    if e.den.evaluate(base).is_zero():
        return
    assert jet(e - e, base, 3).is_zero()


def test_gcd_when_specialization_drops_leading_coefficient():
    x, y = Poly.var(0), Poly.var(1)
    common = y * x + Poly.const(1)
    a = common * (x + y) * x * y
    b = common * (x - y) * y ** 2
    assert poly_gcd(a, b) == (common * y).monic()
    assert poly_gcd(x ** 3 * y + x, x ** 2 * y ** 3) == x


def test_gcd_high_degree_in_first_variable():
    x, y = Poly.var(0), Poly.var(1)
    common = x ** 3 + y
    assert poly_gcd(common * (x ** 5 + y + Poly.const(1)), common * (x ** 4 - y)) == common
