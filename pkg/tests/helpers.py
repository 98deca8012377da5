"""Shared generators and the sympy bridge used as an independent oracle."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy as sp

from holoconn.expr import Expr, Poly, Scalar

Z_SYM, XI_SYM = sp.symbols("z xi")


def rand_scalar(rng: random.Random, complex_ok: bool = True, lo: int = -3, hi: int = 3) -> Scalar:
    re = Fraction(rng.randint(lo, hi), rng.choice((1, 1, 1, 2, 3)))
    im = Fraction(rng.randint(lo, hi), rng.choice((1, 2))) if complex_ok and rng.random() < 0.3 else 0
    return Scalar(re, im)


def rand_poly(rng: random.Random, max_deg: int = 3, terms: int = 4, only_xi: bool = False,
              complex_ok: bool = True) -> Poly:
    t = {}
    for _ in range(rng.randint(1, terms)):
        p = 0 if only_xi else rng.randint(0, max_deg)
        q = rng.randint(0, max_deg - p)
        t[(p, q)] = rand_scalar(rng, complex_ok)
    return Poly(t)


def rand_expr(rng: random.Random, max_deg: int = 3, rational: bool = True, only_xi: bool = False) -> Expr:
    num = rand_poly(rng, max_deg, only_xi=only_xi)
    if not rational or rng.random() < 0.4:
        return Expr(num)
    while True:
        den = rand_poly(rng, 2, terms=3, only_xi=only_xi)
        if not den.is_zero():
            return Expr(num, den)


def scalar_to_sympy(c: Scalar):
    return sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(c.im.numerator, c.im.denominator)


def poly_to_sympy(p: Poly):
    return sp.Add(*[scalar_to_sympy(c) * Z_SYM ** a * XI_SYM ** b for (a, b), c in p.items()])


def to_sympy(e: Expr):
    return poly_to_sympy(e.num) / poly_to_sympy(e.den)


def sympy_zero(x) -> bool:
    return sp.cancel(sp.together(x)) == 0
