"""Rational expressions in two chart variables, kept in canonical form.

An :class:`Expr` is the quotient ``num / den`` of two :class:`Poly` with
``gcd(num, den) = 1`` and ``den`` monic in grlex order; the zero expression
is ``0 / 1``. Canonical forms are unique, so equality and hashing are
structural and :meth:`Expr.is_zero` is exact.
"""

from __future__ import annotations

from typing import Iterable

from ..errors import PoleCreated
from .poly import Poly, exact_div, poly_gcd
from .scalar import Scalar, as_scalar

__all__ = ["Expr", "diff", "subs", "is_zero", "const", "var", "DEFAULT_NAMES"]

DEFAULT_NAMES = ("z", "xi")


class Expr:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("rational expression with zero denominator")
        num, den = _canonical(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "Expr":
        e = cls.__new__(cls)
        e.num = num
        e.den = den
        e._hash = None
        return e

    @classmethod
    def const(cls, c) -> "Expr":
        return cls._raw(Poly.const(c), Poly.const(1))

    @classmethod
    def var(cls, v: int) -> "Expr":
        return cls._raw(Poly.var(v), Poly.const(1))

    # the ring of two variables has no other state, so pickling is structural
    def __reduce__(self):
        return (Expr._raw, (self.num, self.den))

    # predicates

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("expression is not constant")
        return self.num.constant_value()

    def depends_on(self, v: int) -> bool:
        return self.num.degree(v) > 0 or self.den.degree(v) > 0

    # arithmetic

    def __add__(self, other):
        o = _as_expr(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            if self.den.is_one():
                return Expr._raw(self.num + o.num, self.den)
            return Expr(self.num + o.num, self.den)
        if self.den.is_one() or o.den.is_one():
            # a polynomial plus a reduced fraction stays reduced
            return Expr._raw(self.num * o.den + o.num * self.den, self.den * o.den)
        # a/b + c/d with g = gcd(b, d): only factors of g can cancel
        g = poly_gcd(self.den, o.den)
        if g.is_one():
            return Expr._raw(self.num * o.den + o.num * self.den, self.den * o.den)
        b1, d1 = exact_div(self.den, g), exact_div(o.den, g)
        n = self.num * d1 + o.num * b1
        if n.is_zero():
            return Expr.const(0)
        h = poly_gcd(n, g)
        if not h.is_one():
            n, g = exact_div(n, h), exact_div(g, h)
        return Expr._raw(*_normalize_unit(n, g * b1 * d1))

    __radd__ = __add__

    def __neg__(self):
        return Expr._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _as_expr(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_expr(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _as_expr(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return Expr.const(0)
        if self.den.is_one() and o.den.is_one():
            return Expr._raw(self.num * o.num, self.den)
        # cross-cancel; both inputs are already reduced
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n = exact_div(self.num, g1) * exact_div(o.num, g2)
        d = exact_div(self.den, g2) * exact_div(o.den, g1)
        return Expr._raw(*_normalize_unit(n, d))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_expr(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero expression")
        return self * Expr._raw(*_normalize_unit(o.den, o.num))

    def __rtruediv__(self, other):
        o = _as_expr(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return Expr._raw(*_normalize_unit(self.den ** (-n), self.num ** (-n)))
        # powers of coprime polynomials stay coprime
        return Expr._raw(*_normalize_unit(self.num ** n, self.den ** n))

    # calculus, substitution, evaluation

    def diff(self, v: int) -> "Expr":
        dn = self.num.diff(v)
        if self.den.is_one():
            return Expr._raw(dn, self.den)
        dd = self.den.diff(v)
        # (n' d - n d') / d^2, with the common factor gcd(d, d') divided out first
        g = poly_gcd(self.den, dd)
        d1 = exact_div(self.den, g)
        return Expr(dn * d1 - self.num * exact_div(dd, g), self.den * d1)

    def subs(self, v: int, replacement) -> "Expr":
        r = _as_expr(replacement)
        if r is None:
            raise TypeError("replacement must be an Expr or an exact number")
        den = _compose(self.den, v, r)
        if den.is_zero():
            raise PoleCreated(f"substitution makes the denominator {self.den.to_string(DEFAULT_NAMES)} vanish")
        return _compose(self.num, v, r) / den

    def evaluate(self, point: Iterable) -> Scalar:
        point = tuple(as_scalar(p) for p in point)
        d = self.den.evaluate(point)
        if d.is_zero():
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.evaluate(point) / d

    # comparison, hashing, printing

    def __eq__(self, other):
        o = _as_expr(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"Expr({self.to_string()!r})"

    def __str__(self):
        return self.to_string()

    def to_string(self, names: tuple[str, str] = DEFAULT_NAMES) -> str:
        """Canonical text in the input grammar: ``(num)/(den)`` when needed."""
        n = self.num.to_string(names)
        if self.den.is_one():
            return n
        d = self.den.to_string(names)
        if len(self.num.items()) > 1 or self.num.sorted_terms()[0][1].needs_parens():
            n = f"({n})"
        if len(self.den.items()) > 1 or "*" in d or "^" in d or "/" in d:
            d = f"({d})"
        return f"{n}/{d}"


def _normalize_unit(n: Poly, d: Poly) -> tuple[Poly, Poly]:
    _, lc = d.lead()
    if lc.is_one():
        return n, d
    inv = lc.inverse()
    return n.scale(inv), d.scale(inv)


def _canonical(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return num, Poly.const(1)
    if den.is_constant():
        return num.scale(den.constant_value().inverse()), Poly.const(1)
    g = poly_gcd(num, den)
    if not g.is_one():
        num, den = exact_div(num, g), exact_div(den, g)
    return _normalize_unit(num, den)


def _compose(p: Poly, v: int, r: Expr) -> Expr:
    """``p`` with variable ``v`` replaced by ``r`` (Horner in ``v``)."""
    by_power: dict[int, dict] = {}
    for m, c in p.items():
        rest = (0, m[1]) if v == 0 else (m[0], 0)
        by_power.setdefault(m[v], {})[rest] = c
    if not by_power:
        return Expr.const(0)
    top = max(by_power)
    acc = Expr.const(0)
    for e in range(top, -1, -1):
        acc = acc * r
        t = by_power.get(e)
        if t:
            acc = acc + Expr._raw(Poly(t), Poly.const(1))
    return acc


def _as_expr(x) -> Expr | None:
    if isinstance(x, Expr):
        return x
    if isinstance(x, Poly):
        return Expr._raw(x, Poly.const(1))
    try:
        return Expr.const(as_scalar(x))
    except TypeError:
        return None


# functional spellings of the kernel operations

def const(c) -> Expr:
    return Expr.const(c)


def var(v: int) -> Expr:
    return Expr.var(v)


def diff(e: Expr, v: int) -> Expr:
    """Exact partial derivative of ``e`` in variable ``v`` (0 or 1)."""
    return e.diff(v)


def subs(e: Expr, v: int, replacement) -> Expr:
    """Substitute ``replacement`` for variable ``v``; raises PoleCreated."""
    return e.subs(v, replacement)


def is_zero(e: Expr) -> bool:
    return e.is_zero()
