"""Sparse polynomials in two variables over the Gaussian rationals.

A polynomial is a map from exponent pairs ``(p, q)`` to nonzero
:class:`Scalar` coefficients, standing for ``sum c * x0**p * x1**q``.
Leading terms use graded lexicographic order with ``x0 > x1``.

GCDs are computed by viewing a polynomial as univariate in ``x0`` with
coefficients in ``K[x1]`` (``K = Q(i)``): contents are handled by Euclid in
``K[x1]``, primitive parts by a primitive pseudo-remainder sequence, so no
fractions in ``x1`` are ever formed.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping

from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = ["Poly", "poly_gcd"]

Monomial = tuple[int, int]


def _grlex(m: Monomial):
    return (m[0] + m[1], m[0], m[1])


class Poly:
    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        t: dict[Monomial, Scalar] = {}
        if terms:
            for m, c in terms.items():
                c = as_scalar(c)
                if not c.is_zero():
                    if m[0] < 0 or m[1] < 0:
                        raise ValueError(f"negative exponent in monomial {m}")
                    t[(int(m[0]), int(m[1]))] = c
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict[Monomial, Scalar]) -> "Poly":
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        c = as_scalar(c)
        return cls._raw({} if c.is_zero() else {(0, 0): c})

    @classmethod
    def var(cls, v: int) -> "Poly":
        _check_var(v)
        return cls._raw({(1, 0) if v == 0 else (0, 1): ONE})

    def __reduce__(self):
        return (Poly, (dict(self._t),))

    # inspection

    @property
    def terms(self) -> dict[Monomial, Scalar]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def coeff(self, m: Monomial) -> Scalar:
        return self._t.get(m, ZERO)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and (0, 0) in self._t)

    def is_one(self) -> bool:
        return len(self._t) == 1 and self._t.get((0, 0), ZERO).is_one()

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._t.get((0, 0), ZERO)

    def degree(self, v: int) -> int:
        """Degree in variable ``v``; ``-1`` for the zero polynomial."""
        if not self._t:
            return -1
        return max(m[v] for m in self._t)

    def total_degree(self) -> int:
        if not self._t:
            return -1
        return max(m[0] + m[1] for m in self._t)

    def lead(self) -> tuple[Monomial, Scalar]:
        m = max(self._t, key=_grlex)
        return m, self._t[m]

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self._t.items(), key=lambda kv: _grlex(kv[0]), reverse=True)

    # arithmetic

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for m, c in other._t.items():
            s = t.get(m)
            if s is None:
                t[m] = c
            else:
                s = s + c
                if s.is_zero():
                    del t[m]
                else:
                    t[m] = s
        return Poly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self._t or not other._t:
                return Poly._raw({})
            if other.is_constant():
                return self.scale(other.constant_value())
            if self.is_constant():
                return other.scale(self.constant_value())
            t: dict[Monomial, Scalar] = {}
            for (a0, a1), c in self._t.items():
                for (b0, b1), d in other._t.items():
                    m = (a0 + b0, a1 + b1)
                    s = t.get(m)
                    t[m] = c * d if s is None else s + c * d
            return Poly._raw({m: c for m, c in t.items() if not c.is_zero()})
        try:
            s = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def scale(self, s) -> "Poly":
        s = as_scalar(s)
        if s.is_zero():
            return Poly._raw({})
        if s.is_one():
            return self
        return Poly._raw({m: c * s for m, c in self._t.items()})

    def shift_monomial(self, m: Monomial) -> "Poly":
        """Multiply by the monomial ``x0**m[0] * x1**m[1]``."""
        return Poly._raw({(a + m[0], b + m[1]): c for (a, b), c in self._t.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # calculus and evaluation

    def diff(self, v: int) -> "Poly":
        _check_var(v)
        t = {}
        for m, c in self._t.items():
            e = m[v]
            if e:
                nm = (m[0] - 1, m[1]) if v == 0 else (m[0], m[1] - 1)
                t[nm] = c * e
        return Poly._raw(t)

    def evaluate(self, point: Iterable) -> Scalar:
        x0, x1 = (as_scalar(x) for x in point)
        total = ZERO
        for (a, b), c in self._t.items():
            total = total + c * (x0 ** a) * (x1 ** b)
        return total

    def translate(self, point: Iterable) -> "Poly":
        """The polynomial ``q(x) = p(point + x)``."""
        x0, x1 = (as_scalar(x) for x in point)
        if x0.is_zero() and x1.is_zero():
            return self
        t: dict[Monomial, Scalar] = {}
        for (a, b), c in self._t.items():
            for i in range(a + 1):
                ca = c * comb(a, i) * (x0 ** (a - i))
                if ca.is_zero():
                    continue
                for j in range(b + 1):
                    cb = ca * comb(b, j) * (x1 ** (b - j))
                    if cb.is_zero():
                        continue
                    s = t.get((i, j))
                    t[(i, j)] = cb if s is None else s + cb
        return Poly._raw({m: c for m, c in t.items() if not c.is_zero()})

    # normalization

    def monic(self) -> "Poly":
        """Scale so the grlex leading coefficient is 1."""
        if not self._t:
            return self
        return self.scale(self.lead()[1].inverse())

    # comparison, hashing, printing

    def __eq__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({self.to_string()!r})"

    def to_string(self, names: tuple[str, str] = ("x0", "x1")) -> str:
        if not self._t:
            return "0"
        parts: list[str] = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            negative = c.re < 0 or (not c.re and c.im < 0)
            if negative:
                c = -c
            body = _term_string(m, c, names)
            if k == 0:
                parts.append("-" + body if negative else body)
            else:
                parts.append((" - " if negative else " + ") + body)
        return "".join(parts)


def _term_string(m: Monomial, c: Scalar, names) -> str:
    factors = []
    for name, e in zip(names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    mono = "*".join(factors)
    if not mono:
        return f"({c})" if c.needs_parens() else str(c)
    if c.is_one():
        return mono
    cs = f"({c})" if c.needs_parens() else str(c)
    return f"{cs}*{mono}"


def _check_var(v: int) -> None:
    if v not in (0, 1):
        raise ValueError(f"variable index must be 0 or 1, got {v!r}")


def _as_poly(x) -> Poly | None:
    if isinstance(x, Poly):
        return x
    try:
        return Poly.const(as_scalar(x))
    except TypeError:
        return None


# division and gcd

def exact_div(a: Poly, b: Poly) -> Poly:
    """Quotient ``a / b``; raises ArithmeticError unless ``b`` divides ``a``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if b.is_constant():
        return a.scale(b.constant_value().inverse())
    (bm, bc) = b.lead()
    binv = bc.inverse()
    q: dict[Monomial, Scalar] = {}
    r = a
    while not r.is_zero():
        rm, rc = r.lead()
        e0, e1 = rm[0] - bm[0], rm[1] - bm[1]
        if e0 < 0 or e1 < 0:
            raise ArithmeticError("inexact polynomial division")
        c = rc * binv
        q[(e0, e1)] = c
        r = r - b.shift_monomial((e0, e1)).scale(c)
    return Poly._raw(q)


def _coeffs_in(p: Poly, v: int) -> dict[int, Poly]:
    """View ``p`` as univariate in ``v``: degree -> coefficient in the other variable."""
    out: dict[int, dict[Monomial, Scalar]] = {}
    for m, c in p.items():
        e = m[v]
        rest = (0, m[1]) if v == 0 else (m[0], 0)
        out.setdefault(e, {})[rest] = c
    return {e: Poly._raw(t) for e, t in out.items()}


def _lc_in(p: Poly, v: int) -> Poly:
    d = p.degree(v)
    return Poly._raw({((0, m[1]) if v == 0 else (m[0], 0)): c for m, c in p.items() if m[v] == d})


def _univariate_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd of two polynomials in a single variable (either one)."""
    if not b.is_zero():
        b = b.monic()
    while not b.is_zero():
        r = _univariate_rem(a, b)
        a, b = b, (r.monic() if not r.is_zero() else r)
    return a.monic()


def _univariate_rem(a: Poly, b: Poly) -> Poly:
    # a, b involve one and the same variable, so grlex lead = highest power
    bm, bc = b.lead()
    binv = bc.inverse()
    r = a
    while not r.is_zero():
        rm, rc = r.lead()
        e0, e1 = rm[0] - bm[0], rm[1] - bm[1]
        if e0 < 0 or e1 < 0:
            break
        r = r - b.shift_monomial((e0, e1)).scale(rc * binv)
    return r


def _content_x0(p: Poly) -> Poly:
    g = Poly._raw({})
    for c in _coeffs_in(p, 0).values():
        g = _univariate_gcd(g, c) if not g.is_zero() else c.monic()
        if g.is_one():
            break
    return g


def _prem_x0(a: Poly, b: Poly) -> Poly:
    db = b.degree(0)
    lcb = _lc_in(b, 0)
    r = a
    while not r.is_zero() and r.degree(0) >= db:
        dr = r.degree(0)
        lcr = _lc_in(r, 0)
        r = lcb * r - (lcr * b).shift_monomial((dr - db, 0))
    return r


def _primitive_x0(p: Poly) -> Poly:
    c = _content_x0(p)
    return p if c.is_one() else exact_div(p, c)


def _swap(p: Poly) -> Poly:
    return Poly._raw({(m[1], m[0]): c for m, c in p.items()})


def _monomial_content(p: Poly) -> Monomial:
    it = iter(p.items())
    (m0, m1), _ = next(it)
    for (a, b), _ in it:
        m0, m1 = min(m0, a), min(m1, b)
    return (m0, m1)


def _coprime_in_x0(a: Poly, b: Poly) -> bool:
    """Cheap sufficient test that ``a`` and ``b`` share no factor of positive degree in x0.

    If ``g`` divides both and ``lc_x0(a)(t) != 0``, then ``g(x0, t)`` keeps its
    x0-degree and divides both specializations at ``x1 = t``.
    """
    la, lb = _lc_in(a, 0), _lc_in(b, 0)
    for t in range(5):
        pt = (ZERO, Scalar(t))
        if la.evaluate(pt).is_zero() or lb.evaluate(pt).is_zero():
            continue
        sa = Poly._raw({(m[0], 0): c for m, c in a.translate((0, t)).items() if m[1] == 0})
        sb = Poly._raw({(m[0], 0): c for m, c in b.translate((0, t)).items() if m[1] == 0})
        return _univariate_gcd(sa, sb).is_constant()
    return False


def _gcd_x0(a: Poly, b: Poly) -> Poly:
    """Gcd of two polynomials, via content in x1 and a primitive PRS in x0."""
    ca, cb = _content_x0(a), _content_x0(b)
    content = _univariate_gcd(ca, cb)
    pa = a if ca.is_one() else exact_div(a, ca)
    pb = b if cb.is_one() else exact_div(b, cb)
    if pa.degree(0) < pb.degree(0):
        pa, pb = pb, pa
    if pb.degree(0) <= 0 or _coprime_in_x0(pa, pb):
        return content
    r0, r1 = pa, pb
    while True:
        r = _prem_x0(r0, r1)
        if r.is_zero():
            return content * r1
        if r.degree(0) == 0:
            return content
        r0, r1 = r1, _primitive_x0(r)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor, normalized to be monic (grlex)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return Poly.const(1)
    ma, mb = _monomial_content(a), _monomial_content(b)
    mono = (min(ma[0], mb[0]), min(ma[1], mb[1]))
    if ma != (0, 0):
        a = a.shift_monomial((-ma[0], -ma[1]))
    if mb != (0, 0):
        b = b.shift_monomial((-mb[0], -mb[1]))
    if a.is_constant() or b.is_constant():
        g = Poly.const(1)
    elif max(a.degree(0), b.degree(0)) > max(a.degree(1), b.degree(1)):
        # the remainder sequence runs in x0; make that the cheaper variable
        g = _swap(_gcd_x0(_swap(a), _swap(b)))
    else:
        g = _gcd_x0(a, b)
    return g.shift_monomial(mono).monic()
