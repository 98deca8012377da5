"""Exact Gaussian rationals ``a + b*i`` with ``a, b`` in Q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Scalar", "ZERO", "ONE", "I", "as_scalar"]


class Scalar:
    """Immutable Gaussian rational.

    Components are :class:`fractions.Fraction`, so they are always reduced
    with a positive denominator.
    """

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.re, self.im))

    # predicates

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def is_real(self) -> bool:
        return not self.im

    # arithmetic

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return Scalar(self.re * o.re)
        return Scalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero Scalar")
        if not self.im:
            return Scalar(1 / self.re)
        norm = self.re * self.re + self.im * self.im
        return Scalar(self.re / norm, -self.im / norm)

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus ``re^2 + im^2``."""
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # comparison and hashing

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.re, self.im)) if self.im else hash(self.re)
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return not self.is_zero()

    # printing

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return self.to_string()

    def to_string(self) -> str:
        """Render using the expression grammar (``i`` explicit, quotients as ``a/b``)."""
        if not self.im:
            return str(self.re)
        im = _imag_part(self.im)
        if not self.re:
            return im
        if self.im < 0:
            return f"{self.re} - {im[1:]}"
        return f"{self.re} + {im}"

    def needs_parens(self) -> bool:
        """True when the rendered form must be parenthesized as a factor."""
        return bool(self.re) and bool(self.im)


def _imag_part(b: Fraction) -> str:
    if b == 1:
        return "i"
    if b == -1:
        return "-i"
    return f"{b}*i"


def _coerce(x) -> Scalar | None:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)):
        return Scalar(x)
    return None


def as_scalar(x) -> Scalar:
    """Convert ints, Fractions and Scalars; reject floats and everything else."""
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot convert {type(x).__name__} to an exact Scalar")
    return s


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
