"""Truncated two-variable Taylor jets with exact coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..errors import PoleAtBase
from .poly import Poly
from .rational import Expr
from .scalar import ZERO, Scalar, as_scalar

__all__ = ["ChartPoint", "SeriesJet", "jet", "bidegrees"]


@dataclass(frozen=True)
class ChartPoint:
    """Values of the two chart variables."""

    coordinates: tuple[Scalar, Scalar]

    def __init__(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Scalar)):
            coords = tuple(coords[0])
        if len(coords) != 2:
            raise ValueError("a chart point has exactly two coordinates")
        object.__setattr__(self, "coordinates", tuple(as_scalar(c) for c in coords))

    def __iter__(self):
        return iter(self.coordinates)

    def __getitem__(self, k):
        return self.coordinates[k]

    @classmethod
    def origin(cls) -> "ChartPoint":
        return cls(0, 0)

    def __reduce__(self):
        return (ChartPoint, self.coordinates)


def bidegrees(order: int):
    """All ``(p, q)`` with ``p + q <= order``, by total degree then ``p`` descending."""
    for n in range(order + 1):
        for p in range(n, -1, -1):
            yield (p, n - p)


@dataclass(frozen=True)
class SeriesJet:
    """Taylor coefficients ``c[p, q]`` of ``x0**p * x1**q`` (offsets from ``base``).

    Only nonzero coefficients are stored.
    """

    base: ChartPoint
    order: int
    coefficients: Mapping[tuple[int, int], Scalar] = field(default_factory=dict)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("jet order must be non-negative")
        clean = {}
        for (p, q), c in dict(self.coefficients).items():
            c = as_scalar(c)
            if c.is_zero():
                continue
            if p < 0 or q < 0 or p + q > self.order:
                raise ValueError(f"bidegree {(p, q)} outside a jet of order {self.order}")
            clean[(p, q)] = c
        object.__setattr__(self, "coefficients", clean)

    def __getitem__(self, pq) -> Scalar:
        return self.coefficients.get(tuple(pq), ZERO)

    def is_zero(self) -> bool:
        return not self.coefficients

    def _check(self, other: "SeriesJet"):
        if self.base != other.base or self.order != other.order:
            raise ValueError("jets must share base point and order")

    def __add__(self, other: "SeriesJet") -> "SeriesJet":
        self._check(other)
        out = dict(self.coefficients)
        for k, c in other.coefficients.items():
            out[k] = out.get(k, ZERO) + c
        return SeriesJet(self.base, self.order, out)

    def __neg__(self) -> "SeriesJet":
        return SeriesJet(self.base, self.order, {k: -c for k, c in self.coefficients.items()})

    def __sub__(self, other: "SeriesJet") -> "SeriesJet":
        return self + (-other)

    def scale(self, s) -> "SeriesJet":
        s = as_scalar(s)
        return SeriesJet(self.base, self.order, {k: c * s for k, c in self.coefficients.items()})

    def __mul__(self, other: "SeriesJet") -> "SeriesJet":
        self._check(other)
        out: dict = {}
        for (a, b), c in self.coefficients.items():
            for (p, q), d in other.coefficients.items():
                if a + b + p + q <= self.order:
                    k = (a + p, b + q)
                    out[k] = out.get(k, ZERO) + c * d
        return SeriesJet(self.base, self.order, out)

    def derivative(self, v: int) -> "SeriesJet":
        """Formal partial derivative; the order drops by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate a jet of order 0")
        out = {}
        for (p, q), c in self.coefficients.items():
            if v == 0 and p:
                out[(p - 1, q)] = c * p
            elif v == 1 and q:
                out[(p, q - 1)] = c * q
        return SeriesJet(self.base, self.order - 1, out)

    def truncate(self, order: int) -> "SeriesJet":
        if order > self.order:
            raise ValueError("cannot raise the order of a jet")
        return SeriesJet(self.base, order, {k: c for k, c in self.coefficients.items() if sum(k) <= order})


def _poly_jet(p: Poly, base: ChartPoint, order: int) -> dict:
    shifted = p.translate(base.coordinates)
    return {m: c for m, c in shifted.items() if m[0] + m[1] <= order}


def jet(e: Expr, base: ChartPoint | Iterable, order: int) -> SeriesJet:
    """Taylor coefficients of ``e`` at ``base`` up to total degree ``order``."""
    if not isinstance(base, ChartPoint):
        base = ChartPoint(*base)
    if order < 0:
        raise ValueError("jet order must be non-negative")
    n = _poly_jet(e.num, base, order)
    if e.den.is_one():
        return SeriesJet(base, order, n)
    d = _poly_jet(e.den, base, order)
    d0 = d.get((0, 0), ZERO)
    if d0.is_zero():
        raise PoleAtBase(f"denominator vanishes at {tuple(str(c) for c in base)}")
    inv = d0.inverse()
    others = [(m, c) for m, c in d.items() if m != (0, 0)]
    q: dict = {}
    for (p, r) in bidegrees(order):
        acc = n.get((p, r), ZERO)
        for (a, b), c in others:
            if a <= p and b <= r:
                prev = q.get((p - a, r - b))
                if prev is not None:
                    acc = acc - c * prev
        if not acc.is_zero():
            q[(p, r)] = acc * inv
    return SeriesJet(base, order, q)
