"""Killing fields of an affine connection and their formal jet spaces.

A field ``X = a d_z + b d_xi`` is Killing when its Lie derivative of the
connection vanishes, ``[X, nabla_Y Z] = nabla_[X,Y] Z + nabla_Y [X, Z]``. For
coordinate fields ``Y = d_i, Z = d_j`` and output component ``k`` this is the
linear second-order equation::

    d_i d_j X^k + X^m d_m G^k_ij + G^k_mj d_i X^m + G^k_im d_j X^m - G^m_ij d_m X^k = 0

Symmetry in ``(i, j)`` leaves six equations, ordered
``(00,k=0), (00,k=1), (01,k=0), (01,k=1), (11,k=0), (11,k=1)``.

Jet spaces are computed by brute-force prolongation at a base point and an
exact null-space computation. A dimension that stays constant over several
orders is evidence for the dimension of the local Killing algebra, not a
proof of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .connection import Connection, require_torsion_free
from .errors import PoleAtBase
from .expr import ChartPoint, Expr, SeriesJet, bidegrees, jet
from .expr.scalar import Scalar
from .linalg import Echelon

__all__ = [
    "VectorFieldSymbolic", "KillingSystem", "JetSolutionSpace",
    "killing_system", "apply_equation", "is_killing", "killing_jet_space", "killing_dimension",
]

A, B = 0, 1
UNKNOWN_NAMES = ("a", "b")
_E = ((1, 0), (0, 1))

Operator = dict[tuple[int, tuple[int, int]], Expr]


@dataclass(frozen=True)
class VectorFieldSymbolic:
    a: Expr
    b: Expr

    def __post_init__(self):
        for name in ("a", "b"):
            v = getattr(self, name)
            if not isinstance(v, Expr):
                object.__setattr__(self, name, Expr.const(v))

    def component(self, u: int) -> Expr:
        return self.a if u == A else self.b


@dataclass(frozen=True)
class KillingSystem:
    """Six linear operators ``{(unknown, (p, q)): coefficient}``.

    ``unknown`` is 0 for ``a`` and 1 for ``b``; ``(p, q)`` is the derivative
    bidegree, so ``(1, (1, 1))`` stands for ``b_{z xi}``.
    """

    equations: tuple[Operator, ...]
    labels: tuple[tuple[int, int, int], ...]  # (i, j, k) per equation

    def __len__(self):
        return len(self.equations)

    def __iter__(self):
        return iter(self.equations)

    def max_order(self) -> int:
        return max(sum(pq) for eq in self.equations for (_, pq) in eq)


@dataclass(frozen=True)
class JetSolutionSpace:
    base: ChartPoint
    per_order: tuple[tuple[int, int], ...]  # (order, dimension) for orders 2..n
    basis: tuple[tuple[SeriesJet, SeriesJet], ...]  # (jet of a, jet of b) at order n

    @property
    def order(self) -> int:
        return self.per_order[-1][0]

    @property
    def dimension(self) -> int:
        return self.per_order[-1][1]

    def dimensions(self) -> list[int]:
        return [d for _, d in self.per_order]

    def contains(self, a: SeriesJet, b: SeriesJet) -> bool:
        """Whether the jet pair ``(a, b)`` lies in the span of :attr:`basis`."""
        n = self.order
        cols = list(bidegrees(n))
        ech = Echelon()
        for ja, jb in self.basis:
            ech.add(_pair_row(ja, jb, cols))
        return not ech.add(_pair_row(a.truncate(n), b.truncate(n), cols))


def _pair_row(ja: SeriesJet, jb: SeriesJet, cols) -> dict[int, Scalar]:
    row = {}
    n = len(cols)
    for idx, pq in enumerate(cols):
        if not ja[pq].is_zero():
            row[idx] = ja[pq]
        if not jb[pq].is_zero():
            row[n + idx] = jb[pq]
    return row


def _accumulate(op: Operator, key, coeff: Expr) -> None:
    if coeff.is_zero():
        return
    s = op.get(key)
    s = coeff if s is None else s + coeff
    if s.is_zero():
        op.pop(key, None)
    else:
        op[key] = s


def killing_system(c: Connection) -> KillingSystem:
    require_torsion_free(c)
    g = c.gamma
    one = Expr.const(1)
    equations = []
    labels = []
    for i, j in ((0, 0), (0, 1), (1, 1)):
        for k in (0, 1):
            op: Operator = {}
            second = (_E[i][0] + _E[j][0], _E[i][1] + _E[j][1])
            _accumulate(op, (k, second), one)
            for m in (0, 1):
                _accumulate(op, (m, (0, 0)), g[k][i][j].diff(m))
                _accumulate(op, (m, _E[i]), g[k][m][j])
                _accumulate(op, (m, _E[j]), g[k][i][m])
                _accumulate(op, (k, _E[m]), -g[m][i][j])
            equations.append(op)
            labels.append((i, j, k))
    return KillingSystem(tuple(equations), tuple(labels))


def _partial(e: Expr, pq: tuple[int, int]) -> Expr:
    for _ in range(pq[0]):
        e = e.diff(0)
    for _ in range(pq[1]):
        e = e.diff(1)
    return e


def apply_equation(op: Operator, x: VectorFieldSymbolic) -> Expr:
    total = Expr.const(0)
    for (u, pq), coeff in op.items():
        total = total + coeff * _partial(x.component(u), pq)
    return total


def is_killing(c: Connection, x: VectorFieldSymbolic) -> bool:
    return all(apply_equation(op, x).is_zero() for op in killing_system(c))


def _check_base(c: Connection, base: ChartPoint) -> None:
    for (k, i, j), e in c.entries():
        if e.den.evaluate(base.coordinates).is_zero():
            raise PoleAtBase(f"gamma[{k}][{i}][{j}] = {e.to_string(c.variables)} has a pole at the base point")


def _rising(b: int, g: int) -> int:
    """(b + g)! / g!"""
    return factorial(b + g) // factorial(g)


def killing_jet_space(c: Connection, base, order: int) -> JetSolutionSpace:
    """Exact dimensions of formal Killing jets of orders ``2..order`` at ``base``.

    At order ``m`` the unknowns are the Taylor coefficients of ``a`` and ``b``
    of total degree ``<= m`` and the constraints are all derivatives of total
    order ``<= m - 2`` of the six equations, evaluated at ``base``.
    """
    if order < 2:
        raise ValueError("jet order must be at least 2")
    if not isinstance(base, ChartPoint):
        base = ChartPoint(*base)
    system = killing_system(c)
    _check_base(c, base)

    cols = list(bidegrees(order))
    col_of = {pq: n for n, pq in enumerate(cols)}
    ncol_half = len(cols)
    coeff_jets = [
        [(u, beta, jet(coeff, base, order - 2)) for (u, beta), coeff in op.items()]
        for op in system.equations
    ]

    ech = Echelon()
    per_order = []
    for m in range(2, order + 1):
        s = m - 2
        for alpha in bidegrees(s):
            if sum(alpha) != s:
                continue
            for terms in coeff_jets:
                row: dict[int, Scalar] = {}
                for u, beta, cj in terms:
                    for (dp, dq), cv in cj.coefficients.items():
                        g0, g1 = alpha[0] - dp, alpha[1] - dq
                        if g0 < 0 or g1 < 0:
                            continue
                        w = cv * (_rising(beta[0], g0) * _rising(beta[1], g1))
                        col = u * ncol_half + col_of[(beta[0] + g0, beta[1] + g1)]
                        prev = row.get(col)
                        row[col] = w if prev is None else prev + w
                ech.add(row)
        unknowns = (m + 1) * (m + 2)
        per_order.append((m, unknowns - ech.rank))

    basis = []
    for vec in ech.nullspace(2 * ncol_half):
        ja = SeriesJet(base, order, {pq: vec[n] for n, pq in enumerate(cols)})
        jb = SeriesJet(base, order, {pq: vec[ncol_half + n] for n, pq in enumerate(cols)})
        basis.append((ja, jb))
    return JetSolutionSpace(base, tuple(per_order), tuple(basis))


def killing_dimension(c: Connection, base, max_order: int, window: int = 3) -> tuple[int, bool]:
    """``(dimension, stabilized)`` from the jet dimensions at orders up to ``max_order``.

    ``stabilized`` is True when the dimension is constant over the last
    ``window`` orders.
    """
    if window < 1 or window > max_order - 1:
        raise ValueError("window must be between 1 and max_order - 1")
    space = killing_jet_space(c, base, max_order)
    dims = space.dimensions()
    tail = dims[-window:]
    return dims[-1], len(set(tail)) == 1
