"""Geodesic ODE coefficients and Liouville invariants of a projective class.

Unparametrized geodesics of a torsion-free connection, written as graphs
``xi = xi(z)``, satisfy::

    xi'' = K0 + K1 xi' + K2 xi'^2 + K3 xi'^3

and the projective structure is flat iff the two Liouville invariants
``L1, L2`` of this equation vanish identically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connection import Connection, DiffTensor, require_torsion_free
from .errors import NotSymmetric
from .expr import Expr

__all__ = [
    "GeodesicODE", "LiouvillePair", "geodesic_ode", "liouville_invariants",
    "is_projectively_flat", "trace_decompose", "projective_change",
]

Z, XI = 0, 1


@dataclass(frozen=True)
class GeodesicODE:
    k0: Expr
    k1: Expr
    k2: Expr
    k3: Expr

    def coefficients(self) -> tuple[Expr, Expr, Expr, Expr]:
        return (self.k0, self.k1, self.k2, self.k3)


@dataclass(frozen=True)
class LiouvillePair:
    l1: Expr
    l2: Expr

    def is_zero(self) -> bool:
        return self.l1.is_zero() and self.l2.is_zero()


def geodesic_ode(c: Connection) -> GeodesicODE:
    """Eliminate the affine parameter from the geodesic equations.

    From ``z'' = -Gamma^1(u, u)`` and ``xi'' = -Gamma^2(u, u)`` with
    ``u = (1, xi')``::

        K0 = -G^2_11    K1 = G^1_11 - 2 G^2_12    K2 = 2 G^1_12 - G^2_22    K3 = G^1_22
    """
    require_torsion_free(c)
    g = c.gamma
    return GeodesicODE(
        k0=-g[1][0][0],
        k1=g[0][0][0] - 2 * g[1][0][1],
        k2=2 * g[0][0][1] - g[1][1][1],
        k3=g[0][1][1],
    )


def liouville_invariants(ode: GeodesicODE) -> LiouvillePair:
    """``(L1, L2)``; subscripts below are partial derivatives in ``z`` and ``xi``."""
    K0, K1, K2, K3 = ode.coefficients()

    def d(e: Expr, *vs: int) -> Expr:
        for v in vs:
            e = e.diff(v)
        return e

    l1 = (2 * d(K1, Z, XI) - d(K2, Z, Z) - 3 * d(K0, XI, XI)
          - 6 * K0 * d(K3, Z) - 3 * K3 * d(K0, Z)
          + 3 * K0 * d(K2, XI) + 3 * K2 * d(K0, XI)
          + K1 * d(K2, Z) - 2 * K1 * d(K1, XI))
    l2 = (2 * d(K2, Z, XI) - d(K1, XI, XI) - 3 * d(K3, Z, Z)
          + 6 * K3 * d(K0, XI) + 3 * K0 * d(K3, XI)
          - 3 * K3 * d(K1, Z) - 3 * K1 * d(K3, Z)
          - K2 * d(K1, XI) + 2 * K2 * d(K2, Z))
    return LiouvillePair(l1, l2)


def is_projectively_flat(c: Connection) -> bool:
    return liouville_invariants(geodesic_ode(c)).is_zero()


def projective_change(phi: tuple, variables=None) -> DiffTensor:
    """The tensor ``omega[k][i][j] = delta^k_i phi_j + delta^k_j phi_i``."""
    phi = tuple(p if isinstance(p, Expr) else Expr.const(p) for p in phi)
    entries = {}
    for k in (0, 1):
        for i in (0, 1):
            for j in (0, 1):
                e = Expr.const(0)
                if k == i:
                    e = e + phi[j]
                if k == j:
                    e = e + phi[i]
                entries[(k, i, j)] = e
    if variables is None:
        return DiffTensor.from_entries(entries)
    return DiffTensor.from_entries(entries, variables)


def trace_decompose(w: DiffTensor) -> tuple[Expr, Expr] | None:
    """One-form ``phi`` with ``w = projective_change(phi)``, or None if there is none.

    Adding such a ``w`` to a connection leaves its geodesic ODE unchanged.
    """
    if not w.is_symmetric():
        raise NotSymmetric("difference tensor is not symmetric in its lower slots")
    phi = (w[0, 0, 0] / 2, w[1, 1, 1] / 2)
    candidate = projective_change(phi, w.variables)
    if (w - candidate).is_zero():
        return phi
    return None
