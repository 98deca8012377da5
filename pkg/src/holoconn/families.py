"""The three connection families: translation-invariant connections on C^2,
the scale system of an Inoue surface S_M, and connections on a principal
elliptic bundle over a curve of genus >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .connection import Connection, DiffTensor, add, curvature
from .errors import BadSpectrum, DependsOnFirstVariable, NotUnimodular
from .expr import DEFAULT_NAMES, Expr, Scalar, as_scalar

__all__ = [
    "TranslationInvariantData", "translation_invariant", "flatness_relations",
    "EllipticFamilyData", "elliptic_family", "reference_shift", "elliptic_closed_form_curvature",
    "gamma_equivariance_residuals",
    "InoueSMData", "InoueInvariantSpace", "inoue_sm_data", "inoue_sm_invariant_space",
    "INOUE_COMPONENTS", "INOUE_WEIGHTS",
]

Z, XI = 0, 1


# translation-invariant connections

@dataclass(frozen=True)
class TranslationInvariantData:
    """Six constants ``Gamma^k_ij`` with ``i <= j``; ``Gamma^k_21 = Gamma^k_12``."""

    g1_11: Scalar = Scalar(0)
    g1_12: Scalar = Scalar(0)
    g1_22: Scalar = Scalar(0)
    g2_11: Scalar = Scalar(0)
    g2_12: Scalar = Scalar(0)
    g2_22: Scalar = Scalar(0)

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    def values(self) -> tuple[Scalar, ...]:
        return (self.g1_11, self.g1_12, self.g1_22, self.g2_11, self.g2_12, self.g2_22)


def translation_invariant(d: TranslationInvariantData, variables=DEFAULT_NAMES) -> Connection:
    entries = {
        (0, 0, 0): d.g1_11, (0, 0, 1): d.g1_12, (0, 1, 1): d.g1_22,
        (1, 0, 0): d.g2_11, (1, 0, 1): d.g2_12, (1, 1, 1): d.g2_22,
    }
    return Connection.from_entries(entries, variables, symmetric=True)


def flatness_relations(d: TranslationInvariantData) -> list[Scalar]:
    """Curvature entries ``r[0][0], r[1][0], r[0][1], r[1][1]`` as constants.

    Each is a quadratic form in the six constants; all vanish iff flat.
    """
    r = curvature(translation_invariant(d))
    return [r.r[l][k].constant_value() for k in (0, 1) for l in (0, 1)]


# the elliptic-fibration family

@dataclass(frozen=True)
class EllipticFamilyData:
    """Coefficients ``f12, g22, g12`` depending on the second variable only."""

    f12: Expr = field(default_factory=lambda: Expr.const(0))
    g22: Expr = field(default_factory=lambda: Expr.const(0))
    g12: Expr = field(default_factory=lambda: Expr.const(0))

    def __post_init__(self):
        for name in ("f12", "g22", "g12"):
            v = getattr(self, name)
            if not isinstance(v, Expr):
                v = Expr.const(v)
                object.__setattr__(self, name, v)
        self.check()

    def check(self) -> None:
        for name in ("f12", "g22", "g12"):
            if getattr(self, name).depends_on(Z):
                raise DependsOnFirstVariable(f"{name} = {getattr(self, name)} depends on the first variable")

    def moduli_coordinates(self) -> tuple[Expr, Expr, Expr]:
        """``(f12, g22, w)`` with ``w = -2 g12 + g22' - f12'``, the quadratic-differential coordinate."""
        w = -2 * self.g12 + self.g22.diff(XI) - self.f12.diff(XI)
        return (self.f12, self.g22, w)

    @classmethod
    def from_moduli_coordinates(cls, f12, g22, w) -> "EllipticFamilyData":
        f12, g22, w = (x if isinstance(x, Expr) else Expr.const(x) for x in (f12, g22, w))
        g12 = (g22.diff(XI) - f12.diff(XI) - w) / 2
        return cls(f12, g22, g12)


def reference_shift(variables=DEFAULT_NAMES) -> DiffTensor:
    """Difference between the flat reference connection and the standard one: ``f11 = f22 = g21 = 1``."""
    return DiffTensor.from_fg(variables, f11=1, f22=1, g21=1)


def elliptic_family(d: EllipticFamilyData, variables=DEFAULT_NAMES) -> Connection:
    """Standard connection + reference shift + ``omega`` with ``g11 = f12``.

    Christoffels: ``G1_11 = 1, G1_12 = G1_21 = f12, G2_12 = G2_21 = 1,
    G1_22 = g12, G2_22 = g22, G2_11 = 0``.
    """
    d.check()
    omega = DiffTensor.from_fg(variables, f12=d.f12, g11=d.f12, g12=d.g12, g22=d.g22)
    return add(add(Connection.standard(variables), reference_shift(variables)), omega)


def elliptic_closed_form_curvature(d: EllipticFamilyData) -> tuple[tuple[Expr, Expr], tuple[Expr, Expr]]:
    """``r[l][k]`` from the closed form: ``R(dz, dxi) dz = f12 dz`` and
    ``R(dz, dxi) dxi = (f12 (g22 - f12) - f12') dz - f12 dxi``."""
    f, g22 = d.f12, d.g22
    return ((f, f * (g22 - f) - f.diff(XI)), (Expr.const(0), -f))


def _mobius(a: Scalar, b: Scalar, c: Scalar, dd: Scalar) -> Expr:
    xi = Expr.var(XI)
    return (a * xi + b) / (c * xi + dd)


def gamma_equivariance_residuals(d: EllipticFamilyData, group_element) -> list[Expr]:
    """Left minus right side of the six equivariance equations under
    ``gamma = (a, b; c, d)`` acting by ``xi -> (a xi + b)/(c xi + d)``.

    The family has ``f11 = f21 = f22 = 0``; all six equations are written out
    so the zero terms are explicit. Zero residuals mean ``gamma``-invariance.
    """
    a, b, c, dd = (as_scalar(x) for x in group_element)
    if not (a * dd - b * c).is_one():
        raise NotUnimodular(f"ad - bc = {a * dd - b * c}, expected 1")
    d.check()
    zero = Expr.const(0)
    f11 = f21 = f22 = zero
    f12, g12, g22 = d.f12, d.g12, d.g22
    gxi = _mobius(a, b, c, dd)
    j = c * Expr.var(XI) + dd  # c xi + d

    def at(e: Expr) -> Expr:
        return e.subs(XI, gxi) if e.depends_on(XI) else e

    return [
        f11 - (at(f11) - c * at(f21) * j),
        f12 - (at(f12) * j ** -2 - 2 * c ** 2 * at(f21) - c * at(f22) * j ** -1 + 2 * c * at(f11) * j ** -1),
        f21 - at(f21) * j ** 2,
        f22 - (2 * at(f21) * c * j + at(f22)),
        g12 - (at(g12) * j ** -4 + c ** 2 * at(f11) * j ** -2 + c * at(f12) * j ** -3
               - c ** 3 * at(f21) * j ** -1 - c ** 2 * at(f22) * j ** -2 - c * at(g22) * j ** -3),
        g22 - (at(g22) * j ** -2 + c * at(f22) * j ** -1 + c ** 2 * at(f21)),
    ]


# Inoue surfaces S_M

INOUE_COMPONENTS = ("f11", "f12", "f21", "f22", "g11", "g12", "g21", "g22")

# (power of alpha, power of beta) in the scale factor of each component under
# (w, z) -> (alpha w, beta z): dz -> beta, dw -> alpha, d_z -> 1/beta, d_w -> 1/alpha.
# f-components have dz in the first slot, g-components dw; second index 1 -> dz, 2 -> dw
# in the second slot; first index 1 -> d_z, 2 -> d_w output.
INOUE_WEIGHTS: dict[str, tuple[int, int]] = {}
for _name in INOUE_COMPONENTS:
    _first = (0, 1) if _name[0] == "f" else (1, 0)
    _out = (0, -1) if _name[1] == "1" else (-1, 0)
    _second = (0, 1) if _name[2] == "1" else (1, 0)
    INOUE_WEIGHTS[_name] = (_first[0] + _out[0] + _second[0], _first[1] + _out[1] + _second[1])
del _name, _first, _out, _second


@dataclass(frozen=True)
class InoueSMData:
    m: tuple[tuple[int, int, int], ...]
    alpha: float
    beta: complex
    charpoly: tuple[int, int, int, int]  # x^3 + c2 x^2 + c1 x + c0, leading first


@dataclass(frozen=True)
class InoueInvariantSpace:
    dimension: int
    scale_factors: tuple[complex, ...]  # ordered as INOUE_COMPONENTS
    data: InoueSMData

    def factor(self, name: str) -> complex:
        return self.scale_factors[INOUE_COMPONENTS.index(name)]


def _det3(m) -> int:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def inoue_sm_data(m, tol: float = 1e-9) -> InoueSMData:
    """Validate ``m`` in SL(3, Z) with one real eigenvalue ``alpha > 1`` and a
    non-real pair ``beta, conj(beta)``; returns the eigenvalue witnesses."""
    mi = tuple(tuple(int(x) for x in row) for row in m)
    if len(mi) != 3 or any(len(r) != 3 for r in mi):
        raise BadSpectrum("matrix must be 3x3")
    if any(float(x) != int(x) for row in m for x in row):
        raise BadSpectrum("matrix entries must be integers")
    det = _det3(mi)
    if det != 1:
        raise BadSpectrum(f"det = {det}, expected 1")
    tr = mi[0][0] + mi[1][1] + mi[2][2]
    minors = (mi[0][0] * mi[1][1] - mi[0][1] * mi[1][0]
              + mi[0][0] * mi[2][2] - mi[0][2] * mi[2][0]
              + mi[1][1] * mi[2][2] - mi[1][2] * mi[2][1])
    charpoly = (1, -tr, minors, -det)
    eig = np.linalg.eigvals(np.array(mi, dtype=float))
    real = [e for e in eig if abs(e.imag) <= tol]
    nonreal = [e for e in eig if abs(e.imag) > tol]
    if len(real) != 1 or len(nonreal) != 2:
        raise BadSpectrum(f"eigenvalues {eig} are not one real and a non-real conjugate pair")
    alpha = float(real[0].real)
    if alpha <= 1:
        raise BadSpectrum(f"real eigenvalue {alpha} is not > 1")
    beta = complex(max(nonreal, key=lambda e: e.imag))
    # det = alpha |beta|^2 = 1
    if abs(alpha * abs(beta) ** 2 - 1) > tol:
        raise BadSpectrum("eigenvalues violate alpha |beta|^2 = 1")
    return InoueSMData(mi, alpha, beta, charpoly)


def inoue_sm_invariant_space(m, tol: float = 1e-9) -> InoueInvariantSpace:
    """Scale factors of the eight tensor components under ``(w, z) -> (alpha w, beta z)``
    and the number of them equal to 1 (the dimension of constant invariant tensors)."""
    data = inoue_sm_data(m, tol)
    factors = tuple(complex(data.alpha ** pa * data.beta ** pb) for pa, pb in
                    (INOUE_WEIGHTS[name] for name in INOUE_COMPONENTS))
    dim = sum(1 for f in factors if abs(f - 1) < tol)
    return InoueInvariantSpace(dim, factors, data)
