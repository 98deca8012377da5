"""Affine connections on a two-dimensional chart.

Index convention (0-based throughout): ``gamma[k][i][j]`` is the Christoffel
coefficient with ``nabla_{d_i} d_j = sum_k gamma[k][i][j] d_k``. Index 0 is
the first chart variable (``z``), index 1 the second (``xi``).

Difference tensors use the same layout, ``omega[k][i][j]``. The classical
``f/g`` naming of the eight components is::

    f11 = omega[0][0][0]   f12 = omega[0][0][1]   f21 = omega[1][0][0]   f22 = omega[1][0][1]
    g11 = omega[0][1][0]   g12 = omega[0][1][1]   g21 = omega[1][1][0]   g22 = omega[1][1][1]

i.e. ``f`` carries a ``dz`` in the first slot and ``g`` a ``dxi``; the first
index of the name selects the output vector (1 -> d_z, 2 -> d_xi) and the
second the second slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Mapping

from .errors import ChartMismatch, NotTorsionFree
from .expr import DEFAULT_NAMES, Expr

__all__ = [
    "Connection", "DiffTensor", "CurvatureTensor", "FG_INDEX",
    "torsion", "curvature", "is_flat", "is_torsion_free", "difference", "add",
    "require_torsion_free",
]

Table3 = tuple[tuple[tuple[Expr, Expr], tuple[Expr, Expr]], tuple[tuple[Expr, Expr], tuple[Expr, Expr]]]

FG_INDEX: dict[str, tuple[int, int, int]] = {
    "f11": (0, 0, 0), "f12": (0, 0, 1), "f21": (1, 0, 0), "f22": (1, 0, 1),
    "g11": (0, 1, 0), "g12": (0, 1, 1), "g21": (1, 1, 0), "g22": (1, 1, 1),
}

_IDX = (0, 1)


def _table(fn: Callable[[int, int, int], object]) -> Table3:
    return tuple(
        tuple(tuple(_expr(fn(k, i, j)) for j in _IDX) for i in _IDX) for k in _IDX
    )  # type: ignore[return-value]


def _expr(x) -> Expr:
    return x if isinstance(x, Expr) else Expr.const(x)


def _from_nested(t) -> Table3:
    return _table(lambda k, i, j: t[k][i][j])


@dataclass(frozen=True)
class Connection:
    """Christoffel table ``gamma[k][i][j]`` plus the chart variable names."""

    gamma: Table3
    variables: tuple[str, str] = DEFAULT_NAMES

    def __post_init__(self):
        object.__setattr__(self, "gamma", _from_nested(self.gamma))
        object.__setattr__(self, "variables", tuple(self.variables))

    @classmethod
    def standard(cls, variables: tuple[str, str] = DEFAULT_NAMES) -> "Connection":
        return cls(_table(lambda k, i, j: 0), variables)

    @classmethod
    def from_entries(cls, entries: Mapping[tuple[int, int, int], object],
                     variables: tuple[str, str] = DEFAULT_NAMES, symmetric: bool = False) -> "Connection":
        """Build from a sparse ``{(k, i, j): value}`` map; missing entries are 0.

        With ``symmetric=True`` each given ``(k, i, j)`` also fills ``(k, j, i)``.
        """
        full = {key: _expr(v) for key, v in entries.items()}
        if symmetric:
            for (k, i, j), v in list(full.items()):
                other = full.setdefault((k, j, i), v)
                if other != v:
                    raise ValueError(f"conflicting values for gamma[{k}][{i}][{j}] and gamma[{k}][{j}][{i}]")
        return cls(_table(lambda k, i, j: full.get((k, i, j), 0)), variables)

    def __getitem__(self, kij: tuple[int, int, int]) -> Expr:
        k, i, j = kij
        return self.gamma[k][i][j]

    def entries(self):
        for k, i, j in product(_IDX, _IDX, _IDX):
            yield (k, i, j), self.gamma[k][i][j]


@dataclass(frozen=True)
class DiffTensor:
    """A (1,2)-tensor ``omega[k][i][j]``, e.g. the difference of two connections."""

    omega: Table3
    variables: tuple[str, str] = DEFAULT_NAMES

    def __post_init__(self):
        object.__setattr__(self, "omega", _from_nested(self.omega))
        object.__setattr__(self, "variables", tuple(self.variables))

    @classmethod
    def zero(cls, variables: tuple[str, str] = DEFAULT_NAMES) -> "DiffTensor":
        return cls(_table(lambda k, i, j: 0), variables)

    @classmethod
    def from_fg(cls, variables: tuple[str, str] = DEFAULT_NAMES, **components) -> "DiffTensor":
        """Build from ``f11=..., g22=...`` keywords; omitted components are 0."""
        unknown = set(components) - set(FG_INDEX)
        if unknown:
            raise TypeError(f"unknown tensor components: {sorted(unknown)}")
        by_index = {FG_INDEX[name]: v for name, v in components.items()}
        return cls(_table(lambda k, i, j: by_index.get((k, i, j), 0)), variables)

    @classmethod
    def from_entries(cls, entries: Mapping[tuple[int, int, int], object],
                     variables: tuple[str, str] = DEFAULT_NAMES) -> "DiffTensor":
        full = dict(entries)
        return cls(_table(lambda k, i, j: full.get((k, i, j), 0)), variables)

    def __getitem__(self, kij: tuple[int, int, int]) -> Expr:
        k, i, j = kij
        return self.omega[k][i][j]

    def fg(self) -> dict[str, Expr]:
        return {name: self.omega[k][i][j] for name, (k, i, j) in FG_INDEX.items()}

    def is_zero(self) -> bool:
        return all(self.omega[k][i][j].is_zero() for k, i, j in product(_IDX, _IDX, _IDX))

    def is_symmetric(self) -> bool:
        return all((self.omega[k][0][1] - self.omega[k][1][0]).is_zero() for k in _IDX)

    def __add__(self, other: "DiffTensor") -> "DiffTensor":
        _same_chart(self.variables, other.variables)
        return DiffTensor(_table(lambda k, i, j: self.omega[k][i][j] + other.omega[k][i][j]), self.variables)

    def __sub__(self, other: "DiffTensor") -> "DiffTensor":
        _same_chart(self.variables, other.variables)
        return DiffTensor(_table(lambda k, i, j: self.omega[k][i][j] - other.omega[k][i][j]), self.variables)

    def antisymmetrized(self) -> "DiffTensor":
        """``omega[k][i][j] - omega[k][j][i]``."""
        return DiffTensor(_table(lambda k, i, j: self.omega[k][i][j] - self.omega[k][j][i]), self.variables)


@dataclass(frozen=True)
class CurvatureTensor:
    """``r[l][k]``: the ``d_l`` component of ``R(d_0, d_1) d_k``.

    The full tensor is antisymmetric in its last two slots, so in two
    dimensions this single slot determines it; see :meth:`component`.
    """

    r: tuple[tuple[Expr, Expr], tuple[Expr, Expr]]
    variables: tuple[str, str] = DEFAULT_NAMES

    def component(self, l: int, k: int, i: int, j: int) -> Expr:
        """``R^l_{k i j}``, the ``d_l`` component of ``R(d_i, d_j) d_k``."""
        if i == j:
            return Expr.const(0)
        return self.r[l][k] if (i, j) == (0, 1) else -self.r[l][k]

    def is_zero(self) -> bool:
        return all(self.r[l][k].is_zero() for l in _IDX for k in _IDX)

    def entries(self):
        for l, k in product(_IDX, _IDX):
            yield (l, k), self.r[l][k]


def _same_chart(a: tuple[str, str], b: tuple[str, str]) -> None:
    if tuple(a) != tuple(b):
        raise ChartMismatch(f"chart variables differ: {a} vs {b}")


def torsion(c: Connection) -> DiffTensor:
    """``T[k][i][j] = gamma[k][i][j] - gamma[k][j][i]``."""
    g = c.gamma
    return DiffTensor(_table(lambda k, i, j: g[k][i][j] - g[k][j][i]), c.variables)


def is_torsion_free(c: Connection) -> bool:
    return all((c.gamma[k][0][1] - c.gamma[k][1][0]).is_zero() for k in _IDX)


def require_torsion_free(c: Connection) -> None:
    if not is_torsion_free(c):
        raise NotTorsionFree("connection has nonzero torsion")


def curvature(c: Connection) -> CurvatureTensor:
    """Curvature ``R(d_0, d_1) d_k = nabla_0 nabla_1 d_k - nabla_1 nabla_0 d_k``.

    Componentwise::

        r[l][k] = d_0 gamma[l][1][k] - d_1 gamma[l][0][k]
                  + sum_m (gamma[l][0][m] gamma[m][1][k] - gamma[l][1][m] gamma[m][0][k])
    """
    g = c.gamma

    def entry(l: int, k: int) -> Expr:
        e = g[l][1][k].diff(0) - g[l][0][k].diff(1)
        for m in _IDX:
            e = e + g[l][0][m] * g[m][1][k] - g[l][1][m] * g[m][0][k]
        return e

    return CurvatureTensor(tuple(tuple(entry(l, k) for k in _IDX) for l in _IDX), c.variables)  # type: ignore[arg-type]


def is_flat(c: Connection) -> bool:
    """True iff the (torsion-free) connection has identically zero curvature."""
    require_torsion_free(c)
    return curvature(c).is_zero()


def difference(a: Connection, b: Connection) -> DiffTensor:
    _same_chart(a.variables, b.variables)
    return DiffTensor(_table(lambda k, i, j: a.gamma[k][i][j] - b.gamma[k][i][j]), a.variables)


def add(c: Connection, w: DiffTensor) -> Connection:
    _same_chart(c.variables, w.variables)
    return Connection(_table(lambda k, i, j: c.gamma[k][i][j] + w.omega[k][i][j]), c.variables)
