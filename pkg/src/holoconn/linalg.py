"""Exact row reduction over the Gaussian rationals."""

from __future__ import annotations

from .expr.scalar import ZERO, Scalar

__all__ = ["Echelon", "nullspace", "rank"]

Row = dict[int, Scalar]  # column -> nonzero entry


class Echelon:
    """Incremental reduced row-echelon form of a growing set of sparse rows.

    Rows are added one at a time; :attr:`rank` is always current, so the
    rank of every prefix of a row sequence comes for free.
    """

    def __init__(self):
        self.pivots: dict[int, Row] = {}  # pivot column -> row with pivot entry 1

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Row) -> bool:
        """Insert ``row``; returns True if it increased the rank."""
        r = {c: v for c, v in row.items() if not v.is_zero()}
        # pivot rows are fully reduced, so one pass clears every pivot column
        for pc in [c for c in r if c in self.pivots]:
            _axpy(r, self.pivots[pc], -r[pc])
        if not r:
            return False
        pc = min(r)
        inv = r[pc].inverse()
        r = {c: v * inv for c, v in r.items()}
        for other in self.pivots.values():
            v = other.get(pc)
            if v is not None:
                _axpy(other, r, -v)
        self.pivots[pc] = r
        return True

    def nullspace(self, ncols: int) -> list[list[Scalar]]:
        """Basis of ``{x : row . x = 0 for every row}`` in ``ncols`` unknowns."""
        free = [c for c in range(ncols) if c not in self.pivots]
        basis = []
        for f in free:
            x = [ZERO] * ncols
            x[f] = Scalar(1)
            for pc, row in self.pivots.items():
                v = row.get(f)
                if v is not None:
                    x[pc] = -v
            basis.append(x)
        return basis


def _axpy(target: Row, src: Row, a: Scalar) -> None:
    """target += a * src, dropping zeros."""
    for c, v in src.items():
        s = target.get(c, ZERO) + a * v
        if s.is_zero():
            target.pop(c, None)
        else:
            target[c] = s


def rank(rows: list[Row]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows: list[Row], ncols: int) -> list[list[Scalar]]:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.nullspace(ncols)
