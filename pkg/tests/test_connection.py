from __future__ import annotations

import itertools
import random

import pytest
import sympy as sp

from helpers import XI_SYM, Z_SYM, rand_expr, sympy_zero, to_sympy
from holoconn.connection import (
    Connection, DiffTensor, add, curvature, difference, is_flat, is_torsion_free, torsion,
)
from holoconn.errors import ChartMismatch, NotTorsionFree
from holoconn.expr import Expr

Z, XI = Expr.var(0), Expr.var(1)
SYMS = (Z_SYM, XI_SYM)


def rand_connection(rng: random.Random, symmetric: bool = True, density: float = 0.5) -> Connection:
    entries = {}
    for k, i, j in itertools.product((0, 1), repeat=3):
        if symmetric and i > j:
            continue
        if rng.random() < density:
            entries[(k, i, j)] = rand_expr(rng, max_deg=2)
    return Connection.from_entries(entries, symmetric=symmetric)


def sympy_curvature(c: Connection):
    """``R(d_0, d_1) d_k`` from covariant derivatives of sympy vector fields."""
    G = [[[to_sympy(c.gamma[k][i][j]) for j in (0, 1)] for i in (0, 1)] for k in (0, 1)]

    def nabla(x, y):
        return [sum(x[i] * sp.diff(y[k], SYMS[i]) for i in (0, 1))
                + sum(x[i] * y[j] * G[k][i][j] for i in (0, 1) for j in (0, 1)) for k in (0, 1)]

    d0, d1 = [1, 0], [0, 1]
    out = []
    for k in (0, 1):
        dk = [1 if n == k else 0 for n in (0, 1)]
        a = nabla(d0, nabla(d1, dk))
        b = nabla(d1, nabla(d0, dk))
        out.append([a[l] - b[l] for l in (0, 1)])
    return [[out[k][l] for k in (0, 1)] for l in (0, 1)]  # [l][k]


def test_standard_is_flat():
    c = Connection.standard()
    assert is_torsion_free(c)
    assert is_flat(c)


def test_torsion_of_asymmetric_table():
    c = Connection.from_entries({(0, 0, 1): XI, (0, 1, 0): Expr.const(1)})
    t = torsion(c)
    assert not is_torsion_free(c)
    assert t[0, 0, 1] == XI - 1
    assert t[0, 1, 0] == 1 - XI
    assert t.antisymmetrized()[0, 0, 1] == 2 * (XI - 1)


def test_is_flat_requires_torsion_free():
    c = Connection.from_entries({(0, 0, 1): Expr.const(1)})
    with pytest.raises(NotTorsionFree):
        is_flat(c)


def test_curvature_of_known_example():
    # G^1_22 = G^2_11 = 1: a constant connection that is not flat
    c = Connection.from_entries({(0, 1, 1): 1, (1, 0, 0): 1})
    r = curvature(c)
    assert [r.r[l][k].constant_value() for l in (0, 1) for k in (0, 1)] == [-1, 0, 0, 1]


@pytest.mark.parametrize("seed", range(15))
def test_curvature_against_sympy(seed):
    c = rand_connection(random.Random(seed), symmetric=seed % 2 == 0)
    r = curvature(c)
    ref = sympy_curvature(c)
    for l, k in itertools.product((0, 1), repeat=2):
        assert sympy_zero(to_sympy(r.r[l][k]) - ref[l][k])


@pytest.mark.parametrize("seed", range(15))
def test_first_bianchi(seed):
    r = curvature(rand_connection(random.Random(100 + seed)))
    for l, k, i, j in itertools.product((0, 1), repeat=4):
        s = r.component(l, k, i, j) + r.component(l, i, j, k) + r.component(l, j, k, i)
        assert s.is_zero()


@pytest.mark.parametrize("seed", range(10))
def test_curvature_antisymmetric_in_last_pair(seed):
    r = curvature(rand_connection(random.Random(200 + seed)))
    for l, k, i, j in itertools.product((0, 1), repeat=4):
        assert (r.component(l, k, i, j) + r.component(l, k, j, i)).is_zero()


def test_difference_and_add_inverse():
    rng = random.Random(7)
    a, b = rand_connection(rng), rand_connection(rng)
    w = difference(a, b)
    assert add(b, w) == a
    assert difference(a, a).is_zero()


def test_add_preserves_torsion_free_iff_symmetric():
    c = Connection.standard()
    sym = DiffTensor.from_entries({(0, 0, 1): XI, (0, 1, 0): XI})
    asym = DiffTensor.from_entries({(0, 0, 1): XI})
    assert sym.is_symmetric() and is_torsion_free(add(c, sym))
    assert not asym.is_symmetric() and not is_torsion_free(add(c, asym))


def test_chart_mismatch():
    a = Connection.standard(("z", "xi"))
    b = Connection.standard(("u", "v"))
    with pytest.raises(ChartMismatch):
        difference(a, b)
    with pytest.raises(ChartMismatch):
        add(a, DiffTensor.zero(("u", "v")))


def test_fg_dictionary():
    w = DiffTensor.from_fg(f11=1, f12=2, f21=3, f22=4, g11=5, g12=6, g21=7, g22=8)
    assert w[0, 0, 0] == 1 and w[0, 0, 1] == 2 and w[1, 0, 0] == 3 and w[1, 0, 1] == 4
    assert w[0, 1, 0] == 5 and w[0, 1, 1] == 6 and w[1, 1, 0] == 7 and w[1, 1, 1] == 8
    assert {k: v.constant_value() for k, v in w.fg().items()} == {
        "f11": 1, "f12": 2, "f21": 3, "f22": 4, "g11": 5, "g12": 6, "g21": 7, "g22": 8}
    with pytest.raises(TypeError):
        DiffTensor.from_fg(h11=1)


def test_symmetric_conflict_rejected():
    with pytest.raises(ValueError):
        Connection.from_entries({(0, 0, 1): 1, (0, 1, 0): 2}, symmetric=True)
