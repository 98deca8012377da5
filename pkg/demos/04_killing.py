"""Formal Killing jets: dimensions by order and the stabilized value."""

from __future__ import annotations

from holoconn.connection import Connection
from holoconn.expr import ChartPoint, Expr
from holoconn.families import EllipticFamilyData, elliptic_family
from holoconn.killing import killing_dimension, killing_jet_space, killing_system

xi = Expr.var(1)
origin = ChartPoint.origin()

curved = elliptic_family(EllipticFamilyData(xi, Expr.const(0), Expr.const(0)))
names = ("a", "b")
print("Killing equations of the elliptic member f12 = xi:")
for (i, j, k), op in zip(killing_system(curved).labels, killing_system(curved)):
    terms = " + ".join(f"({c})*{names[u]}_{'z' * p + 'xi' * q or '0'}" for (u, (p, q)), c in op.items())
    print(f"  pair ({i}{j}), component {k}: {terms} = 0")

for name, c in [("standard", Connection.standard()), ("elliptic f12 = xi", curved),
                ("flat member", elliptic_family(EllipticFamilyData(Expr.const(0), xi ** 2, xi)))]:
    space = killing_jet_space(c, origin, 8)
    dim, stable = killing_dimension(c, origin, 8, 3)
    print(f"{name:18s} dims by order 2..8: {space.dimensions()}  -> {dim} ({'stabilized' if stable else 'not stabilized'})")

# the surviving jet for the curved member is the fundamental field d/dz
space = killing_jet_space(curved, origin, 8)
a, b = space.basis[0]
print("basis jet:", dict(a.coefficients), dict(b.coefficients))
