"""Torsion, curvature and flatness of a few connections."""

from __future__ import annotations

from holoconn.connection import Connection, curvature, is_flat, is_torsion_free, torsion
from holoconn.expr import parse_expr


def show(name, c):
    print(f"-- {name}")
    print("   torsion-free:", is_torsion_free(c))
    if not is_torsion_free(c):
        t = torsion(c)
        print("   T^1_12 =", t[0, 0, 1], "  T^2_12 =", t[1, 0, 1])
        return
    r = curvature(c)
    for (l, k), e in r.entries():
        print(f"   R^{l + 1}_{k + 1} = {e}")
    print("   flat:", is_flat(c))


show("standard", Connection.standard())
show("constant, G^1_22 = G^2_11 = 1", Connection.from_entries({(0, 1, 1): 1, (1, 0, 0): 1}))
show("rational, G^1_12 = G^1_21 = 1/(z + 1)",
     Connection.from_entries({(0, 0, 1): parse_expr("1/(z + 1)")}, symmetric=True))
show("with torsion", Connection.from_entries({(0, 0, 1): parse_expr("xi")}))
