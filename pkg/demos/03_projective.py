"""Geodesic ODE and Liouville invariants: projective flatness."""

from __future__ import annotations

from holoconn.connection import Connection, add
from holoconn.expr import parse_expr
from holoconn.projective import geodesic_ode, liouville_invariants, projective_change


def show(name, c):
    ode = geodesic_ode(c)
    lv = liouville_invariants(ode)
    ks = ", ".join(f"K{n} = {k}" for n, k in enumerate(ode.coefficients()))
    print(f"-- {name}\n   {ks}\n   L1 = {lv.l1}, L2 = {lv.l2}, projectively flat: {lv.is_zero()}")


show("G^2_11 = xi^2", Connection.from_entries({(1, 0, 0): parse_expr("xi^2")}))
# xi'' = -z xi is linear in xi, so it is projectively flat
show("G^2_11 = z*xi", Connection.from_entries({(1, 0, 0): parse_expr("z*xi")}))

# a projective change of connection leaves the geodesic ODE untouched
c = Connection.from_entries({(1, 0, 0): parse_expr("xi^2"), (0, 1, 1): parse_expr("z")})
w = projective_change((parse_expr("z*xi"), parse_expr("1/(xi + 1)")))
print("ODE unchanged by a projective change:",
      geodesic_ode(c).coefficients() == geodesic_ode(add(c, w)).coefficients())
