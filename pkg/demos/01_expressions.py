"""Exact rational functions in two variables over Q(i)."""

from __future__ import annotations

from holoconn.expr import ChartPoint, jet, parse_expr

e = parse_expr("(z^2 - xi^2) / (z - xi)")
print("canonical form of (z^2 - xi^2)/(z - xi):", e)

f = parse_expr("(1 + 2*i) * z * xi / (xi^2 + 1)")
print("f            =", f)
print("df/dxi       =", f.diff(1))
print("mixed agree  :", f.diff(0).diff(1) == f.diff(1).diff(0))

# substitution composes rational functions exactly
print("f(z, z + 1)  =", f.subs(1, parse_expr("z + 1")))

# Taylor jets are exact; coefficients are offsets from the base point
j = jet(parse_expr("1/(z + xi)"), ChartPoint(1, 1), 2)
for pq, c in sorted(j.coefficients.items()):
    print(f"  coefficient of u^{pq[0]} v^{pq[1]}: {c}")
