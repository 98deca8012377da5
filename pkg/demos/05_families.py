"""The three families: translation-invariant, Inoue S_M, elliptic fibration."""

from __future__ import annotations

from holoconn.connection import curvature, is_flat
from holoconn.expr import Expr
from holoconn.families import (
    INOUE_COMPONENTS, EllipticFamilyData, TranslationInvariantData, elliptic_closed_form_curvature,
    elliptic_family, flatness_relations, gamma_equivariance_residuals, inoue_sm_invariant_space,
    translation_invariant,
)
from holoconn.projective import is_projectively_flat

# translation-invariant: four quadratic residuals decide flatness
d = TranslationInvariantData(g1_22=1, g2_11=1)
print("residuals for G^1_22 = G^2_11 = 1:", [str(r) for r in flatness_relations(d)])
c = translation_invariant(d)
print("flat:", is_flat(c), " projectively flat:", is_projectively_flat(c))

# Inoue S_M for the companion matrix of x^3 - x - 1
space = inoue_sm_invariant_space([[0, 0, 1], [1, 0, 1], [0, 1, 0]])
print(f"alpha = {space.data.alpha:.6f}, beta = {space.data.beta:.6f}")
for name, f in zip(INOUE_COMPONENTS, space.scale_factors):
    print(f"  {name}: factor {f:.6f}  |factor| = {abs(f):.6f}")
print("invariant constant tensors:", space.dimension)

# elliptic fibration: curvature closed form and flatness iff f12 = 0
xi = Expr.var(1)
data = EllipticFamilyData(xi ** 2, xi, 1 / (xi + 1))
r = curvature(elliptic_family(data))
closed = elliptic_closed_form_curvature(data)
print("closed form matches:", all((r.r[l][k] - closed[l][k]).is_zero() for l in (0, 1) for k in (0, 1)))
print("flat with f12 = xi^2:", is_flat(elliptic_family(data)))
print("flat with f12 = 0:  ", is_flat(elliptic_family(EllipticFamilyData(Expr.const(0), xi, xi))))

# invariance under xi -> xi + 1 holds for constant data
const = EllipticFamilyData(Expr.const(2), Expr.const(1), Expr.const(3))
print("translation-invariant data, residuals:", [str(e) for e in gamma_equivariance_residuals(const, (1, 1, 0, 1))])
