"""Why the x-axis plus a tangent parabola cannot be compatibly split.

The two components meet with higher-order contact, so their scheme
intersection carries a nilpotent.  The existence check sees this as an
obstruction ideal strictly below (1).
"""

from frobsplit import (
    IdealPresentation,
    buchberger,
    exists_compatible_splitting,
    fedder_module,
    frobenius_trace,
    ideal,
    nilpotent_witness,
    normal_form,
    parse_expr,
    ring,
)

ctx = ring(2, "x y")
union = ideal(parse_expr("y*(y-x^2)", ctx))

print("candidate coefficients compatible with the union:")
C = fedder_module(union)
print("  ", [str(g) for g in C.generators])

res = exists_compatible_splitting(union)
print(f"compatible splitting exists: {res.exists}")
print("obstruction ideal:", [str(g) for g in res.obstruction.basis])
print("(a splitting would need the obstruction to reach 1)")

print()
print("the reason, concretely: the intersection of the components")
J = IdealPresentation(ctx, [parse_expr("y", ctx), parse_expr("y-x^2", ctx)])
G = buchberger(J)
print("  intersection ideal reduces to:", [str(g) for g in G.basis])
k = nilpotent_witness(parse_expr("x", ctx), J, 4)
print(f"  x is not in the ideal but x^{k} is: the intersection is non-reduced,")
print("  and no splitting tolerates nilpotents")

print()
print("contrast with the transverse cross:")
cross = ideal(parse_expr("x*y", ctx))
res2 = exists_compatible_splitting(cross)
coeff = parse_expr("x*y", ctx)
print(f"  exists: {res2.exists}; witness coefficient x*y has trace "
      f"{frobenius_trace(coeff)} and lies in the candidate module: "
      f"{normal_form(coeff, buchberger(fedder_module(cross))).is_zero()}")
