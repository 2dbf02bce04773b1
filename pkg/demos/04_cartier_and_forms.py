"""The Cartier operator on top forms and its exactness bookkeeping.

On affine space the Cartier operator of g dx_1^...^dx_n is the
Frobenius trace of g times the volume form: monomials with some
exponent not p-1 mod p are boundaries (exhibited explicitly), the rest
carry p-th roots.  The power-dlog map is additive up to an exact carry
term built from ((X+Y)^p - X^p - Y^p)/p.
"""

from frobsplit import (
    DifferentialForm,
    carry_polynomial,
    cartier_top,
    compose,
    exactness_witness,
    exterior_d,
    parse_expr,
    power_dlog_form,
    ring,
    volume_form,
)

p = 3
ctx = ring(p, "x y")

print(f"characteristic {p}, ring F_{p}[x, y]")
print("carry polynomial:", carry_polynomial(p))

print()
for text in ["(x*y)^(p-1)", "x^(p-1)*y^(2*p-1)", "x^2", "x^5*y^2"]:
    g = parse_expr(text, ctx)
    print(f"Cartier of ({text}) tau = ({cartier_top(g)}) tau")

print()
m = (1, 2)
eta = exactness_witness(ctx, m)
tau_m = volume_form(ctx).times_poly(ctx.monomial(m))
print(f"x*y^2 tau is a boundary: with eta = {eta},")
print(f"  d(eta) = {exterior_d(eta)}  (equals x*y^2 dx^dy: {exterior_d(eta) == tau_m})")

print()
f = parse_expr("x+y^2", ctx)
g = parse_expr("x*y+2", ctx)
lhs = power_dlog_form(f + g)
carry = compose(carry_polynomial(p), [f, g])
rhs = power_dlog_form(f) + power_dlog_form(g) + exterior_d(DifferentialForm.from_polynomial(carry))
print("additivity of h -> h^(p-1) dh up to the exact carry term:")
print(f"  (f+g)^(p-1) d(f+g) == f^(p-1) df + g^(p-1) dg + d(carry(f,g)): {lhs == rhs}")
