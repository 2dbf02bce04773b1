"""Extending a splitting of the affine line to the projective line.

A one-variable coefficient extends iff its degree is at most 2(p-1);
the dlog section x^(p-1) extends and is simultaneously compatible with
the origin of both charts.  Divisor compatibility on affine space is a
divisibility test on the coefficient.
"""

from frobsplit import (
    TwistedEndo,
    is_divisor_splitting,
    p1_extension_check,
    parse_expr,
    ring,
)

for p in (2, 3, 5):
    ctx = ring(p, "x")
    for text in ["x^(p-1)", "1", "x^(2*p-2)", "x^(2*p-1)"]:
        sigma = TwistedEndo(parse_expr(text, ctx))
        res = p1_extension_check(sigma)
        if res.extends:
            print(f"p={p}: {text:10s} extends; other chart coefficient {res.other_chart}; "
                  f"compatible with 0: {res.compatible_zero}, with infinity: {res.compatible_infinity}")
        else:
            print(f"p={p}: {text:10s} does not extend (degree beyond 2(p-1))")
    print()

print("divisor compatibility of the cross splitting (divisibility test):")
ctx = ring(3, "x y")
sigma = TwistedEndo(parse_expr("(x*y)^(p-1)", ctx))
for divisor in ["x*y", "(x*y)^(p-1)", "(x*y)^p"]:
    print(f"  divisor {divisor}: {is_divisor_splitting(sigma, parse_expr(divisor, ctx))}")
