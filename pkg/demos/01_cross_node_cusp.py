"""Three plane curves, three different answers.

The union of the coordinate axes (the "cross") is compatibly split, the
nodal cubic is split away from characteristic two, and the cuspidal
semigroup ring is never split.  This script walks through all three.
"""

from frobsplit import (
    NumericalSemigroup,
    TwistedEndo,
    check_splitting,
    frobenius_trace,
    ideal,
    is_compatible,
    parse_expr,
    ring,
    semigroup_split_check,
)

print("== The cross ==")
for p in (2, 3, 5, 7):
    ctx = ring(p, "x y")
    coeff = parse_expr("(x*y)^(p-1)", ctx)
    sigma = TwistedEndo(coeff)
    verdict = check_splitting(sigma)
    compat = is_compatible(sigma, ideal(parse_expr("x*y", ctx)), "both")
    print(f"p={p}: coefficient {coeff} gives {verdict.kind.value}, "
          f"compatible with (x*y): {compat}")

print()
print("== The node ==")
for p in (3, 5):
    ctx = ring(p, "x y")
    coeff = parse_expr("(y^2-x^3-x^2)^(p-1)", ctx)
    print(f"p={p}: trace of the coefficient is {frobenius_trace(coeff)} "
          f"-> {check_splitting(TwistedEndo(coeff)).kind.value}")

# In characteristic two the same equation degenerates to a cusp and the
# trace of the coefficient dies entirely.
ctx2 = ring(2, "x y")
coeff2 = parse_expr("(y^2-x^3-x^2)^(p-1)", ctx2)
v2 = check_splitting(TwistedEndo(coeff2))
print(f"p=2: verdict {v2.kind.value}, witness (the image of 1) = {v2.witness}")

print()
print("== The cusp, via its value semigroup ==")
for gens in ([2, 3], [3, 5], [1]):
    s = NumericalSemigroup(gens)
    v = semigroup_split_check(s, 2)
    if v.split:
        print(f"<{','.join(map(str, gens))}>: split (the semigroup is all of N)")
    else:
        print(f"<{','.join(map(str, gens))}>: not split; gap {v.witness} has "
              f"2*{v.witness} in the semigroup, so a splitting of the fraction "
              f"field would leave the ring")
