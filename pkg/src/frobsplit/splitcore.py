"""Twisted endomorphisms of F_p[x_1..x_n] and splitting verdicts.

The module of twisted-linear endomorphisms (additive maps with
sigma(a^p * b) = a * sigma(b)) of a polynomial ring is free of rank one.
Its generator, here called the Frobenius trace, keeps exactly the
monomials whose exponents are all congruent to p-1 mod p and extracts
the p-th root of the cofactor.  Every twisted endomorphism is therefore
stored as a single coefficient polynomial f, acting as
g -> frobenius_trace(f * g).

A splitting is a twisted endomorphism sending 1 to 1; one that sends 1
to a nonzero constant spans a splitting (rescale to get one).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .fparith import (
    Coefficient,
    ContextMismatchError,
    NotDivisibleError,
    Polynomial,
    Prime,
    RingContext,
    embed,
    exact_divide,
)


class NotHomogeneousError(ValueError):
    """The coefficient polynomial is not homogeneous."""


class NotASplittingError(ValueError):
    """The endomorphism is not a splitting, so the check does not apply."""


def frobenius_trace(f: Polynomial) -> Polynomial:
    """Apply the generating twisted endomorphism to f.

    A term c * x^m survives iff every exponent m_i = p-1 (mod p); it maps
    to c * x^((m - (p-1,..,p-1)) / p).  Coefficients are untouched: the
    prime field is fixed by the Frobenius.
    """
    p = f.context.p
    out = {}
    for m, c in f.terms.items():
        if all(e % p == p - 1 for e in m):
            out[tuple((e - (p - 1)) // p for e in m)] = c
    return Polynomial._raw(f.context, out)


@dataclass(frozen=True)
class TwistedEndo:
    """A twisted endomorphism, stored by its coefficient polynomial."""

    coeff: Polynomial

    @property
    def context(self) -> RingContext:
        return self.coeff.context

    def __call__(self, g: Polynomial) -> Polynomial:
        if g.context != self.context:
            raise ContextMismatchError("argument lives in a different ring")
        return frobenius_trace(self.coeff * g)


class VerdictKind(Enum):
    SPLITTING = "Splitting"
    SPANS_SPLITTING = "SpansSplitting"
    NOT_SPLITTING = "NotSplitting"


@dataclass(frozen=True)
class SplitVerdict:
    """Outcome of a splitting check.

    ``constant`` is set for SPLITTING (always 1) and SPANS_SPLITTING;
    ``witness`` is the image of 1 when it is not a nonzero constant.
    """

    kind: VerdictKind
    constant: Coefficient | None = None
    witness: Polynomial | None = None

    @property
    def is_splitting(self) -> bool:
        return self.kind is VerdictKind.SPLITTING

    @property
    def spans(self) -> bool:
        return self.kind in (VerdictKind.SPLITTING, VerdictKind.SPANS_SPLITTING)


def _verdict_from_image(image: Polynomial) -> SplitVerdict:
    if image.is_constant() and not image.is_zero():
        c = image.constant_value()
        if c.residue == 1:
            return SplitVerdict(VerdictKind.SPLITTING, constant=c)
        return SplitVerdict(VerdictKind.SPANS_SPLITTING, constant=c)
    return SplitVerdict(VerdictKind.NOT_SPLITTING, witness=image)


def check_splitting(sigma: TwistedEndo) -> SplitVerdict:
    """Decide whether sigma is a splitting by evaluating it at 1."""
    return _verdict_from_image(frobenius_trace(sigma.coeff))


def homogeneous_fastpath(sigma: TwistedEndo) -> SplitVerdict:
    """Splitting check for homogeneous coefficients via degree counting.

    For homogeneous f of degree n(p-1) the image of 1 is forced to be
    constant, equal to the coefficient of (x_1...x_n)^(p-1) in f, so only
    that single coefficient is read.  Other degrees cannot yield a
    splitting; the full trace is then computed just to report a witness.
    Agrees with check_splitting on every homogeneous input.
    """
    f = sigma.coeff
    deg = f.homogeneous_degree()
    if deg is None:
        raise NotHomogeneousError("coefficient polynomial is not homogeneous")
    ctx = f.context
    n, p = ctx.arity, ctx.p
    if not f.is_zero() and deg == n * (p - 1):
        c = f.coefficient((p - 1,) * n)
        if c.residue == 0:
            return SplitVerdict(VerdictKind.NOT_SPLITTING, witness=ctx.zero())
        if c.residue == 1:
            return SplitVerdict(VerdictKind.SPLITTING, constant=c)
        return SplitVerdict(VerdictKind.SPANS_SPLITTING, constant=c)
    return SplitVerdict(VerdictKind.NOT_SPLITTING, witness=frobenius_trace(f))


def is_divisor_splitting(sigma: TwistedEndo, h: Polynomial) -> bool:
    """True when the splitting sigma is compatible with the divisor of h.

    On affine space this is exact divisibility of the coefficient by h.
    Requires sigma to actually be a splitting.
    """
    if h.is_zero():
        raise ZeroDivisionError("divisor equation must be nonzero")
    if not check_splitting(sigma).is_splitting:
        raise NotASplittingError("divisor compatibility is only defined for splittings")
    try:
        exact_divide(sigma.coeff, h)
        return True
    except NotDivisibleError:
        return False


def localized_apply(
    sigma: TwistedEndo, num: Polynomial, den: Polynomial
) -> tuple[Polynomial, Polynomial]:
    """Apply sigma to the fraction num/den in a localization.

    Returns the unreduced fraction (sigma(num * den^(p-1)), den).  The
    result is independent of the chosen representative up to
    cross-multiplication; no gcd reduction is attempted.
    """
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    return sigma(num * den.pow_p_minus_1()), den


def tensor(a: TwistedEndo, b: TwistedEndo) -> TwistedEndo:
    """Tensor product on disjoint variable sets.

    The joint coefficient is the product of the two coefficients in the
    concatenated ring; applying the result to g(x)*h(y) gives
    a(g) * b(h).
    """
    ca, cb = a.context, b.context
    if ca.prime != cb.prime:
        raise ContextMismatchError("tensor factors must share the prime")
    overlap = set(ca.variables) & set(cb.variables)
    if overlap:
        raise ValueError(f"variable names overlap: {sorted(overlap)}")
    joint = RingContext(ca.prime, ca.variables + cb.variables)
    fa = embed(a.coeff, joint, range(ca.arity))
    fb = embed(b.coeff, joint, range(ca.arity, joint.arity))
    return TwistedEndo(fa * fb)


@dataclass(frozen=True)
class P1Extension:
    """Whether an affine-line endomorphism extends to the projective line."""

    extends: bool
    other_chart: Polynomial | None
    compatible_zero: bool
    compatible_infinity: bool


def p1_extension_check(sigma: TwistedEndo) -> P1Extension:
    """Extension of a one-variable twisted endomorphism to the projective line.

    With coordinate x on one chart and y = 1/x on the other, the top-form
    twist transforms by (dx)^(1-p) = (-1)^(p-1) * y^(2(p-1)) * (dy)^(1-p),
    so a coefficient f extends iff deg f <= 2(p-1), with other-chart
    coefficient (-1)^(p-1) * y^(2(p-1)) * f(1/y) (returned in the same
    one-variable context, read as a polynomial in the other coordinate).
    Compatibility with the origin of either chart is divisibility of the
    relevant coefficient by the (p-1)-st power of that chart's coordinate.
    """
    ctx = sigma.context
    if ctx.arity != 1:
        raise ValueError("projective-line extension needs a one-variable ring")
    p = ctx.p
    f = sigma.coeff
    bound = 2 * (p - 1)
    if f.total_degree() > bound:
        return P1Extension(False, None, _power_divides(f, p - 1), False)
    sign = pow(-1, p - 1) % p
    flipped = Polynomial(ctx, {(bound - m[0],): c * sign for m, c in f.terms.items()})
    return P1Extension(
        extends=True,
        other_chart=flipped,
        compatible_zero=_power_divides(f, p - 1),
        compatible_infinity=_power_divides(flipped, p - 1),
    )


def _power_divides(f: Polynomial, k: int) -> bool:
    """Does x^k divide the one-variable polynomial f?"""
    if f.is_zero():
        return True
    return min(m[0] for m in f.terms) >= k


@dataclass(frozen=True)
class NumericalSemigroup:
    """Numerical semigroup generated by positive integers with gcd 1.

    The gap set (complement in the naturals) and conductor (least c with
    [c, infinity) contained in the semigroup) are computed at
    construction by dynamic programming up to the Schur bound.
    """

    generators: tuple[int, ...]
    gaps: tuple[int, ...] = field(init=False)
    conductor: int = field(init=False)
    _table: tuple[bool, ...] = field(init=False, repr=False)

    def __init__(self, generators) -> None:
        gens = tuple(sorted(set(int(g) for g in generators)))
        if not gens or any(g < 1 for g in gens):
            raise ValueError("generators must be positive integers")
        if math.gcd(*gens) != 1:
            raise ValueError("generators must have gcd 1")
        bound = (gens[0] - 1) * (gens[-1] - 1)
        table = [False] * (bound + 1)
        table[0] = True
        for i in range(1, bound + 1):
            table[i] = any(i >= g and table[i - g] for g in gens)
        gaps = tuple(i for i in range(1, bound + 1) if not table[i])
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "gaps", gaps)
        object.__setattr__(self, "conductor", gaps[-1] + 1 if gaps else 0)
        object.__setattr__(self, "_table", tuple(table))

    def __contains__(self, m: int) -> bool:
        if m < 0:
            return False
        if m >= self.conductor:
            return True
        return m < len(self._table) and self._table[m]


@dataclass(frozen=True)
class SemigroupVerdict:
    split: bool
    witness: int | None


def semigroup_split_check(s: NumericalSemigroup, p: Prime | int) -> SemigroupVerdict:
    """Decide Frobenius splitness of the semigroup ring F_p[t^a : a in S].

    The ring is split iff S is all of the naturals.  Otherwise there is a
    gap m with p*m in S (the largest gap always qualifies), and any
    splitting of the fraction field would have to send t^(p*m) to t^m,
    mapping the ring outside itself; the smallest such gap is returned as
    witness.
    """
    pval = p.value if isinstance(p, Prime) else Prime(p).value
    if not s.gaps:
        return SemigroupVerdict(split=True, witness=None)
    for m in s.gaps:
        if pval * m in s:
            return SemigroupVerdict(split=False, witness=m)
    raise AssertionError("unreachable: the largest gap always certifies")
