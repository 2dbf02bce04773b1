"""Groebner bases over F_p and everything ideal-compatibility related.

The engine is a plain Buchberger loop with the normal selection strategy
and the product/chain pair criteria, followed by inter-reduction, so the
basis returned for given generators and order is unique and the whole
pipeline is deterministic.  On top of it sit the Frobenius bracket power
I^[p], colon ideals by tag-variable elimination, the colon module
(I^[p] : I) whose elements are exactly the coefficients of twisted
endomorphisms compatible with I (Fedder's criterion), an independent
finite compatibility check used to cross-validate it, the existence test
for compatible splittings, and nilpotency witnesses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fparith import (
    ContextMismatchError,
    Monomial,
    Polynomial,
    RingContext,
    embed,
    exact_divide,
    grevlex_key,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)
from .splitcore import TwistedEndo, frobenius_trace

COMPAT_ENUM_LIMIT = 4096
"""Largest p^n the finite compatibility check will enumerate."""


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: lex, grevlex, or a block order elim(k).

    elim(k) compares the first k variables by grevlex, then the rest by
    grevlex; any monomial involving one of the first k variables beats
    any monomial in the remaining ones, which is what elimination needs.
    """

    kind: str
    block: int = 0

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def elim(cls, k: int) -> "MonomialOrder":
        if k < 1:
            raise ValueError("elimination block must be nonempty")
        return cls("elim", k)

    def key(self, m: Monomial):
        if self.kind == "lex":
            return m
        if self.kind == "grevlex":
            return grevlex_key(m)
        if self.kind == "elim":
            if self.block >= len(m):
                raise ValueError("elimination block must be smaller than the arity")
            return (grevlex_key(m[: self.block]), grevlex_key(m[self.block :]))
        raise ValueError(f"unknown order kind {self.kind!r}")


GREVLEX = MonomialOrder.grevlex()


@dataclass(frozen=True)
class IdealPresentation:
    """A finitely generated ideal, given by generators.

    Zero generators are dropped; no generators at all means the zero
    ideal.
    """

    context: RingContext
    generators: tuple[Polynomial, ...]

    def __init__(self, context: RingContext, generators) -> None:
        gens = tuple(g for g in generators if not g.is_zero())
        for g in gens:
            if g.context != context:
                raise ContextMismatchError("generator from a different ring")
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "generators", gens)

    def is_zero_ideal(self) -> bool:
        return not self.generators


def ideal(*generators: Polynomial) -> IdealPresentation:
    """Convenience constructor; at least one generator fixes the context."""
    if not generators:
        raise ValueError("need at least one generator to infer the ring")
    return IdealPresentation(generators[0].context, generators)


@dataclass(frozen=True)
class GroebnerBasis:
    context: RingContext
    order: MonomialOrder
    basis: tuple[Polynomial, ...]

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.basis)


def _leading(f: Polynomial, order: MonomialOrder) -> tuple[Monomial, int]:
    m = max(f.terms, key=order.key)
    return m, f.terms[m]


def _monic(f: Polynomial, order: MonomialOrder) -> Polynomial:
    _, c = _leading(f, order)
    if c == 1:
        return f
    p = f.context.p
    return f.scale(pow(c, p - 2, p))


def _reduce(f: Polynomial, basis: list[Polynomial], order: MonomialOrder) -> Polynomial:
    """Full remainder of f on division by the list (all terms reduced)."""
    if not basis:
        return f
    p = f.context.p
    leads = [(_leading(g, order)[0], g.terms) for g in basis]
    work = dict(f.terms)
    remainder: dict[Monomial, int] = {}
    while work:
        lead = max(work, key=order.key)
        for lm, gterms in leads:
            if monomial_divides(lm, lead):
                shift = monomial_div(lead, lm)
                factor = (work[lead] * pow(gterms[lm], p - 2, p)) % p
                for m, c in gterms.items():
                    t = monomial_mul(m, shift)
                    s = (work.get(t, 0) - factor * c) % p
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            remainder[lead] = work.pop(lead)
    return Polynomial._raw(f.context, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """The S-polynomial cancelling the leading terms of f and g."""
    mf, cf = _leading(f, order)
    mg, cg = _leading(g, order)
    p = f.context.p
    lcm = monomial_lcm(mf, mg)
    tf = Polynomial(f.context, {monomial_div(lcm, mf): pow(cf, p - 2, p)})
    tg = Polynomial(g.context, {monomial_div(lcm, mg): pow(cg, p - 2, p)})
    return tf * f - tg * g


def buchberger(I: IdealPresentation, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of I under the given order.

    Deterministic: generators are pre-sorted canonically, pairs are
    selected by smallest lcm (normal strategy) with the product and chain
    criteria pruning useless ones, and the final basis is inter-reduced,
    monic, and sorted by decreasing leading monomial.
    """
    gens = sorted(
        {_monic(g, order) for g in I.generators if not g.is_zero()},
        key=lambda g: sorted(((order.key(m), c) for m, c in g.terms.items()), reverse=True),
    )
    if not gens:
        return GroebnerBasis(I.context, order, ())

    basis: list[Polynomial] = []
    leads: list[Monomial] = []
    pairs: set[tuple[int, int]] = set()

    def add(g: Polynomial) -> None:
        k = len(basis)
        basis.append(g)
        leads.append(_leading(g, order)[0])
        pairs.update((i, k) for i in range(k))

    for g in gens:
        add(g)

    while pairs:
        i, j = min(pairs, key=lambda ij: (order.key(monomial_lcm(leads[ij[0]], leads[ij[1]])), ij))
        pairs.discard((i, j))
        lcm = monomial_lcm(leads[i], leads[j])
        # Product criterion: coprime leading monomials reduce to zero.
        if lcm == monomial_mul(leads[i], leads[j]):
            continue
        # Chain criterion: a third element dividing the lcm, whose pairs
        # with both i and j were already handled, makes this pair redundant.
        if any(
            k != i and k != j
            and monomial_divides(leads[k], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        r = _reduce(s_polynomial(basis[i], basis[j], order), basis, order)
        if not r.is_zero():
            add(_monic(r, order))

    # Minimalize: drop elements whose leading monomial another one divides.
    keep: list[int] = []
    for i, lm in enumerate(leads):
        if not any(
            j != i and monomial_divides(leads[j], lm) and (leads[j] != lm or j < i)
            for j in range(len(basis))
        ):
            keep.append(i)
    minimal = [basis[i] for i in keep]
    # Reduce each element against the others; leading terms survive.
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(_monic(_reduce(g, others, order), order))
    reduced.sort(key=lambda g: order.key(_leading(g, order)[0]), reverse=True)
    return GroebnerBasis(I.context, order, tuple(reduced))


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of f modulo the basis; zero iff f lies in the ideal."""
    if f.context != G.context:
        raise ContextMismatchError("polynomial and basis from different rings")
    return _reduce(f, list(G.basis), G.order)


def frobenius_power_ideal(I: IdealPresentation) -> IdealPresentation:
    """The bracket power I^[p], generated by p-th powers of the generators."""
    return IdealPresentation(I.context, tuple(g.frobenius() for g in I.generators))


def _tagged_context(ctx: RingContext) -> RingContext:
    tag = "_t"
    k = 0
    while tag in ctx.variables:
        k += 1
        tag = f"_t{k}"
    return RingContext(ctx.prime, (tag,) + ctx.variables)


def intersect(A: IdealPresentation, B: IdealPresentation) -> IdealPresentation:
    """Ideal intersection via tag-variable elimination.

    A cap B is the elimination ideal of t*A + (1-t)*B with the tag t
    ordered before everything else.
    """
    if A.context != B.context:
        raise ContextMismatchError("ideals from different rings")
    ctx = A.context
    if A.is_zero_ideal() or B.is_zero_ideal():
        return IdealPresentation(ctx, ())
    ext = _tagged_context(ctx)
    shift = list(range(1, ext.arity))
    t = ext.variable(0)
    one_minus_t = ext.one() - t
    gens = [t * embed(g, ext, shift) for g in A.generators]
    gens += [one_minus_t * embed(g, ext, shift) for g in B.generators]
    G = buchberger(IdealPresentation(ext, gens), MonomialOrder.elim(1))
    kept = []
    for g in G.basis:
        if all(m[0] == 0 for m in g.terms):
            kept.append(Polynomial(ctx, {m[1:]: c for m, c in g.terms.items()}))
    return IdealPresentation(ctx, kept)


def colon(J: IdealPresentation, g: Polynomial) -> IdealPresentation:
    """The colon ideal (J : g) = { a : a*g in J }.

    Computed as (J intersect (g)) / g; every generator of the
    intersection is divisible by g, so the quotients are exact.
    """
    if g.is_zero():
        raise ZeroDivisionError("colon by the zero polynomial")
    inter = intersect(J, IdealPresentation(J.context, (g,)))
    return IdealPresentation(J.context, tuple(exact_divide(h, g) for h in inter.generators))


def fedder_module(I: IdealPresentation) -> IdealPresentation:
    """Coefficients of all twisted endomorphisms compatible with I.

    This is the colon ideal (I^[p] : I), intersected over the generators.
    The zero ideal maps to the zero ideal by convention.
    """
    if I.is_zero_ideal():
        return I
    Ip = frobenius_power_ideal(I)
    result: IdealPresentation | None = None
    for g in I.generators:
        piece = colon(Ip, g)
        result = piece if result is None else intersect(result, piece)
    assert result is not None
    return result


def is_compatible(
    sigma: TwistedEndo, I: IdealPresentation, method: str = "both"
) -> bool:
    """Does sigma map the ideal I into itself?

    method "fedder" tests membership of the coefficient in the colon
    module (I^[p] : I).  method "finite" checks, for every generator g
    and every exponent vector a in [0, p-1]^n, that the trace of
    coeff * g * x^a lies in I; this is complete because every polynomial
    is a combination sum_a h_a^p x^a.  method "both" runs the two and
    raises if they ever disagree.
    """
    if sigma.context != I.context:
        raise ContextMismatchError("endomorphism and ideal from different rings")
    if method == "both":
        by_fedder = is_compatible(sigma, I, "fedder")
        by_finite = is_compatible(sigma, I, "finite")
        if by_fedder != by_finite:
            raise AssertionError(
                f"compatibility methods disagree on {sigma.coeff}: "
                f"fedder={by_fedder} finite={by_finite}"
            )
        return by_fedder
    if I.is_zero_ideal():
        return True
    if method == "fedder":
        return buchberger(fedder_module(I)).contains(sigma.coeff)
    if method == "finite":
        ctx = I.context
        n, p = ctx.arity, ctx.p
        if p**n > COMPAT_ENUM_LIMIT:
            raise ValueError(
                f"finite check needs p^n = {p**n} trace evaluations; "
                f"limit is {COMPAT_ENUM_LIMIT}"
            )
        G = buchberger(I)
        for g in I.generators:
            base = sigma.coeff * g
            for a in itertools.product(range(p), repeat=n):
                shifted = base * ctx.monomial(a)
                if not normal_form(frobenius_trace(shifted), G).is_zero():
                    return False
        return True
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class ExistsSplitVerdict:
    exists: bool
    obstruction: GroebnerBasis


def exists_compatible_splitting(I: IdealPresentation) -> ExistsSplitVerdict:
    """Is there any splitting compatible with I?

    The traces of x^a * c over generators c of (I^[p] : I) and exponent
    vectors a in [0, p-1]^n generate the ideal of all values sigma(1)
    with sigma compatible with I; a compatible splitting exists iff that
    ideal is the whole ring.  Its reduced basis is returned as the
    obstruction (it is (1) exactly when a splitting exists).
    """
    ctx = I.context
    n, p = ctx.arity, ctx.p
    if I.is_zero_ideal():
        # No constraint at all: the standard splitting works.
        return ExistsSplitVerdict(True, buchberger(IdealPresentation(ctx, (ctx.one(),))))
    if p**n > COMPAT_ENUM_LIMIT:
        raise ValueError(f"existence check needs p^n = {p**n} trace evaluations")
    C = fedder_module(I)
    values: set[Polynomial] = set()
    for c in C.generators:
        for a in itertools.product(range(p), repeat=n):
            v = frobenius_trace(ctx.monomial(a) * c)
            if not v.is_zero():
                values.add(v)
    G = buchberger(IdealPresentation(ctx, tuple(values)))
    return ExistsSplitVerdict(G.is_unit_ideal(), G)


def nilpotent_witness(g: Polynomial, I: IdealPresentation, bound: int) -> int | None:
    """Smallest k <= bound with g not in I but g^k in I, if any.

    Such a k shows I is not radical, which rules out any compatible
    splitting.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    G = buchberger(I)
    if normal_form(g, G).is_zero():
        return None
    power = g
    for k in range(2, bound + 1):
        power = power * g
        if normal_form(power, G).is_zero():
            return k
    return None
