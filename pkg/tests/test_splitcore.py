"""Twisted endomorphisms, splitting verdicts, localization, P1, semigroups."""

import random

import pytest

from frobsplit import (
    ContextMismatchError,
    Polynomial,
    NotASplittingError,
    NotHomogeneousError,
    NumericalSemigroup,
    TwistedEndo,
    VerdictKind,
    check_splitting,
    frobenius_trace,
    homogeneous_fastpath,
    is_divisor_splitting,
    localized_apply,
    p1_extension_check,
    parse_expr,
    ring,
    semigroup_split_check,
    tensor,
)
from _util import rand_poly


def _splitting_coeff(rng, ctx, extra_terms=3):
    """A coefficient with trace exactly 1: the full (p-1)-monomial plus
    random terms whose exponents never all sit at p-1 mod p."""
    p, n = ctx.p, ctx.arity
    f = ctx.monomial((p - 1,) * n)
    g = rand_poly(rng, ctx, max_deg=2 * p, max_terms=extra_terms)
    kept = {m: c for m, c in g.terms.items() if not all(e % p == p - 1 for e in m)}
    return f + Polynomial(ctx, kept)


def test_trace_forced_by_definition_p2():
    ctx = ring(2, "x y")
    assert frobenius_trace(ctx.monomial((1, 1))) == ctx.one()
    assert frobenius_trace(ctx.monomial((3, 1))) == ctx.variable("x")
    assert frobenius_trace(ctx.monomial((2, 0))).is_zero()


def test_trace_p3():
    ctx = ring(3, "x y")
    assert frobenius_trace(ctx.monomial((2, 2))) == ctx.one()


def test_trace_node_square_is_one():
    # Only the x^2*y^2 term of the six-term square survives.
    ctx = ring(3, "x y")
    node = parse_expr("(y^2-x^3-x^2)^(p-1)", ctx)
    assert frobenius_trace(node) == ctx.one()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_endo_left_inverse_of_frobenius(p):
    ctx = ring(p, "x y")
    sigma = TwistedEndo(parse_expr("(x*y)^(p-1)", ctx))
    assert sigma(ctx.monomial((p, 0))) == ctx.variable("x")
    assert sigma(ctx.one()) == ctx.one()


def test_endo_full_monomial():
    ctx = ring(3, "x y z")
    sigma = TwistedEndo(ctx.one())
    assert sigma(ctx.monomial((2, 2, 2))) == ctx.one()


def test_endo_node_unit():
    ctx = ring(3, "x y")
    sigma = TwistedEndo(parse_expr("(y^2-x^3-x^2)^(p-1)", ctx))
    assert sigma(ctx.one()) == ctx.one()


def test_endo_context_mismatch():
    sigma = TwistedEndo(ring(3, "x y").one())
    with pytest.raises(ContextMismatchError):
        sigma(ring(3, "u v").one())


@pytest.mark.parametrize("p", [2, 3, 5])
def test_cross_is_splitting(p):
    ctx = ring(p, "x y")
    v = check_splitting(TwistedEndo(parse_expr("(x*y)^(p-1)", ctx)))
    assert v.kind is VerdictKind.SPLITTING
    assert v.constant.residue == 1


@pytest.mark.parametrize("p", [3, 5])
def test_node_is_splitting(p):
    ctx = ring(p, "x y")
    v = check_splitting(TwistedEndo(parse_expr("(y^2-x^3-x^2)^(p-1)", ctx)))
    assert v.kind is VerdictKind.SPLITTING


def test_node_equation_at_p2_is_cusp_not_splitting():
    ctx = ring(2, "x y")
    v = check_splitting(TwistedEndo(parse_expr("y^2+x^3+x^2", ctx)))
    assert v.kind is VerdictKind.NOT_SPLITTING
    assert v.witness.is_zero()


def test_spans_splitting_rescales():
    ctx = ring(5, "x y")
    coeff = ctx.monomial((4, 4), 3)
    v = check_splitting(TwistedEndo(coeff))
    assert v.kind is VerdictKind.SPANS_SPLITTING
    assert v.constant.residue == 3
    rescaled = coeff.scale(v.constant.inverse())
    assert check_splitting(TwistedEndo(rescaled)).kind is VerdictKind.SPLITTING


@pytest.mark.parametrize("p", [2, 3, 5])
def test_splitting_axioms_random(p):
    rng = random.Random(700 + p)
    ctx = ring(p, "x y")
    for _ in range(20):
        sigma = TwistedEndo(rand_poly(rng, ctx, max_deg=2 * p))
        a, b = rand_poly(rng, ctx), rand_poly(rng, ctx)
        assert sigma(a + b) == sigma(a) + sigma(b)
        assert sigma(a.frobenius() * b) == a * sigma(b)
        split = TwistedEndo(_splitting_coeff(rng, ctx))
        assert check_splitting(split).kind is VerdictKind.SPLITTING
        assert split(a.frobenius()) == a


@pytest.mark.parametrize("p", [2, 3])
def test_homogeneous_fastpath_agrees(p):
    rng = random.Random(800 + p)
    ctx = ring(p, "x y z")
    n = ctx.arity
    for _ in range(60):
        deg = rng.choice([n * (p - 1), n * (p - 1), p, 2 * p - 1, n * (p - 1) + p])
        terms = {}
        for _ in range(rng.randint(0, 4)):
            exps = [0] * n
            for _ in range(deg):
                exps[rng.randrange(n)] += 1
            terms[tuple(exps)] = rng.randrange(1, p)
        f = Polynomial(ctx, terms)
        fast = homogeneous_fastpath(TwistedEndo(f))
        full = check_splitting(TwistedEndo(f))
        assert fast.kind is full.kind
        if fast.constant is not None:
            assert fast.constant == full.constant


def test_homogeneous_fastpath_rejects_inhomogeneous():
    ctx = ring(3, "x y")
    with pytest.raises(NotHomogeneousError):
        homogeneous_fastpath(TwistedEndo(ctx.variable("x") + ctx.one()))


def test_homogeneous_fastpath_missing_monomial():
    ctx = ring(3, "x y")
    # Degree n(p-1) = 4 but the (2,2) coefficient is absent.
    f = ctx.monomial((4, 0)) + ctx.monomial((0, 4))
    v = homogeneous_fastpath(TwistedEndo(f))
    assert v.kind is VerdictKind.NOT_SPLITTING


@pytest.mark.parametrize("p", [2, 3, 5])
def test_divisor_splitting_truth_table(p):
    ctx = ring(p, "x y")
    sigma = TwistedEndo(parse_expr("(x*y)^(p-1)", ctx))
    assert is_divisor_splitting(sigma, parse_expr("x*y", ctx)) is True
    assert is_divisor_splitting(sigma, parse_expr("(x*y)^(p-1)", ctx)) is True
    assert is_divisor_splitting(sigma, parse_expr("(x*y)^p", ctx)) is False


def test_divisor_splitting_preconditions():
    ctx = ring(3, "x y")
    not_split = TwistedEndo(ctx.variable("x"))
    with pytest.raises(NotASplittingError):
        is_divisor_splitting(not_split, ctx.variable("x"))
    sigma = TwistedEndo(parse_expr("(x*y)^(p-1)", ctx))
    with pytest.raises(ZeroDivisionError):
        is_divisor_splitting(sigma, ctx.zero())


@pytest.mark.parametrize("p", [2, 3, 5])
def test_localized_sends_tp_to_t(p):
    # The fraction-field splitting of F[t] must send t^p to t.
    ctx = ring(p, "t")
    sigma = TwistedEndo(parse_expr("t^(p-1)", ctx))
    num, den = localized_apply(sigma, ctx.monomial((p,)), ctx.one())
    assert num == ctx.variable("t")
    assert den == ctx.one()


def test_localized_formula_frozen_values():
    # Direct evaluations of trace(coeff * num * den^(p-1)) at p=2.
    ctx = ring(2, "x")
    x = ctx.variable("x")
    num, den = localized_apply(TwistedEndo(ctx.one()), x, x)
    assert num.is_zero() and den == x
    num, den = localized_apply(TwistedEndo(x), x, x)
    assert num == x and den == x


def test_localized_zero_denominator():
    ctx = ring(3, "x")
    with pytest.raises(ZeroDivisionError):
        localized_apply(TwistedEndo(ctx.one()), ctx.one(), ctx.zero())


@pytest.mark.parametrize("p", [2, 3, 5])
def test_localized_representation_independence(p):
    rng = random.Random(900 + p)
    ctx = ring(p, "x y")
    for _ in range(20):
        sigma = TwistedEndo(rand_poly(rng, ctx, max_deg=p))
        a = rand_poly(rng, ctx)
        b = rand_poly(rng, ctx, nonzero=True)
        c = rand_poly(rng, ctx, nonzero=True)
        n1, d1 = localized_apply(sigma, a, b)
        n2, d2 = localized_apply(sigma, a * c, b * c)
        assert n1 * d2 == n2 * d1


def test_tensor_of_traces():
    a = TwistedEndo(ring(3, "x").one())
    b = TwistedEndo(ring(3, "y").one())
    joint = tensor(a, b)
    assert joint.context.variables == ("x", "y")
    assert joint.coeff == joint.context.one()


@pytest.mark.parametrize("p", [2, 3])
def test_tensor_builds_cross(p):
    a = TwistedEndo(parse_expr("x^(p-1)", ring(p, "x")))
    b = TwistedEndo(parse_expr("y^(p-1)", ring(p, "y")))
    joint = tensor(a, b)
    assert joint.coeff == parse_expr("(x*y)^(p-1)", joint.context)
    assert check_splitting(joint).kind is VerdictKind.SPLITTING


@pytest.mark.parametrize("p", [2, 3])
def test_tensor_application_identity(p):
    rng = random.Random(1000 + p)
    ca, cb = ring(p, "x"), ring(p, "y")
    from frobsplit import embed

    for _ in range(15):
        a = TwistedEndo(rand_poly(rng, ca, max_deg=2 * p))
        b = TwistedEndo(rand_poly(rng, cb, max_deg=2 * p))
        joint = tensor(a, b)
        g = rand_poly(rng, ca, max_deg=p)
        h = rand_poly(rng, cb, max_deg=p)
        gh = embed(g, joint.context, [0]) * embed(h, joint.context, [1])
        left = joint(gh)
        right = embed(a(g), joint.context, [0]) * embed(b(h), joint.context, [1])
        assert left == right


def test_tensor_rejects_overlap():
    a = TwistedEndo(ring(3, "x y").one())
    b = TwistedEndo(ring(3, "y z").one())
    with pytest.raises(ValueError):
        tensor(a, b)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_p1_dlog_section(p):
    ctx = ring(p, "x")
    res = p1_extension_check(TwistedEndo(parse_expr("x^(p-1)", ctx)))
    assert res.extends
    assert res.other_chart == ctx.monomial((p - 1,))
    assert res.compatible_zero and res.compatible_infinity


def test_p1_plain_trace():
    ctx = ring(3, "x")
    res = p1_extension_check(TwistedEndo(ctx.one()))
    assert res.extends
    assert not res.compatible_zero


@pytest.mark.parametrize("p", [2, 3, 5])
def test_p1_degree_bound(p):
    ctx = ring(p, "x")
    res = p1_extension_check(TwistedEndo(ctx.monomial((2 * p - 1,))))
    assert not res.extends
    assert res.other_chart is None


def test_p1_needs_one_variable():
    with pytest.raises(ValueError):
        p1_extension_check(TwistedEndo(ring(3, "x y").one()))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_p1_chart_transform_is_involutive(p):
    rng = random.Random(1100 + p)
    ctx = ring(p, "x")
    for _ in range(20):
        terms = {(rng.randint(0, 2 * (p - 1)),): rng.randrange(1, p) for _ in range(rng.randint(0, 3))}
        f = Polynomial(ctx, terms)
        first = p1_extension_check(TwistedEndo(f))
        assert first.extends
        second = p1_extension_check(TwistedEndo(first.other_chart))
        assert second.extends
        assert second.other_chart == f


def test_semigroup_cusp():
    v = semigroup_split_check(NumericalSemigroup([2, 3]), 2)
    assert v.split is False and v.witness == 1


def test_semigroup_full():
    v = semigroup_split_check(NumericalSemigroup([1]), 2)
    assert v.split is True and v.witness is None


def test_semigroup_3_5_witness_with_gap_oracle():
    s = NumericalSemigroup([3, 5])
    # Independent gap enumeration: sums 3a+5b up to the bound.
    members = {3 * a + 5 * b for a in range(10) for b in range(10)}
    expected_gaps = tuple(m for m in range(1, 9) if m not in members)
    assert s.gaps == expected_gaps == (1, 2, 4, 7)
    assert s.conductor == 8
    v = semigroup_split_check(s, 2)
    assert v.split is False and v.witness == 4
    assert v.witness not in s and 2 * v.witness in s


def test_semigroup_validation():
    with pytest.raises(ValueError):
        NumericalSemigroup([2, 4])
    with pytest.raises(ValueError):
        NumericalSemigroup([0, 3])


def test_semigroup_witness_certifies():
    for gens in ([2, 3], [3, 5], [4, 5], [3, 7, 11]):
        s = NumericalSemigroup(gens)
        for p in (2, 3, 5):
            v = semigroup_split_check(s, p)
            assert v.split is False
            assert v.witness not in s
            assert p * v.witness in s
