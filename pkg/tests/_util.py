"""Shared helpers for the test suite."""

from __future__ import annotations

import random

from frobsplit import Polynomial, RingContext


def rand_poly(
    rng: random.Random,
    ctx: RingContext,
    max_deg: int = 3,
    max_terms: int = 4,
    nonzero: bool = False,
) -> Polynomial:
    """Random polynomial with bounded degree and term count."""
    p = ctx.p
    n = ctx.arity
    terms = {}
    for _ in range(rng.randint(0 if not nonzero else 1, max_terms)):
        exps = [0] * n
        budget = rng.randint(0, max_deg)
        for _ in range(budget):
            exps[rng.randrange(n)] += 1
        terms[tuple(exps)] = rng.randrange(1, p)
    poly = Polynomial(ctx, terms)
    if nonzero and poly.is_zero():
        return ctx.one()
    return poly


def schoolbook_mul(a: dict, b: dict, p: int) -> dict:
    """Independent dict-based product over the integers, reduced at the end."""
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return {m: c % p for m, c in out.items() if c % p}
