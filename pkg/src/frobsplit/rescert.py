"""Residue chains: certificates that a section spans a splitting.

A coefficient polynomial divisible by x_i^(p-1) has a residue along the
hyperplane x_i = 0: divide the power out and set x_i to zero.  When
iterated residues through all variables end in a nonzero constant, the
original coefficient's endomorphism spans a splitting; the chain of
intermediate polynomials is the certificate.  The classic source of such
chains is a product of nested principal minors of a generic matrix,
generated here as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fparith import (
    Coefficient,
    NotDivisibleError,
    Polynomial,
    RingContext,
    exact_divide,
    ring,
    substitute_zero,
    term_str,
)


class VanishingResidueError(ArithmeticError):
    """The residue is identically zero (a repeated component in the divisor)."""


class NonConstantTerminalError(ArithmeticError):
    """The chain processed every variable but did not end in a constant."""


@dataclass(frozen=True)
class ResidueChain:
    """Successful chain: the start, each (variable, result) step, and the
    nonzero constant the chain terminates in."""

    initial: Polynomial
    steps: tuple[tuple[int, Polynomial], ...]
    terminal: Coefficient


def residue_step(f: Polynomial, var: int) -> Polynomial:
    """Residue of f along x_var = 0: f / x_var^(p-1) evaluated there.

    Raises NotDivisibleError when x_var^(p-1) does not divide f (the
    endomorphism is not compatible with that hyperplane) and
    VanishingResidueError when the result is zero.
    """
    ctx = f.context
    p = ctx.p
    exps = [0] * ctx.arity
    exps[var] = p - 1
    quotient = exact_divide(f, ctx.monomial(exps))
    result = substitute_zero(quotient, var)
    if result.is_zero():
        raise VanishingResidueError(
            f"residue along {ctx.variables[var]} = 0 vanishes"
        )
    return result


def certify_chain(f: Polynomial, order: list[int] | tuple[int, ...]) -> ResidueChain:
    """Run residues through every variable in the given order.

    ``order`` must be a permutation of all variable indices.  Step errors
    propagate; on success the final polynomial is constant and nonzero
    and becomes the terminal.
    """
    ctx = f.context
    if sorted(order) != list(range(ctx.arity)):
        raise ValueError("order must be a permutation of all variable indices")
    steps = []
    current = f
    for var in order:
        current = residue_step(current, var)
        steps.append((var, current))
    if not current.is_constant():
        raise NonConstantTerminalError(f"chain ended in {current}")
    return ResidueChain(initial=f, steps=tuple(steps), terminal=current.constant_value())


def search_chain(f: Polynomial) -> ResidueChain | None:
    """Depth-first search for a residue chain, variables tried in index order.

    Returns the first complete chain found, or None.  Only coordinate
    hyperplanes are tried, so sections whose coefficient has no
    coordinate-power factor are missed even when they do span a
    splitting (the nodal cubic is the standard miss).
    """
    ctx = f.context

    def dfs(current: Polynomial, remaining: tuple[int, ...], acc: list) -> bool:
        if not remaining:
            return True
        for var in remaining:
            try:
                nxt = residue_step(current, var)
            except (NotDivisibleError, VanishingResidueError):
                continue
            acc.append((var, nxt))
            if dfs(nxt, tuple(v for v in remaining if v != var), acc):
                return True
            acc.pop()
        return False

    acc: list[tuple[int, Polynomial]] = []
    if not dfs(f, tuple(range(ctx.arity)), acc):
        return None
    terminal = acc[-1][1].constant_value()
    return ResidueChain(initial=f, steps=tuple(acc), terminal=terminal)


def origin_coefficient(f: Polynomial) -> Coefficient:
    """Coefficient of (x_1 ... x_n)^(p-1) in f: the value of the trace of
    f at the origin."""
    p = f.context.p
    return f.coefficient((p - 1,) * f.context.arity)


def matrix_context(n: int, p: int) -> RingContext:
    """Ring in the n^2 entries of a generic matrix, variables x11..xnn."""
    if n < 1:
        raise ValueError("matrix size must be positive")
    names = [f"x{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return ring(p, names)


def _entry(ctx: RingContext, n: int, i: int, j: int) -> Polynomial:
    return ctx.variable(i * n + j)


def _det(ctx: RingContext, n: int, rows: list[int], cols: list[int]) -> Polynomial:
    """Determinant of the submatrix, by cofactor expansion on the first row."""
    if len(rows) == 1:
        return _entry(ctx, n, rows[0], cols[0])
    total = ctx.zero()
    for k, col in enumerate(cols):
        minor = _det(ctx, n, rows[1:], cols[:k] + cols[k + 1 :])
        piece = _entry(ctx, n, rows[0], col) * minor
        total = total + (piece if k % 2 == 0 else -piece)
    return total


def minor(ctx: RingContext, n: int, rows: list[int], cols: list[int]) -> Polynomial:
    if len(rows) != len(cols) or not rows:
        raise ValueError("need equally many rows and columns")
    return _det(ctx, n, rows, cols)


def matrix_factors(ctx: RingContext, n: int) -> list[Polynomial]:
    """Nested principal minors of a generic n x n matrix.

    Returns 2n-1 polynomials: the leading principal minors of sizes
    1..n followed by the trailing principal minors of sizes n-1..1.
    Their product, raised to the p-1, is the classic example of a
    section certified by a residue chain.
    """
    if n < 1:
        raise ValueError("matrix size must be positive")
    if ctx.arity != n * n:
        raise ValueError(f"context must have {n * n} variables")
    factors = [minor(ctx, n, list(range(k + 1)), list(range(k + 1))) for k in range(n)]
    factors += [
        minor(ctx, n, list(range(k, n)), list(range(k, n))) for k in range(1, n)
    ]
    return factors


def matrix_section_coefficient(ctx: RingContext, n: int) -> Polynomial:
    """Product of the nested principal minors, to the (p-1)-st power."""
    product = ctx.one()
    for f in matrix_factors(ctx, n):
        product = product * f
    return product.pow_p_minus_1() if ctx.p > 2 else product


def render_truncated(f: Polynomial, limit: int = 40) -> str:
    """Canonical rendering, truncated beyond ``limit`` terms with a count."""
    n_terms = len(f.terms)
    if n_terms <= limit:
        return str(f)
    shown = [term_str(f.context, m, c) for m, c in list(f.sorted_terms())[:limit]]
    return " + ".join(shown) + f" + ... ({n_terms} terms)"
