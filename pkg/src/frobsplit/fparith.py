"""Sparse multivariate polynomial arithmetic over a prime field F_p.

Polynomials are stored as dictionaries mapping exponent tuples to nonzero
integer residues in [1, p).  The representation is canonical: no zero
coefficients are ever stored, and term iteration for printing follows a
fixed graded reverse lexicographic order, so ``str`` output is stable and
reparseable.

Beyond ring arithmetic this module provides the characteristic-p
primitives everything else builds on: the Frobenius power f -> f^p
(computed by exponent scaling, never by expansion), the ubiquitous
f^(p-1), and exact multivariate division.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

Monomial = tuple[int, ...]
"""Exponent vector; entry i is the exponent of the context's i-th variable."""


class ContextMismatchError(ValueError):
    """Operands belong to different ring contexts."""


class NotDivisibleError(ArithmeticError):
    """Exact division failed; ``remainder`` holds the nonzero remainder."""

    def __init__(self, message: str, remainder: "Polynomial"):
        super().__init__(message)
        self.remainder = remainder


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Prime:
    """A prime number, validated by trial division at construction."""

    value: int

    def __post_init__(self) -> None:
        if not _is_prime(self.value):
            raise ValueError(f"{self.value} is not prime")

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class Coefficient:
    """An element of F_p, stored as the canonical residue in [0, p)."""

    residue: int
    prime: Prime

    def __post_init__(self) -> None:
        object.__setattr__(self, "residue", self.residue % self.prime.value)

    def _check(self, other: "Coefficient") -> None:
        if self.prime != other.prime:
            raise ContextMismatchError("coefficients from different prime fields")

    def __add__(self, other: "Coefficient") -> "Coefficient":
        self._check(other)
        return Coefficient(self.residue + other.residue, self.prime)

    def __sub__(self, other: "Coefficient") -> "Coefficient":
        self._check(other)
        return Coefficient(self.residue - other.residue, self.prime)

    def __mul__(self, other: "Coefficient") -> "Coefficient":
        self._check(other)
        return Coefficient(self.residue * other.residue, self.prime)

    def __neg__(self) -> "Coefficient":
        return Coefficient(-self.residue, self.prime)

    def inverse(self) -> "Coefficient":
        if self.residue == 0:
            raise ZeroDivisionError("zero has no inverse in F_p")
        p = self.prime.value
        return Coefficient(pow(self.residue, p - 2, p), self.prime)

    def __truediv__(self, other: "Coefficient") -> "Coefficient":
        self._check(other)
        return self * other.inverse()

    def __bool__(self) -> bool:
        return self.residue != 0

    def __str__(self) -> str:
        return str(self.residue)


@dataclass(frozen=True)
class RingContext:
    """The polynomial ring F_p[x_1, ..., x_n]: a prime and named variables."""

    prime: Prime
    variables: tuple[str, ...]

    def __post_init__(self) -> None:
        if isinstance(self.prime, int):
            object.__setattr__(self, "prime", Prime(self.prime))
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a ring context needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")
        if any(not name for name in self.variables):
            raise ValueError("variable names must be nonempty")

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def p(self) -> int:
        return self.prime.value

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.arity: c})

    def variable(self, which: int | str) -> "Polynomial":
        i = which if isinstance(which, int) else self.index(which)
        if not 0 <= i < self.arity:
            raise IndexError(f"variable index {i} out of range")
        exps = [0] * self.arity
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def monomial(self, exponents: Sequence[int], coeff: int = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exponents): coeff})

    def coefficient(self, residue: int) -> Coefficient:
        return Coefficient(residue, self.prime)


def ring(p: int, names: str | Sequence[str]) -> RingContext:
    """Convenience constructor: ``ring(3, "x y")`` or ``ring(3, ["x", "y"])``."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    return RingContext(Prime(p), tuple(names))


def grevlex_key(m: Monomial) -> tuple:
    """Sort key realizing graded reverse lexicographic order (ascending)."""
    return (sum(m), tuple(-e for e in reversed(m)))


class Polynomial:
    """Immutable sparse polynomial over F_p.

    ``terms`` maps exponent tuples to residues in [1, p); treat it as
    read-only.  All arithmetic returns new objects in canonical form.
    """

    __slots__ = ("context", "terms", "_hash")

    def __init__(self, context: RingContext, terms: Mapping[Monomial, int]):
        p = context.p
        n = context.arity
        clean: dict[Monomial, int] = {}
        for m, c in terms.items():
            if len(m) != n:
                raise ValueError(f"exponent tuple {m} has wrong arity for {context.variables}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c %= p
            if c:
                clean[tuple(m)] = c
        self.context = context
        self.terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, context: RingContext, terms: dict[Monomial, int]) -> "Polynomial":
        # Internal fast path: caller guarantees canonical terms.
        poly = object.__new__(cls)
        poly.context = context
        poly.terms = terms
        poly._hash = None
        return poly

    # -- predicates and queries ------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_value(self) -> Coefficient:
        """The value as an element of F_p; raises if not constant."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        c = self.terms.get((0,) * self.context.arity, 0)
        return Coefficient(c, self.context.prime)

    def coefficient(self, m: Monomial) -> Coefficient:
        return Coefficient(self.terms.get(tuple(m), 0), self.context.prime)

    def total_degree(self) -> int:
        """Maximum term degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None if mixed.

        The zero polynomial is homogeneous of every degree and reports 0;
        check ``is_zero`` first if the distinction matters.
        """
        degrees = {sum(m) for m in self.terms}
        if not degrees:
            return 0
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def sorted_terms(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in descending grevlex order (the canonical print order)."""
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            yield m, self.terms[m]

    # -- ring operations --------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.context != other.context:
            raise ContextMismatchError(
                f"operands live in different rings: {self.context.variables} vs {other.context.variables}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        p = self.context.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = (out.get(m, 0) + c) % p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.context, out)

    def __neg__(self) -> "Polynomial":
        p = self.context.p
        return Polynomial._raw(self.context, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        p = self.context.p
        out: dict[Monomial, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(ea + eb for ea, eb in zip(ma, mb))
                s = (out.get(m, 0) + ca * cb) % p
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.context, out)

    def scale(self, c: int | Coefficient) -> "Polynomial":
        """Multiply by a scalar from F_p."""
        if isinstance(c, Coefficient):
            c = c.residue
        p = self.context.p
        c %= p
        if c == 0:
            return self.context.zero()
        return Polynomial._raw(self.context, {m: (a * c) % p for m, a in self.terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.context.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def frobenius(self) -> "Polynomial":
        """f^p, computed by scaling every exponent vector by p.

        Coefficients lie in the prime field and are fixed by the Frobenius,
        so no expansion is needed; the result agrees with repeated
        multiplication on every input.
        """
        p = self.context.p
        return Polynomial._raw(self.context, {tuple(e * p for e in m): c for m, c in self.terms.items()})

    def pow_p_minus_1(self, cross_check: bool = False) -> "Polynomial":
        """f^(p-1), computed as the exact division f^p / f.

        The Frobenius power is free, so this beats square-and-multiply.
        With ``cross_check`` the square-and-multiply result is computed
        too and the two are asserted equal.
        """
        if self.is_zero():
            raise ZeroDivisionError("f^(p-1) is undefined for f = 0")
        quotient = exact_divide(self.frobenius(), self)
        if cross_check:
            direct = self ** (self.context.p - 1)
            if quotient != direct:
                raise AssertionError("f^p/f disagrees with square-and-multiply")
        return quotient

    # -- comparison and rendering ----------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.context == other.context
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.context, frozenset(self.terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(term_str(self.context, m, c) for m, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def term_str(context: RingContext, m: Monomial, c: int) -> str:
    """Canonical rendering of one term, e.g. ``2*x^5`` or ``x^3*y^2``."""
    factors = []
    if c != 1 or all(e == 0 for e in m):
        factors.append(str(c))
    for name, e in zip(context.variables, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when x^a divides x^b."""
    return all(ea <= eb for ea, eb in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(ea - eb for ea, eb in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(ea + eb for ea, eb in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(ea, eb) for ea, eb in zip(a, b))


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient a / b when b divides a exactly.

    Runs multivariate division by the single divisor b under grevlex;
    raises NotDivisibleError carrying the remainder when it is nonzero.
    """
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p = a.context.p
    b_lead = max(b.terms, key=grevlex_key)
    b_lead_inv = pow(b.terms[b_lead], p - 2, p)
    work = dict(a.terms)
    quotient: dict[Monomial, int] = {}
    remainder: dict[Monomial, int] = {}
    while work:
        lead = max(work, key=grevlex_key)
        if monomial_divides(b_lead, lead):
            shift = monomial_div(lead, b_lead)
            factor = (work[lead] * b_lead_inv) % p
            quotient[shift] = factor
            for m, c in b.terms.items():
                t = monomial_mul(m, shift)
                s = (work.get(t, 0) - factor * c) % p
                if s:
                    work[t] = s
                else:
                    work.pop(t, None)
        else:
            remainder[lead] = work.pop(lead)
    if remainder:
        raise NotDivisibleError(
            "division left a nonzero remainder",
            Polynomial._raw(a.context, remainder),
        )
    return Polynomial._raw(a.context, quotient)


def substitute_zero(f: Polynomial, var: int) -> Polynomial:
    """Set the given variable to zero: drop every term where it appears."""
    if not 0 <= var < f.context.arity:
        raise IndexError(f"variable index {var} out of range")
    return Polynomial._raw(f.context, {m: c for m, c in f.terms.items() if m[var] == 0})


def embed(f: Polynomial, target: RingContext, positions: Sequence[int]) -> Polynomial:
    """Reinterpret f in a larger ring, sending variable i to ``positions[i]``."""
    if f.context.prime != target.prime:
        raise ContextMismatchError("embedding must preserve the prime")
    if len(positions) != f.context.arity or len(set(positions)) != len(positions):
        raise ValueError("positions must list one distinct target slot per variable")
    out: dict[Monomial, int] = {}
    for m, c in f.terms.items():
        exps = [0] * target.arity
        for i, e in enumerate(m):
            exps[positions[i]] = e
        out[tuple(exps)] = c
    return Polynomial._raw(target, out)


def compose(f: Polynomial, args: Sequence[Polynomial]) -> Polynomial:
    """Evaluate f at polynomial arguments, one per variable of f's ring."""
    if len(args) != f.context.arity:
        raise ValueError("need one argument per variable")
    target = args[0].context
    for g in args:
        if g.context != target:
            raise ContextMismatchError("all arguments must share a context")
    result = target.zero()
    for m, c in f.terms.items():
        term = target.constant(c)
        for g, e in zip(args, m):
            if e:
                term = term * g**e
        result = result + term
    return result
