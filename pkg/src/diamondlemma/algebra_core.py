"""Exact scalars, sparse elements and monomial orders shared by every theory."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator


class DiamondError(Exception):
    """Base class for errors raised by this package."""


class TheoryMismatchError(DiamondError):
    """Raised when monomials or orders from different theories are combined."""


class ScalarError(DiamondError):
    """Raised for invalid field parameters or mixed-field arithmetic."""


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Decide primality deterministically for machine-word sized integers."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    # Deterministic Miller-Rabin witness set for n < 2^64.
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Fp:
    """Residue modulo a prime, normalized to 0 <= value < p."""

    value: int
    p: int

    def _check(self, other: "Fp") -> None:
        if not isinstance(other, Fp) or other.p != self.p:
            raise ScalarError("mixed-field scalar arithmetic")

    def __add__(self, other: "Fp") -> "Fp":
        self._check(other)
        return Fp((self.value + other.value) % self.p, self.p)

    def __sub__(self, other: "Fp") -> "Fp":
        self._check(other)
        return Fp((self.value - other.value) % self.p, self.p)

    def __mul__(self, other: "Fp") -> "Fp":
        self._check(other)
        return Fp(self.value * other.value % self.p, self.p)

    def __truediv__(self, other: "Fp") -> "Fp":
        self._check(other)
        if other.value == 0:
            raise ZeroDivisionError("division by zero residue")
        return Fp(self.value * pow(other.value, -1, self.p) % self.p, self.p)

    def __neg__(self) -> "Fp":
        return Fp(-self.value % self.p, self.p)

    def __bool__(self) -> bool:
        return self.value != 0


@dataclass(frozen=True)
class RationalField:
    """Field of exact rationals."""

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coeff(self, value) -> Fraction:
        """Coerce an int or Fraction into this field."""
        return Fraction(value)

    def describe(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """Field of residues modulo a machine-word prime."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not 2 <= self.p < 2**63:
            raise ScalarError("field characteristic must be a machine-word prime")
        if not _is_prime(self.p):
            raise ScalarError("field characteristic %d is not prime" % self.p)

    @property
    def zero(self) -> Fp:
        return Fp(0, self.p)

    @property
    def one(self) -> Fp:
        return Fp(1, self.p)

    def coeff(self, value) -> Fp:
        """Coerce an int or Fraction into this field."""
        if isinstance(value, Fp):
            if value.p != self.p:
                raise ScalarError("mixed-field scalar arithmetic")
            return value
        frac = Fraction(value)
        if frac.denominator % self.p == 0:
            raise ScalarError("denominator vanishes modulo %d" % self.p)
        num = frac.numerator % self.p
        den = frac.denominator % self.p
        return Fp(num * pow(den, -1, self.p) % self.p, self.p)

    def describe(self) -> str:
        return "GF(%d)" % self.p


def _term_key(monomial) -> str:
    # Payloads are nested tuples, strings and ints; repr is an injective
    # deterministic key that never compares across types.
    return repr(monomial)


@dataclass(frozen=True)
class Element:
    """Finitely supported scalar combination of monomials, stored sparsely."""

    terms: tuple

    @staticmethod
    def from_dict(coeffs: dict) -> "Element":
        """Build an element from a monomial-to-coefficient mapping, purging zeros."""
        items = [(m, c) for m, c in coeffs.items() if c]
        items.sort(key=lambda item: _term_key(item[0]))
        return Element(tuple(items))

    @staticmethod
    def zero() -> "Element":
        return Element(())

    def as_dict(self) -> dict:
        """Return a fresh monomial-to-coefficient dict."""
        return dict(self.terms)

    def support(self) -> tuple:
        """Return the monomials with nonzero coefficient."""
        return tuple(m for m, _ in self.terms)

    def coefficient_of(self, monomial):
        """Extract the coefficient of one monomial, or None when absent."""
        for m, c in self.terms:
            if m == monomial:
                return c
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Element") -> "Element":
        merged = dict(self.terms)
        for m, c in other.terms:
            prev = merged.get(m)
            s = c if prev is None else prev + c
            if s:
                merged[m] = s
            elif prev is not None:
                del merged[m]
        return Element.from_dict(merged)

    def __sub__(self, other: "Element") -> "Element":
        merged = dict(self.terms)
        for m, c in other.terms:
            prev = merged.get(m)
            s = -c if prev is None else prev - c
            if s:
                merged[m] = s
            elif prev is not None:
                del merged[m]
        return Element.from_dict(merged)

    def __neg__(self) -> "Element":
        return Element(tuple((m, -c) for m, c in self.terms))

    def scaled(self, scalar) -> "Element":
        """Multiply every coefficient by a scalar."""
        if not scalar:
            return Element(())
        return Element(tuple((m, c * scalar) for m, c in self.terms))


class Rel(Enum):
    """Outcome of comparing two monomials under a partial order."""

    LT = "LT"
    GT = "GT"
    EQ = "EQ"
    INCOMPARABLE = "INCOMPARABLE"


class OrderKind(Enum):
    """Shipped monomial order families."""

    DEGLEX = "deglex"
    WEIGHTED_DEGLEX = "weighted-deglex"
    LEX = "lex"
    SERIES_DEGLEX = "series-deglex"


class OrderError(DiamondError):
    """Raised for invalid order parameters."""


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order: a kind, a total order on generators and optional weights.

    Generators are listed ascending, so the last one is the greatest. Weights
    are required for the weighted kinds and must be positive for
    weighted-deglex; series-deglex accepts arbitrary rational weights but is
    only admissible together with a topology certificate.
    """

    kind: OrderKind
    theory: object
    generators: tuple
    weights: tuple = ()

    def __post_init__(self) -> None:
        gens = tuple(self.theory.generator_names())
        if sorted(self.generators) != sorted(gens):
            raise OrderError("generator list does not match the theory")
        if self.kind in (OrderKind.WEIGHTED_DEGLEX, OrderKind.SERIES_DEGLEX):
            names = tuple(name for name, _ in self.weights)
            if sorted(names) != sorted(gens):
                raise OrderError("weight vector does not cover the generators")
            if self.kind is OrderKind.WEIGHTED_DEGLEX:
                if any(w <= 0 for _, w in self.weights):
                    raise OrderError("weighted-deglex requires positive weights")
        elif self.weights:
            raise OrderError("weights are only meaningful for weighted kinds")
        if self.kind is OrderKind.LEX and not self.theory.supports_lex():
            raise OrderError("lex is only well-founded for the commutative theory")

    def rank(self, name: str) -> int:
        """Return the rank of a generator, higher meaning greater."""
        return self.generators.index(name)

    def weight_of(self, name: str) -> Fraction:
        for n, w in self.weights:
            if n == name:
                return w
        raise OrderError("no weight for generator %r" % name)

    def sort_key(self, monomial) -> tuple:
        """Total comparison key; all shipped kinds are total orders."""
        th = self.theory
        if self.kind is OrderKind.DEGLEX:
            return (th.degree(monomial), th.rank_encoding(monomial, self))
        if self.kind is OrderKind.LEX:
            return th.lex_encoding(monomial, self)
        wsum = th.weight_sum(monomial, self)
        return (wsum, th.degree(monomial), th.rank_encoding(monomial, self))

    def compare(self, a, b) -> Rel:
        """Compare two monomials of this order's theory."""
        ka, kb = self.sort_key(a), self.sort_key(b)
        if ka == kb:
            return Rel.EQ
        return Rel.GT if ka > kb else Rel.LT

    def is_well_founded(self) -> bool:
        """Report whether descending chains are necessarily finite."""
        return self.kind is not OrderKind.SERIES_DEGLEX


def compare(order: MonomialOrder, a, b) -> Rel:
    """Compare two monomials under an order."""
    return order.compare(a, b)


def leading_monomials(order: MonomialOrder, element: Element) -> frozenset:
    """Return the set of maximal support monomials under a partial order."""
    support = element.support()
    maximal = []
    for m in support:
        dominated = False
        for n in support:
            if n is m:
                continue
            if order.compare(m, n) is Rel.LT:
                dominated = True
                break
        if not dominated:
            maximal.append(m)
    return frozenset(maximal)


@dataclass(frozen=True)
class PrecisionCutoff:
    """Precision index n >= 1; terms of norm below 2^(1-n) are discarded."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise DiamondError("precision cutoff must be an integer n >= 1")
