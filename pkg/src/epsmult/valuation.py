"""Monomial valuations: weighted exponent sums under a total order.

A weight vector assigns each variable an exact rational weight >= 1; a
monomial's value is the weighted sum of its exponents.  Ties between
distinct monomials with equal weighted sums are broken by comparing the
exponent vectors lexicographically, which makes the order total exactly
as if the weights were rationally independent reals, at no cost in
exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import DimensionMismatchError


class Value(NamedTuple):
    """An element of the ordered value group: weighted sum plus tiebreak."""

    weight: Fraction
    coords: tuple[int, ...]

    def __add__(self, other: "Value") -> "Value":  # type: ignore[override]
        if len(self.coords) != len(other.coords):
            raise DimensionMismatchError(
                f"cannot add values of dimensions {len(self.coords)} and {len(other.coords)}"
            )
        return Value(
            self.weight + other.weight,
            tuple(a + b for a, b in zip(self.coords, other.coords)),
        )


def _first_primes(count: int) -> list[int]:
    primes: list[int] = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % p for p in primes):
            primes.append(candidate)
        candidate += 1
    return primes


@dataclass(frozen=True)
class WeightVector:
    """Per-variable rational weights, all >= 1, with lexicographic tiebreak."""

    weights: tuple[Fraction, ...]
    tiebreak: str = "lex"

    def __init__(self, weights: Iterable, tiebreak: str = "lex"):
        ws = tuple(Fraction(w) for w in weights)
        if not ws:
            raise ValueError("weight vector needs at least one entry")
        if any(w < 1 for w in ws):
            raise ValueError("all weights must be at least 1")
        if tiebreak != "lex":
            raise ValueError("only the lexicographic tiebreak is supported")
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "tiebreak", tiebreak)

    @property
    def dim(self) -> int:
        return len(self.weights)


def default_weights(dim: int) -> WeightVector:
    """Weights (1, 1 + 1/2, 1 + 1/3, 1 + 1/5, ...): distinct, small, exact."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    if dim == 1:
        return WeightVector((Fraction(1),))
    primes = _first_primes(dim - 1)
    return WeightVector(
        (Fraction(1), *(1 + Fraction(1, p) for p in primes))
    )


def nu_value(exponent: Iterable[int], w: WeightVector) -> Value:
    """Value of a single monomial: (sum of weighted exponents, exponents)."""
    e = tuple(int(x) for x in exponent)
    if len(e) != w.dim:
        raise DimensionMismatchError(
            f"exponent has {len(e)} coordinates, weight vector has {w.dim}"
        )
    if any(x < 0 for x in e):
        raise ValueError("exponents must be nonnegative")
    total = sum((x * lam for x, lam in zip(e, w.weights)), Fraction(0))
    return Value(total, e)


def nu_value_of_support(support: Iterable[Iterable[int]], w: WeightVector) -> Value:
    """Value of a polynomial with the given monomial support: the minimum."""
    values = [nu_value(e, w) for e in support]
    if not values:
        raise ValueError("empty support has no value")
    return min(values)


def psi(exponent: Iterable[int]) -> int:
    """Coordinate sum of an exponent vector."""
    return sum(int(x) for x in exponent)


def phi(exponent: Iterable[int]) -> tuple[int, ...]:
    """The exponent data itself, as a tuple."""
    return tuple(int(x) for x in exponent)


@dataclass(frozen=True)
class ValuationCut:
    """The set of elements with value >= (or > when strict) a threshold."""

    threshold: Value
    strict: bool = False

    def admits(self, value: Value) -> bool:
        return value > self.threshold if self.strict else value >= self.threshold

    def admits_exponent(self, exponent: Iterable[int], w: WeightVector) -> bool:
        return self.admits(nu_value(exponent, w))
