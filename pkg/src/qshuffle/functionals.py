"""Linear functionals on a deconcatenation basis and their convolution calculus.

A functional is determined by its value on the empty composition plus a
function on nonempty compositions; values are memoized, so functionals stay
lazy and degree bounds can grow without recomputation.  Convolution is

    (phi * psi)(b_gamma) = sum over gamma = alpha beta of phi(b_alpha) psi(b_beta)

and only uses deconcatenation, so the same calculus serves both algebras;
whether a given functional is a character depends on which product (quasi-
shuffle or shuffle) the basis carries, hence the basis argument on the
predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .compositions import (
    Composition,
    compositions_of,
    compositions_up_to,
    nonempty_splits,
)
from .elements import GradedElement, product
from .errors import NonvanishingAtEmpty, NotInvertible, WrongValueAtEmpty


class Functional:
    """value_at_empty plus a memoized function on nonempty compositions."""

    __slots__ = ("value_at_empty", "name", "_fn", "_memo")

    def __init__(self, value_at_empty, on_nonempty, name: str | None = None):
        self.value_at_empty = Fraction(value_at_empty)
        self._fn = on_nonempty
        self._memo: dict[Composition, Fraction] = {}
        self.name = name

    def __call__(self, comp) -> Fraction:
        comp = Composition(comp)
        if not comp:
            return self.value_at_empty
        value = self._memo.get(comp)
        if value is None:
            value = Fraction(self._fn(comp))
            self._memo[comp] = value
        return value

    def of_element(self, elem: GradedElement) -> Fraction:
        total = Fraction(0)
        for comp, coef in elem.terms.items():
            total += coef * self(comp)
        return total

    def __repr__(self) -> str:
        label = self.name or "functional"
        return f"<{label}: empty -> {self.value_at_empty}>"


def counit_functional() -> Functional:
    return Functional(1, lambda comp: Fraction(0), name="counit")


def convolve(phi: Functional, psi: Functional) -> Functional:
    def value(comp: Composition) -> Fraction:
        total = Fraction(0)
        for i in range(comp.length + 1):
            total += phi(comp[:i]) * psi(comp[i:])
        return total

    return Functional(phi.value_at_empty * psi.value_at_empty, value)


def functional_inverse(phi: Functional) -> Functional:
    """Convolution inverse, by recursion on proper prefixes.

    Exists exactly when phi does not vanish on the empty composition; the
    inverse is two-sided since convolution is associative.
    """
    if phi.value_at_empty == 0:
        raise NotInvertible("functional vanishes on the empty composition")
    at_empty = 1 / phi.value_at_empty
    inv: Functional | None = None

    def value(comp: Composition) -> Fraction:
        total = Fraction(0)
        for i in range(comp.length):
            total += inv(comp[:i]) * phi(comp[i:])
        return -at_empty * total

    inv = Functional(at_empty, value)
    return inv


def exp_functional(xi: Functional, max_degree: int | None = None) -> Functional:
    """exp under convolution: sum of xi^{*m} / m!.

    Requires xi to vanish on the empty composition, which makes the series
    finite on every composition (at most length-many terms), so values are
    exact at all degrees.  When max_degree is given, all values at sizes up
    to it are computed eagerly.
    """
    if xi.value_at_empty != 0:
        raise NonvanishingAtEmpty(f"exp needs value 0 on the empty composition, got {xi.value_at_empty}")

    def value(comp: Composition) -> Fraction:
        total = Fraction(0)
        for blocks in nonempty_splits(comp):
            term = Fraction(1, factorial(len(blocks)))
            for block in blocks:
                term *= xi(block)
            total += term
        return total

    result = Functional(1, value)
    if max_degree is not None:
        for comp in compositions_up_to(max_degree):
            result(comp)
    return result


def log_functional(zeta: Functional, max_degree: int | None = None) -> Functional:
    """log under convolution: sum over m >= 1 of (-1)^(m-1)/m (zeta - counit)^{*m}.

    Requires value 1 on the empty composition; the series is finite on every
    composition for the same reason as exp.
    """
    if zeta.value_at_empty != 1:
        raise WrongValueAtEmpty(f"log needs value 1 on the empty composition, got {zeta.value_at_empty}")

    def value(comp: Composition) -> Fraction:
        total = Fraction(0)
        for blocks in nonempty_splits(comp):
            m = len(blocks)
            term = Fraction(-1 if m % 2 == 0 else 1, m)
            for block in blocks:
                term *= zeta(block)
            total += term
        return total

    result = Functional(0, value)
    if max_degree is not None:
        for comp in compositions_up_to(max_degree):
            result(comp)
    return result


def lie_bracket(xi1: Functional, xi2: Functional) -> Functional:
    """Convolution commutator xi1 * xi2 - xi2 * xi1."""
    left = convolve(xi1, xi2)
    right = convolve(xi2, xi1)
    return Functional(
        left.value_at_empty - right.value_at_empty,
        lambda comp: left(comp) - right(comp),
    )


@dataclass(frozen=True)
class Violation:
    """First failure found by a predicate sweep."""

    kind: str
    alpha: Composition | None
    beta: Composition | None
    expected: Fraction
    actual: Fraction

    def __str__(self) -> str:
        if self.kind == "value-at-empty":
            return f"value at empty composition is {self.actual}, expected {self.expected}"
        return (
            f"pair alpha={self.alpha}, beta={self.beta}: "
            f"got {self.actual}, expected {self.expected}"
        )


def _basis_pairs(max_degree: int):
    for total in range(2, max_degree + 1):
        for a in range(1, total):
            for alpha in compositions_of(a):
                for beta in compositions_of(total - a):
                    yield alpha, beta


def is_character(
    phi: Functional, max_degree: int, basis: str = "M"
) -> tuple[bool, Violation | None]:
    """Multiplicative with value 1 at the unit, checked exhaustively.

    Products of basis elements are taken in the stated basis, pairs swept in
    canonical order up to total degree max_degree; returns the first
    violation found.
    """
    if phi.value_at_empty != 1:
        return False, Violation("value-at-empty", None, None, Fraction(1), phi.value_at_empty)
    for alpha, beta in _basis_pairs(max_degree):
        lhs = phi.of_element(
            product(GradedElement.basis_element(basis, alpha), GradedElement.basis_element(basis, beta))
        )
        rhs = phi(alpha) * phi(beta)
        if lhs != rhs:
            return False, Violation("product", alpha, beta, rhs, lhs)
    return True, None


def is_infinitesimal_character(
    phi: Functional, max_degree: int, basis: str = "M"
) -> tuple[bool, Violation | None]:
    """Vanishes at the unit and on every product of positive-degree elements."""
    if phi.value_at_empty != 0:
        return False, Violation("value-at-empty", None, None, Fraction(0), phi.value_at_empty)
    for alpha, beta in _basis_pairs(max_degree):
        lhs = phi.of_element(
            product(GradedElement.basis_element(basis, alpha), GradedElement.basis_element(basis, beta))
        )
        if lhs != 0:
            return False, Violation("product", alpha, beta, Fraction(0), lhs)
    return True, None
