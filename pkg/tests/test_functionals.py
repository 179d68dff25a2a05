"""Dual-side calculus: convolution, inverses, exp, log, bracket."""

import random
from fractions import Fraction
from math import factorial

import pytest

from qshuffle.compositions import EMPTY, Composition, compositions_up_to
from qshuffle.elements import MONOMIAL, WORD, GradedElement
from qshuffle.errors import NonvanishingAtEmpty, NotInvertible, WrongValueAtEmpty
from qshuffle.functionals import (
    Functional,
    convolve,
    counit_functional,
    exp_functional,
    functional_inverse,
    is_character,
    is_infinitesimal_character,
    lie_bracket,
    log_functional,
)
from qshuffle.universal import canonical

C = Composition
DEGREE = 6


def _random_functional(seed, value_at_empty):
    rng = random.Random(seed)
    table = {
        comp: Fraction(rng.randint(-6, 6), rng.randint(1, 5))
        for comp in compositions_up_to(DEGREE + 1)
        if comp
    }
    return Functional(Fraction(value_at_empty), lambda comp: table.get(comp, Fraction(0)))


def test_functional_call_and_elements():
    zeta = canonical("zetaQ")
    assert zeta(EMPTY) == 1
    assert zeta(C((4,))) == 1
    assert zeta(C((2, 1))) == 0
    assert zeta((3,)) == 1  # coerced
    elem = GradedElement.basis_element(MONOMIAL, (2,)).scaled(3) + GradedElement.unit(MONOMIAL)
    assert zeta.of_element(elem) == 4


def test_convolution_unit():
    eps = counit_functional()
    phi = _random_functional(11, 1)
    for comp in compositions_up_to(DEGREE):
        assert convolve(eps, phi)(comp) == phi(comp)
        assert convolve(phi, eps)(comp) == phi(comp)


def test_convolution_associative():
    a = _random_functional(1, 1)
    b = _random_functional(2, 0)
    c = _random_functional(3, 2)
    left = convolve(convolve(a, b), c)
    right = convolve(a, convolve(b, c))
    for comp in compositions_up_to(DEGREE):
        assert left(comp) == right(comp)


def test_convolution_example():
    zeta = canonical("zetaQ")
    sq = convolve(zeta, zeta)
    assert sq(EMPTY) == 1
    # deconcatenations of (3): (- , 3), (3, -), each contributing 1 * 1
    assert sq(C((3,))) == 2
    # of (1,1): only the middle cut pairs two single-part prefixes
    assert sq(C((1, 1))) == 1
    assert sq(C((2, 1))) == 1
    assert sq(C((1, 1, 1))) == 0


def test_inverse_is_two_sided():
    phi = _random_functional(7, 1)
    inv = functional_inverse(phi)
    eps = counit_functional()
    left = convolve(inv, phi)
    right = convolve(phi, inv)
    for comp in compositions_up_to(DEGREE):
        assert left(comp) == eps(comp)
        assert right(comp) == eps(comp)


def test_inverse_requires_unit_value():
    with pytest.raises(NotInvertible):
        functional_inverse(_random_functional(8, 0))


def test_inverse_of_zeta_is_antipode_composite():
    # phi^{-1} = phi o S for a character
    from qshuffle.elements import antipode_by_recursion

    zeta = canonical("zetaQ")
    inv = functional_inverse(zeta)
    for comp in compositions_up_to(DEGREE):
        assert inv(comp) == zeta.of_element(antipode_by_recursion(MONOMIAL, comp))


def test_exp_log_preconditions():
    with pytest.raises(NonvanishingAtEmpty):
        exp_functional(_random_functional(4, 1))
    with pytest.raises(WrongValueAtEmpty):
        log_functional(_random_functional(5, 0))


def test_exp_log_roundtrip():
    xi = _random_functional(9, 0)
    back = log_functional(exp_functional(xi))
    for comp in compositions_up_to(DEGREE):
        assert back(comp) == xi(comp)
    zeta = _random_functional(10, 1)
    forward = exp_functional(log_functional(zeta))
    for comp in compositions_up_to(DEGREE):
        assert forward(comp) == zeta(comp)


def test_exp_by_convolution_powers():
    # exp(xi) agrees with the truncated convolution series sum xi^{*k} / k!
    xi = _random_functional(12, 0)
    ex = exp_functional(xi)
    for comp in compositions_up_to(DEGREE):
        power = counit_functional()
        total = Fraction(0)
        for k in range(comp.length + 1):
            total += power(comp) / factorial(k)
            power = convolve(power, xi)
        assert ex(comp) == total


def test_log_of_zeta_example():
    val = log_functional(canonical("zetaQ"))
    assert val(C((1, 1))) == Fraction(-1, 2)
    assert val(C((2,))) == 1
    assert val(EMPTY) == 0


def test_exp_of_xi_example():
    val = exp_functional(canonical("xiS"))
    assert val(C((1, 1))) == Fraction(1, 2)
    assert val(C((3,))) == 1
    assert val(C((2, 1))) == Fraction(1, 2)
    assert val(C((1, 1, 1))) == Fraction(1, 6)


def test_exp_sends_infinitesimal_to_character():
    # eta vanishes on quasi-shuffle products, so its exp multiplies over them
    eta = canonical("eta")
    ok, violation = is_infinitesimal_character(eta, DEGREE, MONOMIAL)
    assert ok, violation
    ok, violation = is_character(exp_functional(eta), DEGREE, MONOMIAL)
    assert ok, violation
    xi = canonical("xiS")
    ok, violation = is_infinitesimal_character(xi, DEGREE, WORD)
    assert ok, violation
    ok, violation = is_character(exp_functional(xi), DEGREE, WORD)
    assert ok, violation


def test_log_sends_character_to_infinitesimal():
    zeta = canonical("zetaQ")
    ok, violation = is_character(zeta, DEGREE, MONOMIAL)
    assert ok, violation
    ok, violation = is_infinitesimal_character(log_functional(zeta), DEGREE, MONOMIAL)
    assert ok, violation


def test_character_detection_negative():
    bad = Functional(Fraction(1), lambda comp: Fraction(1))
    ok, violation = is_character(bad, 4, MONOMIAL)
    assert not ok
    assert violation.kind == "product"
    # M[1] M[1] = 2 M[1,1] + M[2] evaluates to 3 but 1*1 = 1
    assert violation.alpha == C((1,)) and violation.beta == C((1,))
    assert (violation.expected, violation.actual) == (1, 3)
    assert "C[1]" in str(violation)


def test_infinitesimal_detection_negative():
    bad = Functional(Fraction(0), lambda comp: Fraction(1))
    ok, violation = is_infinitesimal_character(bad, 4, WORD)
    assert not ok
    assert violation.kind == "product"


def test_value_at_empty_violations():
    ok, violation = is_character(_random_functional(13, 0), 3, MONOMIAL)
    assert not ok and violation.kind == "value-at-empty"
    ok, violation = is_infinitesimal_character(_random_functional(14, 1), 3, WORD)
    assert not ok and violation.kind == "value-at-empty"


def test_lie_bracket_is_commutator_and_alternating():
    a = _random_functional(21, 0)
    b = _random_functional(22, 0)
    br = lie_bracket(a, b)
    for comp in compositions_up_to(DEGREE):
        assert br(comp) == convolve(a, b)(comp) - convolve(b, a)(comp)
    self_bracket = lie_bracket(a, a)
    for comp in compositions_up_to(DEGREE):
        assert self_bracket(comp) == 0


def test_lie_bracket_jacobi():
    a = _random_functional(31, 0)
    b = _random_functional(32, 0)
    c = _random_functional(33, 0)
    total = (
        lie_bracket(a, lie_bracket(b, c)),
        lie_bracket(b, lie_bracket(c, a)),
        lie_bracket(c, lie_bracket(a, b)),
    )
    for comp in compositions_up_to(5):
        assert sum(t(comp) for t in total) == 0


def test_bracket_of_infinitesimals_is_infinitesimal():
    eta = canonical("eta")
    other = log_functional(canonical("zetaQ"))
    br = lie_bracket(eta, other)
    ok, violation = is_infinitesimal_character(br, 5, MONOMIAL)
    assert ok, violation
