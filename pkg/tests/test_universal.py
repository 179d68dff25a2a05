"""Universal morphisms, canonical functionals, theta, character bijections."""

from fractions import Fraction

import pytest

from qshuffle.characters import builtin, prefix_sum_character
from qshuffle.compositions import EMPTY, Composition, compositions_of, compositions_up_to
from qshuffle.elements import MONOMIAL, WORD, GradedElement, format_element, product
from qshuffle.errors import (
    DegreeMismatch,
    BasisMismatch,
    NotACharacter,
    NotAnInfinitesimalCharacter,
    NotNormalized,
)
from qshuffle.functionals import exp_functional, is_character, log_functional
from qshuffle.universal import (
    CANONICAL_NAMES,
    CharacterPowerEvaluator,
    canonical,
    char_to_infchar,
    infchar_to_char,
    nu_via_convolution,
    qsym_provider,
    sh_provider,
    theta,
    theta_eigencheck,
    universal_to_qsym,
    universal_to_sh,
)

C = Composition


def M(*parts):
    return GradedElement.basis_element(MONOMIAL, parts)


def X(*parts):
    return GradedElement.basis_element(WORD, parts)


def test_provider_shape():
    q = qsym_provider()
    assert q.basis_of_degree(0) == (EMPTY,)
    assert q.basis_of_degree(2) == (C((1, 1)), C((2,)))
    assert q.degree(C((2, 1))) == 3
    assert q.counit(EMPTY) == 1
    assert q.counit(C((1,))) == 0
    assert q.unit_label == EMPTY
    delta = q.coproduct(C((2, 1)))
    assert delta == {
        (EMPTY, C((2, 1))): 1,
        (C((2,)), C((1,))): 1,
        (C((2, 1)), EMPTY): 1,
    }


def test_power_evaluator_values():
    zeta = canonical("zetaQ")
    ev = CharacterPowerEvaluator(qsym_provider(), zeta)
    assert ev.value(C((2, 1)), (2, 1)) == 1
    assert ev.value(C((2, 1)), (1, 2)) == 0
    assert ev.value(C((2, 1)), (3,)) == 0
    assert ev.value(C((3,)), (3,)) == 1
    assert ev.value(C((2, 1)), ()) == 0
    assert ev.value(EMPTY, ()) == 1
    # wrong total degree projects to nothing
    assert ev.value(C((2, 1)), (2, 2)) == 0


def test_universal_identity_maps():
    zeta = canonical("zetaQ")
    xi = canonical("xiS")
    for comp in compositions_up_to(6):
        assert universal_to_qsym(qsym_provider(), zeta, comp) == M(*comp)
        assert universal_to_sh(sh_provider(), xi, comp) == X(*comp)


def test_universal_on_qsym_example():
    xi = log_functional(canonical("zetaQ"))
    got = universal_to_sh(qsym_provider(), xi, C((1, 1)))
    assert got == X(1, 1) - X(2).scaled(Fraction(1, 2))
    assert format_element(got) == "X[1,1] - 1/2 X[2]"


def test_universal_is_algebra_map_here():
    # on QSym with zetaQ the map is the identity, so in particular it
    # carries quasi-shuffle products to quasi-shuffle products
    zeta = canonical("zetaQ")
    for alpha in compositions_of(2):
        for beta in compositions_of(2):
            lhs = universal_to_qsym(qsym_provider(), zeta, product(M(*alpha), M(*beta)).terms)
            rhs = product(
                universal_to_qsym(qsym_provider(), zeta, alpha),
                universal_to_qsym(qsym_provider(), zeta, beta),
            )
            assert lhs == rhs


def test_universal_preconditions():
    with pytest.raises(NotACharacter):
        universal_to_qsym(qsym_provider(), canonical("xiS"), C((1,)))
    with pytest.raises(NotAnInfinitesimalCharacter):
        universal_to_sh(sh_provider(), canonical("zetaQ"), C((1,)))
    with pytest.raises(DegreeMismatch):
        universal_to_qsym(
            qsym_provider(), canonical("zetaQ"), {C((1,)): Fraction(1), C((2,)): Fraction(1)}
        )


def test_canonical_values_frozen():
    zeta = canonical("zetaQ")
    assert [zeta(C((n,))) for n in (1, 2, 3)] == [1, 1, 1]
    assert zeta(C((1, 1))) == 0
    bar = canonical("barZetaQ")
    assert bar(C((2,))) == 1
    assert bar(C((3,))) == -1
    assert bar(C((1, 1))) == 0
    assert bar(EMPTY) == 1
    xi = canonical("xiS")
    assert xi(C((5,))) == 1
    assert xi(C((1, 2))) == 0
    assert xi(EMPTY) == 0
    eta = canonical("eta")
    assert eta(C((2, 1))) == -1
    assert eta(C((3,))) == 3
    assert eta(C((1, 1, 2))) == 2
    with pytest.raises(ValueError):
        canonical("nope")
    assert len(CANONICAL_NAMES) == 6


def test_nu_closed_form_frozen():
    nu = canonical("nuQ")
    assert nu(EMPTY) == 1
    assert nu(C((1,))) == 2
    assert nu(C((2,))) == 0
    assert nu(C((3,))) == 2
    assert nu(C((1, 1))) == 2
    assert nu(C((2, 1))) == -2
    assert nu(C((1, 2))) == 0
    assert nu(C((2, 2, 1))) == 2


def test_nu_convolution_matches_closed_form():
    nu = canonical("nuQ")
    by_convolution = nu_via_convolution(6)
    for comp in compositions_up_to(6):
        assert by_convolution(comp) == nu(comp), comp


def test_nu_is_a_character():
    ok, violation = is_character(canonical("nuQ"), 5, MONOMIAL)
    assert ok, violation


def test_theta_frozen_values():
    assert theta(M(1)) == M(1).scaled(2)
    assert theta(M(2)).is_zero()
    assert theta(M(1, 1)) == M(1, 1).scaled(4) + M(2).scaled(2)
    assert theta(M(2, 1)) == -M(3).scaled(2)
    assert theta(M(1, 1, 1)) == (
        M(1, 1, 1).scaled(8) + M(1, 2).scaled(4) + M(2, 1).scaled(4) + M(3).scaled(2)
    )
    assert theta(GradedElement.unit(MONOMIAL)) == GradedElement.unit(MONOMIAL)
    with pytest.raises(BasisMismatch):
        theta(X(1))


def test_theta_is_linear_and_degreewise():
    h = M(1).scaled(3) + M(2, 1)
    assert theta(h) == theta(M(1)).scaled(3) + theta(M(2, 1))


def test_theta_is_an_algebra_morphism():
    for alpha in compositions_up_to(4):
        for beta in compositions_up_to(4):
            if not alpha or not beta:
                continue
            assert theta(product(M(*alpha), M(*beta))) == product(theta(M(*alpha)), theta(M(*beta)))


def test_theta_eigencheck_stock():
    report = theta_eigencheck(None, 5)
    assert report.passed, report.render()
    assert len(report.checks) == 2
    assert report.render().count("[PASS]") == 2


def test_theta_eigencheck_custom_even_block():
    f_even = prefix_sum_character(lambda n: Fraction(n), name="even-prefix")
    report = theta_eigencheck(f_even, 5)
    assert report.passed, report.render()


def test_infchar_to_char_is_exp_for_factorial_basis():
    xi = canonical("xiS")
    zeta = infchar_to_char(xi, builtin("type2"), sh_provider())
    expected = exp_functional(xi)
    for comp in compositions_up_to(6):
        assert zeta(comp) == expected(comp), comp


def test_char_to_infchar_is_log_for_factorial_basis():
    zeta = canonical("zetaQ")
    xi = char_to_infchar(zeta, builtin("type2"), qsym_provider())
    expected = log_functional(zeta)
    for comp in compositions_up_to(6):
        assert xi(comp) == expected(comp), comp


def test_char_bijection_roundtrip_other_bases():
    for name in ("type1", "even-odd"):
        f = builtin(name)
        xi = canonical("xiS")
        zeta = infchar_to_char(xi, f, sh_provider())
        back = char_to_infchar(zeta, f, sh_provider())
        for comp in compositions_up_to(5):
            assert back(comp) == xi(comp), (name, comp)


def test_char_bijection_roundtrip_from_char_side():
    f = builtin("type1")
    zeta = canonical("zetaQ")
    xi = char_to_infchar(zeta, f, qsym_provider())
    back = infchar_to_char(xi, f, qsym_provider())
    for comp in compositions_up_to(5):
        assert back(comp) == zeta(comp), comp


def test_char_bijection_preconditions():
    with pytest.raises(NotAnInfinitesimalCharacter):
        infchar_to_char(canonical("zetaQ"), builtin("type2"), sh_provider())
    with pytest.raises(NotACharacter):
        char_to_infchar(canonical("xiS"), builtin("type2"), qsym_provider())
    raw = prefix_sum_character(lambda n: Fraction(n))
    mapped = infchar_to_char(canonical("xiS"), raw, sh_provider())
    with pytest.raises(NotNormalized):
        mapped(C((2,)))
