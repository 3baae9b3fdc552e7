"""Tests for finite matrix group actions, Reynolds averaging, and Molien series."""

import random
from fractions import Fraction

import pytest

from invtheory import (
    ClosureCapExceeded,
    FiniteGroupAction,
    MissingDegreeBound,
    ModularCaseUnsupported,
    NonZeroCharacteristic,
    NotAPermutation,
    QQ,
    RationalFunction,
    UniPoly,
    act_on,
    format_polynomial,
    invariant_space_basis,
    invariants_king,
    invariants_linear_algebra,
    molien_series,
    permutation_matrix,
    polynomial_ring,
    prime_field,
    reynolds,
)

R4 = polynomial_ring(QQ, ("x1", "x2", "x3", "x4"))
R2 = polynomial_ring(QQ, ("x", "y"))

A4 = FiniteGroupAction(R4, [permutation_matrix("2314"), permutation_matrix("2143")])
PLUS_MINUS = FiniteGroupAction(R2, [[[-1, 0], [0, -1]]])
SWAP = FiniteGroupAction(R2, [permutation_matrix("21")])
TRIVIAL2 = FiniteGroupAction(R2, [permutation_matrix("12")])
CYCLE3 = FiniteGroupAction(polynomial_ring(QQ, ("x1", "x2", "x3")), [permutation_matrix("231")])


def random_polynomial(ring, rng, max_terms=5, max_degree=4):
    f = ring.zero()
    for _ in range(rng.randrange(max_terms + 1)):
        exps = [0] * ring.n
        for _ in range(rng.randrange(max_degree + 1)):
            exps[rng.randrange(ring.n)] += 1
        f = f + ring.monomial(exps, Fraction(rng.randrange(-6, 7), rng.randrange(1, 3)))
    return f


def test_permutation_matrix_examples():
    assert permutation_matrix("2314") == ((0, 0, 1, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1))
    assert permutation_matrix("123") == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert permutation_matrix("21") == ((0, 1), (1, 0))


def test_permutation_matrix_rejects_non_permutations():
    for bad in ("11", "13", "0", "1234567890"):
        with pytest.raises(NotAPermutation):
            permutation_matrix(bad)


def test_group_closure_sizes():
    assert A4.order() == 12
    assert TRIVIAL2.order() == 1
    assert PLUS_MINUS.order() == 2
    assert CYCLE3.order() == 3


def test_closure_is_a_group():
    elems = A4.group_closure()
    assert permutation_matrix("1234") in elems
    index = {g: i for i, g in enumerate(elems)}
    from invtheory.linalg import mat_mul
    for g in elems:
        for h in elems:
            assert mat_mul(g, h, QQ) in index


def test_closure_cap_exceeded_for_infinite_group():
    scaling = FiniteGroupAction(polynomial_ring(QQ, ("x",)), [[[2]]], closure_cap=64)
    with pytest.raises(ClosureCapExceeded):
        scaling.group_closure()


def test_act_on_examples():
    f = R4.parse("x1+x2+x3+x4")
    assert act_on(permutation_matrix("2143"), f) == f
    one_var = polynomial_ring(QQ, ("x",))
    assert act_on([[2]], one_var.variable(0)) == one_var.parse("2*x")
    g = R2.parse("x-y")
    assert act_on(permutation_matrix("21"), g) == -g


def test_act_on_is_multiplicative_and_degree_preserving():
    rng = random.Random(8)
    g = permutation_matrix("2314")
    for _ in range(20):
        f1 = random_polynomial(R4, rng)
        f2 = random_polynomial(R4, rng)
        assert act_on(g, f1 * f2) == act_on(g, f1) * act_on(g, f2)
        assert act_on(g, f1 + f2) == act_on(g, f1) + act_on(g, f2)
        if not f1.is_zero():
            assert act_on(g, f1).degree() == f1.degree()


def test_reynolds_examples():
    one_var = polynomial_ring(QQ, ("x",))
    sign = FiniteGroupAction(one_var, [[[-1]]])
    assert reynolds(sign, one_var.variable(0)).is_zero()
    xy = R2.parse("x*y")
    assert reynolds(SWAP, xy) == xy
    assert reynolds(A4, R4.variable(0)) == R4.parse("1/4*x1+1/4*x2+1/4*x3+1/4*x4")


def test_reynolds_properties_on_random_polynomials():
    rng = random.Random(77)
    for action in (A4, SWAP, PLUS_MINUS, CYCLE3):
        for _ in range(25):
            f = random_polynomial(action.ring, rng)
            g = random_polynomial(action.ring, rng)
            rf = reynolds(action, f)
            assert reynolds(action, rf) == rf
            c = Fraction(rng.randrange(-3, 4), rng.randrange(1, 3))
            assert reynolds(action, f * c + g) == rf * c + reynolds(action, g)
            for mat in action.generators:
                assert act_on(mat, rf) == rf


def test_reynolds_modular_case_rejected():
    F2 = prime_field(2)
    swap2 = FiniteGroupAction(polynomial_ring(F2, ("x", "y")), [permutation_matrix("21")])
    with pytest.raises(ModularCaseUnsupported):
        reynolds(swap2, swap2.ring.variable(0))


def test_molien_trivial_group():
    ms = molien_series(TRIVIAL2)
    assert ms == RationalFunction(UniPoly.one(), UniPoly.one_minus_t_power(1) * UniPoly.one_minus_t_power(1))


def test_molien_plus_minus_identity():
    ms = molien_series(PLUS_MINUS)
    one_minus_t2 = UniPoly.one_minus_t_power(2)
    assert ms == RationalFunction(UniPoly((1, 0, 1)), one_minus_t2 * one_minus_t2)
    assert [int(c) for c in ms.series_coefficients(5)] == [1, 0, 3, 0, 5]


def test_molien_a4_closed_form():
    ms = molien_series(A4)
    den = UniPoly.one()
    for d in (1, 2, 3, 4):
        den = den * UniPoly.one_minus_t_power(d)
    assert ms == RationalFunction(UniPoly((1, 0, 0, 0, 0, 0, 1)), den)


def test_molien_requires_characteristic_zero():
    F3 = prime_field(3)
    action = FiniteGroupAction(polynomial_ring(F3, ("x", "y")), [permutation_matrix("21")])
    with pytest.raises(NonZeroCharacteristic):
        molien_series(action)


def test_molien_coefficients_match_fixed_space_dimensions():
    for action in (A4, SWAP, PLUS_MINUS, CYCLE3, TRIVIAL2):
        coeffs = molien_series(action).series_coefficients(9)
        for d in range(9):
            assert coeffs[d] == len(invariant_space_basis(action, d))


def test_invariant_space_basis_examples():
    assert [format_polynomial(f) for f in invariant_space_basis(A4, 1)] == ["x1+x2+x3+x4"]
    assert invariant_space_basis(PLUS_MINUS, 1) == []
    assert len(invariant_space_basis(TRIVIAL2, 2)) == 3


def test_invariant_space_basis_is_echelon_and_invariant():
    for action in (A4, CYCLE3, PLUS_MINUS):
        for d in (2, 3, 4):
            basis = invariant_space_basis(action, d)
            for f in basis:
                assert f.lead_coefficient() == 1
                for mat in action.generators:
                    assert act_on(mat, f) == f
            leads = [f.lead_exponents() for f in basis]
            assert len(set(leads)) == len(leads)


def test_invariants_king_a4():
    gens = invariants_king(A4)
    assert [f.degree() for f in gens] == [1, 2, 3, 4, 6]
    for f in gens:
        for mat in A4.generators:
            assert act_on(mat, f) == f


def test_invariants_king_trivial_and_swap():
    assert [format_polynomial(f) for f in invariants_king(TRIVIAL2)] == ["x", "y"]
    gens = invariants_king(SWAP)
    assert [f.degree() for f in gens] == [1, 2]
    # symmetric algebra dimension oracle: 1, 1, 2, 2, 3 in degrees 0..4
    series = molien_series(SWAP).series_coefficients(5)
    assert [int(c) for c in series] == [1, 1, 2, 2, 3]


def test_invariants_linear_algebra_matches_king():
    for action in (A4, SWAP, CYCLE3, TRIVIAL2, PLUS_MINUS):
        king = sorted(f.degree() for f in invariants_king(action))
        lin = sorted(f.degree() for f in invariants_linear_algebra(action))
        assert king == lin


def test_invariants_linear_algebra_examples():
    gens = invariants_linear_algebra(PLUS_MINUS, max_degree=2)
    assert [format_polynomial(f) for f in gens] == ["x^2", "x*y", "y^2"]
    assert [format_polynomial(f) for f in invariants_linear_algebra(TRIVIAL2)] == ["x", "y"]


def test_linear_algebra_needs_bound_when_closure_unavailable():
    scaling = FiniteGroupAction(polynomial_ring(QQ, ("x",)), [[[2]]], closure_cap=16)
    with pytest.raises((MissingDegreeBound, ClosureCapExceeded)):
        invariants_linear_algebra(scaling)


def test_king_monomial_skipping_preserves_algebra_and_degrees():
    # the toggle may pick different orbit representatives at a given degree,
    # but the generated ideal and the degree multiset must not move
    from invtheory import buchberger
    fast = invariants_king(A4, skip_reducible=True)
    slow = invariants_king(A4, skip_reducible=False)
    assert [f.degree() for f in fast] == [f.degree() for f in slow]
    assert buchberger(fast).elements == buchberger(slow).elements


def test_king_modular_case_rejected():
    F2 = prime_field(2)
    swap2 = FiniteGroupAction(polynomial_ring(F2, ("x", "y")), [permutation_matrix("21")])
    with pytest.raises(ModularCaseUnsupported):
        invariants_king(swap2)


def test_linear_algebra_handles_modular_case():
    # no Reynolds operator needed, so char | |G| is fine with an explicit bound
    F2 = prime_field(2)
    swap2 = FiniteGroupAction(polynomial_ring(F2, ("x", "y")), [permutation_matrix("21")])
    gens = invariants_linear_algebra(swap2, max_degree=3)
    assert sorted(f.degree() for f in gens) == [1, 2]
    for f in gens:
        assert act_on(permutation_matrix("21"), f) == f


def test_generator_invariance_under_full_closure():
    for f in invariants_king(A4):
        for g in A4.group_closure():
            assert act_on(g, f) == f
