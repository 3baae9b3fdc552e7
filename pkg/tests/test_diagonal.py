"""Tests for diagonal torus and finite abelian actions on monomials."""

import itertools
import random
from fractions import Fraction

import pytest

from invtheory import (
    DiagonalAction,
    DimensionMismatch,
    QQ,
    RootOfUnityUnavailable,
    abelian_generators,
    diagonal_invariants,
    diagonal_invariants_literal,
    format_polynomial,
    is_invariant_exponent,
    polynomial_ring,
    reynolds_diagonal,
    torus_hilbert_basis,
)

R4 = polynomial_ring(QQ, ("x_1", "x_2", "x_3", "x_4"))
R2 = polynomial_ring(QQ, ("x_1", "x_2"))

# the running 3-torus example on 4 variables
W_TORUS = [[5, -3, -1, 4], [-3, 1, 1, 5], [0, -4, 2, 6]]
TORUS_ACTION = DiagonalAction(R4, 3, [], W_TORUS)


def vectors_of_degree_at_most(n, bound):
    for total in range(bound + 1):
        for cuts in itertools.combinations(range(total + n - 1), n - 1):
            prev = -1
            parts = []
            for c in cuts:
                parts.append(c - prev - 1)
                prev = c
            parts.append(total + n - 2 - prev)
            yield tuple(parts)


def brute_force_minimal_invariants(action, bound):
    invariant = [v for v in vectors_of_degree_at_most(action.ring.n, bound)
                 if any(v) and is_invariant_exponent(action, v)]
    minimal = []
    for v in sorted(invariant, key=lambda u: (sum(u), u)):
        if not any(all(a <= b for a, b in zip(u, v)) for u in minimal):
            minimal.append(v)
    return minimal


def test_construction_validation():
    with pytest.raises(DimensionMismatch):
        DiagonalAction(R2, 1, [2], [[1, 1]])  # needs 2 rows
    with pytest.raises(DimensionMismatch):
        DiagonalAction(R2, 1, [], [[1, 1, 1]])  # row length 3 on 2 variables
    with pytest.raises(ValueError):
        DiagonalAction(R2, -1, [], [])
    with pytest.raises(ValueError):
        DiagonalAction(R2, 0, [1], [[1, 1]])  # cyclic order below 2


def test_is_invariant_exponent_examples():
    assert is_invariant_exponent(TORUS_ACTION, (1, 1, 2, 0))
    assert not is_invariant_exponent(TORUS_ACTION, (1, 0, 0, 0))
    zero = DiagonalAction(R2, 1, [], [[0, 0]])
    for v in vectors_of_degree_at_most(2, 4):
        assert is_invariant_exponent(zero, v)


def test_is_invariant_exponent_dimension_check():
    with pytest.raises(DimensionMismatch):
        is_invariant_exponent(TORUS_ACTION, (1, 1))


def test_abelian_generators_examples():
    assert [m.exponents for m in abelian_generators([2], [[1, 1]])] == [(0, 2), (1, 1), (2, 0)]
    assert sorted(m.exponents for m in abelian_generators([3], [[1, 2]])) == [(0, 3), (1, 1), (3, 0)]
    assert [m.exponents for m in abelian_generators([2], [[0, 1]])] == [(1, 0), (0, 2)]


def test_abelian_generators_against_brute_force():
    rng = random.Random(321)
    for _ in range(25):
        n = rng.randrange(1, 4)
        s = rng.randrange(1, 3)
        orders = [rng.randrange(2, 5) for _ in range(s)]
        weights = [[rng.randrange(0, d) for _ in range(n)] for d in orders]
        ring = polynomial_ring(QQ, tuple(f"x_{i+1}" for i in range(n)))
        action = DiagonalAction(ring, 0, orders, weights)
        bound = 1
        for d in orders:
            bound *= d
        expect = brute_force_minimal_invariants(action, bound)
        got = [m.exponents for m in abelian_generators(orders, weights)]
        assert sorted(got) == sorted(expect)


def test_torus_hilbert_basis_examples():
    assert torus_hilbert_basis([(1,), (-1,)]) == [(1, 1)]
    assert torus_hilbert_basis([(1,), (1,)]) == []
    assert torus_hilbert_basis([(2,), (-3,)]) == [(3, 2)]


def test_torus_hilbert_basis_properties():
    rng = random.Random(77)
    for _ in range(25):
        k = rng.randrange(1, 5)
        r = rng.randrange(1, 3)
        vectors = [tuple(rng.randrange(-3, 4) for _ in range(r)) for _ in range(k)]
        basis = torus_hilbert_basis(vectors)
        for c in basis:
            assert any(c)
            for i in range(r):
                assert sum(cj * vectors[j][i] for j, cj in enumerate(c)) == 0
        for a, b in itertools.combinations(basis, 2):
            assert not all(x <= y for x, y in zip(a, b))
            assert not all(y <= x for x, y in zip(a, b))
        # completeness: every solution of degree <= 6 is an N-combination of basis vectors
        solutions = [v for v in vectors_of_degree_at_most(k, 6)
                     if any(v) and all(sum(cj * vectors[j][i] for j, cj in enumerate(v)) == 0
                                       for i in range(r))]
        seen = {}

        def decomposable(v):
            if not any(v):
                return True
            if v in seen:
                return seen[v]
            seen[v] = False
            for b in basis:
                if all(x <= y for x, y in zip(b, v)):
                    rest = tuple(y - x for x, y in zip(b, v))
                    if decomposable(rest):
                        seen[v] = True
                        break
            return seen[v]

        for v in solutions:
            assert decomposable(v)


def test_diagonal_invariants_examples():
    assert [m.exponents for m in diagonal_invariants(TORUS_ACTION)] == [(1, 1, 2, 0)]
    zero = DiagonalAction(R2, 1, [], [[0, 0]])
    assert [m.exponents for m in diagonal_invariants(zero)] == [(0, 1), (1, 0)]
    pairing = DiagonalAction(R2, 1, [], [[1, -1]])
    assert [m.exponents for m in diagonal_invariants(pairing)] == [(1, 1)]


def test_diagonal_invariants_random_oracle():
    rng = random.Random(5150)
    for _ in range(20):
        n = rng.randrange(1, 4)
        r = rng.randrange(0, 3)
        s = rng.randrange(0, 2)
        if r + s == 0:
            r = 1
        orders = [rng.randrange(2, 4) for _ in range(s)]
        weights = [[rng.randrange(-2, 3) for _ in range(n)] for _ in range(r)]
        weights += [[rng.randrange(0, d) for _ in range(n)] for d in orders]
        ring = polynomial_ring(QQ, tuple(f"x_{i+1}" for i in range(n)))
        action = DiagonalAction(ring, r, orders, weights)
        bound = 4 * n * max((abs(w) for row in weights[:r] for w in row), default=1)
        bound = max(bound, 1)
        for d in orders:
            bound += d
        got = [m.exponents for m in diagonal_invariants(action)]
        expect = brute_force_minimal_invariants(action, bound)
        assert sorted(got) == sorted(expect)
        for v in got:
            assert sum(v) <= bound


def test_monomial_set_is_sorted_and_irreducible():
    sets = [
        diagonal_invariants(TORUS_ACTION),
        diagonal_invariants_literal(TORUS_ACTION, 9),
        abelian_generators([2, 3], [[1, 1, 0], [0, 1, 2]]),
    ]
    for monomials in sets:
        exps = [m.exponents for m in monomials]
        assert len(set(exps)) == len(exps)
        assert exps == sorted(exps, key=lambda v: (sum(v), v))
        for a, b in itertools.permutations(exps, 2):
            assert not all(x <= y for x, y in zip(a, b)) or a == b


def test_literal_paper_example_over_gf9():
    got = {m.exponents for m in diagonal_invariants_literal(TORUS_ACTION, 9)}
    assert got == {
        (1, 1, 2, 0), (0, 0, 0, 8), (0, 0, 8, 0), (0, 4, 4, 0), (0, 8, 0, 0),
        (2, 6, 0, 0), (4, 0, 4, 0), (4, 4, 0, 0), (6, 2, 0, 0), (8, 0, 0, 0),
    }


def test_literal_degenerate_and_small_fields():
    assert [m.exponents for m in diagonal_invariants_literal(TORUS_ACTION, 2)] == [
        (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)]
    one = polynomial_ring(QQ, ("x",))
    scale = DiagonalAction(one, 1, [], [[1]])
    assert [m.exponents for m in diagonal_invariants_literal(scale, 4)] == [(3,)]


def test_literal_requires_compatible_roots_of_unity():
    action = DiagonalAction(R2, 0, [5], [[1, 2]])
    with pytest.raises(RootOfUnityUnavailable):
        diagonal_invariants_literal(action, 9)
    with pytest.raises(ValueError):
        diagonal_invariants_literal(action, 12)  # not a prime power


def test_literal_approaches_torus_answer_for_large_q():
    # all torus invariant exponents here stay far below q-1, so the two agree
    pairing = DiagonalAction(R2, 1, [], [[1, -1]])
    exact = [m.exponents for m in diagonal_invariants(pairing)]
    literal = [m.exponents for m in diagonal_invariants_literal(pairing, 2 ** 13)]
    assert [v for v in literal if sum(v) <= 6] == exact
    # the extra literal generators are the Frobenius-order powers x_i^(q-1)
    assert set(literal) - set(exact) == {(2 ** 13 - 1, 0), (0, 2 ** 13 - 1)}


def test_reynolds_diagonal_examples():
    f = R4.parse("x_1 + x_1*x_2*x_3^2")
    assert format_polynomial(reynolds_diagonal(TORUS_ACTION, f)) == "x_1*x_2*x_3^2"
    inv = R4.parse("x_1*x_2*x_3^2")
    assert reynolds_diagonal(TORUS_ACTION, inv) == inv
    assert reynolds_diagonal(TORUS_ACTION, R4.parse("x_1 + x_2^3")).is_zero()


def test_reynolds_diagonal_properties():
    rng = random.Random(31)
    for _ in range(40):
        f = R4.zero()
        for _ in range(rng.randrange(5)):
            exps = [rng.randrange(4) for _ in range(4)]
            f = f + R4.monomial(exps, Fraction(rng.randrange(-5, 6), rng.randrange(1, 3)))
        g = reynolds_diagonal(TORUS_ACTION, f)
        assert reynolds_diagonal(TORUS_ACTION, g) == g
        for m in g.monomials():
            assert is_invariant_exponent(TORUS_ACTION, m.exponents)
        h = R4.parse("x_1*x_2*x_3^2")
        assert reynolds_diagonal(TORUS_ACTION, f + h) == g + h
