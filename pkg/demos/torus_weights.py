"""Monomial invariants of diagonal torus actions.

A rank-3 torus acts on four variables through an integer weight matrix; the
invariant monomials form a finitely generated monoid and the minimal
generators come out of a Hilbert-basis computation on the weight lattice.
The finite-field variant replaces each torus factor by the multiplicative
group of GF(q) and is checked here against the exact answer it extends.
"""

from invtheory import (
    DiagonalAction,
    QQ,
    diagonal_invariants,
    diagonal_invariants_literal,
    format_polynomial,
    polynomial_ring,
    torus_hilbert_basis,
)


def main():
    ring = polynomial_ring(QQ, ("x_1", "x_2", "x_3", "x_4"))
    weights = [[5, -3, -1, 4], [-3, 1, 1, 5], [0, -4, 2, 6]]
    action = DiagonalAction(ring, 3, [], weights)

    def pretty(monomials):
        return [format_polynomial(ring.monomial(m.exponents)) for m in monomials]

    exact = diagonal_invariants(action)
    print("weight matrix rows:")
    for row in weights:
        print("  ", row)
    print("minimal invariant monomials:", pretty(exact))

    # same weights read literally over GF(9): the torus degenerates to a
    # finite group of order 8^3 and extra invariants appear
    literal = diagonal_invariants_literal(action, 9)
    print("\nliteral GF(9) invariants:", pretty(literal))
    extras = sorted(set(m.exponents for m in literal) - set(m.exponents for m in exact))
    print("monomials that are invariant only over GF(9):", extras)

    # the lattice kernel underneath: nonnegative solutions of the weight equations
    print("\nHilbert basis of ker([[1, -1], [2, -2]] restricted to N^2):",
          torus_hilbert_basis([(1, 2), (-1, -2)]))


if __name__ == "__main__":
    main()
