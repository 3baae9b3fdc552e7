"""Hilbert series bookkeeping and presentations of invariant rings."""

from invtheory import (
    DiagonalAction,
    FiniteGroupAction,
    QQ,
    defining_ideal,
    format_polynomial,
    hilbert_series_rewrite,
    invariant_ring,
    molien_series,
    permutation_matrix,
    polynomial_ring,
    verify_generators,
)


def main():
    # x -> -x, y -> -y: invariants are the three quadratic monomials,
    # related by the rank-one conic u1 u3 = u2^2
    ring = polynomial_ring(QQ, ("x", "y"))
    sign = FiniteGroupAction(ring, [[[-1, 0], [0, -1]]])
    inv = invariant_ring(sign)
    print("generators:", [format_polynomial(f) for f in inv.generators])
    relations = defining_ideal(inv)
    print("relations:", [format_polynomial(f) for f in relations])
    print("in variables:", relations[0].ring.names)

    # numerator of the Hilbert series over the chosen denominator degrees:
    # a polynomial, and a certificate that the degrees [2, 2] are right
    print("series numerator over (1-T^2)^2:",
          hilbert_series_rewrite(inv, [2, 2]))
    print("Molien series:", molien_series(sign))

    # per-degree audit of a generator list against the fixed-space dimensions
    for check in verify_generators(inv, 6):
        print(f"  degree {check.degree}: expected {check.expected},"
              f" spanned {check.actual}, ok={check.passed}")

    # same machinery for a torus: one generator, no relations
    torus = DiagonalAction(polynomial_ring(QQ, ("x", "y")), 1, [], [[1, -1]])
    tinv = invariant_ring(torus)
    print("\ntorus generators:", [format_polynomial(f) for f in tinv.generators])
    print("torus relations:", defining_ideal(tinv))


if __name__ == "__main__":
    main()
