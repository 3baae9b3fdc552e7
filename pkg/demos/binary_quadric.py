"""SL2 acting on binary quadratic forms ax^2 + bxy + cy^2.

The group is presented by its coordinate ring, the action by a polynomial
matrix in those coordinates. Everything classical drops out: the Hilbert
ideal is principal, generated by the discriminant, and the discriminant
generates the whole ring of invariants.
"""

from invtheory import (
    LinearlyReductiveAction,
    QQ,
    format_polynomial,
    hilbert_ideal,
    polynomial_ring,
    reductive_invariant_basis,
    reductive_invariants,
)

GROUP_RING = polynomial_ring(QQ, ("z11", "z12", "z21", "z22"))
FORM_RING = polynomial_ring(QQ, ("a", "b", "c"))

# substituting x -> z11 x + z12 y, y -> z21 x + z22 y into the form and
# collecting coefficients of x^2, xy, y^2 gives this matrix
ACTION = LinearlyReductiveAction(
    GROUP_RING,
    ["z11*z22-z12*z21-1"],
    [["z11^2", "z11*z21", "z21^2"],
     ["2*z11*z12", "z11*z22+z12*z21", "2*z21*z22"],
     ["z12^2", "z12*z22", "z22^2"]],
    FORM_RING,
)


def main():
    H = hilbert_ideal(ACTION)
    print("Hilbert ideal generators:")
    for f in H:
        print("  ", format_polynomial(f))

    for d in (1, 2, 3, 4):
        basis = reductive_invariant_basis(ACTION, d)
        print(f"invariant space in degree {d}:",
              [format_polynomial(f) for f in basis] or "0")

    gens = reductive_invariants(ACTION)
    print("\nminimal generating set:", [format_polynomial(f) for f in gens])


if __name__ == "__main__":
    main()
