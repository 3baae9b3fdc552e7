"""Tests for Buchberger's algorithm, normal forms, and elimination ideals."""

import random

import pytest

from invtheory import (
    InhomogeneousTruncation,
    OrderMismatch,
    QQ,
    TermOrder,
    buchberger,
    elimination_ideal,
    format_polynomial,
    normal_form,
    polynomial_ring,
    substitute,
)

LEX3 = polynomial_ring(QQ, ("x", "y", "z"), order=TermOrder.lex())


def strings(polys):
    return sorted(format_polynomial(f) for f in polys)


def random_polynomial(ring, rng, max_terms=4, max_degree=3):
    f = ring.zero()
    for _ in range(rng.randrange(1, max_terms + 1)):
        exps = [0] * ring.n
        for _ in range(rng.randrange(max_degree + 1)):
            exps[rng.randrange(ring.n)] += 1
        f = f + ring.monomial(exps, rng.randrange(-4, 5) or 1)
    return f


def test_normal_form_examples():
    ring = polynomial_ring(QQ, ("x", "y"), order=TermOrder.lex())
    x, y = ring.variables()
    assert normal_form(x * x, buchberger([x])).is_zero()
    assert normal_form(x, []) == x
    assert normal_form(x * y, buchberger([x + y])) == -y * y


def test_normal_form_is_deterministic_and_irreducible():
    gb = buchberger([LEX3.parse("x^2-y"), LEX3.parse("x^3-z")])
    leads = [g.lead_exponents() for g in gb.elements]
    rng = random.Random(1)
    for _ in range(30):
        f = random_polynomial(LEX3, rng)
        r = normal_form(f, gb)
        assert normal_form(r, gb) == r
        for m in r.monomials():
            assert not any(all(a <= b for a, b in zip(lead, m.exponents)) for lead in leads)


def test_buchberger_examples():
    ring = polynomial_ring(QQ, ("x", "y"), order=TermOrder.lex())
    x, y = ring.variables()
    assert strings(buchberger([x]).elements) == ["x"]
    assert strings(buchberger([x + y, y]).elements) == ["x", "y"]
    gb = buchberger([LEX3.parse("x^2-y"), LEX3.parse("x^3-z")])
    assert strings(gb.elements) == sorted(["x^2-y", "x*y-z", "x*z-y^2", "y^3-z^2"])
    assert gb.reduced


def test_groebner_membership_and_s_pairs():
    gb = buchberger([LEX3.parse("x^2-y"), LEX3.parse("x^3-z")])
    rng = random.Random(2)
    for _ in range(25):
        combo = LEX3.zero()
        for g in gb.elements:
            combo = combo + random_polynomial(LEX3, rng, max_terms=2, max_degree=2) * g
        assert normal_form(combo, gb).is_zero()
    # an element outside the ideal keeps a nonzero remainder
    assert not normal_form(LEX3.parse("x"), gb).is_zero()


def test_reduced_basis_unique_under_input_permutation():
    rng = random.Random(2026)
    for _ in range(20):
        ring = polynomial_ring(QQ, ("x", "y", "z"), order=rng.choice([TermOrder.lex(), TermOrder.grevlex()]))
        polys = [random_polynomial(ring, rng) for _ in range(rng.randrange(2, 4))]
        polys = [f for f in polys if not f.is_zero()]
        if not polys:
            continue
        reference = buchberger(polys).elements
        for _ in range(3):
            shuffled = polys[:]
            rng.shuffle(shuffled)
            assert buchberger(shuffled).elements == reference


def test_lead_coefficients_are_one_in_reduced_basis():
    gb = buchberger([LEX3.parse("2*x^2-2*y"), LEX3.parse("3*x^3-3*z")])
    for g in gb.elements:
        assert g.lead_coefficient() == 1


def test_truncated_basis_consistency():
    ring = polynomial_ring(QQ, ("x", "y", "z"))
    polys = [ring.parse("x^2+y^2+z^2"), ring.parse("x*y+y*z"), ring.parse("x^3-z^3")]
    full6 = buchberger(polys, truncation_degree=6)
    for cutoff in (3, 4, 5):
        partial = buchberger(polys, truncation_degree=cutoff)
        expect = [g for g in full6.elements if g.degree() <= cutoff]
        assert strings(partial.elements) == strings(expect)


def test_truncation_requires_homogeneous_input():
    ring = polynomial_ring(QQ, ("x", "y"))
    with pytest.raises(InhomogeneousTruncation):
        buchberger([ring.parse("x^2+y")], truncation_degree=3)


def test_order_mismatch_rejected():
    gb = buchberger([LEX3.parse("x^2-y")])
    grevlex_ring = polynomial_ring(QQ, ("x", "y", "z"))
    with pytest.raises(OrderMismatch):
        normal_form(grevlex_ring.parse("x^2"), gb)


def test_elimination_examples():
    ring = polynomial_ring(QQ, ("x", "y"))
    x, y = ring.variables()
    assert elimination_ideal([x], ["x"]) == []
    kept = elimination_ideal([x + y, y], [])
    assert strings(kept) == ["x", "y"]


def test_elimination_cusp_curve():
    x, y, z = LEX3.variables()
    result = elimination_ideal([y - x * x, z - x * x * x], ["x"])
    assert len(result) == 1
    assert format_polynomial(result[0].monic()) in ("y^3-z^2", "-y^3+z^2")
    # soundness: substituting the parametrization y=t^2, z=t^3 kills every generator
    t_ring = polynomial_ring(QQ, ("t",))
    t = t_ring.variable(0)
    for g in result:
        assert substitute(g, [t * t, t * t * t]).is_zero()


def test_elimination_dimension_counts_match_parametrization():
    # kernels of evaluating degree <= d polynomials in y, z on y=t^2, z=t^3
    # must coincide in dimension with the degree <= d multiples of y^3-z^2;
    # together with membership of each kernel vector this pins the ideal as principal
    from math import comb

    from invtheory.linalg import nullspace

    ring_yz = polynomial_ring(QQ, ("y", "z"))
    gb = buchberger([ring_yz.parse("y^3-z^2")])
    t_ring = polynomial_ring(QQ, ("t",))
    t = t_ring.variable(0)
    for d in range(7):
        monomials = [m for k in range(d + 1) for m in ring_yz.monomial_basis(k)]
        width = 3 * d + 1
        rows = []
        for m in monomials:
            image = substitute(ring_yz.monomial(m), [t * t, t * t * t])
            rows.append([QQ.coerce(image.coefficient((k,))) for k in range(width)])
        # rows currently index monomials; kernel vectors combine monomials to zero functions
        transposed = [[rows[j][i] for j in range(len(monomials))] for i in range(width)]
        kernel = nullspace(transposed, len(monomials), QQ)
        assert len(kernel) == (comb(d - 1, 2) if d >= 3 else 0)
        for vec in kernel:
            f = ring_yz.zero()
            for c, m in zip(vec, monomials):
                if c:
                    f = f + ring_yz.monomial(m, c)
            assert normal_form(f, gb).is_zero()
