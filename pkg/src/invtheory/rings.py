"""Container for a computed ring of invariants: dispatch over the three
action kinds, presentations by elimination, Hilbert series rewriting, and an
independent per-degree verification harness."""

from __future__ import annotations

from dataclasses import dataclass

from .diagonal import (
    DiagonalAction,
    diagonal_invariants,
    diagonal_invariants_literal,
    is_invariant_exponent,
)
from .errors import NonZeroCharacteristic
from .finite import (
    FiniteGroupAction,
    invariant_space_basis,
    invariants_king,
    invariants_linear_algebra,
    molien_series,
)
from .groebner import elimination_ideal
from .linalg import rank
from .poly import Polynomial, PolynomialRing, fresh_names, polynomial_ring
from .ratfunc import UniPoly
from .reductive import (
    LinearlyReductiveAction,
    reductive_invariant_basis,
    reductive_invariants,
)

KING = "king"
LINEAR_ALGEBRA = "linear_algebra"
DIAGONAL = "diagonal"
DIAGONAL_LITERAL = "diagonal_literal"
REDUCTIVE = "reductive"


@dataclass(frozen=True)
class DegreeCheck:
    degree: int
    expected: int
    actual: int
    passed: bool


class RingOfInvariants:
    """Computed generators of an invariant ring together with the action
    they came from and the algorithm that produced them."""

    def __init__(self, action, generators, method: str, literal_q: int | None = None):
        self.action = action
        self.method = method
        self.literal_q = literal_q
        ring = self.ring
        key = lambda f: (
            f.degree(),
            tuple(-v for v in ring.order.key(f.lead_exponents())),
        )
        self.generators = tuple(sorted(generators, key=key))
        self._defining: list[Polynomial] | None = None

    @property
    def ring(self) -> PolynomialRing:
        if isinstance(self.action, LinearlyReductiveAction):
            return self.action.target_ring
        return self.action.ring

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self) -> str:
        return (
            f"RingOfInvariants({len(self.generators)} generators, "
            f"method={self.method!r})"
        )


def invariant_ring(
    action,
    algorithm: str = KING,
    max_degree: int | None = None,
    literal_q: int | None = None,
) -> RingOfInvariants:
    """Compute invariant generators for any supported action kind.

    `algorithm` selects the finite-group method (king or linear_algebra);
    `literal_q` switches diagonal actions to literal invariance over F_q.
    """
    if isinstance(action, FiniteGroupAction):
        if algorithm == KING:
            gens = invariants_king(action, max_degree=max_degree)
        elif algorithm in (LINEAR_ALGEBRA, "linear"):
            gens = invariants_linear_algebra(action, max_degree=max_degree)
            algorithm = LINEAR_ALGEBRA
        else:
            raise ValueError(f"unknown finite-group algorithm {algorithm!r}")
        return RingOfInvariants(action, gens, algorithm)
    if isinstance(action, DiagonalAction):
        if literal_q is not None:
            monos = diagonal_invariants_literal(action, literal_q)
            gens = [action.ring.monomial(m) for m in monos]
            return RingOfInvariants(action, gens, DIAGONAL_LITERAL, literal_q)
        monos = diagonal_invariants(action)
        gens = [action.ring.monomial(m) for m in monos]
        return RingOfInvariants(action, gens, DIAGONAL)
    if isinstance(action, LinearlyReductiveAction):
        return RingOfInvariants(action, reductive_invariants(action), REDUCTIVE)
    raise TypeError(f"unsupported action type {type(action).__name__}")


def defining_ideal(inv: RingOfInvariants) -> list[Polynomial]:
    """Relations among the generators: the kernel of u_i -> f_i, presented in
    a fresh ring with one variable per generator."""
    if inv._defining is not None:
        return inv._defining
    gens = inv.generators
    ring = inv.ring
    if not gens:
        inv._defining = []
        return inv._defining
    unames = fresh_names(len(gens), set(ring.names))
    combined = polynomial_ring(
        ring.field, tuple(ring.names) + unames
    )
    pad = len(gens)
    relations = []
    for i, f in enumerate(gens):
        rel = combined.variable(ring.n + i)
        acc = {exp + (0,) * pad: coeff for exp, coeff in f.terms}
        relations.append(rel - combined.from_terms(acc))
    inv._defining = elimination_ideal(relations, eliminate=ring.names)
    return inv._defining


def hilbert_series_rewrite(inv: RingOfInvariants, degrees) -> UniPoly:
    """Numerator of the Molien series against the product of (1 - T^d) for
    the supplied degrees; the division must be exact."""
    if not isinstance(inv.action, FiniteGroupAction):
        raise TypeError("hilbert series rewriting requires a finite group action")
    if not inv.ring.field.is_rationals:
        raise NonZeroCharacteristic("Molien series needs characteristic zero")
    series = molien_series(inv.action)
    numerator = series.num
    for d in degrees:
        d = int(d)
        if d < 1:
            raise ValueError("degrees must be positive")
        numerator = numerator * UniPoly.one_minus_t_power(d)
    return numerator.exact_div(series.den)


def _literal_invariant(action: DiagonalAction, q: int, exponents) -> bool:
    moduli = [q - 1] * action.torus_rank + list(action.cyclic_orders)
    for row, d in zip(action.weights, moduli):
        if sum(w * a for w, a in zip(row, exponents)) % d != 0:
            return False
    return True


def _expected_dimension(inv: RingOfInvariants, degree: int) -> int:
    action = inv.action
    if isinstance(action, FiniteGroupAction):
        return len(invariant_space_basis(action, degree))
    if isinstance(action, DiagonalAction):
        monos = inv.ring.monomial_basis(degree)
        if inv.method == DIAGONAL_LITERAL:
            q = inv.literal_q
            return sum(
                1 for m in monos if _literal_invariant(action, q, m.exponents)
            )
        return sum(
            1 for m in monos if is_invariant_exponent(action, m.exponents)
        )
    return len(reductive_invariant_basis(action, degree))


def _spanned_dimension(inv: RingOfInvariants, degree: int) -> int:
    gens = sorted(inv.generators, key=lambda f: f.degree())
    products: list[Polynomial] = []

    def extend(start: int, current: Polynomial, remaining: int) -> None:
        if remaining == 0:
            products.append(current)
            return
        for j in range(start, len(gens)):
            d = gens[j].degree()
            if d > remaining:
                break
            extend(j, current * gens[j], remaining - d)

    extend(0, inv.ring.one(), degree)
    if not products:
        return 0
    monos = inv.ring.monomial_basis(degree)
    index = {m.exponents: i for i, m in enumerate(monos)}
    field = inv.ring.field
    rows = []
    for f in products:
        row = [field.zero()] * len(monos)
        for exp, coeff in f.terms:
            row[index[exp]] = coeff
        rows.append(row)
    return rank(rows, field)


def verify_generators(inv: RingOfInvariants, max_degree: int) -> list[DegreeCheck]:
    """Per-degree comparison of the dimension spanned by generator products
    against an independently computed invariant-space dimension."""
    report = []
    for degree in range(1, max_degree + 1):
        expected = _expected_dimension(inv, degree)
        actual = _spanned_dimension(inv, degree)
        report.append(DegreeCheck(degree, expected, actual, expected == actual))
    return report
