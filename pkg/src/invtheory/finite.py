"""Invariants of finite matrix groups.

A `FiniteGroupAction` holds a polynomial ring and a generating set of
invertible matrices acting by linear substitution x_j -> sum_k g[j][k] x_k.
The group itself is the multiplicative closure of the generators, computed
lazily and cached.  Both generator-building algorithms are here: the
King-style Reynolds/normal-form sweep and the fixed-space linear algebra
sweep; both return minimal generating sets of the invariant ring.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import (
    ClosureCapExceeded,
    DimensionMismatch,
    MissingDegreeBound,
    ModularCaseUnsupported,
    NonZeroCharacteristic,
    NotAPermutation,
)
from .groebner import _IncrementalGroebner
from .poly import Monomial, Polynomial, PolynomialRing, substitute
from .ratfunc import RationalFunction, UniPoly, rational_function_sum

DEFAULT_CLOSURE_CAP = 50000


def permutation_matrix(one_line: str):
    """Matrix of the permutation given in one-line notation, e.g. '2314'.

    Column j carries a single 1 in row sigma(j): the matrix maps basis
    vector e_j to e_sigma(j).
    """
    if not one_line.isdigit() or not one_line:
        raise NotAPermutation(f"{one_line!r} is not one-line permutation text")
    n = len(one_line)
    images = [int(ch) for ch in one_line]
    if sorted(images) != list(range(1, n + 1)):
        raise NotAPermutation(f"{one_line!r} is not a permutation of 1..{n}")
    return tuple(
        tuple(1 if images[j] == i + 1 else 0 for j in range(n)) for i in range(n)
    )


class FiniteGroupAction:
    """A finite matrix group acting on a polynomial ring."""

    def __init__(self, ring: PolynomialRing, generators, closure_cap: int = DEFAULT_CLOSURE_CAP):
        self.ring = ring
        self.closure_cap = closure_cap
        field = ring.field
        mats = []
        for g in generators:
            rows = tuple(tuple(field.coerce(v) for v in row) for row in g)
            if len(rows) != ring.n or any(len(row) != ring.n for row in rows):
                raise DimensionMismatch(
                    f"generator is not a {ring.n}x{ring.n} matrix"
                )
            if not linalg.is_invertible(rows, field):
                raise DimensionMismatch("generator matrix is singular")
            mats.append(rows)
        self.generators = tuple(mats)
        self._closure: tuple | None = None

    # -- the group ------------------------------------------------------------

    def group_closure(self) -> tuple:
        """All group elements, breadth-first from the identity; cached."""
        if self._closure is None:
            field = self.ring.field
            identity = linalg.identity(self.ring.n, field)
            seen = {identity}
            ordered = [identity]
            for g in self.generators:
                if g not in seen:
                    seen.add(g)
                    ordered.append(g)
            frontier = list(ordered)
            while frontier:
                next_frontier = []
                for x in frontier:
                    for g in self.generators:
                        y = linalg.mat_mul(x, g, field)
                        if y not in seen:
                            seen.add(y)
                            ordered.append(y)
                            next_frontier.append(y)
                            if len(ordered) > self.closure_cap:
                                raise ClosureCapExceeded(
                                    f"group closure exceeded {self.closure_cap} elements"
                                )
                frontier = next_frontier
            self._closure = tuple(ordered)
        return self._closure

    def order(self) -> int:
        return len(self.group_closure())

    def __repr__(self) -> str:
        return (
            f"FiniteGroupAction({self.ring}, {len(self.generators)} generators)"
        )


def act_on(g, f: Polynomial) -> Polynomial:
    """f(g.x): substitute x_j -> sum_k g[j][k] x_k."""
    ring = f.ring
    field = ring.field
    if len(g) != ring.n or any(len(row) != ring.n for row in g):
        raise DimensionMismatch(f"matrix is not {ring.n}x{ring.n}")
    variables = ring.variables()
    images = []
    for j in range(ring.n):
        image = ring.zero()
        for k in range(ring.n):
            c = field.coerce(g[j][k])
            if not field.is_zero(c):
                image = image + variables[k] * c
        images.append(image)
    return substitute(f, images)


def reynolds(action: FiniteGroupAction, f: Polynomial) -> Polynomial:
    """Group average (1/|G|) sum_g f(g.x); the projection onto invariants."""
    closure = action.group_closure()
    field = action.ring.field
    p = field.characteristic()
    if p and len(closure) % p == 0:
        raise ModularCaseUnsupported(
            f"|G| = {len(closure)} is divisible by the characteristic {p}"
        )
    total = action.ring.zero()
    for g in closure:
        total = total + act_on(g, f)
    return total * field.from_pair(1, len(closure))


def molien_series(action: FiniteGroupAction) -> RationalFunction:
    """Molien series (1/|G|) sum_g 1/det(1 - T g), reduced."""
    if not action.ring.field.is_rationals:
        raise NonZeroCharacteristic("Molien series needs characteristic 0")
    closure = action.group_closure()
    n = action.ring.n
    one = UniPoly.one()
    terms = []
    for g in closure:
        mat = [
            [
                UniPoly((1 if i == j else 0, -Fraction(g[i][j])))
                for j in range(n)
            ]
            for i in range(n)
        ]
        terms.append((one, _unipoly_det(mat)))
    total = rational_function_sum(terms)
    return total * Fraction(1, len(closure))


def _unipoly_det(mat) -> UniPoly:
    """Exact determinant of a matrix of univariate polynomials by cofactor
    expansion along rows, memoized on the surviving column set."""
    n = len(mat)
    cache: dict[tuple[int, ...], UniPoly] = {(): UniPoly.one()}

    def minor(cols: tuple[int, ...]) -> UniPoly:
        value = cache.get(cols)
        if value is not None:
            return value
        row = n - len(cols)
        total = UniPoly.zero()
        for idx, col in enumerate(cols):
            entry = mat[row][col]
            if entry.is_zero():
                continue
            sub = minor(cols[:idx] + cols[idx + 1:])
            term = entry * sub
            total = total + (term if idx % 2 == 0 else -term)
        cache[cols] = total
        return total

    return minor(tuple(range(n)))


def invariant_space_basis(action: FiniteGroupAction, degree: int) -> list[Polynomial]:
    """Basis of the degree-d invariants, as the joint fixed space of the
    generator matrices on the degree-d monomial basis; vectors come back in
    reduced echelon form over that basis, so the list is canonical."""
    ring = action.ring
    field = ring.field
    basis = ring.monomial_basis(degree)
    if not basis:
        return []
    index = {m.exponents: i for i, m in enumerate(basis)}
    size = len(basis)
    rows = []
    for g in action.generators:
        columns = _degree_action_columns(ring, g, basis)
        for j in range(size):
            row = [field.zero()] * size
            any_nonzero = False
            for i in range(size):
                value = columns[i].get(basis[j].exponents)
                if value is not None and not field.is_zero(value):
                    row[i] = value
                    any_nonzero = True
            row[j] = field.sub(row[j], field.one())
            if any_nonzero or not field.is_zero(row[j]):
                rows.append(row)
    vectors = linalg.nullspace(rows, size, field)
    out = []
    for vec in vectors:
        out.append(
            ring.from_terms(
                {basis[i].exponents: c for i, c in enumerate(vec) if not field.is_zero(c)}
            )
        )
    return out


def _degree_action_columns(ring: PolynomialRing, g, basis: list[Monomial]):
    """For each basis monomial m, the term dict of m(g.x)."""
    field = ring.field
    variables = ring.variables()
    images = []
    for j in range(ring.n):
        image = ring.zero()
        for k in range(ring.n):
            c = field.coerce(g[j][k])
            if not field.is_zero(c):
                image = image + variables[k] * c
        images.append(image)
    max_exp = [0] * ring.n
    for m in basis:
        for i, e in enumerate(m.exponents):
            max_exp[i] = max(max_exp[i], e)
    powers = []
    for i in range(ring.n):
        pows = [ring.one()]
        for _ in range(max_exp[i]):
            pows.append(pows[-1] * images[i])
        powers.append(pows)
    columns = []
    for m in basis:
        product = ring.one()
        for i, e in enumerate(m.exponents):
            if e:
                product = product * powers[i][e]
        columns.append(dict(product.terms))
    return columns


def _degree_bound(action: FiniteGroupAction, max_degree: int | None) -> int:
    if max_degree is not None:
        if max_degree < 1:
            raise ValueError("max_degree must be at least 1")
        return max_degree
    return action.order()


def _sorted_generators(found: list[Polynomial]) -> list[Polynomial]:
    def sort_key(f: Polynomial):
        key = f.ring.order.key(f.lead_exponents())
        return (f.degree(), tuple(-v for v in key))

    return sorted(found, key=sort_key)


def invariants_king(
    action: FiniteGroupAction,
    max_degree: int | None = None,
    skip_reducible: bool = True,
) -> list[Polynomial]:
    """Minimal invariant generators by Reynolds images of monomials.

    Degree by degree up to the bound (|G| by default), a truncated Groebner
    basis of the ideal of found generators is maintained; a monomial whose
    Reynolds image has nonzero normal form contributes a new generator.
    ``skip_reducible`` skips monomials already in the lead ideal, which does
    not change the output.
    """
    ring = action.ring
    bound = _degree_bound(action, max_degree)
    engine = _IncrementalGroebner(ring)
    found: list[Polynomial] = []
    for d in range(1, bound + 1):
        engine.process_to(d)
        basis = ring.monomial_basis(d)
        covered = bool(found) and all(
            engine.lead_divides(m.exponents) for m in basis
        )
        if covered:
            break
        candidates = (
            [m for m in basis if not engine.lead_divides(m.exponents)]
            if skip_reducible
            else basis
        )
        for m in candidates:
            image = reynolds(action, ring.monomial(m))
            if image.is_zero():
                continue
            if engine.reduce(engine._to_internal(image)):
                invariant = image.monic()
                found.append(invariant)
                engine.add_generator(invariant)
                engine.process_to(d)
    return _sorted_generators(found)


def invariants_linear_algebra(
    action: FiniteGroupAction, max_degree: int | None = None
) -> list[Polynomial]:
    """Minimal invariant generators from per-degree fixed-space bases.

    Needs no Reynolds operator, so it also works when the characteristic
    divides |G|.  Without an explicit bound the default is |G|, which
    requires the closure; if the closure cannot be computed a bound is
    mandatory.
    """
    ring = action.ring
    if max_degree is None:
        try:
            bound = action.order()
        except ClosureCapExceeded as exc:
            raise MissingDegreeBound(
                "no max_degree given and the group closure is unavailable"
            ) from exc
    else:
        bound = _degree_bound(action, max_degree)
    engine = _IncrementalGroebner(ring)
    found: list[Polynomial] = []
    for d in range(1, bound + 1):
        engine.process_to(d)
        basis = ring.monomial_basis(d)
        if bool(found) and all(engine.lead_divides(m.exponents) for m in basis):
            break
        for candidate in invariant_space_basis(action, d):
            if engine.reduce(engine._to_internal(candidate)):
                invariant = candidate.monic()
                found.append(invariant)
                engine.add_generator(invariant)
                engine.process_to(d)
    return _sorted_generators(found)
