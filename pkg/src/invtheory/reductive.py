"""Invariants of linearly reductive groups presented by equations.

The group is the vanishing locus of an ideal in Q[z_1..z_m] and acts on
Q[x_1..x_n] through an n x n matrix of polynomials in the z's: the variable
x_i is sent to the linear form given by row i.  Two routes to the invariants
are provided.  Elimination of the group variables from the graph of the
action yields the Hilbert ideal; a degree-by-degree linear solve modulo the
group ideal yields an invariant vector-space basis, and sweeping degrees up
to the top Hilbert-ideal degree produces minimal algebra generators.
"""

from __future__ import annotations

from .errors import (
    DimensionMismatch,
    IncompleteGeneration,
    NonHomogeneousResult,
    NonZeroCharacteristic,
    RingMismatch,
)
from .groebner import (
    GroebnerBasis,
    _IncrementalGroebner,
    buchberger,
    elimination_ideal,
    normal_form,
)
from .linalg import nullspace
from .poly import Polynomial, PolynomialRing, fresh_names, polynomial_ring


class LinearlyReductiveAction:
    """Group subscheme V(group_ideal) of affine m-space acting on the target
    ring by x_i -> sum_j matrix[i][j] * x_j."""

    def __init__(self, group_ring: PolynomialRing, group_ideal, action_matrix,
                 target_ring: PolynomialRing):
        if not (group_ring.field.is_rationals and target_ring.field.is_rationals):
            raise NonZeroCharacteristic(
                "linearly reductive actions require rational coefficients"
            )
        if set(group_ring.names) & set(target_ring.names):
            raise ValueError("group and target rings must use distinct names")
        self.group_ring = group_ring
        self.target_ring = target_ring
        self.group_ideal = tuple(
            self._coerce(group_ring, f) for f in group_ideal
        )
        if not self.group_ideal:
            raise ValueError("group ideal needs at least one generator")
        if any(f.is_zero() for f in self.group_ideal):
            raise ValueError("group ideal generators must be nonzero")
        n = target_ring.n
        rows = tuple(tuple(row) for row in action_matrix)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise DimensionMismatch(
                f"action matrix must be {n}x{n} over the group ring"
            )
        self.matrix = tuple(
            tuple(self._coerce(group_ring, entry) for entry in row)
            for row in rows
        )
        self._group_basis: GroebnerBasis | None = None
        self._expansion_cache = None

    @staticmethod
    def _coerce(ring: PolynomialRing, value) -> Polynomial:
        if isinstance(value, str):
            return ring.parse(value)
        if isinstance(value, Polynomial):
            if value.ring != ring:
                raise RingMismatch("entry lives in the wrong ring")
            return value
        return ring.constant(ring.field.coerce(value))

    def group_groebner_basis(self) -> GroebnerBasis:
        if self._group_basis is None:
            self._group_basis = buchberger(list(self.group_ideal))
        return self._group_basis

    def __repr__(self) -> str:
        return (
            f"LinearlyReductiveAction({self.group_ring} -> {self.target_ring}, "
            f"{len(self.group_ideal)} group relations)"
        )


def _embed(f: Polynomial, ring: PolynomialRing, offset: int) -> Polynomial:
    pad = ring.n - offset - f.ring.n
    acc = {
        (0,) * offset + exp + (0,) * pad: coeff for exp, coeff in f.terms
    }
    return ring.from_terms(acc)


def _minimal_generators(polys: list[Polynomial]) -> list[Polynomial]:
    """Drop homogeneous generators lying in the ideal of the others; greedy
    by ascending degree, so the kept set is degreewise as small as possible."""
    if not polys:
        return []
    ring = polys[0].ring
    ordered = sorted(
        polys, key=lambda f: (f.degree(), ring.order.key(f.lead_exponents()))
    )
    engine = _IncrementalGroebner(ring)
    kept: list[Polynomial] = []
    for f in ordered:
        if engine.elements:
            engine.process_to(f.degree())
            if not engine.reduce(engine._to_internal(f)):
                continue
        kept.append(f.monic())
        engine.add_generator(f)
    return kept


def hilbert_ideal(action: LinearlyReductiveAction) -> list[Polynomial]:
    """Minimal homogeneous generators of the ideal of the target ring spanned
    by all positive-degree invariants.

    Eliminates the group variables from the graph relations
    y_i - sum_j matrix[i][j] x_j together with the group ideal, then sets
    every y to zero.  The generators need not be invariant themselves.
    """
    gring, tring = action.group_ring, action.target_ring
    m, n = gring.n, tring.n
    ynames = fresh_names(
        n, set(gring.names) | set(tring.names), ("y", "w", "v", "h")
    )
    combined = polynomial_ring(
        tring.field, tuple(gring.names) + tuple(tring.names) + ynames
    )
    relations = [_embed(f, combined, 0) for f in action.group_ideal]
    for i in range(n):
        rel = combined.variable(m + n + i)
        for j in range(n):
            entry = action.matrix[i][j]
            if entry.is_zero():
                continue
            rel = rel - _embed(entry, combined, 0) * combined.variable(m + j)
        relations.append(rel)
    eliminated = elimination_ideal(relations, eliminate=gring.names)
    projected: list[Polynomial] = []
    for g in eliminated:
        acc: dict = {}
        for exp, coeff in g.terms:
            if any(exp[n:]):
                continue
            acc[exp[:n]] = acc.get(exp[:n], tring.field.zero()) + coeff
        h = tring.from_terms(acc)
        if h.is_zero():
            continue
        if not h.is_homogeneous():
            raise NonHomogeneousResult(
                "Hilbert ideal generator is not homogeneous; "
                "the action matrix does not preserve the grading"
            )
        projected.append(h)
    return _minimal_generators(projected)


def _variable_images(action: LinearlyReductiveAction):
    """Combined ring Q[z, x] together with the image of each x_i under
    the generic group element."""
    if action._expansion_cache is not None:
        return action._expansion_cache
    gring, tring = action.group_ring, action.target_ring
    m, n = gring.n, tring.n
    combined = polynomial_ring(
        tring.field, tuple(gring.names) + tuple(tring.names)
    )
    images = []
    for i in range(n):
        img = combined.zero()
        for j in range(n):
            entry = action.matrix[i][j]
            if entry.is_zero():
                continue
            img = img + _embed(entry, combined, 0) * combined.variable(m + j)
        images.append(img)
    action._expansion_cache = (combined, images)
    return action._expansion_cache


def reductive_invariant_basis(action: LinearlyReductiveAction, degree: int) -> list[Polynomial]:
    """Reduced-echelon basis of the invariant polynomials of the given degree.

    Expands sigma(m) - m for every degree-`degree` monomial m, reduces each
    x-monomial's z-coefficient modulo the group ideal, and solves the linear
    system expressing that every surviving z-monomial coefficient vanishes.
    """
    gring, tring = action.group_ring, action.target_ring
    m = gring.n
    monos = tring.monomial_basis(degree)
    if not monos:
        return []
    group_basis = action.group_groebner_basis()
    combined, images = _variable_images(action)
    power_cache: dict[tuple[int, int], Polynomial] = {}

    def image_power(i: int, e: int) -> Polynomial:
        got = power_cache.get((i, e))
        if got is None:
            got = images[i] ** e
            power_cache[(i, e)] = got
        return got

    rows_map: dict = {}
    zero_z = (0,) * m
    for col, mono in enumerate(monos):
        expansion = combined.one()
        for i, e in enumerate(mono.exponents):
            if e:
                expansion = expansion * image_power(i, e)
        buckets: dict = {}
        for exp, coeff in expansion.terms:
            buckets.setdefault(exp[m:], {})[exp[:m]] = coeff
        own = buckets.setdefault(mono.exponents, {})
        own[zero_z] = own.get(zero_z, tring.field.zero()) - tring.field.one()
        for xpart, zdict in buckets.items():
            zpoly = gring.from_terms(zdict)
            if zpoly.is_zero():
                continue
            residue = normal_form(zpoly, group_basis)
            for zexp, coeff in residue.terms:
                rows_map.setdefault((xpart, zexp), {})[col] = coeff
    width = len(monos)
    rows = []
    for key in sorted(rows_map):
        entries = rows_map[key]
        rows.append(
            [entries.get(col, tring.field.zero()) for col in range(width)]
        )
    kernel = nullspace(rows, width, tring.field)
    basis = []
    for vec in kernel:
        acc: dict = {}
        for col, coeff in enumerate(vec):
            if not tring.field.is_zero(coeff):
                acc[monos[col].exponents] = coeff
        basis.append(tring.from_terms(acc))
    return basis


def reductive_invariants(action: LinearlyReductiveAction) -> list[Polynomial]:
    """Minimal invariant homogeneous generators of the Hilbert ideal, which
    are likewise minimal algebra generators of the ring of invariants.

    Sweeps degrees up to the largest Hilbert-ideal generator degree, keeping
    invariant basis elements independent modulo the ideal of those already
    accepted, and stops as soon as the accepted set generates the Hilbert
    ideal.
    """
    ideal = hilbert_ideal(action)
    if not ideal:
        return []
    top = max(h.degree() for h in ideal)
    engine = _IncrementalGroebner(action.target_ring)
    found: list[Polynomial] = []
    for d in range(1, top + 1):
        engine.process_to(d)
        for f in reductive_invariant_basis(action, d):
            if engine.elements and not engine.reduce(engine._to_internal(f)):
                continue
            found.append(f)
            engine.add_generator(f)
            engine.process_to(d)
        if found:
            engine.process_to(top)
            if all(
                not engine.reduce(engine._to_internal(h)) for h in ideal
            ):
                return found
    raise IncompleteGeneration(
        f"invariants through degree {top} do not generate the Hilbert ideal; "
        "the action is not a valid linearly reductive group action"
    )
