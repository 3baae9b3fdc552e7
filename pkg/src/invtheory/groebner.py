"""Buchberger's algorithm with optional degree truncation, normal forms, and
elimination ideals.

Pair selection follows the normal strategy (smallest lcm degree, ties broken
by term order then input index), with Buchberger's coprime-lead and chain
criteria.  Over Q the internal arithmetic is integer pseudo-reduction with
content stripping; results are converted back to monic polynomials at the
end, so the published bases are the unique reduced ones.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InhomogeneousTruncation, OrderMismatch, RingMismatch
from .poly import Polynomial, PolynomialRing, _from_dict
from .orders import TermOrder


@dataclass(frozen=True)
class GroebnerBasis:
    """A (possibly degree-truncated) Groebner basis.

    When ``truncation_degree`` is d, membership tests are only valid for
    polynomials of degree at most d; ``reduced`` marks the unique monic
    inter-reduced form.
    """

    ring: PolynomialRing
    elements: tuple[Polynomial, ...]
    truncation_degree: int | None = None
    reduced: bool = False

    @property
    def order(self) -> TermOrder:
        return self.ring.order

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


# ---------------------------------------------------------------------------
# field-exact reduction (public normal forms)
# ---------------------------------------------------------------------------


def _reduce_exact(f: Polynomial, divisors: list[Polynomial]) -> Polynomial:
    """Full normal form; divisors tried in list order, leftmost reducible
    term first.  Exact field arithmetic."""
    ring = f.ring
    field = ring.field
    key = ring.order.key
    div_info = [
        (g.lead_exponents(), g.lead_coefficient(), g.terms) for g in divisors
    ]
    work = dict(f.terms)
    result: dict[tuple[int, ...], object] = {}
    heap: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    keys: dict[tuple[int, ...], tuple[int, ...]] = {}

    def negkey(exp):
        k = keys.get(exp)
        if k is None:
            k = tuple(-v for v in key(exp))
            keys[exp] = k
        return k

    for exp in work:
        heapq.heappush(heap, (negkey(exp), exp))
    while heap:
        _, exp = heapq.heappop(heap)
        coeff = work.get(exp)
        if coeff is None or field.is_zero(coeff):
            work.pop(exp, None)
            continue
        hit = None
        for lead_exp, lead_coeff, terms in div_info:
            if all(a >= b for a, b in zip(exp, lead_exp)):
                hit = (lead_exp, lead_coeff, terms)
                break
        if hit is None:
            result[exp] = work.pop(exp)
            continue
        lead_exp, lead_coeff, terms = hit
        factor = field.div(coeff, lead_coeff)
        shift = tuple(a - b for a, b in zip(exp, lead_exp))
        for g_exp, g_coeff in terms:
            target = tuple(a + b for a, b in zip(shift, g_exp))
            value = field.sub(work.get(target, field.zero()), field.mul(factor, g_coeff))
            if field.is_zero(value):
                work.pop(target, None)
            else:
                work[target] = value
                heapq.heappush(heap, (negkey(target), target))
    return _from_dict(ring, result)


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Remainder of f on division by the basis (no term divisible by any
    lead).  Raises OrderMismatch if f's ring order differs from the basis."""
    if isinstance(basis, GroebnerBasis):
        if f.ring.order != basis.ring.order:
            raise OrderMismatch(
                f"polynomial order {f.ring.order} vs basis order {basis.ring.order}"
            )
        if f.ring != basis.ring:
            raise RingMismatch(f"{f.ring} vs {basis.ring}")
        if (
            basis.truncation_degree is not None
            and f.degree() > basis.truncation_degree
        ):
            raise ValueError(
                f"degree {f.degree()} exceeds the basis truncation "
                f"{basis.truncation_degree}"
            )
        divisors = list(basis.elements)
    else:
        divisors = [g for g in basis if not g.is_zero()]
        for g in divisors:
            if g.ring != f.ring:
                raise RingMismatch(f"{f.ring} vs {g.ring}")
    return _reduce_exact(f, divisors)


# ---------------------------------------------------------------------------
# internal engine
# ---------------------------------------------------------------------------


class _IncrementalGroebner:
    """Buchberger engine that supports adding generators and raising the
    processed-degree watermark, as King-style algorithms need.

    Over Q, elements are primitive integer-coefficient term dicts with a
    positive lead coefficient; over F_p they are monic mod p.
    """

    def __init__(self, ring: PolynomialRing):
        self.ring = ring
        self.p = ring.field.characteristic() or None
        self.n = ring.n
        self._key_cache: dict[tuple[int, ...], tuple[int, ...]] = {}
        self.elements: list[dict] = []
        self.leads: list[tuple[tuple[int, ...], int]] = []  # (exp, coeff)
        self.heap: list = []   # (lcm degree, key(lcm), i, j)
        self.pending: set[tuple[int, int]] = set()
        self.processed_to: int | None = 0  # None means fully processed

    # -- keys --------------------------------------------------------------

    def _key(self, exp: tuple[int, ...]) -> tuple[int, ...]:
        k = self._key_cache.get(exp)
        if k is None:
            k = self.ring.order.key(exp)
            self._key_cache[exp] = k
        return k

    def _negkey(self, exp: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(-v for v in self._key(exp))

    # -- conversions ----------------------------------------------------------

    def _to_internal(self, f: Polynomial) -> dict:
        if self.p is None:
            denom_lcm = 1
            for _, c in f.terms:
                denom_lcm = denom_lcm * c.denominator // math.gcd(
                    denom_lcm, c.denominator
                )
            work = {e: int(c * denom_lcm) for e, c in f.terms}
            return self._normalize(work)
        return {e: c % self.p for e, c in f.terms if c % self.p}

    def _normalize(self, work: dict) -> dict:
        if not work:
            return work
        if self.p is None:
            content = 0
            for v in work.values():
                content = math.gcd(content, v)
            lead = max(work, key=self._key)
            if work[lead] < 0:
                content = -content
            if content not in (0, 1):
                work = {e: v // content for e, v in work.items()}
        else:
            lead = max(work, key=self._key)
            inv = pow(work[lead], -1, self.p)
            if inv != 1:
                work = {e: v * inv % self.p for e, v in work.items()}
        return work

    def to_polynomial(self, work: dict) -> Polynomial:
        field = self.ring.field
        if self.p is None:
            terms = {e: Fraction(v) for e, v in work.items()}
        else:
            terms = dict(work)
        poly = _from_dict(self.ring, terms)
        return poly.monic() if not poly.is_zero() else poly

    # -- reduction -----------------------------------------------------------

    def _find_divisor(self, exp: tuple[int, ...]):
        for idx, (lead, coeff) in enumerate(self.leads):
            ok = True
            for a, b in zip(exp, lead):
                if a < b:
                    ok = False
                    break
            if ok:
                return idx
        return None

    def reduce(self, work: dict) -> dict:
        """Full normal form in internal arithmetic (result scaled by a
        positive constant over Q)."""
        if not work:
            return work
        p = self.p
        result: dict = {}
        heap: list = []
        for exp in work:
            heapq.heappush(heap, (self._negkey(exp), exp))
        steps = 0
        while heap:
            _, exp = heapq.heappop(heap)
            coeff = work.get(exp)
            if not coeff:
                work.pop(exp, None)
                continue
            idx = self._find_divisor(exp)
            if idx is None:
                result[exp] = work.pop(exp)
                continue
            lead_exp, lead_coeff = self.leads[idx]
            shift = tuple(a - b for a, b in zip(exp, lead_exp))
            g = self.elements[idx]
            if p is None:
                lam = math.gcd(coeff, lead_coeff)
                scale = lead_coeff // lam
                mult = coeff // lam
                if scale != 1:
                    if scale < 0:
                        scale, mult = -scale, -mult
                    for e in work:
                        work[e] *= scale
                    for e in result:
                        result[e] *= scale
                for g_exp, g_coeff in g.items():
                    target = tuple(a + b for a, b in zip(shift, g_exp))
                    value = work.get(target, 0) - mult * g_coeff
                    if value:
                        work[target] = value
                        heapq.heappush(heap, (self._negkey(target), target))
                    else:
                        work.pop(target, None)
                steps += 1
                if steps % 64 == 0:
                    merged_gcd = 0
                    for v in work.values():
                        merged_gcd = math.gcd(merged_gcd, v)
                    for v in result.values():
                        merged_gcd = math.gcd(merged_gcd, v)
                    if merged_gcd > 1:
                        for e in work:
                            work[e] //= merged_gcd
                        for e in result:
                            result[e] //= merged_gcd
            else:
                factor = coeff * pow(lead_coeff, -1, p) % p
                for g_exp, g_coeff in g.items():
                    target = tuple(a + b for a, b in zip(shift, g_exp))
                    value = (work.get(target, 0) - factor * g_coeff) % p
                    if value:
                        work[target] = value
                        heapq.heappush(heap, (self._negkey(target), target))
                    else:
                        work.pop(target, None)
        return result

    # -- basis growth -----------------------------------------------------------

    def lead_divides(self, exp: tuple[int, ...]) -> bool:
        return self._find_divisor(exp) is not None

    def _push_pairs(self, new_index: int) -> None:
        lead_new = self.leads[new_index][0]
        for i in range(new_index):
            lead_i = self.leads[i][0]
            lcm = tuple(max(a, b) for a, b in zip(lead_i, lead_new))
            pair = (i, new_index)
            self.pending.add(pair)
            heapq.heappush(
                self.heap, (sum(lcm), self._key(lcm), i, new_index, lcm)
            )

    def _append(self, work: dict) -> None:
        work = self._normalize(work)
        lead = max(work, key=self._key)
        self.elements.append(work)
        self.leads.append((lead, work[lead]))
        self._push_pairs(len(self.elements) - 1)

    def add_generator(self, f: Polynomial) -> None:
        if f.ring != self.ring:
            raise RingMismatch(f"{f.ring} vs {self.ring}")
        if f.is_zero():
            return
        reduced = self.reduce(self._to_internal(f))
        if reduced:
            self._append(reduced)

    def _spoly(self, i: int, j: int, lcm: tuple[int, ...]) -> dict:
        lead_i, c_i = self.leads[i]
        lead_j, c_j = self.leads[j]
        shift_i = tuple(a - b for a, b in zip(lcm, lead_i))
        shift_j = tuple(a - b for a, b in zip(lcm, lead_j))
        out: dict = {}
        if self.p is None:
            lam = math.gcd(c_i, c_j)
            mult_i, mult_j = c_j // lam, c_i // lam
        else:
            mult_i, mult_j = 1, c_i * pow(c_j, -1, self.p) % self.p
        for e, c in self.elements[i].items():
            target = tuple(a + b for a, b in zip(shift_i, e))
            out[target] = out.get(target, 0) + mult_i * c
        for e, c in self.elements[j].items():
            target = tuple(a + b for a, b in zip(shift_j, e))
            out[target] = out.get(target, 0) - mult_j * c
        if self.p is None:
            return {e: c for e, c in out.items() if c}
        return {e: c % self.p for e, c in out.items() if c % self.p}

    def process_to(self, bound: int | None) -> None:
        """Handle all queued S-pairs with lcm degree <= bound (all of them
        when bound is None)."""
        while self.heap:
            deg, _, i, j, lcm = self.heap[0]
            if bound is not None and deg > bound:
                break
            heapq.heappop(self.heap)
            pair = (i, j)
            if pair not in self.pending:
                continue
            self.pending.discard(pair)
            lead_i = self.leads[i][0]
            lead_j = self.leads[j][0]
            if all(a + b == c for a, b, c in zip(lead_i, lead_j, lcm)):
                continue  # coprime leads
            if self._chain_skip(i, j, lcm):
                continue
            reduced = self.reduce(self._spoly(i, j, lcm))
            if reduced:
                self._append(reduced)
        if bound is None:
            self.processed_to = None
        elif self.processed_to is not None:
            self.processed_to = max(self.processed_to, bound)

    def _chain_skip(self, i: int, j: int, lcm: tuple[int, ...]) -> bool:
        for k in range(len(self.elements)):
            if k == i or k == j:
                continue
            lead_k = self.leads[k][0]
            if all(a <= b for a, b in zip(lead_k, lcm)):
                pair_ik = (min(i, k), max(i, k))
                pair_jk = (min(j, k), max(j, k))
                if pair_ik not in self.pending and pair_jk not in self.pending:
                    return True
        return False

    # -- extraction ----------------------------------------------------------------

    def reduced_elements(self) -> list[Polynomial]:
        """Monic inter-reduced basis, sorted ascending by lead term."""
        order = [
            idx
            for idx in sorted(
                range(len(self.elements)), key=lambda t: self._key(self.leads[t][0])
            )
        ]
        kept: list[int] = []
        kept_leads: list[tuple[int, ...]] = []
        for idx in order:
            lead = self.leads[idx][0]
            if any(
                all(a >= b for a, b in zip(lead, kl)) for kl in kept_leads
            ):
                continue
            kept.append(idx)
            kept_leads.append(lead)
        polys = [self.to_polynomial(self.elements[idx]) for idx in kept]
        final = []
        for i, g in enumerate(polys):
            others = [h for j, h in enumerate(polys) if j != i]
            final.append(_reduce_exact(g, others).monic() if others else g)
        final.sort(key=lambda g: self._key(g.lead_exponents()))
        return final


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------


def buchberger(
    polys,
    order: TermOrder | None = None,
    truncation_degree: int | None = None,
) -> GroebnerBasis:
    """Groebner basis of the given polynomials.

    With ``truncation_degree`` d (homogeneous input only), S-pairs above
    degree d are dropped; the result decides ideal membership up to degree d.
    """
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        raise ValueError("need at least one nonzero polynomial")
    ring = polys[0].ring
    for f in polys[1:]:
        if f.ring != ring:
            raise RingMismatch(f"{f.ring} vs {ring}")
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        polys = [f.convert(ring) for f in polys]
    if truncation_degree is not None:
        for f in polys:
            if not f.is_homogeneous():
                raise InhomogeneousTruncation(
                    f"cannot truncate: {f} is not homogeneous"
                )
    engine = _IncrementalGroebner(ring)
    for f in polys:
        engine.add_generator(f)
    engine.process_to(truncation_degree)
    elements = engine.reduced_elements()
    return GroebnerBasis(
        ring=ring,
        elements=tuple(elements),
        truncation_degree=truncation_degree,
        reduced=True,
    )


def elimination_ideal(polys, eliminate) -> list[Polynomial]:
    """Generators of ideal(polys) intersected with the subring on the
    variables not named in ``eliminate``.

    The variables are reordered internally so the eliminated block leads an
    elimination order; results live in a ring on the remaining variables.
    """
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        return []
    ring = polys[0].ring
    eliminate = set(eliminate)
    unknown = eliminate - set(ring.names)
    if unknown:
        raise ValueError(f"not ring variables: {sorted(unknown)}")
    head = [name for name in ring.names if name in eliminate]
    tail = [name for name in ring.names if name not in eliminate]
    k = len(head)
    work_ring = PolynomialRing(
        ring.field, tuple(head + tail), TermOrder.elimination(k)
    )
    position = {name: i for i, name in enumerate(ring.names)}
    perm = [position[name] for name in head + tail]

    def permute(f: Polynomial, target: PolynomialRing, mapping) -> Polynomial:
        return target.from_terms(
            {tuple(e[i] for i in mapping): c for e, c in f.terms}
        )

    basis = buchberger([permute(f, work_ring, perm) for f in polys])
    target_ring = PolynomialRing(ring.field, tuple(tail), TermOrder.grevlex())
    survivors = []
    for g in basis.elements:
        if all(all(e[i] == 0 for i in range(k)) for e, _ in g.terms):
            survivors.append(
                target_ring.from_terms({e[k:]: c for e, c in g.terms})
            )
    return survivors
