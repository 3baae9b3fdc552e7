"""Batch front end: read a JSON action description, run one computation,
print the result as text or JSON.

Exit codes: 0 success, 1 malformed input or flags, 2 domain error raised by
the underlying computation (the error class name is printed).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .diagonal import DiagonalAction
from .errors import InvariantTheoryError
from .fields import Field, QQ, prime_field
from .finite import FiniteGroupAction, molien_series, permutation_matrix
from .poly import format_polynomial, polynomial_ring
from .ratfunc import RationalFunction, UniPoly
from .reductive import LinearlyReductiveAction, hilbert_ideal
from .rings import (
    RingOfInvariants,
    defining_ideal,
    hilbert_series_rewrite,
    invariant_ring,
    verify_generators,
)

SUBCOMMANDS = (
    "invariants",
    "molien",
    "hilbert-ideal",
    "defining-ideal",
    "hilbert-series",
    "verify",
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="invariant-ring",
        description="Compute generators of rings of invariants described "
        "by a JSON action file.",
    )
    sub = parser.add_subparsers(dest="command", metavar="subcommand")
    for name, text in (
        ("invariants", "minimal generators of the invariant ring"),
        ("molien", "Molien series of a finite action over Q"),
        ("hilbert-ideal", "generators of the Hilbert ideal"),
        ("defining-ideal", "relations among the invariant generators"),
        ("hilbert-series", "Molien numerator against supplied degrees"),
        ("verify", "per-degree dimension check of the generators"),
    ):
        cmd = sub.add_parser(name, help=text)
        cmd.add_argument("input", help="action description JSON file")
        cmd.add_argument(
            "--output", choices=("json", "text"), default="text",
            help="output format (default text)",
        )
        if name in ("invariants", "defining-ideal", "verify", "hilbert-ideal"):
            cmd.add_argument(
                "--algorithm", choices=("king", "linear"), default=None,
                help="finite-group algorithm (default king)",
            )
            cmd.add_argument(
                "--literal", action="store_true",
                help="literal invariance over F_q for diagonal actions "
                "(q from the literalQ field)",
            )
        if name in ("invariants", "defining-ideal", "verify", "hilbert-ideal"):
            cmd.add_argument(
                "--max-degree", type=int, default=None,
                help="degree cap (finite actions; verify report depth, "
                "default 6)",
            )
        if name == "hilbert-series":
            cmd.add_argument(
                "--degrees", required=True,
                help="comma-separated positive integers, e.g. 1,2,3,4",
            )
    return parser


# ---------------------------------------------------------------------------
# input file
# ---------------------------------------------------------------------------


def _fail(field: str, problem: str):
    raise _UsageError(f"{field}: {problem}")


def _load_field(data: dict) -> Field:
    spec = data.get("field")
    if not isinstance(spec, dict) or "type" not in spec:
        _fail("field", 'expected {"type": "Q"} or {"type": "Fp", "p": <prime>}')
    if spec["type"] == "Q":
        return QQ
    if spec["type"] == "Fp":
        p = spec.get("p")
        if not isinstance(p, int):
            _fail("field.p", "a prime integer is required")
        try:
            return prime_field(p)
        except ValueError as exc:
            _fail("field.p", str(exc))
    _fail("field.type", f"unknown field type {spec['type']!r}")


def _load_variables(data: dict) -> tuple[str, ...]:
    names = data.get("variables")
    if (
        not isinstance(names, list)
        or not names
        or not all(isinstance(v, str) for v in names)
    ):
        _fail("variables", "expected a non-empty list of variable names")
    return tuple(names)


def _finite_generator(ring, entry, index: int):
    label = f"action.generators[{index}]"
    if isinstance(entry, str):
        try:
            return permutation_matrix(entry)
        except InvariantTheoryError as exc:
            _fail(label, str(exc))
    if not isinstance(entry, list):
        _fail(label, "expected a matrix or a one-line permutation string")
    n = ring.n
    if len(entry) != n or any(
        not isinstance(row, list) or len(row) != n for row in entry
    ):
        _fail(label, f"matrix must be {n}x{n} to act on {n} variables")
    rows = []
    for row in entry:
        out = []
        for value in row:
            try:
                out.append(ring.field.coerce(value))
            except (InvariantTheoryError, ValueError, TypeError) as exc:
                _fail(label, f"bad entry {value!r}: {exc}")
        rows.append(tuple(out))
    return tuple(rows)


def _load_action(data: dict):
    """Build the action object; returns (action, kind, literal_q)."""
    field = _load_field(data)
    names = _load_variables(data)
    spec = data.get("action")
    if not isinstance(spec, dict) or "kind" not in spec:
        _fail("action", "expected an object with a 'kind' key")
    kind = spec["kind"]
    ring = polynomial_ring(field, names)
    if kind == "finite":
        gens = spec.get("generators")
        if not isinstance(gens, list) or not gens:
            _fail("action.generators", "expected a non-empty list of matrices")
        mats = [_finite_generator(ring, g, i) for i, g in enumerate(gens)]
        try:
            return FiniteGroupAction(ring, mats), kind, None
        except InvariantTheoryError as exc:
            _fail("action.generators", str(exc))
    if kind == "diagonal":
        r = spec.get("torusRank", 0)
        orders = spec.get("cyclicOrders", [])
        weights = spec.get("weights")
        if not isinstance(r, int) or r < 0:
            _fail("action.torusRank", "expected a non-negative integer")
        if not isinstance(orders, list) or not all(
            isinstance(d, int) and d >= 1 for d in orders
        ):
            _fail("action.cyclicOrders", "expected a list of positive integers")
        if not isinstance(weights, list) or not all(
            isinstance(row, list) and all(isinstance(w, int) for w in row)
            for row in weights
        ):
            _fail("action.weights", "expected a matrix of integers")
        literal_q = spec.get("literalQ")
        if literal_q is not None and (
            not isinstance(literal_q, int) or literal_q < 2
        ):
            _fail("action.literalQ", "expected a prime power >= 2")
        try:
            return DiagonalAction(ring, r, orders, weights), kind, literal_q
        except InvariantTheoryError as exc:
            _fail("action.weights", str(exc))
    if kind == "reductive":
        gvars = spec.get("groupVariables")
        if (
            not isinstance(gvars, list)
            or not gvars
            or not all(isinstance(v, str) for v in gvars)
        ):
            _fail("action.groupVariables", "expected a list of variable names")
        group_ring = polynomial_ring(field, tuple(gvars))
        ideal = spec.get("groupIdeal")
        if not isinstance(ideal, list) or not ideal:
            _fail("action.groupIdeal", "expected a non-empty list of polynomials")
        matrix = spec.get("actionMatrix")
        n = len(names)
        if not isinstance(matrix, list) or len(matrix) != n or any(
            not isinstance(row, list) or len(row) != n for row in matrix
        ):
            _fail("action.actionMatrix", f"expected an {n}x{n} matrix of polynomials")
        try:
            parsed_ideal = [group_ring.parse(s) for s in ideal]
        except InvariantTheoryError as exc:
            _fail("action.groupIdeal", str(exc))
        try:
            parsed_matrix = [
                [group_ring.parse(s) for s in row] for row in matrix
            ]
        except InvariantTheoryError as exc:
            _fail("action.actionMatrix", str(exc))
        try:
            action = LinearlyReductiveAction(
                group_ring, parsed_ideal, parsed_matrix, ring
            )
        except (InvariantTheoryError, ValueError) as exc:
            _fail("action", str(exc))
        return action, kind, None
    _fail("action.kind", f"unknown kind {kind!r}")


def _read_input(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror or exc}")
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise _UsageError(f"{path}: top level must be a JSON object")
    return _load_action(data)


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _factor_into_cyclotomic_products(poly: UniPoly):
    """Multiset {a: e} with poly = prod (1 - T^a)^e, or None."""
    if poly.is_zero():
        return None

    def search(work: UniPoly, cap: int):
        if work.degree() == 0:
            return {} if work.coefficient(0) == 1 else None
        for a in range(min(cap, work.degree()), 0, -1):
            quotient, remainder = divmod(work, UniPoly.one_minus_t_power(a))
            if remainder.is_zero():
                sub = search(quotient, a)
                if sub is not None:
                    sub[a] = sub.get(a, 0) + 1
                    return sub
        return None

    return search(poly, poly.degree())


def _format_factored(factors: dict) -> str:
    parts = []
    for a in sorted(factors):
        base = "(1-T)" if a == 1 else f"(1-T^{a})"
        e = factors[a]
        parts.append(base if e == 1 else f"{base}^{e}")
    return "".join(parts)


def _series_strings(series: RationalFunction) -> dict:
    num, den = series.num, series.den
    num_str = str(num)
    factors = _factor_into_cyclotomic_products(den)
    if den.degree() == 0 and den.coefficient(0) == 1:
        text = num_str if num.degree() == 0 else f"({num_str})"
    else:
        den_str = _format_factored(factors) if factors else f"({den})"
        head = num_str if num_str == "1" else f"({num_str})"
        text = f"{head}/{den_str}"
    return {
        "numerator": num_str,
        "denominator": str(den),
        "series": text,
    }


def _emit(payload: dict, text_lines: list[str], mode: str, elapsed: float) -> None:
    if mode == "json":
        payload["elapsed_seconds"] = round(elapsed, 6)
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)
        print(f"elapsed: {elapsed:.3f}s")


def _generator_payload(inv: RingOfInvariants) -> tuple[dict, list[str]]:
    strings = [format_polynomial(f) for f in inv.generators]
    degrees = [f.degree() for f in inv.generators]
    payload = {
        "method": inv.method,
        "count": len(strings),
        "degrees": degrees,
        "generators": strings,
    }
    lines = [f"generators ({len(strings)}), method {inv.method}:"]
    lines += [f"  {s}" for s in strings]
    lines.append("degrees: " + " ".join(str(d) for d in degrees))
    return payload, lines


# ---------------------------------------------------------------------------
# subcommand drivers
# ---------------------------------------------------------------------------


def _algorithm_name(args, kind: str) -> str:
    if getattr(args, "algorithm", None) is None:
        return "king"
    if kind != "finite":
        raise _UsageError("--algorithm applies only to finite actions")
    return args.algorithm


def _resolve_literal(args, kind: str, literal_q):
    if not getattr(args, "literal", False):
        return None
    if kind != "diagonal":
        raise _UsageError("--literal applies only to diagonal actions")
    if literal_q is None:
        raise _UsageError("action.literalQ: required when --literal is given")
    return literal_q


def _compute_ring(args, action, kind: str, literal_q,
                  use_max_degree: bool = True) -> RingOfInvariants:
    algorithm = _algorithm_name(args, kind)
    q = _resolve_literal(args, kind, literal_q)
    max_degree = getattr(args, "max_degree", None) if use_max_degree else None
    if max_degree is not None and kind != "finite":
        raise _UsageError("--max-degree applies only to finite actions")
    return invariant_ring(
        action,
        algorithm=algorithm,
        max_degree=max_degree,
        literal_q=q,
    )


def _cmd_invariants(args, action, kind, literal_q, elapsed_from):
    inv = _compute_ring(args, action, kind, literal_q)
    payload, lines = _generator_payload(inv)
    payload = {"command": "invariants", "kind": kind, **payload}
    _emit(payload, lines, args.output, time.perf_counter() - elapsed_from)
    return 0


def _cmd_molien(args, action, kind, literal_q, elapsed_from):
    if kind != "finite":
        raise _UsageError("molien requires a finite action")
    series = molien_series(action)
    body = _series_strings(series)
    payload = {"command": "molien", "kind": kind, **body}
    lines = [body["series"]]
    _emit(payload, lines, args.output, time.perf_counter() - elapsed_from)
    return 0


def _cmd_hilbert_ideal(args, action, kind, literal_q, elapsed_from):
    if kind == "reductive":
        gens = hilbert_ideal(action)
        strings = [format_polynomial(f) for f in gens]
        payload = {
            "command": "hilbert-ideal",
            "kind": kind,
            "count": len(strings),
            "degrees": [f.degree() for f in gens],
            "generators": strings,
        }
        lines = [f"hilbert ideal ({len(strings)} generators):"]
        lines += [f"  {s}" for s in strings]
    else:
        # for finite and diagonal actions the minimal invariant generators
        # also generate the Hilbert ideal
        inv = _compute_ring(args, action, kind, literal_q)
        payload, lines = _generator_payload(inv)
        payload = {"command": "hilbert-ideal", "kind": kind, **payload}
    _emit(payload, lines, args.output, time.perf_counter() - elapsed_from)
    return 0


def _cmd_defining_ideal(args, action, kind, literal_q, elapsed_from):
    inv = _compute_ring(args, action, kind, literal_q)
    relations = defining_ideal(inv)
    strings = [format_polynomial(f) for f in relations]
    relation_ring = relations[0].ring if relations else None
    payload = {
        "command": "defining-ideal",
        "kind": kind,
        "generators": [format_polynomial(f) for f in inv.generators],
        "relation_variables": list(relation_ring.names) if relation_ring else [],
        "count": len(strings),
        "relations": strings,
    }
    lines = [f"relations ({len(strings)}):"]
    lines += [f"  {s}" for s in strings] if strings else ["  (none)"]
    _emit(payload, lines, args.output, time.perf_counter() - elapsed_from)
    return 0


def _cmd_hilbert_series(args, action, kind, literal_q, elapsed_from):
    if kind != "finite":
        raise _UsageError("hilbert-series requires a finite action")
    try:
        degrees = [int(part) for part in args.degrees.split(",") if part]
    except ValueError:
        raise _UsageError("--degrees: expected comma-separated integers")
    if not degrees or any(d < 1 for d in degrees):
        raise _UsageError("--degrees: expected positive integers")
    inv = invariant_ring(action, algorithm="king")
    numerator = hilbert_series_rewrite(inv, degrees)
    payload = {
        "command": "hilbert-series",
        "kind": kind,
        "degrees": degrees,
        "numerator": str(numerator),
    }
    lines = [str(numerator)]
    _emit(payload, lines, args.output, time.perf_counter() - elapsed_from)
    return 0


def _cmd_verify(args, action, kind, literal_q, elapsed_from):
    inv = _compute_ring(args, action, kind, literal_q, use_max_degree=False)
    depth = args.max_degree if args.max_degree is not None else 6
    if depth < 1:
        raise _UsageError("--max-degree: expected a positive integer")
    report = verify_generators(inv, depth)
    records = [
        {
            "degree": r.degree,
            "expected": r.expected,
            "actual": r.actual,
            "pass": r.passed,
        }
        for r in report
    ]
    all_passed = all(r.passed for r in report)
    payload = {
        "command": "verify",
        "kind": kind,
        "max_degree": depth,
        "report": records,
        "all_passed": all_passed,
    }
    lines = [
        f"degree {r.degree}: expected {r.expected} actual {r.actual} "
        + ("pass" if r.passed else "FAIL")
        for r in report
    ]
    lines.append("all passed" if all_passed else "FAILED")
    _emit(payload, lines, args.output, time.perf_counter() - elapsed_from)
    return 0 if all_passed else 2


_DRIVERS = {
    "invariants": _cmd_invariants,
    "molien": _cmd_molien,
    "hilbert-ideal": _cmd_hilbert_ideal,
    "defining-ideal": _cmd_defining_ideal,
    "hilbert-series": _cmd_hilbert_series,
    "verify": _cmd_verify,
}


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError("a subcommand is required "
                              f"(one of: {', '.join(SUBCOMMANDS)})")
        started = time.perf_counter()
        action, kind, literal_q = _read_input(args.input)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return _DRIVERS[args.command](args, action, kind, literal_q, started)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantTheoryError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run_command(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
