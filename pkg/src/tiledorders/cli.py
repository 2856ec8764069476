"""``tiledorders`` command line tool.

Every subcommand prints one JSON object with sorted keys.  Exit codes: 0 on
success, 1 for a domain error (invalid order, non-prime n, ...), 2 for usage,
I/O or parse errors.
"""
import argparse
import json
import sys
import warnings

from .abgroup import FinAbGroup
from .apartment import ApartmentScene, render_svg
from .classes import (
    default_workers,
    normalizer,
    oracle_reflection_class_count,
    are_isomorphic,
    reflection_class_count,
    reflection_class_count_prime,
    reflection_equivalent,
)
from .core import six_tuple, structural_invariants, validate, vertex_types
from .errors import RingConditionViolated, NonzeroDiagonal, TiledOrderError
from .perm import format_cycles
from .typenumber import GlobalProblem, TPrime, prime_degree_type_number, type_number


class InputError(Exception):
    """Unreadable or structurally malformed input file (exit code 2)."""


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def load_order(path):
    """Parse an order file ``{"n": int, "exponent_matrix": [[int]], "label"?: str}``."""
    data = _load_json(path)
    try:
        n, mu = data["n"], data["exponent_matrix"]
    except (KeyError, TypeError):
        raise InputError(f"{path}: expected keys 'n' and 'exponent_matrix'") from None
    if not isinstance(n, int) or not isinstance(mu, list) or not all(
        isinstance(r, list) and all(isinstance(x, int) for x in r) for r in mu
    ):
        raise InputError(f"{path}: 'n' must be an int and 'exponent_matrix' a list of int rows")
    return validate(n, mu), data.get("label")


def load_problem(path):
    data = _load_json(path)
    try:
        group = FinAbGroup(tuple(data["class_group"]["invariant_factors"]))
        primes = [
            TPrime(str(tp["label"]), int(tp["d"]), tuple(tp["vector"]), tp.get("kind", "q_class"))
            for tp in data.get("t_primes", [])
        ]
        return GlobalProblem(int(data["degree"]), group, primes, tuple(data.get("omega", [])))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, TiledOrderError):
            raise
        raise InputError(f"{path}: malformed problem file ({exc})") from None


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def cmd_validate(args):
    try:
        load_order(args.path)
    except RingConditionViolated as exc:
        _emit({"valid": False, "error": "RingConditionViolated", "triple": list(exc.triple)})
        return 1
    except NonzeroDiagonal as exc:
        _emit({"valid": False, "error": "NonzeroDiagonal", "index": exc.i})
        return 1
    except TiledOrderError as exc:
        _emit({"valid": False, "error": type(exc).__name__, "message": str(exc)})
        return 1
    _emit({"valid": True})
    return 0


def cmd_classes(args):
    E, label = load_order(args.path)
    if args.prime:
        d, method = reflection_class_count_prime(E), "prime"
    elif args.oracle:
        d, method = oracle_reflection_class_count(E), "oracle"
    else:
        d, method = reflection_class_count(E, workers=default_workers()), "divisor-search"
    out = {"d": d, "method": method, "types": list(vertex_types(E))}
    if E.n == 3:
        out["invariants_6tuple"] = list(six_tuple(structural_invariants(E)))
    if args.normalizer:
        data = normalizer(E)
        out["H"] = [format_cycles(s) for s in data.h]
        out["xi_types"] = list(data.xi_types)
        out["norm_exponent"] = data.d
    if label is not None:
        out["label"] = label
    _emit(out)
    return 0


def cmd_isomorphic(args):
    A, _ = load_order(args.path_a)
    B, _ = load_order(args.path_b)
    sigma = (reflection_equivalent if args.reflection else are_isomorphic)(A, B)
    _emit({
        "isomorphic": sigma is not None,
        "relation": "reflection" if args.reflection else "isomorphism",
        "sigma": None if sigma is None else format_cycles(sigma),
    })
    return 0


def cmd_type_number(args):
    P = load_problem(args.path)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report = (prime_degree_type_number if args.prime else type_number)(P)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _emit({
        "cl_T_hat": list(report.cl_T_hat.invariant_factors),
        "type_number": report.type_number,
        "max_bound": report.max_bound,
    })
    return 0


def cmd_plot(args):
    orders = [load_order(p)[0] for p in args.paths]
    svg = render_svg(ApartmentScene(tuple(orders), labels=not args.no_labels))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="tiledorders", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an order file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classes", help="number of reflection classes d")
    p.add_argument("path")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--prime", action="store_true", help="use the prime-degree shortcut")
    g.add_argument("--oracle", action="store_true", help="exhaustive S_n enumeration")
    p.add_argument("--normalizer", action="store_true", help="also list H and the lift types")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("isomorphic", help="isomorphism or reflection equivalence of two orders")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--reflection", action="store_true")
    p.set_defaults(func=cmd_isomorphic)

    p = sub.add_parser("type-number", help="global type number from class-group data")
    p.add_argument("path")
    p.add_argument("--prime", action="store_true", help="prime-degree variant")
    p.set_defaults(func=cmd_type_number)

    p = sub.add_parser("plot", help="SVG of degree-3 orders in the apartment")
    p.add_argument("paths", nargs="+")
    p.add_argument("--out", "-o")
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TiledOrderError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
