"""
Command-line surface.

Subcommands: lift, mt-section, product, symmetrize, kernel, lift-relation,
verify.  Output is deterministic text by default; --format json switches to
the documented JSON schemas with rationals as exact strings.

Exit codes: 0 success, 2 bad input, 3 algebra validation failure,
4 unliftable relation.  verify exits 0 only if every check passes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .braided import (
    SpecValidationError,
    TensorElement,
    algebra_from_json,
    builtin_algebra,
    ensure_valid,
)
from .ideals import (
    NotARelationError,
    UnliftableError,
    kernel_braid_symmetrizer,
    kernel_total_symmetrization,
    lift_relation,
)
from .lifting import lift_descent, mt_section
from .permutations import (
    descent_factorize,
    descent_factorize_alt,
    enumerate_descent_class,
    parse_permutation,
)
from .products import qq_product, total_symmetrize
from .verify import run_suite

EXIT_OK = 0
EXIT_FAILED_CHECKS = 1
EXIT_BAD_INPUT = 2
EXIT_INVALID_ALGEBRA = 3
EXIT_UNLIFTABLE = 4

BUILTIN_NAMES = ("hoffman", "flip", "flip_zero")


def load_algebra(ref: str):
    """Resolve --algebra: a builtin name, an inline JSON object, or a file path."""
    if ref in BUILTIN_NAMES:
        return ensure_valid(builtin_algebra(ref))
    if ref.lstrip().startswith("{"):
        return ensure_valid(algebra_from_json(json.loads(ref)))
    path = Path(ref)
    if not path.exists():
        raise ValueError(f"unknown algebra {ref!r}: not a builtin name or readable file")
    return ensure_valid(algebra_from_json(json.loads(path.read_text())))


def _parse_positions(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    return tuple(int(tok) for tok in text.replace(",", " ").split())


def _parse_tensor_word(text: str) -> TensorElement:
    indices = tuple(int(tok) for tok in text.replace(",", " ").split())
    if any(i < 1 for i in indices):
        raise ValueError("tensor indices must be positive")
    return TensorElement.pure(indices)


def _word_display(perm) -> str:
    word = perm.word()
    return " ".join(f"s{i}" for i in word) if word else "e"


def cmd_lift(args) -> int:
    cuts = _parse_positions(args.descents)
    members = enumerate_descent_class(args.n, cuts, mode="leq")
    factorize = descent_factorize if args.variant == "left" else descent_factorize_alt
    rows = []
    for perm in members:
        factors = factorize(perm, cuts) if cuts else ()
        rows.append(
            {
                "permutation": list(perm.images),
                "word": _word_display(perm),
                "factors": [_word_display(f) for f in factors],
                "lift": lift_descent(perm, cuts, args.variant).to_json(),
            }
        )
    if args.format == "json":
        print(json.dumps({"n": args.n, "descents": sorted(cuts), "rows": rows}, indent=2))
    else:
        for perm in members:
            factors = factorize(perm, cuts) if cuts else ()
            decomposition = "(" + ", ".join(_word_display(f) for f in factors) + ")"
            lifted = lift_descent(perm, cuts, args.variant)
            print(f"{perm!s:<16} {decomposition:<28} {lifted}")
    return EXIT_OK


def cmd_mt_section(args) -> int:
    perm = parse_permutation(args.perm, args.n)
    lifted = mt_section(perm, args.variant)
    if args.format == "json":
        print(json.dumps({"permutation": list(perm.images), "lift": lifted.to_json()}, indent=2))
    else:
        print(lifted)
    return EXIT_OK


def cmd_product(args) -> int:
    spec = load_algebra(args.algebra)
    left = _parse_tensor_word(args.left)
    right = _parse_tensor_word(args.right)
    result = qq_product(spec, left, right)
    if args.format == "json":
        print(json.dumps(result.to_json(), indent=2))
    else:
        print(result)
    return EXIT_OK


def cmd_symmetrize(args) -> int:
    spec = load_algebra(args.algebra)
    result = total_symmetrize(spec, _parse_tensor_word(args.word), args.variant)
    if args.format == "json":
        print(json.dumps(result.to_json(), indent=2))
    else:
        print(result)
    return EXIT_OK


def cmd_kernel(args) -> int:
    spec = load_algebra(args.algebra)
    window = _parse_positions(args.window)
    if args.symmetrizer == "braid":
        basis = kernel_braid_symmetrizer(spec, window, args.degree)
    else:
        basis = kernel_total_symmetrization(spec, window, args.degree)
    if args.format == "json":
        print(json.dumps(basis.to_json(), indent=2))
    else:
        print(f"dimension {basis.dimension}")
        for element in basis.elements:
            print(f"  {element}")
    return EXIT_OK


def cmd_lift_relation(args) -> int:
    spec = load_algebra(args.algebra)
    data = json.loads(Path(args.relation_file).read_text())
    xbar = TensorElement.from_json(data)
    window = _parse_positions(args.window) if args.window else None
    lifted = lift_relation(spec, xbar, window)
    if args.format == "json":
        print(json.dumps(lifted.to_json(), indent=2))
    else:
        print(lifted)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = load_algebra(args.algebra)
    try:
        checks = run_suite(args.suite, spec, args.n)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.format == "json":
        payload = [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
        ]
        print(json.dumps({"suite": args.suite, "checks": payload}, indent=2))
    else:
        for check in checks:
            mark = "PASS" if check.passed else "FAIL"
            suffix = f"  ({check.detail})" if check.detail else ""
            print(f"[{mark}] {check.name}{suffix}")
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILED_CHECKS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasishuffle",
        description="Exact computations with descent lifts and quantum quasi-shuffle products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, algebra=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if algebra:
            p.add_argument("--algebra", default="hoffman", help="builtin name, JSON object, or file path")

    p = sub.add_parser("lift", help="tabulate lifts over a descent class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--descents", required=True, help="comma-separated positions, e.g. 1,3")
    p.add_argument("--variant", choices=("left", "right"), default="left")
    add_common(p, algebra=False)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("mt-section", help="lift a single permutation along its full descent set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--perm", required=True, help='one-line "2,4,1,3" or word "s1 s3" or "e"')
    p.add_argument("--variant", choices=("left", "right"), default="left")
    add_common(p, algebra=False)
    p.set_defaults(func=cmd_mt_section)

    p = sub.add_parser("product", help="quantum quasi-shuffle product of two pure tensors")
    p.add_argument("--left", required=True, help='space- or comma-separated indices, e.g. "1 2"')
    p.add_argument("--right", required=True)
    add_common(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("symmetrize", help="total symmetrization of a pure tensor")
    p.add_argument("--word", required=True)
    p.add_argument("--variant", choices=("left", "right"), default="left")
    add_common(p)
    p.set_defaults(func=cmd_symmetrize)

    p = sub.add_parser("kernel", help="defining-ideal slice over a finite window")
    p.add_argument("--window", required=True, help="comma-separated generator indices")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--symmetrizer", choices=("total", "braid"), default="total")
    add_common(p)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("lift-relation", help="complete a braid-only relation to the deformed algebra")
    p.add_argument("--relation-file", required=True, help="TensorElement JSON file")
    p.add_argument("--window", default="", help="optional generator window")
    add_common(p)
    p.set_defaults(func=cmd_lift_relation)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--n", type=int, default=3)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecValidationError as exc:
        print(f"algebra validation failed: {exc}", file=sys.stderr)
        return EXIT_INVALID_ALGEBRA
    except UnliftableError as exc:
        print(f"unliftable: {exc}", file=sys.stderr)
        return EXIT_UNLIFTABLE
    except NotARelationError as exc:
        print(f"not a relation: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
