"""
Named verification suites shared by the command-line surface and the tests.

Each suite returns a list of Check records; a suite passes when every check
does.  Suites that exercise an algebra take the spec to probe; the purely
combinatorial ones ignore it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .braided import BraidedAlgebraSpec, TensorElement, act, delete_units, gvb_relations
from .ideals import graded_product_check
from .lifting import lift_descent_sum, lift_shuffle, total_symmetrization_element
from .permutations import (
    Permutation,
    all_permutations,
    bubble_decompose,
    descent_class_order,
    descent_classes,
    enumerate_descent_class,
    enumerate_shuffles,
    partial_symmetrizer,
)
from .products import qq_product, quantum_shuffle_product, shuffle_product
from .words import GvbWord, project_alpha, project_beta, tits_section


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def _probe_tensors(spec: BraidedAlgebraSpec, rank: int, with_unit: bool = True):
    basis = ((0,) if with_unit else ()) + spec.probe_indices()
    return [TensorElement.pure(word) for word in itertools.product(basis, repeat=rank)]


def suite_gvb_relations(spec: BraidedAlgebraSpec, ranks=(3, 4)) -> list[Check]:
    """All word-monoid defining relations as operator identities."""
    checks = []
    for n in ranks:
        probes = _probe_tensors(spec, n)
        for name, lhs, rhs in gvb_relations(n):
            witness = next(
                (t for t in probes if act(spec, lhs, t) != act(spec, rhs, t)), None
            )
            checks.append(
                Check(
                    f"rank {n}: {name} ({lhs} = {rhs})",
                    witness is None,
                    "" if witness is None else f"fails on {witness}",
                )
            )
    return checks


def suite_ex3(spec: BraidedAlgebraSpec) -> list[Check]:
    """The two rank-3 operator coincidences behind the variant agreement."""
    pairs = (("b2 x1", "b1 x2 b1 b2"), ("b1 x2 x1", "b1 x2 b1 x2"))
    probes = _probe_tensors(spec, 3)
    checks = []
    for lhs_text, rhs_text in pairs:
        lhs = GvbWord.parse(3, lhs_text)
        rhs = GvbWord.parse(3, rhs_text)
        witness = next((t for t in probes if act(spec, lhs, t) != act(spec, rhs, t)), None)
        checks.append(
            Check(
                f"operators {lhs_text} = {rhs_text}",
                witness is None,
                "" if witness is None else f"fails on {witness}",
            )
        )
    return checks


def suite_variant_agreement(spec: BraidedAlgebraSpec, n: int, two_descents_only: bool = False) -> list[Check]:
    """Left and right lifted class sums act identically; words may differ."""
    checks = []
    positions = [
        I
        for r in range(1, n)
        for I in itertools.combinations(range(1, n), r)
        if not two_descents_only or r == 2
    ]
    probes = _probe_tensors(spec, n)
    for cuts in positions:
        left = lift_descent_sum(n, cuts, "left")
        right = lift_descent_sum(n, cuts, "right")
        witness = next(
            (
                t
                for t in probes
                if delete_units(act(spec, left, t)) != delete_units(act(spec, right, t))
            ),
            None,
        )
        checks.append(
            Check(
                f"variants agree on descent set {set(cuts)} in rank {n}",
                witness is None,
                "" if witness is None else f"fails on {witness}",
            )
        )
    if n == 3:
        left = total_symmetrization_element(3, "left")
        right = total_symmetrization_element(3, "right")
        checks.append(
            Check(
                "rank-3 total lifts differ as word sums",
                left != right,
                "" if left != right else "word sums unexpectedly equal",
            )
        )
    return checks


def suite_section_reduction(max_total: int = 6) -> list[Check]:
    """Dropping virtual words from a shuffle lift recovers the section word."""
    checks = []
    for total in range(2, max_total + 1):
        ok = True
        detail = ""
        for p in range(1, total):
            q = total - p
            for s in enumerate_shuffles(p, q):
                reduced = project_alpha(lift_shuffle(s, p, q))
                expected_word = tits_section(s)
                if reduced.terms() != [(expected_word, Fraction(1))]:
                    ok = False
                    detail = f"lift of {s} reduces to {reduced}"
                    break
                back = project_beta(reduced)
                if back.terms() != [(s, Fraction(1))]:
                    ok = False
                    detail = f"section of {s} projects to {back}"
                    break
            if not ok:
                break
        checks.append(Check(f"section reduction at total degree {total}", ok, detail))
    return checks


def suite_symmetrizer_factorization(max_n: int = 6) -> list[Check]:
    """Partial symmetrizer products refine along nested blocks."""
    checks = []
    for n in range(3, max_n + 1):
        ok = True
        detail = ""
        for i in range(1, n):
            for j in range(i + 1, n):
                lhs = partial_symmetrizer(j, n - j, 0, n) * partial_symmetrizer(i, j - i, 0, n)
                rhs = partial_symmetrizer(i, n - i, 0, n) * partial_symmetrizer(j - i, n - j, i, n)
                if lhs != rhs:
                    ok = False
                    detail = f"blocks ({i},{j}) in rank {n}"
                    break
            if not ok:
                break
        checks.append(Check(f"symmetrizer factorization in rank {n}", ok, detail))
    return checks


def suite_cardinality(max_n: int = 7) -> list[Check]:
    """Multinomial size and disjoint-union structure of descent classes."""
    checks = []
    for n in range(2, max_n + 1):
        ok = True
        detail = ""
        classes = descent_classes(n)
        for r in range(0, n):
            for cuts in itertools.combinations(range(1, n), r):
                members = enumerate_descent_class(n, cuts, mode="leq")
                if len(members) != descent_class_order(n, cuts):
                    ok = False
                    detail = f"size mismatch at {set(cuts)}"
                    break
                split = sum(
                    len(classes.get(frozenset(sub), ()))
                    for k in range(r + 1)
                    for sub in itertools.combinations(cuts, k)
                )
                if split != len(members):
                    ok = False
                    detail = f"union mismatch at {set(cuts)}"
                    break
            if not ok:
                break
        checks.append(Check(f"descent class sizes in rank {n}", ok, detail))
    return checks


def suite_associativity(spec: BraidedAlgebraSpec, trials: int = 100, seed: int = 20250810) -> list[Check]:
    """Random linear combinations multiply associatively."""
    rng = random.Random(seed)
    gens = spec.probe_indices()
    coeffs = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 2)]

    def random_element() -> TensorElement:
        out = TensorElement.zero()
        for _ in range(rng.randint(1, 2)):
            degree = rng.randint(1, 2)
            word = tuple(rng.choice(gens) for _ in range(degree))
            out = out + TensorElement.pure(word, rng.choice(coeffs))
        return out

    failures = 0
    witness = ""
    for _ in range(trials):
        a, b, c = random_element(), random_element(), random_element()
        left = qq_product(spec, qq_product(spec, a, b), c)
        right = qq_product(spec, a, qq_product(spec, b, c))
        if left != right:
            failures += 1
            if not witness:
                witness = f"({a}) ({b}) ({c})"
    return [Check(f"associativity on {trials} random triples", failures == 0, witness)]


def suite_degeneration(spec: BraidedAlgebraSpec, max_degree: int = 2) -> list[Check]:
    """Top-degree parts match the braid-only product; zero mul collapses them."""
    gens = spec.probe_indices()
    probe_words = [
        w for d in range(1, max_degree + 1) for w in itertools.product(gens, repeat=d)
    ]
    pairs = [
        (TensorElement.pure(u), TensorElement.pure(v))
        for u in probe_words
        for v in probe_words
    ]
    report = graded_product_check(spec, pairs)
    checks = [
        Check(
            f"graded product agreement on {len(pairs)} pairs",
            report.ok,
            "" if report.ok else report.failures()[0].detail,
        )
    ]
    if spec.zero_mul:
        witness = ""
        for u, v in pairs:
            if qq_product(spec, u, v) != quantum_shuffle_product(spec, u, v):
                witness = f"({u}) * ({v})"
                break
        checks.append(Check("zero multiplication collapses the deformation", not witness, witness))
    return checks


def suite_bubble(max_n: int = 6) -> list[Check]:
    """Bubble factors multiply back and their word lengths are additive."""
    checks = []
    for n in range(2, max_n + 1):
        ok = True
        detail = ""
        for perm in all_permutations(n):
            bub = bubble_decompose(perm)
            if bub.permutation() != perm or len(bub.word()) != perm.length():
                ok = False
                detail = f"fails at {perm}"
                break
        checks.append(Check(f"bubble factorization in rank {n}", ok, detail))
    return checks


def suite_shuffle_recursion(max_total: int = 7) -> list[Check]:
    """Shuffle sets split off the position of the last moved value."""
    checks = []
    for total in range(2, max_total + 1):
        ok = True
        detail = ""
        for p in range(1, total):
            q = total - p
            whole = set(enumerate_shuffles(p, q))
            first = (
                set(enumerate_shuffles(p - 1, q, shift=1, n=total)) if p > 1 else {Permutation.identity(total)}
            )
            cycle = Permutation.from_word(total, range(1, p + 1))
            second_base = (
                set(enumerate_shuffles(p, q - 1, shift=1, n=total)) if q > 1 else {Permutation.identity(total)}
            )
            second = {s * cycle for s in second_base}
            if whole != first | second or first & second:
                ok = False
                detail = f"split fails for ({p},{q})"
                break
        checks.append(Check(f"shuffle recursion at total {total}", ok, detail))
    return checks


def suite_shuffle_oracle(trials: int = 50, seed: int = 97) -> list[Check]:
    """Direct shuffles agree with flip-braided section action."""
    from .braided import builtin_algebra

    flip = builtin_algebra("flip_zero")
    rng = random.Random(seed)
    witness = ""
    for _ in range(trials):
        p, q = rng.randint(1, 3), rng.randint(1, 3)
        u = tuple(rng.randint(1, 3) for _ in range(p))
        v = tuple(rng.randint(1, 3) for _ in range(q))
        direct = shuffle_product(TensorElement.pure(u), TensorElement.pure(v))
        braided = quantum_shuffle_product(flip, TensorElement.pure(u), TensorElement.pure(v))
        if direct != braided:
            witness = f"{u} . {v}"
            break
    return [Check(f"shuffle routes agree on {trials} samples", not witness, witness)]


SUITES = {
    "gvb-rel": lambda spec, n: suite_gvb_relations(spec),
    "ex3": lambda spec, n: suite_ex3(spec),
    "cor1": lambda spec, n: suite_variant_agreement(spec, n, two_descents_only=True) + suite_ex3(spec),
    "cor-same": lambda spec, n: suite_variant_agreement(spec, n),
    "lem-red": lambda spec, n: suite_section_reduction(min(n, 6)),
    "eq1": lambda spec, n: suite_symmetrizer_factorization(min(n, 6)),
    "cardinality": lambda spec, n: suite_cardinality(min(n, 7)),
    "assoc": lambda spec, n: suite_associativity(spec),
    "degeneration": lambda spec, n: suite_degeneration(spec),
    "bubble": lambda spec, n: suite_bubble(min(n, 6)),
    "shuffle-rec": lambda spec, n: suite_shuffle_recursion(min(n + 3, 7)),
    "shuffle-oracle": lambda spec, n: suite_shuffle_oracle(),
}


def run_suite(name: str, spec: BraidedAlgebraSpec, n: int) -> list[Check]:
    """Run one named suite, or all of them."""
    if name == "all":
        checks = []
        for key in SUITES:
            checks.extend(SUITES[key](spec, n))
        return checks
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](spec, n)
