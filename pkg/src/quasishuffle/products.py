"""
Shuffle-type products on tensor elements and the total symmetrization map.

All products extend bilinearly over the pure-tensor terms of their inputs;
scalars (degree-0 terms) act as the product unit.  Three routes exist:

  shuffle_product         -- plain position shuffles, no algebra involved;
  quantum_shuffle_product -- braid-word sections acting through a braiding;
  qq_product              -- full word lifts acting through a braided algebra
                             followed by unit deletion.

quasi_shuffle_oracle implements the classical descent-free recursion for the
additive flip algebra and serves as an independent check of qq_product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .braided import BraidedAlgebraSpec, TensorElement, act, delete_units
from .lifting import lift_descent_sum, total_symmetrization_element
from .permutations import (
    Permutation,
    descents_to_composition,
    enumerate_shuffles,
)
from .words import tits_section


def _permute_word(word: tuple[int, ...], s: Permutation) -> tuple[int, ...]:
    """Position action: slot j of the result reads slot s(j) of the input."""
    return tuple(word[s(j) - 1] for j in range(1, len(word) + 1))


def shuffle_product(x: TensorElement, y: TensorElement) -> TensorElement:
    """Interleave the factors of x and y in all order-preserving ways.

    Implemented directly by position permutations, independent of any
    braiding, so it can serve as an oracle for the flip specializations.
    """
    out = TensorElement.zero()
    for u, cu in x.terms():
        for v, cv in y.terms():
            coeff = cu * cv
            if not u or not v:
                out = out + TensorElement.pure(u + v, coeff)
                continue
            for s in enumerate_shuffles(len(u), len(v)):
                out = out + TensorElement.pure(_permute_word(u + v, s), coeff)
    return out


def quantum_shuffle_product(spec: BraidedAlgebraSpec, x: TensorElement, y: TensorElement) -> TensorElement:
    """Shuffle product twisted by the braiding: section words act in place of
    position permutations."""
    out = TensorElement.zero()
    for u, cu in x.terms():
        for v, cv in y.terms():
            coeff = cu * cv
            if not u or not v:
                out = out + TensorElement.pure(u + v, coeff)
                continue
            conc = TensorElement.pure(u + v, coeff)
            for s in enumerate_shuffles(len(u), len(v)):
                out = out + act(spec, tits_section(s), conc)
    return out


@lru_cache(maxsize=None)
def _shuffle_lift_sum(p: int, q: int):
    from .lifting import lift_shuffle

    return tuple(lift_shuffle(s, p, q) for s in enumerate_shuffles(p, q))


def qq_product(spec: BraidedAlgebraSpec, x: TensorElement, y: TensorElement) -> TensorElement:
    """The deformed product: lifted shuffle words act, then units are deleted.

    Filtered rather than graded: each output term has degree at most the sum
    of the input degrees, with equality exactly on the braid-only words.
    """
    out = TensorElement.zero()
    for u, cu in x.terms():
        for v, cv in y.terms():
            coeff = cu * cv
            if not u or not v:
                out = out + TensorElement.pure(u + v, coeff)
                continue
            conc = TensorElement.pure(u + v, coeff)
            acc = TensorElement.zero()
            for lift in _shuffle_lift_sum(len(u), len(v)):
                acc = acc + act(spec, lift, conc)
            out = out + delete_units(acc)
    return out


@lru_cache(maxsize=None)
def _quasi_shuffle_words(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    a, us = u[0], u[1:]
    c, vs = v[0], v[1:]
    counts: dict[tuple[int, ...], int] = {}
    for word, m in _quasi_shuffle_words(us, v):
        key = (a,) + word
        counts[key] = counts.get(key, 0) + m
    for word, m in _quasi_shuffle_words(u, vs):
        key = (c,) + word
        counts[key] = counts.get(key, 0) + m
    for word, m in _quasi_shuffle_words(us, vs):
        key = (a + c,) + word
        counts[key] = counts.get(key, 0) + m
    return tuple(sorted(counts.items()))


def quasi_shuffle_oracle(x: TensorElement, y: TensorElement) -> TensorElement:
    """Classical quasi-shuffle recursion for the additive flip algebra.

    (a.u) * (c.v) = a (x) (u * c.v) + c (x) (a.u * v) + (a+c) (x) (u * v),
    with the empty word as unit.  Independent of the lift machinery.

    >>> str(quasi_shuffle_oracle(TensorElement.pure([1]), TensorElement.pure([2])))
    'y3 + y1 y2 + y2 y1'
    """
    out = TensorElement.zero()
    for u, cu in x.terms():
        for v, cv in y.terms():
            coeff = cu * cv
            for word, mult in _quasi_shuffle_words(u, v):
                out = out + TensorElement.pure(word, coeff * mult)
    return out


def iterated_product(spec: BraidedAlgebraSpec, blocks, bracketing: str = "left") -> TensorElement:
    """Fold qq_product over the blocks under the requested bracketing."""
    blocks = list(blocks)
    if not blocks:
        return TensorElement.scalar(1)
    if len(blocks) == 1:
        return blocks[0]
    if bracketing == "left":
        out = blocks[0]
        for block in blocks[1:]:
            out = qq_product(spec, out, block)
        return out
    if bracketing == "right":
        out = blocks[-1]
        for block in reversed(blocks[:-1]):
            out = qq_product(spec, block, out)
        return out
    if bracketing == "balanced":
        mid = len(blocks) // 2
        return qq_product(
            spec,
            iterated_product(spec, blocks[:mid], "balanced"),
            iterated_product(spec, blocks[mid:], "balanced"),
        )
    raise ValueError(f"unknown bracketing {bracketing!r}")


def total_symmetrize(spec: BraidedAlgebraSpec, t: TensorElement, variant: str = "left") -> TensorElement:
    """Apply the degree-n symmetrization to each degree-n component.

    Degrees 0 and 1 pass through unchanged; in higher degree the total
    symmetrization element acts and units are deleted.  The image of pure
    tensors spans the deformed product algebra generated in degree 1.
    """
    out = TensorElement.zero()
    for word, coeff in t.terms():
        n = len(word)
        if n <= 1:
            out = out + TensorElement.pure(word, coeff)
        else:
            moved = act(spec, total_symmetrization_element(n, variant), TensorElement.pure(word, coeff))
            out = out + delete_units(moved)
    return out


@dataclass
class ProductCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ProductReport:
    checks: list[ProductCheck]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[ProductCheck]:
        return [c for c in self.checks if not c.passed]


def verify_descent_theorem(
    spec: BraidedAlgebraSpec,
    n: int,
    positions,
    variant: str = "left",
    probes=None,
) -> ProductReport:
    """Check that the bracketed product matches the lifted descent-class sum.

    For each probe pure tensor: split it into blocks along the composition of
    the position set, fold qq_product (left or right nesting per variant),
    and compare against deleting units after the summed lift acts.  Also
    checks that the two lift variants act identically on every probe.
    """
    import itertools

    cuts = tuple(sorted(set(positions)))
    parts = descents_to_composition(cuts, n)
    if probes is None:
        gens = spec.probe_indices()
        probes = [TensorElement.pure(word) for word in itertools.product(gens, repeat=n)]
    left_sum = lift_descent_sum(n, cuts, "left")
    right_sum = lift_descent_sum(n, cuts, "right")
    main_sum = left_sum if variant == "left" else right_sum
    checks: list[ProductCheck] = []
    for probe in probes:
        (word, coeff), = probe.terms()
        blocks = []
        offset = 0
        for c in parts:
            blocks.append(TensorElement.pure(word[offset : offset + c]))
            offset += c
        bracketed = iterated_product(spec, blocks, "left" if variant == "left" else "right")
        direct = delete_units(act(spec, main_sum, probe))
        expected = coeff * bracketed
        checks.append(
            ProductCheck(
                f"descent sum acts as bracketed product on {probe}",
                direct == expected,
                "" if direct == expected else f"{direct} != {expected}",
            )
        )
        both = delete_units(act(spec, left_sum, probe)) == delete_units(act(spec, right_sum, probe))
        checks.append(
            ProductCheck(
                f"left and right variants agree on {probe}",
                both,
                "",
            )
        )
    return ProductReport(checks)
