"""
Lifts of permutations to rational sums of free braid/virtual words.

The one-descent lift sends a shuffle to a sum of words read off its bubble
decomposition: each nontrivial level k with opening index t contributes the
factor (b_t + [t+1 != t'] b_1 ... b_{t-1} x_t) b_{t+1} ... b_k, where t' is
the opening index of the literal next level (0 if that level is trivial or
absent), and factors are multiplied from the top level down.  The virtual
branch carries the unit-pushing prefix b_1 ... b_{t-1}, which always starts
at ambient position 1 even for shifted shuffles.

Multi-descent lifts iterate the one-descent lift along a descent
factorization.  Two variants exist (factorizations may peel the largest
block first or the first block first); they agree under every braided
representation but differ as word sums, so neither is canonical.  "left"
names the largest-block-first variant and is the default.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .permutations import (
    Permutation,
    all_permutations,
    bubble_decompose,
    descent_factorize,
    descent_factorize_alt,
    descents_to_composition,
    enumerate_descent_class,
)
from .words import GvbElement, GvbWord, b, x

VARIANTS = ("left", "right")


@lru_cache(maxsize=None)
def _bubble_lift(p: Permutation) -> GvbElement:
    """Word sum of the lifting formula over p's ambient bubble decomposition."""
    n = p.n
    bub = bubble_decompose(p)
    elt = GvbElement.one(n)
    for k in range(n - 1, 0, -1):
        t = bub.start(k)
        if t == 0:
            continue
        t_above = bub.start(k + 1) if k + 1 <= n - 1 else 0
        suffix = tuple(b(j) for j in range(t + 1, k + 1))
        words = [GvbWord(n, (b(t),) + suffix)]
        if t + 1 != t_above:
            prefix = tuple(b(j) for j in range(1, t))
            words.append(GvbWord(n, prefix + (x(t),) + suffix))
        factor = GvbElement(n, {w: Fraction(1) for w in words})
        elt = elt * factor
    return elt


def lift_shuffle(perm: Permutation, p: int, q: int, shift: int = 0) -> GvbElement:
    """Lift a shifted (p,q)-shuffle; raises if perm is not one.

    >>> from .permutations import Permutation
    >>> s2 = Permutation.simple(2, 3)
    >>> str(lift_shuffle(s2, 2, 1))
    'b2 + b1 x2'
    """
    if not perm.is_shuffle(p, q, shift):
        raise ValueError(f"{perm} is not a ({p},{q})-shuffle shifted by {shift}")
    return _bubble_lift(perm)


def lift_shuffle_extended(perm: Permutation, p: int, q: int, shift: int = 0) -> GvbElement:
    """Zero-extended form of the shuffle lift: non-members map to 0."""
    if p <= 0 or q <= 0 or not perm.is_shuffle(p, q, shift):
        return GvbElement.zero(perm.n)
    return _bubble_lift(perm)


def m_map(p: int, q: int, s: Permutation, t: GvbElement) -> GvbElement:
    """Largest-block bilinear step: prepend the shifted lift of s to each word.

    For a word tau with virtual length l the contribution is the lift of s as
    a (p-l, q)-shuffle shifted by l, times tau; it vanishes unless p-l > 0
    and s belongs to that shuffle set.
    """
    if s.n != t.n:
        raise ValueError(f"rank mismatch: {s.n} vs {t.n}")
    out = GvbElement.zero(t.n)
    for word, coeff in t.terms():
        l = word.virtual_length
        if p - l > 0 and s.is_shuffle(p - l, q, shift=l):
            out = out + coeff * (_bubble_lift(s) * word)
    return out


def m_map_prime(p: int, q: int, s: Permutation, t: GvbElement, shift: int = 0) -> GvbElement:
    """First-block bilinear step, pre-shifting s by the virtual length.

    For a word tau with virtual length l: requires q-l > 0 and s in the
    (p, q-l)-shuffle set shifted by `shift`; the lift is taken of s shifted
    up by a further l.  (Testing membership before the extra shift is what
    reproduces the right-variant identities; shifting first does not.)
    """
    if s.n != t.n:
        raise ValueError(f"rank mismatch: {s.n} vs {t.n}")
    out = GvbElement.zero(t.n)
    for word, coeff in t.terms():
        l = word.virtual_length
        if q - l > 0 and s.is_shuffle(p, q - l, shift=shift):
            out = out + coeff * (_bubble_lift(s.shifted(l)) * word)
    return out


def lift_descent(p: Permutation, positions: Iterable[int], variant: str = "left") -> GvbElement:
    """Lift p along the descent factorization for the given position set.

    >>> from .permutations import Permutation
    >>> w0 = Permutation.longest(3)
    >>> str(lift_descent(w0, {1, 2}))
    'b1 b2 b1 + x1 b2 b1'
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    cuts = sorted(set(positions))
    if not p.descent_set() <= frozenset(cuts):
        raise ValueError(f"descents {sorted(p.descent_set())} not contained in {cuts}")
    n = p.n
    parts = descents_to_composition(cuts, n)
    k = len(cuts)
    if k == 0:
        return GvbElement.one(n)
    elt = GvbElement.one(n)
    if variant == "left":
        factors = descent_factorize(p, cuts)  # (f_k, ..., f_1)
        for l in range(1, k + 1):
            elt = m_map(sum(parts[:l]), parts[l], factors[k - l], elt)
    else:
        factors = descent_factorize_alt(p, cuts)  # (g_1, ..., g_k)
        for l in range(k, 0, -1):
            base = sum(parts[: l - 1])
            elt = m_map_prime(parts[l - 1], sum(parts[l:]), factors[l - 1], elt, shift=base)
    return elt


def mt_section(p: Permutation, variant: str = "left") -> GvbElement:
    """Lift along the full descent set {1, ..., n-1}."""
    return lift_descent(p, range(1, p.n), variant)


@lru_cache(maxsize=None)
def _descent_lift_sum(n: int, cuts: tuple[int, ...], variant: str) -> GvbElement:
    out = GvbElement.zero(n)
    for perm in enumerate_descent_class(n, cuts, mode="leq"):
        out = out + lift_descent(perm, cuts, variant)
    return out


def lift_descent_sum(n: int, positions: Iterable[int], variant: str = "left") -> GvbElement:
    """Sum of the lifts over the whole leq descent class (cached)."""
    return _descent_lift_sum(n, tuple(sorted(set(positions))), variant)


@lru_cache(maxsize=None)
def total_symmetrization_element(n: int, variant: str = "left") -> GvbElement:
    """Sum of the full-descent lifts over all of rank n.

    >>> str(total_symmetrization_element(2))
    'e + b1 + x1'
    """
    out = GvbElement.zero(n)
    for perm in all_permutations(n):
        out = out + mt_section(perm, variant)
    return out
