"""
Permutations of {1, ..., n} and their descent combinatorics.

Conventions used throughout the package:

- A permutation is stored in one-line notation as the tuple
  (sigma(1), ..., sigma(n)) of values at positions 1..n.
- Products compose left to right: (a * b)(x) = b(a(x)), so in the product
  a * b the factor a is applied first.  A word s_{i_1} s_{i_2} ... s_{i_l}
  in the adjacent transpositions therefore denotes
  s_{i_1} * s_{i_2} * ... * s_{i_l}.
- The descent set of sigma is {i : sigma^-1(i) > sigma^-1(i+1)}, i.e. the
  values i whose position comes after the position of i+1.
- A (p,q)-shuffle keeps the values 1..p in increasing positions and the
  values p+1..p+q in increasing positions; equivalently it has at most one
  descent, located at p.  Shifting by k ("arrow" embedding) adds k to every
  moved point, so the shuffle acts on values k+1..k+p+q.

These choices are the unique ones under which the generator words used in
the rest of the package (e.g. "s1 s2" with one-line form [3,1,2]) carry
their descents where the lifting formulas expect them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation.

    >>> s1 = Permutation.simple(1, 3)
    >>> s2 = Permutation.simple(2, 3)
    >>> (s1 * s2).images          # s1 applied first
    (3, 1, 2)
    >>> sorted((s1 * s2).descent_set())
    [2]
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images!r}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The adjacent transposition s_i swapping i and i+1."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for rank {n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_word(cls, n: int, word: Iterable[int]) -> "Permutation":
        """Product of adjacent transpositions, leftmost applied first.

        >>> Permutation.from_word(4, [2, 3, 1]).images
        (2, 4, 1, 3)
        """
        p = cls.identity(n)
        for i in word:
            p = p * cls.simple(i, n)
        return p

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, v in enumerate(self.images, start=1):
            inv[v - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == x for x, v in enumerate(self.images, start=1))

    def length(self) -> int:
        """Number of inversions; equals the length of any reduced word."""
        return sum(
            1
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if self.images[a] > self.images[b]
        )

    def descent_set(self) -> frozenset[int]:
        """Values i in 1..n-1 placed after i+1.

        >>> sorted(Permutation.from_word(3, [1, 2, 1]).descent_set())
        [1, 2]
        """
        pos = self.inverse().images
        return frozenset(i for i in range(1, self.n) if pos[i - 1] > pos[i])

    def is_shuffle(self, p: int, q: int, shift: int = 0) -> bool:
        """Whether self lies in the shifted (p,q)-shuffle set.

        Requires fixing every point outside the window shift+1..shift+p+q and
        keeping each value block in increasing position order.  Empty blocks
        (p or q zero) are allowed; the identity belongs to every shuffle set.
        """
        if p < 0 or q < 0 or shift < 0 or shift + p + q > self.n:
            raise ValueError(f"invalid shuffle shape ({p},{q}) shifted {shift} in rank {self.n}")
        for v in range(1, shift + 1):
            if self.images[v - 1] != v:
                return False
        for v in range(shift + p + q + 1, self.n + 1):
            if self.images[v - 1] != v:
                return False
        pos = self.inverse().images
        first = [pos[v - 1] for v in range(shift + 1, shift + p + 1)]
        second = [pos[v - 1] for v in range(shift + p + 1, shift + p + q + 1)]
        return first == sorted(first) and second == sorted(second)

    def shifted(self, k: int) -> "Permutation":
        """Image under the shift embedding: moved points increase by k.

        The rank stays the same, so self must fix the top k points.
        """
        if k == 0:
            return self
        if k < 0:
            raise ValueError("shift must be nonnegative")
        for v in range(self.n - k + 1, self.n + 1):
            if self.images[v - 1] != v:
                raise ValueError(f"cannot shift by {k}: point {v} is moved")
        images = list(range(1, k + 1)) + [self.images[x - 1] + k for x in range(1, self.n - k + 1)]
        return Permutation(tuple(images))

    def word(self) -> tuple[int, ...]:
        """The bubble reduced word (generator indices, leftmost first)."""
        return bubble_decompose(self).word()

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def enumerate_shuffles(p: int, q: int, shift: int = 0, n: int | None = None) -> list[Permutation]:
    """All shifted (p,q)-shuffles embedded in rank n, sorted by one-line form.

    >>> [str(s) for s in enumerate_shuffles(2, 1)]
    ['[1,2,3]', '[1,3,2]', '[3,1,2]']
    """
    if p < 1 or q < 1:
        raise ValueError("block sizes must be positive")
    if shift < 0:
        raise ValueError("shift must be nonnegative")
    if n is None:
        n = shift + p + q
    if shift + p + q > n:
        raise ValueError(f"window {shift}+{p}+{q} exceeds rank {n}")
    out = []
    window = range(shift + 1, shift + p + q + 1)
    for spots in itertools.combinations(window, p):
        images = list(range(1, n + 1))
        rest = [x for x in window if x not in spots]
        for r, pos in enumerate(spots):
            images[pos - 1] = shift + 1 + r
        for r, pos in enumerate(rest):
            images[pos - 1] = shift + p + 1 + r
        out.append(Permutation(tuple(images)))
    return sorted(out, key=lambda s: s.images)


@lru_cache(maxsize=None)
def descent_classes(n: int) -> dict[frozenset[int], tuple[Permutation, ...]]:
    """Group all of rank n by descent set.  Cached; callers must not mutate."""
    buckets: dict[frozenset[int], list[Permutation]] = {}
    for perm in all_permutations(n):
        buckets.setdefault(perm.descent_set(), []).append(perm)
    return {key: tuple(sorted(group, key=lambda s: s.images)) for key, group in buckets.items()}


def enumerate_descent_class(n: int, positions: Iterable[int], mode: str = "exact") -> list[Permutation]:
    """Permutations with descent set equal to (exact) or contained in (leq) the given set."""
    wanted = frozenset(positions)
    if not wanted <= frozenset(range(1, n)):
        raise ValueError(f"descent positions {sorted(wanted)} out of range for rank {n}")
    classes = descent_classes(n)
    if mode == "exact":
        return list(classes.get(wanted, ()))
    if mode == "leq":
        out: list[Permutation] = []
        for key, group in classes.items():
            if key <= wanted:
                out.extend(group)
        return sorted(out, key=lambda s: s.images)
    raise ValueError(f"unknown mode {mode!r}")


def descent_class_order(n: int, positions: Iterable[int]) -> int:
    """Size of the leq descent class: the multinomial n!/(c_1! ... c_{k+1}!)."""
    parts = descents_to_composition(positions, n)
    out = math.factorial(n)
    for c in parts:
        out //= math.factorial(c)
    return out


def composition_to_descents(parts: Iterable[int]) -> frozenset[int]:
    """Partial sums of all but the last part.

    >>> sorted(composition_to_descents((1, 2, 1)))
    [1, 3]
    """
    parts = tuple(parts)
    if not parts or any(c < 1 for c in parts):
        raise ValueError(f"composition parts must be positive: {parts!r}")
    sums = itertools.accumulate(parts[:-1])
    return frozenset(sums)


def descents_to_composition(positions: Iterable[int], n: int) -> tuple[int, ...]:
    """The composition of n whose partial sums are the given positions.

    >>> descents_to_composition({1, 3}, 4)
    (1, 2, 1)
    """
    cuts = sorted(set(positions))
    if cuts and not (1 <= cuts[0] and cuts[-1] <= n - 1):
        raise ValueError(f"positions {cuts} out of range for rank {n}")
    bounds = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


@dataclass(frozen=True)
class BubbleDecomposition:
    """Factorization into one (k,1)-shuffle per level k = n-1, ..., 1.

    starts[n-1-k] is the generator index opening level k's factor
    s_t s_{t+1} ... s_k, with 0 recording a trivial level.  Concatenating the
    nontrivial factor words top level first yields a reduced word.
    """

    n: int
    starts: tuple[int, ...]

    def start(self, k: int) -> int:
        if not 1 <= k <= self.n - 1:
            raise ValueError(f"level {k} out of range for rank {self.n}")
        return self.starts[self.n - 1 - k]

    def factor(self, k: int) -> Permutation:
        t = self.start(k)
        if t == 0:
            return Permutation.identity(self.n)
        return Permutation.from_word(self.n, range(t, k + 1))

    def factors(self) -> tuple[Permutation, ...]:
        """Level factors, top level first."""
        return tuple(self.factor(k) for k in range(self.n - 1, 0, -1))

    def word(self) -> tuple[int, ...]:
        out: list[int] = []
        for k in range(self.n - 1, 0, -1):
            t = self.start(k)
            if t:
                out.extend(range(t, k + 1))
        return tuple(out)

    def permutation(self) -> Permutation:
        p = Permutation.identity(self.n)
        for f in self.factors():
            p = p * f
        return p


def bubble_decompose(p: Permutation) -> BubbleDecomposition:
    """Peel off, for k = n-1 down to 1, the factor moving k+1 into place.

    >>> bubble_decompose(Permutation.from_word(3, [1, 2, 1])).starts
    (1, 1)
    """
    work = list(p.images)
    starts = []
    for k in range(p.n - 1, 0, -1):
        t = work.index(k + 1) + 1
        if t == k + 1:
            starts.append(0)
        else:
            starts.append(t)
            # Strip the level factor u: the remainder maps y to work[y] for
            # y < t and to work[y+1] for y >= t (value k+1 drops out).
            work = work[: t - 1] + work[t : k + 1] + list(range(k + 1, p.n + 1))
    return BubbleDecomposition(p.n, tuple(starts))


def shuffle_split(w: Permutation, m: int) -> tuple[Permutation, Permutation]:
    """Write w = u * rho with u the (m, n-m) value-block shuffle.

    u ranks the positions carrying values <= m ahead of the rest, so it is
    the unique shuffle coset representative; rho preserves both value blocks.
    """
    if not 0 <= m <= w.n:
        raise ValueError(f"split point {m} out of range for rank {w.n}")
    small = [x for x in range(1, w.n + 1) if w(x) <= m]
    big = [x for x in range(1, w.n + 1) if w(x) > m]
    images = [0] * w.n
    for r, x in enumerate(small, start=1):
        images[x - 1] = r
    for r, x in enumerate(big, start=m + 1):
        images[x - 1] = r
    u = Permutation(tuple(images))
    return u, u.inverse() * w


def descent_factorize(p: Permutation, positions: Iterable[int]) -> tuple[Permutation, ...]:
    """Split p into one shuffle per descent position, largest block first.

    Returns (f_k, ..., f_1) with f_l an unshifted (c_1+...+c_l, c_{l+1})-shuffle
    and p = f_k * ... * f_1.

    >>> p = Permutation.from_word(4, [1, 3])
    >>> [f.word() for f in descent_factorize(p, {1, 3})]
    [(3,), (1,)]
    """
    cuts = sorted(set(positions))
    if not p.descent_set() <= frozenset(cuts):
        raise ValueError(f"descents {sorted(p.descent_set())} not contained in {cuts}")
    factors = []
    work = p
    for m in reversed(cuts):
        u, work = shuffle_split(work, m)
        factors.append(u)
    assert work.is_identity()
    return tuple(factors)


def descent_factorize_alt(p: Permutation, positions: Iterable[int]) -> tuple[Permutation, ...]:
    """Split p into one shuffle per descent position, first block first.

    Returns (g_1, ..., g_k) with g_l a (c_l, c_{l+1}+...+c_{k+1})-shuffle
    shifted by c_1+...+c_{l-1} and p = g_1 * ... * g_k.
    """
    cuts = sorted(set(positions))
    if not p.descent_set() <= frozenset(cuts):
        raise ValueError(f"descents {sorted(p.descent_set())} not contained in {cuts}")
    factors = []
    work = p
    for m in cuts:
        u, work = shuffle_split(work, m)
        factors.append(u)
    assert work.is_identity()
    return tuple(factors)


class PermSum:
    """A finitely supported rational combination of equal-rank permutations.

    Multiplication is the convolution product inherited from * on
    permutations.  Zero coefficients are never stored.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Permutation, Fraction | int] | None = None):
        self.n = n
        clean: dict[Permutation, Fraction] = {}
        for perm, coeff in (terms or {}).items():
            if perm.n != n:
                raise ValueError(f"rank mismatch: {perm.n} vs {n}")
            coeff = Fraction(coeff)
            if coeff:
                clean[perm] = coeff
        self._terms = clean

    @classmethod
    def zero(cls, n: int) -> "PermSum":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "PermSum":
        return cls(n, {Permutation.identity(n): Fraction(1)})

    @classmethod
    def of(cls, perm: Permutation, coeff: Fraction | int = 1) -> "PermSum":
        return cls(perm.n, {perm: Fraction(coeff)})

    def terms(self) -> list[tuple[Permutation, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].images)

    def coefficient(self, perm: Permutation) -> Fraction:
        return self._terms.get(perm, Fraction(0))

    def support(self) -> set[Permutation]:
        return set(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "PermSum") -> "PermSum":
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        terms = dict(self._terms)
        for perm, coeff in other._terms.items():
            terms[perm] = terms.get(perm, Fraction(0)) + coeff
        return PermSum(self.n, terms)

    def __sub__(self, other: "PermSum") -> "PermSum":
        return self + (-1) * other

    def __neg__(self) -> "PermSum":
        return (-1) * self

    def __rmul__(self, scalar) -> "PermSum":
        return PermSum(self.n, {p: Fraction(scalar) * c for p, c in self._terms.items()})

    def __mul__(self, other) -> "PermSum":
        if not isinstance(other, PermSum):
            return PermSum(self.n, {p: c * Fraction(other) for p, c in self._terms.items()})
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        terms: dict[Permutation, Fraction] = {}
        for p1, c1 in self._terms.items():
            for p2, c2 in other._terms.items():
                prod = p1 * p2
                terms[prod] = terms.get(prod, Fraction(0)) + c1 * c2
        return PermSum(self.n, terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, PermSum) and self.n == other.n and self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for perm, coeff in self.terms():
            prefix = "" if coeff == 1 else f"{coeff}*"
            bits.append(f"{prefix}{perm}")
        return " + ".join(bits)


def partial_symmetrizer(p: int, q: int, shift: int = 0, n: int | None = None) -> PermSum:
    """Sum of all shifted (p,q)-shuffles with coefficient 1."""
    shuffles = enumerate_shuffles(p, q, shift, n)
    return PermSum(shuffles[0].n, {s: Fraction(1) for s in shuffles})


def descent_symmetrizer(n: int, positions: Iterable[int]) -> PermSum:
    """Sum over the leq descent class with coefficient 1."""
    members = enumerate_descent_class(n, positions, mode="leq")
    return PermSum(n, {s: Fraction(1) for s in members})


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse one-line ("2,4,1,3" or "[2,4,1,3]") or generator-word ("s1 s3") form.

    Generator words need an explicit rank; "e" denotes the identity.
    """
    text = text.strip()
    if text == "e" or (text == "" and n is not None):
        if n is None:
            raise ValueError("rank required to parse the identity")
        return Permutation.identity(n)
    if "s" in text:
        if n is None:
            raise ValueError(f"rank required to parse generator word {text!r}")
        indices = [int(tok.lstrip("s")) for tok in text.replace(",", " ").split()]
        return Permutation.from_word(n, indices)
    body = text.strip("[]")
    images = tuple(int(tok) for tok in body.replace(",", " ").split())
    perm = Permutation(images)
    if n is not None and perm.n != n:
        raise ValueError(f"expected rank {n}, got {perm.n}")
    return perm
