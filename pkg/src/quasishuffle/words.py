"""
Free words over braiding and virtual generators, and their rational sums.

A rank-n word is a sequence of letters b_i (braiding) and x_i (virtual)
with 1 <= i <= n-1; the empty word is the monoid identity e.  Words are kept
FREE: no defining relation is ever rewritten, so two words are equal only if
they are letterwise equal.  Equality modulo the relations is tested through
representations (see the braided module).

Letters are printed left to right in multiplication order; under
representations the rightmost letter acts first (operator composition).

Note for interoperability: part of the virtual-braid literature swaps the
roles of the two generator families.  Here b_i is always the braiding
generator and x_i the virtual one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .permutations import PermSum, Permutation, all_permutations, bubble_decompose

BRAID = "b"
VIRTUAL = "x"


@dataclass(frozen=True)
class GvbLetter:
    """A single generator: kind "b" (braiding) or "x" (virtual)."""

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in (BRAID, VIRTUAL):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"letter index must be positive, got {self.index}")

    def shifted(self, k: int) -> "GvbLetter":
        return GvbLetter(self.kind, self.index + k)

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def b(i: int) -> GvbLetter:
    return GvbLetter(BRAID, i)


def x(i: int) -> GvbLetter:
    return GvbLetter(VIRTUAL, i)


@dataclass(frozen=True)
class GvbWord:
    """A free word of rank n; the empty letter tuple is the identity e.

    >>> w = GvbWord.parse(3, "b1 x2 b1")
    >>> w.lengths()
    (2, 1, 3)
    >>> str(w * GvbWord.parse(3, "x1"))
    'b1 x2 b1 x1'
    """

    n: int
    letters: tuple[GvbLetter, ...] = ()

    def __post_init__(self) -> None:
        for letter in self.letters:
            if letter.index > self.n - 1:
                raise ValueError(f"letter {letter} exceeds rank {self.n}")

    @classmethod
    def identity(cls, n: int) -> "GvbWord":
        return cls(n, ())

    @classmethod
    def parse(cls, n: int, text: str) -> "GvbWord":
        """Parse space-separated tokens like "b1 x2"; "e" or "" is the identity."""
        text = text.strip()
        if text in ("", "e"):
            return cls.identity(n)
        letters = []
        for tok in text.split():
            kind, index = tok[0], tok[1:]
            letters.append(GvbLetter(kind, int(index)))
        return cls(n, tuple(letters))

    def __mul__(self, other: "GvbWord") -> "GvbWord":
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        return GvbWord(self.n, self.letters + other.letters)

    def lengths(self) -> tuple[int, int, int]:
        """(braid length, virtual length, total length)."""
        lv = sum(1 for letter in self.letters if letter.kind == VIRTUAL)
        return len(self.letters) - lv, lv, len(self.letters)

    @property
    def braid_length(self) -> int:
        return self.lengths()[0]

    @property
    def virtual_length(self) -> int:
        return self.lengths()[1]

    def is_braid_only(self) -> bool:
        return all(letter.kind == BRAID for letter in self.letters)

    def shifted(self, k: int, new_rank: int) -> "GvbWord":
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if any(letter.index + k > new_rank - 1 for letter in self.letters):
            raise ValueError(f"shift by {k} exceeds rank {new_rank}")
        return GvbWord(new_rank, tuple(letter.shifted(k) for letter in self.letters))

    def sort_key(self) -> tuple:
        return (len(self.letters), tuple((l.kind, l.index) for l in self.letters))

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters) if self.letters else "e"


class GvbElement:
    """A finitely supported rational combination of equal-rank free words.

    Treated as immutable: every operation returns a fresh element and no
    public method mutates state, so instances may be shared and cached.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[GvbWord, Fraction | int] | None = None):
        self.n = n
        clean: dict[GvbWord, Fraction] = {}
        for word, coeff in (terms or {}).items():
            if word.n != n:
                raise ValueError(f"rank mismatch: {word.n} vs {n}")
            coeff = Fraction(coeff)
            if coeff:
                clean[word] = coeff
        self._terms = clean

    @classmethod
    def zero(cls, n: int) -> "GvbElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "GvbElement":
        return cls(n, {GvbWord.identity(n): Fraction(1)})

    @classmethod
    def of(cls, word: GvbWord, coeff: Fraction | int = 1) -> "GvbElement":
        return cls(word.n, {word: Fraction(coeff)})

    @classmethod
    def parse(cls, n: int, text: str) -> "GvbElement":
        """Sum of "+"-separated words, all with coefficient 1.

        >>> str(GvbElement.parse(3, "b2 b1 + b1 x2 b1"))
        'b2 b1 + b1 x2 b1'
        """
        terms: dict[GvbWord, Fraction] = {}
        for chunk in text.split("+"):
            word = GvbWord.parse(n, chunk)
            terms[word] = terms.get(word, Fraction(0)) + 1
        return cls(n, terms)

    def terms(self) -> list[tuple[GvbWord, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, word: GvbWord) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def support(self) -> set[GvbWord]:
        return set(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "GvbElement") -> "GvbElement":
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        terms = dict(self._terms)
        for word, coeff in other._terms.items():
            terms[word] = terms.get(word, Fraction(0)) + coeff
        return GvbElement(self.n, terms)

    def __sub__(self, other: "GvbElement") -> "GvbElement":
        return self + (-1) * other

    def __neg__(self) -> "GvbElement":
        return (-1) * self

    def __rmul__(self, scalar) -> "GvbElement":
        return GvbElement(self.n, {w: Fraction(scalar) * c for w, c in self._terms.items()})

    def __mul__(self, other) -> "GvbElement":
        if isinstance(other, GvbWord):
            other = GvbElement.of(other)
        if not isinstance(other, GvbElement):
            return GvbElement(self.n, {w: c * Fraction(other) for w, c in self._terms.items()})
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        terms: dict[GvbWord, Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                prod = w1 * w2
                terms[prod] = terms.get(prod, Fraction(0)) + c1 * c2
        return GvbElement(self.n, terms)

    def shifted(self, k: int, new_rank: int) -> "GvbElement":
        return GvbElement(new_rank, {w.shifted(k, new_rank): c for w, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, GvbElement) and self.n == other.n and self._terms == other._terms

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for word, coeff in self.terms():
            sign = "-" if coeff < 0 else "+"
            size = -coeff if coeff < 0 else coeff
            piece = str(word) if size == 1 else f"{size} {word}"
            out += f" {sign} {piece}" if out else (f"-{piece}" if sign == "-" else piece)
        return out

    def to_json(self) -> list[dict]:
        return [{"word": str(w), "coeff": str(c)} for w, c in self.terms()]

    @classmethod
    def from_json(cls, n: int, data: Iterable[dict]) -> "GvbElement":
        terms: dict[GvbWord, Fraction] = {}
        for entry in data:
            word = GvbWord.parse(n, entry["word"])
            terms[word] = terms.get(word, Fraction(0)) + Fraction(entry["coeff"])
        return cls(n, terms)


def project_alpha(elt: GvbElement) -> GvbElement:
    """Quotient by the virtual generators: words containing any x_i map to 0."""
    return GvbElement(elt.n, {w: c for w, c in elt._terms.items() if w.is_braid_only()})


def project_beta(elt: GvbElement) -> PermSum:
    """Send each braiding generator to the matching transposition.

    Only defined on virtual-free elements; the corresponding quotient on the
    virtual side is out of scope here.
    """
    out = PermSum.zero(elt.n)
    for word, coeff in elt._terms.items():
        if not word.is_braid_only():
            raise ValueError(f"word {word} contains a virtual letter")
        perm = Permutation.from_word(elt.n, (letter.index for letter in word.letters))
        out = out + PermSum.of(perm, coeff)
    return out


def tits_section(p: Permutation) -> GvbWord:
    """The braid word spelled by the bubble reduced word of p.

    Well defined on the braid monoid because all reduced words of p agree
    there; this particular reduced word is the package-wide normal choice.

    >>> str(tits_section(Permutation.longest(3)))
    'b1 b2 b1'
    """
    return GvbWord(p.n, tuple(b(i) for i in bubble_decompose(p).word()))


@lru_cache(maxsize=None)
def braid_symmetrizer(n: int) -> GvbElement:
    """Sum of the section words over all of rank n (n! summands)."""
    terms = {tits_section(p): Fraction(1) for p in all_permutations(n)}
    return GvbElement(n, terms)
