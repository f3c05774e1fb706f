"""
Braided algebras with an adjoined unit, and the word action on tensor powers.

A basis index is a positive integer naming a basis vector of V; index 0 is
reserved for the adjoined unit.  A braided algebra is described by two
tables: sigma(i,j) -> rational combination of pairs (k,l), and mul(i,j) ->
rational combination of single indices.  Both must stay inside V (never
produce index 0); the unit rules are wired into the action itself:

    b_i acts at slots (i, i+1) by sigma, extended by
        sigma(1 (x) v) = v (x) 1,  sigma(v (x) 1) = 1 (x) v,
        sigma(1 (x) 1) = 1 (x) 1;
    x_i acts at slots (i, i+1) by v (x) w -> 1 (x) mul(v, w), extended by
        1 (x) u -> 1 (x) u,  u (x) 1 -> 1 (x) u,  1 (x) 1 -> 1 (x) 1.

The rightmost letter of a word acts first.  Validation probes the defining
relations of the rank-3 word monoid (which are equivalent to the braided
algebra axioms) on a finite basis window including the unit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .words import BRAID, GvbElement, GvbLetter, GvbWord

SigmaTerms = tuple[tuple[tuple[int, int], Fraction], ...]
MulTerms = tuple[tuple[int, Fraction], ...]


class SpecValidationError(ValueError):
    """A braided-algebra table violates one of the defining relations."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(report.summary())


class TensorElement:
    """A rational combination of basis pure tensors, possibly of mixed degree.

    Keys are index tuples; the empty tuple is the scalar basis element.
    Instances are immutable by convention.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Fraction | int] | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        for word, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[tuple(word)] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> "TensorElement":
        return cls()

    @classmethod
    def scalar(cls, coeff: Fraction | int) -> "TensorElement":
        return cls({(): Fraction(coeff)})

    @classmethod
    def pure(cls, indices: Iterable[int], coeff: Fraction | int = 1) -> "TensorElement":
        return cls({tuple(indices): Fraction(coeff)})

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def coefficient(self, word: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def support(self) -> set[tuple[int, ...]]:
        return set(self._terms)

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def component(self, degree: int) -> "TensorElement":
        return TensorElement({w: c for w, c in self._terms.items() if len(w) == degree})

    def max_degree(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        terms = dict(self._terms)
        for word, coeff in other._terms.items():
            terms[word] = terms.get(word, Fraction(0)) + coeff
        return TensorElement(terms)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-1) * other

    def __neg__(self) -> "TensorElement":
        return (-1) * self

    def __rmul__(self, scalar) -> "TensorElement":
        return TensorElement({w: Fraction(scalar) * c for w, c in self._terms.items()})

    def tensor(self, other: "TensorElement") -> "TensorElement":
        terms: dict[tuple[int, ...], Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                key = w1 + w2
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return TensorElement(terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorElement) and self._terms == other._terms

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for word, coeff in self.terms():
            body = " ".join(f"y{i}" if i else "1" for i in word) if word else "1"
            sign = "-" if coeff < 0 else "+"
            size = -coeff if coeff < 0 else coeff
            piece = body if size == 1 and word else (f"{size} {body}" if word else str(size))
            out += f" {sign} {piece}" if out else (f"-{piece}" if sign == "-" else piece)
        return out

    def to_json(self) -> dict:
        return {"terms": [{"word": list(w), "coeff": str(c)} for w, c in self.terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "TensorElement":
        terms: dict[tuple[int, ...], Fraction] = {}
        for entry in data["terms"]:
            word = tuple(int(i) for i in entry["word"])
            terms[word] = terms.get(word, Fraction(0)) + Fraction(entry["coeff"])
        return cls(terms)


@dataclass
class BraidedAlgebraSpec:
    """Basis-indexed braiding and multiplication tables on V.

    dim None means a lazily extended basis y_1, y_2, ...; lookups must then
    behave as pure functions.  Both tables must return indices >= 1.
    """

    name: str
    dim: int | None
    sigma_fn: Callable[[int, int], SigmaTerms]
    mul_fn: Callable[[int, int], MulTerms]
    zero_mul: bool = False
    _sigma_cache: dict = field(default_factory=dict, repr=False)
    _mul_cache: dict = field(default_factory=dict, repr=False)

    def _check_index(self, i: int) -> None:
        if i < 1 or (self.dim is not None and i > self.dim):
            raise ValueError(f"basis index {i} out of range for algebra {self.name!r}")

    def sigma_terms(self, i: int, j: int) -> SigmaTerms:
        key = (i, j)
        if key not in self._sigma_cache:
            self._check_index(i)
            self._check_index(j)
            terms = tuple(((k, l), Fraction(c)) for (k, l), c in self.sigma_fn(i, j))
            for (k, l), _ in terms:
                if k < 1 or l < 1:
                    raise ValueError(f"sigma({i},{j}) leaves V: pair ({k},{l})")
            self._sigma_cache[key] = terms
        return self._sigma_cache[key]

    def mul_terms(self, i: int, j: int) -> MulTerms:
        key = (i, j)
        if key not in self._mul_cache:
            self._check_index(i)
            self._check_index(j)
            terms = tuple((k, Fraction(c)) for k, c in self.mul_fn(i, j))
            for k, _ in terms:
                if k < 1:
                    raise ValueError(f"mul({i},{j}) leaves V: index {k}")
            self._mul_cache[key] = terms
        return self._mul_cache[key]

    def mul_element(self, u: TensorElement) -> TensorElement:
        """Apply mul to every degree-2 pure tensor of u (degree-2 input only)."""
        out = TensorElement.zero()
        for (i, j), c in u.terms():
            for k, sc in self.mul_terms(i, j):
                out = out + TensorElement.pure((k,), c * sc)
        return out

    def probe_indices(self, count: int = 3) -> tuple[int, ...]:
        top = count if self.dim is None else min(count, self.dim)
        return tuple(range(1, top + 1))


def _flip_sigma(i: int, j: int) -> SigmaTerms:
    return (((j, i), Fraction(1)),)


def builtin_algebra(
    kind: str,
    q: Mapping[tuple[int, int], Fraction | int | str] | None = None,
    dim: int | None = None,
) -> BraidedAlgebraSpec:
    """Construct one of the built-in algebras.

    hoffman   -- flip braiding, additive multiplication y_i y_j = y_{i+j} on a
                 lazily extended basis.
    flip      -- like hoffman, but the additive multiplication is truncated to
                 0 beyond index `dim` when a dimension is given.
    flip_zero -- flip braiding with zero multiplication.
    diagonal  -- braiding y_i (x) y_j -> q[i,j] y_j (x) y_i (missing entries
                 default to 1) with zero multiplication; requires finite dim.
    """
    if kind == "hoffman":
        return BraidedAlgebraSpec(
            name="hoffman",
            dim=None,
            sigma_fn=_flip_sigma,
            mul_fn=lambda i, j: ((i + j, Fraction(1)),),
        )
    if kind == "flip":
        if dim is None:
            return builtin_algebra("hoffman")

        def truncated(i: int, j: int) -> MulTerms:
            return ((i + j, Fraction(1)),) if i + j <= dim else ()

        return BraidedAlgebraSpec(name=f"flip(dim={dim})", dim=dim, sigma_fn=_flip_sigma, mul_fn=truncated)
    if kind == "flip_zero":
        return BraidedAlgebraSpec(
            name="flip_zero",
            dim=None,
            sigma_fn=_flip_sigma,
            mul_fn=lambda i, j: (),
            zero_mul=True,
        )
    if kind == "diagonal":
        table = {key: Fraction(value) for key, value in (q or {}).items()}
        if any(c == 0 for c in table.values()):
            raise ValueError("diagonal parameters must be nonzero")
        if dim is None:
            dim = max((max(i, j) for i, j in table), default=3)

        def diag_sigma(i: int, j: int) -> SigmaTerms:
            return (((j, i), table.get((i, j), Fraction(1))),)

        return BraidedAlgebraSpec(
            name=f"diagonal(dim={dim})",
            dim=dim,
            sigma_fn=diag_sigma,
            mul_fn=lambda i, j: (),
            zero_mul=True,
        )
    raise ValueError(f"unknown builtin algebra {kind!r}")


def algebra_from_json(data: Mapping) -> BraidedAlgebraSpec:
    """Load an algebra from its JSON description.

    Either {"builtin": name, ...parameters} or an explicit table form
    {"dim": d | "unbounded", "sigma": [...], "m": [...]}.  For unbounded
    table specs, missing sigma entries default to the flip and missing
    multiplication entries to zero.
    """
    if "builtin" in data:
        q_raw = data.get("q", {})
        q = {tuple(int(t) for t in key.split(",")): Fraction(value) for key, value in q_raw.items()}
        return builtin_algebra(data["builtin"], q=q or None, dim=data.get("dim"))
    dim_raw = data.get("dim", "unbounded")
    dim = None if dim_raw == "unbounded" else int(dim_raw)
    sigma_table: dict[tuple[int, int], SigmaTerms] = {}
    for entry in data.get("sigma", ()):
        key = (int(entry["i"]), int(entry["j"]))
        sigma_table[key] = tuple(
            ((int(t["k"]), int(t["l"])), Fraction(t["c"])) for t in entry["terms"]
        )
    mul_table: dict[tuple[int, int], MulTerms] = {}
    for entry in data.get("m", ()):
        key = (int(entry["i"]), int(entry["j"]))
        mul_table[key] = tuple((int(t["k"]), Fraction(t["c"])) for t in entry["terms"])

    if dim is not None:
        missing = [
            (i, j)
            for i in range(1, dim + 1)
            for j in range(1, dim + 1)
            if (i, j) not in sigma_table
        ]
        if missing:
            raise ValueError(f"sigma table incomplete: missing {missing[:3]}...")

    def sigma_fn(i: int, j: int) -> SigmaTerms:
        return sigma_table.get((i, j), _flip_sigma(i, j))

    def mul_fn(i: int, j: int) -> MulTerms:
        return mul_table.get((i, j), ())

    return BraidedAlgebraSpec(
        name=data.get("name", "custom"),
        dim=dim,
        sigma_fn=sigma_fn,
        mul_fn=mul_fn,
        zero_mul=not mul_table,
    )


def apply_generator(spec: BraidedAlgebraSpec, letter: GvbLetter, t: TensorElement) -> TensorElement:
    """Act by a single generator at slots (index, index+1); linear in t."""
    i = letter.index
    terms: dict[tuple[int, ...], Fraction] = {}

    def add(word: tuple[int, ...], coeff: Fraction) -> None:
        terms[word] = terms.get(word, Fraction(0)) + coeff

    for word, coeff in t._terms.items():
        if i + 1 > len(word):
            raise ValueError(f"letter {letter} does not fit a degree-{len(word)} tensor")
        a, v = word[i - 1], word[i]
        head, tail = word[: i - 1], word[i + 1 :]
        if letter.kind == BRAID:
            if a == 0 and v == 0:
                add(head + (0, 0) + tail, coeff)
            elif a == 0:
                add(head + (v, 0) + tail, coeff)
            elif v == 0:
                add(head + (0, a) + tail, coeff)
            else:
                for (k, l), sc in spec.sigma_terms(a, v):
                    add(head + (k, l) + tail, coeff * sc)
        else:
            if a == 0 and v == 0:
                add(head + (0, 0) + tail, coeff)
            elif a == 0:
                add(head + (0, v) + tail, coeff)
            elif v == 0:
                add(head + (0, a) + tail, coeff)
            else:
                for k, sc in spec.mul_terms(a, v):
                    add(head + (0, k) + tail, coeff * sc)
    return TensorElement(terms)


def act(spec: BraidedAlgebraSpec, element, t: TensorElement) -> TensorElement:
    """Act by a word or word sum; the rightmost letter acts first."""
    if isinstance(element, GvbWord):
        out = t
        for letter in reversed(element.letters):
            out = apply_generator(spec, letter, out)
        return out
    if isinstance(element, GvbElement):
        total = TensorElement.zero()
        for word, coeff in element.terms():
            total = total + coeff * act(spec, word, t)
        return total
    raise TypeError(f"cannot act by {type(element).__name__}")


def delete_units(t: TensorElement) -> TensorElement:
    """Erase every unit slot; the result usually mixes degrees."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for word, coeff in t._terms.items():
        key = tuple(i for i in word if i != 0)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return TensorElement(terms)


@dataclass
class CheckFailure:
    name: str
    witness: str
    lhs: str
    rhs: str


@dataclass
class ValidationReport:
    ok: bool
    failures: list[CheckFailure]

    def summary(self) -> str:
        if self.ok:
            return "all relations hold on the probe set"
        f = self.failures[0]
        return f"{f.name} fails on {f.witness}: {f.lhs} != {f.rhs}"


RANK3_RELATIONS = (
    ("braid", "b1 b2 b1", "b2 b1 b2"),
    ("virtual braid", "x1 x2 x1", "x2 x1 x2"),
    ("mixed lower", "x1 b2 b1", "b2 b1 x2"),
    ("mixed upper", "x2 b1 b2", "b1 b2 x1"),
)


def gvb_relations(n: int) -> list[tuple[str, GvbWord, GvbWord]]:
    """All defining relations of the rank-n word monoid as word pairs."""
    out = []
    for i in range(1, n - 1):
        for name, lhs, rhs in RANK3_RELATIONS:
            shift = i - 1
            out.append(
                (
                    f"{name} at {i}",
                    GvbWord.parse(3, lhs).shifted(shift, n),
                    GvbWord.parse(3, rhs).shifted(shift, n),
                )
            )
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            for a, c in (("b", "b"), ("b", "x"), ("x", "b"), ("x", "x")):
                out.append(
                    (
                        f"distant {a}{i} {c}{j}",
                        GvbWord.parse(n, f"{a}{i} {c}{j}"),
                        GvbWord.parse(n, f"{c}{j} {a}{i}"),
                    )
                )
    return out


def validate_braided(
    spec: BraidedAlgebraSpec, probe_indices: Iterable[int] | None = None
) -> ValidationReport:
    """Probe the rank-3 relations, multiplication associativity, and unit rules.

    Probes run over all triples from {unit} + the given indices (default: the
    first three generators).  Returns the first witness per failed check.
    """
    gens = tuple(probe_indices) if probe_indices is not None else spec.probe_indices()
    basis = (0,) + gens
    failures: list[CheckFailure] = []

    for name, lhs_text, rhs_text in RANK3_RELATIONS:
        lhs = GvbWord.parse(3, lhs_text)
        rhs = GvbWord.parse(3, rhs_text)
        for triple in itertools.product(basis, repeat=3):
            t = TensorElement.pure(triple)
            left, right = act(spec, lhs, t), act(spec, rhs, t)
            if left != right:
                failures.append(CheckFailure(name, str(t), str(left), str(right)))
                break

    for triple in itertools.product(gens, repeat=3):
        a, v, c = triple
        left = spec.mul_element(spec.mul_element(TensorElement.pure((a, v))).tensor(TensorElement.pure((c,))))
        right = spec.mul_element(TensorElement.pure((a,)).tensor(spec.mul_element(TensorElement.pure((v, c)))))
        if left != right:
            failures.append(
                CheckFailure("multiplication associativity", str(TensorElement.pure(triple)), str(left), str(right))
            )
            break

    # Unit rules are wired into apply_generator; spot-check them anyway so a
    # regression there surfaces as a validation failure.
    for g in gens:
        checks = (
            ("b", (0, g), (g, 0)),
            ("b", (g, 0), (0, g)),
            ("b", (0, 0), (0, 0)),
            ("x", (0, g), (0, g)),
            ("x", (g, 0), (0, g)),
            ("x", (0, 0), (0, 0)),
        )
        for kind, src, expect in checks:
            got = act(spec, GvbWord.parse(2, f"{kind}1"), TensorElement.pure(src))
            if got != TensorElement.pure(expect):
                failures.append(
                    CheckFailure("unit rule", str(TensorElement.pure(src)), str(got), str(TensorElement.pure(expect)))
                )
    return ValidationReport(not failures, failures)


def ensure_valid(spec: BraidedAlgebraSpec, probe_indices: Iterable[int] | None = None) -> BraidedAlgebraSpec:
    report = validate_braided(spec, probe_indices)
    if not report.ok:
        raise SpecValidationError(report)
    return spec
