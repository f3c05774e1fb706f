"""
Kernels of symmetrization operators and degree-by-degree relation lifting.

The full symmetrization kernel is the defining ideal of the deformed
product algebra; its braid-only analogue is the defining ideal of the
undeformed one.  Both are computed on finite slices: the caller fixes a
window of generator indices and a degree bound, the codomain closes itself
under whatever the action produces.

Relation lifting follows the filtration: a degree-n element killed by the
braid-only symmetrizer is corrected by lower-degree terms solving an exact
linear system.  The correction is not unique; the echelon representative
with all free variables zero is returned.  A window too small to contain
the needed correction surfaces as UnliftableError rather than a guess.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .braided import BraidedAlgebraSpec, TensorElement, act
from .linalg import nullspace, rref, solve
from .products import qq_product, quantum_shuffle_product, total_symmetrize
from .words import braid_symmetrizer


class NotARelationError(ValueError):
    """The top-degree part is not killed by the braid-only symmetrizer."""


class UnliftableError(ValueError):
    """No correction over the given window solves the lifting system."""

    def __init__(self, message: str, residual: TensorElement):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class RelationBasis:
    """Echelonized kernel slice: independent elements with unit pivots."""

    window: tuple[int, ...]
    max_degree: int
    elements: tuple[TensorElement, ...]
    pivots: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {
            "window": list(self.window),
            "max_degree": self.max_degree,
            "dimension": self.dimension,
            "pivots": [list(p) for p in self.pivots],
            "elements": [e.to_json() for e in self.elements],
        }


def words_over(window: Iterable[int], degrees: Iterable[int]) -> list[tuple[int, ...]]:
    """All index words with the given degrees, in graded lexicographic order."""
    window = sorted(set(window))
    out: list[tuple[int, ...]] = []
    for d in sorted(set(degrees)):
        out.extend(itertools.product(window, repeat=d))
    return out


def braid_symmetrize(spec: BraidedAlgebraSpec, t: TensorElement) -> TensorElement:
    """Act by the braid-only symmetrizer degreewise (degrees 0, 1 fixed)."""
    out = TensorElement.zero()
    for word, coeff in t.terms():
        n = len(word)
        if n <= 1:
            out = out + TensorElement.pure(word, coeff)
        else:
            out = out + act(spec, braid_symmetrizer(n), TensorElement.pure(word, coeff))
    return out


def _kernel_basis(
    apply_fn: Callable[[TensorElement], TensorElement],
    domain: list[tuple[int, ...]],
    window: tuple[int, ...],
    max_degree: int,
) -> RelationBasis:
    """Exact kernel of a linear map on the span of the domain words."""
    images = [apply_fn(TensorElement.pure(word)) for word in domain]
    codomain = sorted({w for img in images for w in img.support()}, key=lambda w: (len(w), w))
    row_index = {w: r for r, w in enumerate(codomain)}
    rows = [[Fraction(0)] * len(domain) for _ in codomain]
    for col, img in enumerate(images):
        for word, coeff in img.terms():
            rows[row_index[word]][col] = coeff
    vectors = nullspace(rows, len(domain))
    # Re-echelonize the kernel vectors so the basis itself is in reduced row
    # echelon form over the graded-lex column order, pivots normalized to 1.
    reduced, pivot_cols = rref(vectors)
    elements = tuple(
        TensorElement({domain[c]: v for c, v in enumerate(row) if v}) for row in reduced
    )
    pivots = tuple(domain[c] for c in pivot_cols)
    return RelationBasis(window, max_degree, elements, pivots)


def kernel_braid_symmetrizer(spec: BraidedAlgebraSpec, window: Iterable[int], degree: int) -> RelationBasis:
    """Kernel of the braid-only symmetrizer on degree-n words over the window."""
    window = tuple(sorted(set(window)))
    if not window:
        raise ValueError("window must be nonempty")
    domain = words_over(window, [degree])
    return _kernel_basis(lambda t: braid_symmetrize(spec, t), domain, window, degree)


def kernel_total_symmetrization(spec: BraidedAlgebraSpec, window: Iterable[int], max_degree: int) -> RelationBasis:
    """Kernel of the full symmetrization on words of degree <= max_degree."""
    window = tuple(sorted(set(window)))
    if not window:
        raise ValueError("window must be nonempty")
    domain = words_over(window, range(1, max_degree + 1))
    return _kernel_basis(lambda t: total_symmetrize(spec, t), domain, window, max_degree)


def w_action(spec: BraidedAlgebraSpec, t: TensorElement, variant: str = "left") -> TensorElement:
    """Action of the correction part: full symmetrization minus braid-only.

    On a homogeneous degree-n input every output term has degree below n;
    on kernel elements of the braid-only symmetrizer it coincides with the
    full symmetrization.
    """
    if not t.is_homogeneous():
        raise ValueError("input must be homogeneous")
    return total_symmetrize(spec, t, variant) - braid_symmetrize(spec, t)


def mul_closure(spec: BraidedAlgebraSpec, window: Iterable[int], rounds: int) -> tuple[int, ...]:
    """Indices reachable from the window by at most `rounds` table applications."""
    reachable = set(window)
    for _ in range(max(rounds, 0)):
        new = set(reachable)
        for i in reachable:
            for j in reachable:
                for k, _ in spec.mul_terms(i, j):
                    new.add(k)
                for (k, l), _ in spec.sigma_terms(i, j):
                    new.add(k)
                    new.add(l)
        if new == reachable:
            break
        reachable = new
    return tuple(sorted(reachable))


def lift_relation(
    spec: BraidedAlgebraSpec,
    xbar: TensorElement,
    window: Iterable[int] | None = None,
    variant: str = "left",
) -> TensorElement:
    """Complete a braid-only relation to a full-symmetrization relation.

    Solves for lower-degree terms y with QS(xbar + y) = 0 by exact
    elimination over the window closure; returns xbar + y.
    """
    if not xbar or not xbar.is_homogeneous():
        raise ValueError("input must be nonzero and homogeneous")
    n = xbar.max_degree()
    if n < 2:
        raise ValueError("degree must be at least 2")
    if braid_symmetrize(spec, xbar):
        raise NotARelationError(f"braid-only symmetrizer does not kill {xbar}")
    rhs = -1 * total_symmetrize(spec, xbar, variant)
    if not rhs:
        return xbar
    base = set(window) if window is not None else {i for w in xbar.support() for i in w}
    closure = mul_closure(spec, base, n - 1)
    domain = words_over(closure, range(1, n))
    images = [total_symmetrize(spec, TensorElement.pure(word), variant) for word in domain]
    codomain = sorted(
        {w for img in images for w in img.support()} | rhs.support(),
        key=lambda w: (len(w), w),
    )
    row_index = {w: r for r, w in enumerate(codomain)}
    rows = [[Fraction(0)] * len(domain) for _ in codomain]
    for col, img in enumerate(images):
        for word, coeff in img.terms():
            rows[row_index[word]][col] = coeff
    rhs_vec = [rhs.coefficient(w) for w in codomain]
    solution = solve(rows, rhs_vec)
    if solution is None:
        raise UnliftableError(
            f"no degree-<{n} correction over window {closure} lifts {xbar}", rhs
        )
    correction = TensorElement({domain[c]: v for c, v in enumerate(solution) if v})
    return xbar + correction


def top_component(t: TensorElement, degree: int) -> TensorElement:
    return t.component(degree)


@dataclass
class IdealCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class IdealReport:
    checks: list[IdealCheck]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[IdealCheck]:
        return [c for c in self.checks if not c.passed]


def graded_product_check(spec: BraidedAlgebraSpec, probe_pairs: Iterable[tuple[TensorElement, TensorElement]]) -> IdealReport:
    """Top-degree part of the deformed product equals the undeformed product."""
    checks = []
    for left, right in probe_pairs:
        degree = left.max_degree() + right.max_degree()
        top = top_component(qq_product(spec, left, right), degree)
        plain = quantum_shuffle_product(spec, left, right)
        ok = top == plain
        checks.append(
            IdealCheck(
                f"graded part of ({left}) * ({right})",
                ok,
                "" if ok else f"{top} != {plain}",
            )
        )
    return IdealReport(checks)


def is_braided_commutative(spec: BraidedAlgebraSpec, window: Iterable[int]) -> bool:
    """Probe mul(sigma(u (x) v)) == mul(u (x) v) on window pairs."""
    for i, j in itertools.product(sorted(set(window)), repeat=2):
        direct = spec.mul_element(TensorElement.pure((i, j)))
        twisted = TensorElement.zero()
        for (k, l), c in spec.sigma_terms(i, j):
            twisted = twisted + c * spec.mul_element(TensorElement.pure((k, l)))
        if direct != twisted:
            return False
    return True


def commutativity_check(spec: BraidedAlgebraSpec, window: Iterable[int], max_degree: int) -> IdealReport:
    """Probe x * y == y * x for pure tensors over the window.

    Requires the multiplication to be braided commutative (probe-verified);
    the braiding itself may still fail to be symmetric, in which case the
    report records witnesses.
    """
    window = tuple(sorted(set(window)))
    if not is_braided_commutative(spec, window):
        raise ValueError("multiplication is not braided commutative on the window")
    checks = []
    probes = words_over(window, range(1, max_degree + 1))
    for u in probes:
        for v in probes:
            if len(u) + len(v) > max_degree:
                continue
            left = qq_product(spec, TensorElement.pure(u), TensorElement.pure(v))
            right = qq_product(spec, TensorElement.pure(v), TensorElement.pure(u))
            ok = left == right
            checks.append(
                IdealCheck(
                    f"commutation of {TensorElement.pure(u)} and {TensorElement.pure(v)}",
                    ok,
                    "" if ok else f"{left} != {right}",
                )
            )
    return IdealReport(checks)
