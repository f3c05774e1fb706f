import itertools
import math

import pytest
from fractions import Fraction

from quasishuffle.permutations import (
    PermSum,
    Permutation,
    all_permutations,
    bubble_decompose,
    composition_to_descents,
    descent_class_order,
    descent_factorize,
    descent_factorize_alt,
    descent_symmetrizer,
    descents_to_composition,
    enumerate_descent_class,
    enumerate_shuffles,
    parse_permutation,
    partial_symmetrizer,
    shuffle_split,
)


def perm(n, word):
    return Permutation.from_word(n, word)


def test_identity_is_neutral():
    e = Permutation.identity(3)
    p = perm(3, [1, 2])
    assert e * p == p and p * e == p


def test_composition_convention_matches_shuffle_membership():
    # The product convention is pinned by which of s1*s2 / s2*s1 lands in the
    # (2,1)-shuffle set: with "left factor acts first" we must get s1*s2 in.
    s1, s2 = Permutation.simple(1, 3), Permutation.simple(2, 3)
    assert (s1 * s2).images == (3, 1, 2)
    assert (s1 * s2).descent_set() == frozenset({2})
    assert (s1 * s2).is_shuffle(2, 1)
    # The opposite convention would compose the other way around and fail.
    other = Permutation(tuple(s1.images[v - 1] for v in s2.images))
    assert other.images == (2, 3, 1)
    assert not other.is_shuffle(2, 1)


def test_composition_rank_mismatch():
    with pytest.raises(ValueError):
        Permutation.identity(3) * Permutation.identity(4)


def test_known_one_line_forms():
    assert perm(4, [2, 3, 1]).images == (2, 4, 1, 3)
    assert sorted(perm(4, [2, 3, 1]).descent_set()) == [1, 3]


def test_descent_examples():
    assert Permutation.identity(5).descent_set() == frozenset()
    assert perm(3, [1, 2, 1]).descent_set() == frozenset({1, 2})
    members = ["s1 s3", "s2 s3 s1", "s3 s2 s1 s3", "s1 s2 s3 s1", "s3 s2 s1 s2 s3"]
    for text in members:
        assert parse_permutation(text, 4).descent_set() == frozenset({1, 3})


def brute_force_shuffles(p, q, shift, n):
    out = set()
    for s in all_permutations(n):
        pos = s.inverse().images
        fixed = all(s(v) == v for v in range(1, shift + 1)) and all(
            s(v) == v for v in range(shift + p + q + 1, n + 1)
        )
        first = [pos[v - 1] for v in range(shift + 1, shift + p + 1)]
        second = [pos[v - 1] for v in range(shift + p + 1, shift + p + q + 1)]
        if fixed and first == sorted(first) and second == sorted(second):
            out.add(s)
    return out


@pytest.mark.parametrize(
    "p,q,shift,n",
    [(1, 1, 0, 2), (2, 1, 0, 3), (2, 1, 1, 4), (1, 2, 0, 4), (2, 2, 1, 5)],
)
def test_enumerate_shuffles_against_brute_force(p, q, shift, n):
    got = set(enumerate_shuffles(p, q, shift, n))
    assert got == brute_force_shuffles(p, q, shift, n)
    assert len(got) == math.comb(p + q, p)


def test_enumerate_shuffles_known_sets():
    assert set(enumerate_shuffles(1, 1)) == {Permutation.identity(2), Permutation.simple(1, 2)}
    assert set(enumerate_shuffles(2, 1)) == {
        Permutation.identity(3),
        Permutation.simple(2, 3),
        perm(3, [1, 2]),
    }
    assert set(enumerate_shuffles(1, 1, shift=1, n=4)) == {
        Permutation.identity(4),
        Permutation.simple(2, 4),
    }
    assert set(enumerate_shuffles(2, 1, shift=1, n=4)) == {
        Permutation.identity(4),
        Permutation.simple(3, 4),
        perm(4, [2, 3]),
    }


def test_enumerate_shuffles_bounds():
    with pytest.raises(ValueError):
        enumerate_shuffles(2, 2, shift=1, n=4)


def test_descent_class_exact_and_leq():
    assert enumerate_descent_class(3, {1, 2}, "exact") == [perm(3, [1, 2, 1])]
    listed = [
        "e", "s1", "s2 s1", "s3 s2 s1", "s3", "s2 s3", "s1 s2 s3",
        "s1 s3", "s2 s3 s1", "s3 s2 s1 s3", "s1 s2 s3 s1", "s3 s2 s1 s2 s3",
    ]
    expected = {parse_permutation(t, 4) for t in listed}
    got = enumerate_descent_class(4, {1, 3}, "leq")
    assert set(got) == expected
    assert len(got) == 12 == descent_class_order(4, {1, 3})


def test_singleton_class_is_shuffle_set():
    for n in range(2, 7):
        for i in range(1, n):
            members = {Permutation.identity(n)} | set(enumerate_descent_class(n, {i}))
            assert members == set(enumerate_shuffles(i, n - i, 0, n))


def test_composition_bijection_examples():
    assert composition_to_descents((1, 2, 1)) == frozenset({1, 3})
    assert composition_to_descents((1,) * 5) == frozenset({1, 2, 3, 4})
    assert descents_to_composition({1, 3}, 4) == (1, 2, 1)


def test_composition_bijection_round_trip():
    for n in range(1, 8):
        for r in range(n):
            for cuts in itertools.combinations(range(1, n), r):
                parts = descents_to_composition(cuts, n)
                assert sum(parts) == n and all(c >= 1 for c in parts)
                assert composition_to_descents(parts) == frozenset(cuts)


def test_bubble_known_values():
    assert bubble_decompose(Permutation.identity(4)).starts == (0, 0, 0)
    assert bubble_decompose(perm(3, [2, 1])).starts == (2, 1)
    w0 = Permutation.longest(3)
    decomposition = bubble_decompose(w0)
    assert [f.word() for f in decomposition.factors()] == [(1, 2), (1,)]
    # The full rank-3 bubble table.
    table = {
        "e": ("e", "e"),
        "s1": ("e", "s1"),
        "s2": ("s2", "e"),
        "s1 s2": ("s1 s2", "e"),
        "s2 s1": ("s2", "s1"),
        "s1 s2 s1": ("s1 s2", "s1"),
    }
    for text, factor_words in table.items():
        p = parse_permutation(text, 3)
        factors = bubble_decompose(p).factors()
        assert tuple(" ".join(f"s{i}" for i in f.word()) or "e" for f in factors) == factor_words


def test_bubble_reconstruction_and_reduced_length():
    for n in range(1, 6):
        for p in all_permutations(n):
            decomposition = bubble_decompose(p)
            assert decomposition.permutation() == p
            assert len(decomposition.word()) == p.length()
            assert Permutation.from_word(n, decomposition.word()) == p


def test_shuffle_split_is_parabolic_decomposition():
    for p in all_permutations(4):
        for m in range(5):
            u, rho = shuffle_split(p, m)
            assert u * rho == p
            assert u.is_shuffle(m, 4 - m)
            # rho preserves both value blocks
            assert all(rho(v) <= m for v in range(1, m + 1))


def test_descent_factorize_table_rows():
    assert descent_factorize(Permutation.identity(4), {1, 3}) == (
        Permutation.identity(4),
        Permutation.identity(4),
    )
    p = parse_permutation("s1 s3", 4)
    assert [f.word() for f in descent_factorize(p, {1, 3})] == [(3,), (1,)]
    p = parse_permutation("s3 s2 s1 s2 s3", 4)
    assert [f.word() for f in descent_factorize(p, {1, 3})] == [(1, 2, 3), (2, 1)]
    p = parse_permutation("s3 s2 s1 s3", 4)
    assert [f.word() for f in descent_factorize(p, {1, 3})] == [(2, 3), (2, 1)]


def test_descent_factorize_rejects_bad_descents():
    with pytest.raises(ValueError):
        descent_factorize(parse_permutation("s2", 4), {1, 3})
    with pytest.raises(ValueError):
        descent_factorize_alt(parse_permutation("s2", 4), {1, 3})


def test_descent_factorize_alt_longest_element():
    w0 = Permutation.longest(3)
    factors = descent_factorize_alt(w0, {1, 2})
    assert [f.word() for f in factors] == [(2, 1), (2,)]
    # Brute force: the unique pair in S_{1,2} x S_{1,1}^{up 1} multiplying to w0.
    pairs = [
        (a, b)
        for a in enumerate_shuffles(1, 2, 0, 3)
        for b in enumerate_shuffles(1, 1, 1, 3)
        if a * b == w0
    ]
    assert pairs == [tuple(factors)]


def test_descent_factorize_alt_round_trip():
    for p in enumerate_descent_class(4, {1, 3}, "leq"):
        factors = descent_factorize_alt(p, {1, 3})
        prod = Permutation.identity(4)
        for f in factors:
            prod = prod * f
        assert prod == p


def _blocks(parts):
    sums = [0] + list(itertools.accumulate(parts))
    return sums


def test_factorizations_are_bijections():
    # Both factorization maps hit the full cartesian product of shuffle sets.
    for n in range(2, 6):
        for r in range(1, n):
            for cuts in itertools.combinations(range(1, n), r):
                parts = descents_to_composition(cuts, n)
                members = enumerate_descent_class(n, cuts, "leq")
                sums = _blocks(parts)
                left_sets = [
                    enumerate_shuffles(sums[l], parts[l], 0, n) for l in range(1, len(parts))
                ]
                seen = set()
                for p in members:
                    factors = descent_factorize(p, cuts)
                    for f, pool in zip(factors, reversed(left_sets)):
                        assert f in pool
                    seen.add(factors)
                assert len(seen) == math.prod(len(s) for s in left_sets) == len(members)

                right_sets = [
                    enumerate_shuffles(parts[l - 1], n - sums[l], sums[l - 1], n)
                    for l in range(1, len(parts))
                ]
                seen = set()
                for p in members:
                    factors = descent_factorize_alt(p, cuts)
                    for f, pool in zip(factors, right_sets):
                        assert f in pool
                    seen.add(factors)
                assert len(seen) == len(members)


def test_perm_sum_basics():
    s = partial_symmetrizer(1, 1)
    assert s.terms() == [
        (Permutation.identity(2), Fraction(1)),
        (Permutation.simple(1, 2), Fraction(1)),
    ]
    d = descent_symmetrizer(4, {1, 3})
    assert len(d) == 12 and all(c == 1 for _, c in d.terms())
    assert PermSum.one(3) * PermSum.of(perm(3, [1, 2])) == PermSum.of(perm(3, [1, 2]))
    assert (d - d) == PermSum.zero(4)


def test_symmetrizer_factorization_small_case():
    # In rank 3 both products expand to the sum over the whole group.
    lhs = partial_symmetrizer(2, 1, 0, 3) * partial_symmetrizer(1, 1, 0, 3)
    rhs = partial_symmetrizer(1, 2, 0, 3) * partial_symmetrizer(1, 1, 1, 3)
    assert lhs == rhs == descent_symmetrizer(3, {1, 2})


def test_symmetrizer_factorization_sweep():
    for n in range(3, 7):
        for i in range(1, n):
            for j in range(i + 1, n):
                lhs = partial_symmetrizer(j, n - j, 0, n) * partial_symmetrizer(i, j - i, 0, n)
                rhs = partial_symmetrizer(i, n - i, 0, n) * partial_symmetrizer(j - i, n - j, i, n)
                assert lhs == rhs


def test_cardinality_law_small():
    for n in range(2, 6):
        for r in range(n):
            for cuts in itertools.combinations(range(1, n), r):
                members = enumerate_descent_class(n, cuts, "leq")
                assert len(members) == descent_class_order(n, cuts)
                split = [
                    q
                    for k in range(r + 1)
                    for sub in itertools.combinations(cuts, k)
                    for q in enumerate_descent_class(n, sub, "exact")
                ]
                assert sorted(p.images for p in split) == [p.images for p in members]


def test_parse_permutation_forms():
    assert parse_permutation("[2,4,1,3]").images == (2, 4, 1, 3)
    assert parse_permutation("2,4,1,3").images == (2, 4, 1, 3)
    assert parse_permutation("s1 s3", 4).images == (2, 1, 4, 3)
    assert parse_permutation("e", 3) == Permutation.identity(3)
    with pytest.raises(ValueError):
        parse_permutation("s1 s3")
    with pytest.raises(ValueError):
        parse_permutation("[2,2,1]")
