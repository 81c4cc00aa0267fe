import itertools

import pytest

from snhecke.perm import (
    ParabolicContext,
    Permutation,
    compressed_str,
    enumerate_involutions,
    from_word,
    identity,
    longest_element,
    parse_perm,
    simple_reflection,
)


def all_perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def brute_reduced_words(w, cap=None):
    """All reduced words of w by breadth-first search over the Cayley graph."""
    n = w.n
    target_len = w.length()
    words = []

    def extend(u, word):
        if len(word) == target_len:
            if u == w:
                words.append(tuple(word))
            return
        for k in range(1, n):
            v = u.times_s(k)
            if v.length() == u.length() + 1:
                extend(v, word + [k])

    extend(identity(n), [])
    return words


def test_compose_examples():
    w = parse_perm("1524376", 7)
    assert (w * simple_reflection(2, 7)).one_line == (1, 2, 5, 4, 3, 7, 6)
    assert w * identity(7) == w
    s1, s2 = simple_reflection(1, 3), simple_reflection(2, 3)
    assert s1 * s2 * s1 == s2 * s1 * s2


def test_group_axioms_exhaustive_s4():
    perms = all_perms(4)
    for x in perms:
        assert x * x.inverse() == identity(4)
        assert x.inverse().inverse() == x
    for x, y, z in itertools.islice(itertools.product(perms, repeat=3), 0, None, 7):
        assert (x * y) * z == x * (y * z)


def test_degree_mismatch():
    with pytest.raises(ValueError):
        identity(3) * identity(4)


def test_descents():
    w = parse_perm("1524376", 7)
    assert sorted(w.right_descents()) == [2, 4, 6]
    assert identity(5).right_descents() == frozenset()
    assert sorted(longest_element(4).right_descents()) == [1, 2, 3]


def test_descent_criterion_exhaustive_s5():
    for w in all_perms(5):
        for k in range(1, 5):
            assert (k in w.right_descents()) == (w.times_s(k).length() < w.length())
            assert (k in w.left_descents()) == (w.s_times(k).length() < w.length())


def test_length_and_reduced_word():
    assert identity(5).reduced_word() == ()
    assert longest_element(3).reduced_word() == (1, 2, 1)
    for w in all_perms(4):
        word = w.reduced_word()
        assert from_word(word, 4) == w
        assert len(word) == w.length()
        words = brute_reduced_words(w)
        assert word == min(words)


def test_reduced_word_matches_display_convention():
    w = from_word((2, 3, 2, 4, 3, 2, 1, 5, 4), 7)
    assert w.reduced_word() == (2, 3, 2, 4, 3, 2, 1, 5, 4)
    assert compressed_str(w) == "23_24_15_4"


def test_bruhat_examples():
    e = identity(4)
    for w in all_perms(4):
        assert e.bruhat_leq(w)
    s1, s2 = simple_reflection(1, 3), simple_reflection(2, 3)
    assert s1.bruhat_leq(s1 * s2)
    assert not s2.bruhat_leq(s1)


def test_bruhat_subword_oracle_s4():
    """The rank-matrix criterion against the subword characterization."""
    perms = all_perms(4)
    words = {w: brute_reduced_words(w) for w in perms}

    def is_subword_of(small, big):
        # scan one fixed reduced word of big for a subword equal to ANY
        # reduced word of small; the characterization allows any choice
        for target in words[small]:
            big_word = words[big][0]
            it = iter(big_word)
            if all(ch in it for ch in target):
                return True
        return False

    for x in perms:
        for y in perms:
            assert x.bruhat_leq(y) == is_subword_of(x, y), (x, y)


def test_bruhat_refines_length_s5():
    perms = all_perms(5)
    for x in perms[::3]:
        for y in perms[::5]:
            if x != y and x.bruhat_leq(y):
                assert x.length() < y.length()


def test_support():
    assert sorted(parse_perm("2,3,2", 5).support()) == [2, 3]
    assert longest_element(7).support() == frozenset(range(1, 7))
    for w in all_perms(5):
        assert w.support() == set(w.reduced_word())


def test_longest_elements():
    assert longest_element(7).one_line == (7, 6, 5, 4, 3, 2, 1)
    assert longest_element(7).length() == 21
    w = longest_element(7, {2, 3, 4})
    assert w.one_line == (1, 5, 4, 3, 2, 6, 7)


def test_coset_decompose():
    ctx = ParabolicContext(7, frozenset({2, 3, 4, 5, 6}))
    z, y = ctx.coset_decompose(simple_reflection(1, 7))
    assert z == simple_reflection(1, 7) and y.is_identity()
    for w in all_perms(5):
        for size in range(5):
            for subset in itertools.combinations(range(1, 5), size):
                ctx = ParabolicContext(5, frozenset(subset))
                z, yy = ctx.coset_decompose(w)
                assert z * yy == w
                assert z.length() + yy.length() == w.length()
                assert yy.support() <= set(subset)
    # inside the subgroup the minimal representative is trivial
    ctx = ParabolicContext(5, frozenset({1, 2}))
    w = from_word((1, 2), 5)
    z, y = ctx.coset_decompose(w)
    assert z.is_identity() and y == w


def test_parabolic_components_round_trip():
    ctx = ParabolicContext(7, frozenset({1, 2, 4, 5}))
    w = from_word((1, 4), 7)
    c = ctx.components(w)
    assert [x.one_line for x in c] == [(2, 1, 3), (2, 1, 3)]
    assert ctx.embed(c) == w
    ctx5 = ParabolicContext(5, frozenset({1, 3, 4}))
    for w in all_perms(5):
        if ctx5.contains(w):
            assert ctx5.embed(ctx5.components(w)) == w
    with pytest.raises(ValueError):
        ctx5.components(simple_reflection(2, 5))


def test_involutions():
    counts = [len(enumerate_involutions(n)) for n in range(1, 8)]
    assert counts == [1, 2, 4, 10, 26, 76, 232]
    for d in enumerate_involutions(5):
        assert (d * d).is_identity()


def test_w0_conjugate():
    for k in range(1, 7):
        assert simple_reflection(k, 7).w0_conjugate() == simple_reflection(7 - k, 7)
    for w in all_perms(4):
        assert w.w0_conjugate() == longest_element(4) * w * longest_element(4)


def test_parse_forms():
    assert parse_perm("1524376", 7).one_line == (1, 5, 2, 4, 3, 7, 6)
    assert parse_perm("1,2,1,3", 5) == from_word((1, 2, 1, 3), 5)
    assert parse_perm("12_1", 3) == longest_element(3)
    assert parse_perm("21", 7) == from_word((2, 1), 7)
    assert parse_perm("21", 2) == longest_element(2)
    assert parse_perm("e", 6).is_identity()
    assert parse_perm("232432154", 7) == parse_perm("23_24_15_4", 7)
    with pytest.raises(ValueError):
        parse_perm("1_3", 7)  # ascending run is not a valid compression
    with pytest.raises(ValueError):
        parse_perm("xyz", 4)


def test_compressed_round_trip_s5():
    for w in all_perms(5):
        assert parse_perm(compressed_str(w), 5) == w


def test_trivial_degrees():
    assert identity(1).length() == 0
    assert enumerate_involutions(1) == [identity(1)]
    assert longest_element(1).is_identity()
    assert identity(1).reduced_word() == ()
