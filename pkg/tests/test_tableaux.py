import itertools
import math

from snhecke.perm import Permutation, identity, longest_element, parse_perm
from snhecke.tableaux import (
    a_value,
    cell_involution,
    cell_members,
    dominance_leq,
    is_fully_commutative,
    right_cell_involution,
    rs,
    rs_inverse,
    same_cell,
    shape_of,
    standard_tableaux,
    syt_count,
    transpose,
)


def all_perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def test_rs_worked_example():
    w = parse_perm("1524376", 7)
    P, Q = rs(w)
    assert P == ((1, 2, 3, 6), (4, 7), (5,))
    assert Q == ((1, 2, 4, 6), (3, 7), (5,))
    assert shape_of(w) == (4, 2, 1)
    assert sorted(w.right_descents()) == [2, 4, 6]


def test_rs_identity():
    for n in (1, 3, 6):
        P, Q = rs(identity(n))
        assert P == Q == (tuple(range(1, n + 1)),)


def test_rs_inverse_swaps_tableaux():
    for w in all_perms(5):
        P, Q = rs(w)
        Pi, Qi = rs(w.inverse())
        assert (Pi, Qi) == (Q, P)


def test_rs_bijective_small():
    for n in range(1, 6):
        seen = set()
        for w in all_perms(n):
            P, Q = rs(w)
            assert [len(r) for r in P] == [len(r) for r in Q]
            seen.add((P, Q))
            assert rs_inverse(P, Q) == w
        # every same-shape pair of standard tableaux is hit
        total = sum(syt_count(sh) ** 2 for sh in _partitions(n))
        assert len(seen) == math.factorial(n) == total


def _partitions(n, cap=None):
    cap = cap or n
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def test_dominance():
    assert dominance_leq((3, 2, 2), (4, 2, 1))
    assert dominance_leq((4, 2, 1), (5, 2))
    assert not dominance_leq((4, 1, 1, 1), (3, 3, 1))
    assert not dominance_leq((3, 3, 1), (4, 1, 1, 1))
    for lam in _partitions(6):
        assert dominance_leq(lam, lam)
        assert transpose(transpose(lam)) == lam


def test_syt_count_against_enumeration():
    for n in range(1, 7):
        for lam in _partitions(n):
            assert syt_count(lam) == len(standard_tableaux(lam))
    assert syt_count((7,)) == 1
    assert syt_count((2, 1)) == 2


def test_syt_squares_sum_to_factorial():
    for n in range(1, 8):
        assert sum(syt_count(lam) ** 2 for lam in _partitions(n)) == math.factorial(n)


def test_cells():
    for w in all_perms(4):
        members = cell_members(w, "left")
        assert len([m for m in members if m.is_involution()]) == 1
        assert len(members) == syt_count(shape_of(w))
        assert cell_involution(w) in members
    for x in all_perms(5)[::7]:
        for y in all_perms(5)[::11]:
            assert same_cell(x, y, "left") == same_cell(x.inverse(), y.inverse(), "right")


def test_cell_involutions():
    for w in all_perms(5):
        li = cell_involution(w)
        ri = right_cell_involution(w)
        assert li.is_involution() and same_cell(w, li, "left")
        assert ri.is_involution() and same_cell(w, ri, "right")


def test_descent_compatibility_s5():
    """Right descents read off the recording tableau: i sits in a strictly
    higher row than i+1 exactly at the descents."""
    def row_of(t, v):
        for r, row in enumerate(t):
            if v in row:
                return r
        raise AssertionError

    for w in all_perms(5):
        _, Q = rs(w)
        for i in range(1, 5):
            assert (i in w.right_descents()) == (row_of(Q, i) < row_of(Q, i + 1))


def test_a_value():
    assert a_value(identity(5)) == 0
    assert a_value(longest_element(7)) == 21
    x = parse_perm("3_14_35_26_3", 7)
    assert shape_of(x) == (3, 3, 1)
    assert a_value(x) == 5


def test_a_value_on_parabolic_longest_elements():
    """The closed form agrees with the defining property on every subset."""
    for n in (5, 7):
        for size in range(n):
            for subset in itertools.combinations(range(1, n), size):
                w = longest_element(n, subset)
                assert a_value(w) == w.length(), subset


def test_a_constant_on_shapes_s5():
    by_shape = {}
    for w in all_perms(5):
        by_shape.setdefault(shape_of(w), set()).add(a_value(w))
    assert all(len(v) == 1 for v in by_shape.values())


def test_fully_commutative():
    from snhecke.patterns import occurrences

    assert is_fully_commutative(parse_perm("13", 7))
    assert not is_fully_commutative(longest_element(4))
    # the two-row-shape characterization matches 321-avoidance
    for w in all_perms(5):
        assert is_fully_commutative(w) == (not occurrences(w, (3, 2, 1)))
