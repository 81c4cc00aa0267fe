"""
Robinson-Schensted machinery: shapes, standard Young tableaux, the insertion
bijection and its inverse, dominance order, cells of S_n, and the a-function.

Shapes are plain tuples of weakly decreasing positive integers; tableaux are
tuples of tuples of entries (rows).  Left/right cells of S_n are the fibres
of the recording/insertion tableau, and each cell contains a unique
involution, recovered by :func:`cell_involution`.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .perm import Permutation

__all__ = [
    "rs",
    "rs_inverse",
    "shape_of",
    "transpose",
    "dominance_leq",
    "syt_count",
    "standard_tableaux",
    "same_cell",
    "cell_members",
    "cell_involution",
    "a_value",
    "is_fully_commutative",
]


def _insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Row-insert x; return (row, col) of the new cell."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        for c, y in enumerate(row):
            if y > x:
                row[c], x = x, y
                break
        else:
            row.append(x)
            return r, len(row) - 1
        r += 1


def rs(w: Permutation) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """
    Schensted insertion of w(1), .., w(n): returns (P, Q) as row tuples.

    >>> P, Q = rs(Permutation((1, 5, 2, 4, 3, 7, 6)))
    >>> P
    ((1, 2, 3, 6), (4, 7), (5,))
    >>> Q
    ((1, 2, 4, 6), (3, 7), (5,))
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for k, x in enumerate(w.one_line, start=1):
        r, _ = _insert(p_rows, x)
        if r == len(q_rows):
            q_rows.append([k])
        else:
            q_rows[r].append(k)
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


def rs_inverse(P, Q) -> Permutation:
    """
    The permutation with insertion tableau P and recording tableau Q.

    >>> w = Permutation((1, 5, 2, 4, 3, 7, 6))
    >>> rs_inverse(*rs(w)) == w
    True
    """
    p_rows = [list(r) for r in P]
    q_rows = [list(r) for r in Q]
    if [len(r) for r in p_rows] != [len(r) for r in q_rows]:
        raise ValueError("P and Q must have the same shape")
    n = sum(len(r) for r in p_rows)
    out = [0] * n
    for k in range(n, 0, -1):
        for r, row in enumerate(q_rows):
            if row and row[-1] == k:
                row.pop()
                x = p_rows[r].pop()
                for rr in range(r - 1, -1, -1):
                    prow = p_rows[rr]
                    # reverse-bump through the largest entry smaller than x
                    c = len(prow) - 1
                    while c > 0 and prow[c] > x:
                        c -= 1
                    prow[c], x = x, prow[c]
                out[k - 1] = x
                break
        else:
            raise ValueError("Q is not standard")
    return Permutation(out)


def shape_of(w: Permutation) -> tuple[int, ...]:
    """RS shape of w.

    >>> shape_of(Permutation((1, 5, 2, 4, 3, 7, 6)))
    (4, 2, 1)
    """
    return tuple(len(r) for r in rs(w)[0])


def transpose(shape) -> tuple[int, ...]:
    """Conjugate partition.

    >>> transpose((4, 2, 1))
    (3, 2, 1, 1)
    """
    shape = tuple(shape)
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > c) for c in range(shape[0]))


def dominance_leq(lam, mu) -> bool:
    """Dominance order on partitions of the same n: prefix sums compare.

    >>> dominance_leq((3, 2, 2), (4, 2, 1)) and dominance_leq((4, 2, 1), (5, 2))
    True
    >>> dominance_leq((4, 1, 1, 1), (3, 3, 1))
    False
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def syt_count(shape) -> int:
    """Number of standard Young tableaux, by the hook length formula.

    >>> syt_count((2, 1))
    2
    >>> syt_count((3, 3, 1))
    21
    """
    shape = tuple(shape)
    n = sum(shape)
    col = transpose(shape)
    hooks = 1
    for r, row_len in enumerate(shape):
        for c in range(row_len):
            hooks *= (row_len - c) + (col[c] - r) - 1
    return math.factorial(n) // hooks


def standard_tableaux(shape):
    """All standard Young tableaux of the given shape, as row tuples."""
    shape = tuple(shape)
    n = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def fill(k: int):
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for r, row in enumerate(rows):
            if len(row) < shape[r] and (r == 0 or len(rows[r - 1]) > len(row)):
                row.append(k)
                yield from fill(k + 1)
                row.pop()

    return list(fill(1))


@lru_cache(maxsize=None)
def _cells_by_tableau(n: int, side: str):
    import itertools

    table: dict[tuple, list[Permutation]] = {}
    for ol in itertools.permutations(range(1, n + 1)):
        w = Permutation(ol)
        P, Q = rs(w)
        key = Q if side == "left" else P
        table.setdefault(key, []).append(w)
    return table


def same_cell(x: Permutation, y: Permutation, side: str = "left") -> bool:
    """Left cell: equal Q tableaux; right cell: equal P tableaux."""
    px, qx = rs(x)
    py, qy = rs(y)
    return qx == qy if side.lower().startswith("l") else px == py


def cell_members(w: Permutation, side: str = "left") -> list[Permutation]:
    """All members of the left/right cell of w, in one-line lex order."""
    side = "left" if side.lower().startswith("l") else "right"
    P, Q = rs(w)
    key = Q if side == "left" else P
    return _cells_by_tableau(w.n, side)[key]


def cell_involution(w: Permutation) -> Permutation:
    """The unique involution in the left cell of w (equals rs_inverse(Q, Q)).

    >>> cell_involution(Permutation((2, 3, 1))).is_involution()
    True
    """
    _, Q = rs(w)
    return rs_inverse(Q, Q)


def right_cell_involution(w: Permutation) -> Permutation:
    """The unique involution in the right cell of w."""
    P, _ = rs(w)
    return rs_inverse(P, P)


def a_value(w: Permutation) -> int:
    """
    Lusztig's a-function, computed from the RS shape as sum (i-1) * lambda_i.

    The formula is pinned by the two defining properties: constancy on a
    shape and agreement with the length of parabolic longest elements, both
    of which the test suite checks exhaustively for S_7.

    >>> a_value(Permutation((7, 6, 5, 4, 3, 2, 1)))
    21
    """
    return sum(i * part for i, part in enumerate(shape_of(w)))


def a_value_of_shape(shape) -> int:
    return sum(i * part for i, part in enumerate(shape))


def is_fully_commutative(w: Permutation) -> bool:
    """Fully commutative elements are those whose RS shape has at most two rows."""
    return len(shape_of(w)) <= 2
