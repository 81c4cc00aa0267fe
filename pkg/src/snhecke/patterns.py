"""
Pattern containment for permutations, and the consecutive-pattern witnesses
that force a negative answer in the classification pipeline.

Six patterns matter here: 2143, 3142, 14325, 15324, 25314, 24315.  A
consecutive occurrence at position m yields an explicit pair (x, y) of
distinct elements whose class vectors against the ambient permutation
coincide and are nonzero; :func:`verify_witness` checks that equality
directly, so the recorded pair is self-certifying.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cato import theta_class_std
from .hecke import HeckeAlgebra
from .perm import Permutation, from_word
from .tableaux import cell_members

__all__ = [
    "NEGATIVE_PATTERNS",
    "PatternWitness",
    "occurrences",
    "consecutive_occurrences",
    "negative_pattern_witness",
    "left_cell_pattern_scan",
    "verify_witness",
]

#: Scan order for witnesses: list order first, then position.
NEGATIVE_PATTERNS: tuple[tuple[int, ...], ...] = (
    (2, 1, 4, 3),
    (3, 1, 4, 2),
    (1, 4, 3, 2, 5),
    (1, 5, 3, 2, 4),
    (2, 5, 3, 1, 4),
    (2, 4, 3, 1, 5),
)


def _order_isomorphic(seq, pattern) -> bool:
    rank = sorted(seq)
    return all(rank[p - 1] == s for s, p in zip(seq, pattern))


def occurrences(w: Permutation, pattern) -> list[tuple[int, ...]]:
    """All index tuples (1-based, increasing) order-isomorphic to pattern.

    >>> len(occurrences(Permutation((1, 5, 2, 4, 3, 7, 6)), (2, 1, 4, 3)))
    4
    """
    from itertools import combinations

    pattern = tuple(pattern)
    out = []
    for idxs in combinations(range(1, w.n + 1), len(pattern)):
        if _order_isomorphic([w(i) for i in idxs], pattern):
            out.append(idxs)
    return out


def consecutive_occurrences(w: Permutation, pattern) -> list[int]:
    """Start positions m where w(m) .. w(m+len-1) matches the pattern.

    >>> consecutive_occurrences(Permutation((1, 5, 2, 4, 3, 7, 6)), (2, 1, 4, 3))
    [4]
    """
    pattern = tuple(pattern)
    m = len(pattern)
    return [
        i
        for i in range(1, w.n - m + 2)
        if _order_isomorphic([w(j) for j in range(i, i + m)], pattern)
    ]


@dataclass(frozen=True)
class PatternWitness:
    """A consecutive occurrence plus its certifying pair of functor indices."""

    pattern: tuple[int, ...]
    position: int
    x_word: tuple[int, ...]
    y_word: tuple[int, ...]

    def as_json(self) -> dict:
        return {
            "pattern": "".join(map(str, self.pattern)),
            "position": self.position,
            "x_word": list(self.x_word),
            "y_word": list(self.y_word),
        }


def witness_pair(pattern, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The (x, y) words attached to a consecutive occurrence at position m.

    For 3142 the pair is (s_{m+2} s_{m+1} s_m, s_m); for 2143 the mirrored
    pair (s_m s_{m+1} s_{m+2}, s_{m+2}), reconstructed by the same
    compatible-walk technique (and validated by the certificate itself).
    The length-5 patterns all share x = s_{m+1} s_{m+2} s_m s_{m+1} and
    y = s_{m+2} s_{m+3} x.
    """
    pattern = tuple(pattern)
    if pattern == (2, 1, 4, 3):
        return (m, m + 1, m + 2), (m + 2,)
    if pattern == (3, 1, 4, 2):
        return (m + 2, m + 1, m), (m,)
    if pattern in NEGATIVE_PATTERNS:
        x = (m + 1, m + 2, m, m + 1)
        return x, (m + 2, m + 3) + x
    raise ValueError(f"{pattern} is not a negativity pattern")


def negative_pattern_witness(w: Permutation) -> Optional[PatternWitness]:
    """First witness in scan order, or None.

    >>> negative_pattern_witness(Permutation((2, 1, 5, 4, 3, 6, 7))) is not None
    True
    >>> negative_pattern_witness(Permutation((1, 2, 3))) is None
    True
    """
    for pattern in NEGATIVE_PATTERNS:
        hits = consecutive_occurrences(w, pattern)
        if hits:
            m = hits[0]
            x, y = witness_pair(pattern, m)
            return PatternWitness(pattern, m, x, y)
    return None


def left_cell_pattern_scan(w: Permutation) -> Optional[tuple[Permutation, PatternWitness]]:
    """Scan the left cell of w for any member carrying a witness."""
    for member in cell_members(w, "left"):
        wit = negative_pattern_witness(member)
        if wit is not None:
            return member, wit
    return None


def verify_witness(A: HeckeAlgebra, w, witness: PatternWitness) -> bool:
    """Check the class-level certificate: the vectors against w of the two
    recorded elements agree and are nonzero."""
    w = A.perm(w)
    x = from_word(witness.x_word, A.n)
    y = from_word(witness.y_word, A.n)
    if x == y:
        return False
    cx = theta_class_std(A, x, w)
    if cx.is_zero():
        return False
    return cx == theta_class_std(A, y, w)
