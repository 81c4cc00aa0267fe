"""
Class vectors of images of simple modules under projective functors, at the
level of the Grothendieck group: right multiplication of a dual canonical
element by canonical elements, with the supporting order tests, Jantzen
middles, graded multiplicities, and Bruhat-walk compatibility predicates.

Throughout, ``theta_class(A, x, y)`` is the dual-coordinate vector of
``dual_kl(y) * kl(x)``: its coefficient on w is the graded multiplicity
generating function of the w-th simple class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hecke import HeckeAlgebra, HeckeElement
from .laurent import LaurentPoly
from .perm import Permutation
from .tableaux import shape_of, dominance_leq

__all__ = [
    "theta_class",
    "theta_class_std",
    "theta_nonzero",
    "theta_may_be_nonzero",
    "leq_R_involutions_below",
    "jantzen_middle",
    "graded_multiplicity",
    "BruhatWalk",
    "walk_weakly_compatible",
    "walk_compatible",
]


def theta_class_std(A: HeckeAlgebra, x, y) -> HeckeElement:
    """Standard-basis expansion of dual_kl(y) * kl(x); cheapest for equality
    and nonzeroness tests, which are basis independent."""
    return A.dual_kl(y) * A.kl(x)


def theta_class(A: HeckeAlgebra, x, y) -> HeckeElement:
    """Dual-canonical coordinates of dual_kl(y) * kl(x)."""
    return theta_class_std(A, x, y).to_basis("D")


def theta_nonzero(A: HeckeAlgebra, x, y) -> bool:
    """Whether the class of theta_x applied to the y-th simple is nonzero.

    This doubles as the membership test x <= y^-1 in the right
    Kazhdan-Lusztig order.
    """
    return bool(theta_class_std(A, x, y))


def theta_may_be_nonzero(A: HeckeAlgebra, x, y) -> bool:
    """Cheap necessary condition: shapes dominate and left descents include.

    False here certifies vanishing without any algebra product.
    """
    x, y = A.perm(x), A.perm(y)
    shx, shy = shape_of(x), shape_of(y)
    if shx != shy and not dominance_leq(shy, shx):
        return False
    return x.left_descents() <= y.inverse().left_descents()


def leq_R_involutions_below(A: HeckeAlgebra, d) -> list[Permutation]:
    """All involutions x with x below d in the right order (d an involution).

    The descent/shape prefilter avoids products for most candidates.
    """
    from .perm import enumerate_involutions

    d = A.perm(d)
    if not d.is_involution():
        raise ValueError(f"{d} is not an involution")
    out = []
    for x in enumerate_involutions(A.n):
        if not theta_may_be_nonzero(A, x, d):
            continue
        if theta_nonzero(A, x, d):
            out.append(x)
    return out


def jantzen_middle(A: HeckeAlgebra, w, s: int) -> list[tuple[Permutation, int]]:
    """The degree-zero layer of theta_s applied to the w-th simple:
    the class of ws plus mu(w, x) copies of each x above w with xs > x.

    Requires ws < w; sorted by (length, one-line).
    """
    w = A.perm(w)
    wi = A._idx(w)
    kern = A.kernel
    if not kern.has_rdesc(wi, s):
        raise ValueError(f"s_{s} is not a right descent of {w}")
    out = [(A._perm_of(kern.rmult(wi, s)), 1)]
    for x, m in kern.mu_up(wi):
        if not kern.has_rdesc(x, s):
            out.append((A._perm_of(x), m))
    out.sort(key=lambda t: (t[0].length(), t[0].one_line))
    return out


def graded_multiplicity(A: HeckeAlgebra, x, y, z) -> LaurentPoly:
    """Graded multiplicity of the z-th simple inside theta_x of the y-th:
    the canonical-basis coefficient of y in kl(z) * kl(x^-1).

    The coefficient of v^-i counts the copies shifted into degree i.
    """
    x = A.perm(x)
    prod = A.kl(z) * A.kl(x.inverse())
    return prod.to_basis("C").coefficient(y)


@dataclass(frozen=True)
class BruhatWalk:
    """A path whose consecutive entries differ by one right multiplication."""

    steps: tuple[Permutation, ...]

    def __post_init__(self):
        for a, b in zip(self.steps, self.steps[1:]):
            diff = a.inverse() * b
            if a == b or (diff.length() != 1):
                raise ValueError("consecutive walk entries must be Bruhat neighbours")

    def __len__(self):
        return len(self.steps)


def _walk_checks(walk: BruhatWalk, word, weak: bool) -> bool:
    # word is indexed right to left: word[0] acts first and is checked
    # against the first walk entry
    steps = walk.steps
    if len(steps) != len(word):
        raise ValueError("walk and word must have equal length")
    k = len(word)
    for j in range(k):
        wj = steps[j]
        if wj.times_s(word[j]).length() >= wj.length():
            return False
        if j >= 1 and wj.times_s(word[j - 1]).length() <= wj.length():
            return False
        if not weak and j + 1 < k and wj.times_s(word[j + 1]).length() <= wj.length():
            return False
    return True


def walk_weakly_compatible(walk: BruhatWalk, word) -> bool:
    """Each step descends through its own letter and ascends through the
    previous one.

    ``word`` lists generator indices in application order (first applied
    first), matching the walk's left-to-right indexing.
    """
    return _walk_checks(walk, tuple(word), weak=True)


def walk_compatible(walk: BruhatWalk, word) -> bool:
    """Weak compatibility plus the ascent condition through the next letter."""
    return _walk_checks(walk, tuple(word), weak=False)
