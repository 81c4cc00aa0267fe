"""
Elements of the symmetric group S_n in one-line notation, with the Coxeter
combinatorics the rest of the package is built on: length, descents, Bruhat
order, supports, reduced words, and parabolic (coset) decompositions.

One-line notation is 1-based, as in ``Permutation((1, 5, 2, 4, 3, 7, 6))``
for the element sending 2 to 5.  Simple reflections are ``s_1 .. s_{n-1}``,
where multiplying by ``s_k`` on the right swaps one-line positions k, k+1.

Three text forms are accepted by :func:`parse_perm` everywhere in the
package: one-line strings ("1524376"), comma-separated Coxeter words
("1,2,1,3"), and compressed words ("12_1" meaning s1 s2 s1, where "i_j"
abbreviates the descending run s_i s_{i-1} ... s_j).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

__all__ = [
    "Permutation",
    "ParabolicContext",
    "identity",
    "simple_reflection",
    "longest_element",
    "from_word",
    "parse_perm",
    "compressed_str",
    "enumerate_involutions",
]


class Permutation:
    """A permutation of [n] = {1, .., n}, immutable and hashable."""

    __slots__ = ("one_line",)

    def __init__(self, one_line):
        w = tuple(one_line)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation of [{len(w)}]: {w!r}")
        object.__setattr__(self, "one_line", w)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, k: int) -> int:
        return self.one_line[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (xy)(k) = x(y(k)).

        >>> s1, s2 = simple_reflection(1, 3), simple_reflection(2, 3)
        >>> (s1 * s2 * s1) == (s2 * s1 * s2)
        True
        """
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        x, y = self.one_line, other.one_line
        out = Permutation.__new__(Permutation)
        object.__setattr__(out, "one_line", tuple(x[j - 1] for j in y))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.one_line == other.one_line

    def __hash__(self):
        return hash(self.one_line)

    def __lt__(self, other: "Permutation"):
        # plain lexicographic order on one-line words (not Bruhat order)
        return self.one_line < other.one_line

    def __repr__(self):
        return f"Permutation({self.one_line})"

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.one_line))
        return ",".join(map(str, self.one_line))

    # -- basic Coxeter data ---------------------------------------------------

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.one_line):
            inv[x - 1] = i + 1
        out = Permutation.__new__(Permutation)
        object.__setattr__(out, "one_line", tuple(inv))
        return out

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.one_line))

    def is_involution(self) -> bool:
        return all(self.one_line[x - 1] == i + 1 for i, x in enumerate(self.one_line))

    def length(self) -> int:
        """Coxeter length = inversion count of the one-line word.

        >>> longest_element(4).length()
        6
        """
        w = self.one_line
        return sum(
            1
            for i in range(len(w))
            for j in range(i + 1, len(w))
            if w[i] > w[j]
        )

    def right_descents(self) -> frozenset[int]:
        """Indices k with w s_k < w, i.e. w(k) > w(k+1)."""
        w = self.one_line
        return frozenset(k + 1 for k in range(len(w) - 1) if w[k] > w[k + 1])

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    def descents(self, side: str = "right") -> frozenset[int]:
        if side.lower() in ("right", "r"):
            return self.right_descents()
        if side.lower() in ("left", "l"):
            return self.left_descents()
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def times_s(self, k: int) -> "Permutation":
        """Right multiplication by s_k: swap one-line positions k, k+1."""
        w = list(self.one_line)
        w[k - 1], w[k] = w[k], w[k - 1]
        out = Permutation.__new__(Permutation)
        object.__setattr__(out, "one_line", tuple(w))
        return out

    def s_times(self, k: int) -> "Permutation":
        """Left multiplication by s_k: swap the values k, k+1."""
        w = [x if x not in (k, k + 1) else (2 * k + 1 - x) for x in self.one_line]
        out = Permutation.__new__(Permutation)
        object.__setattr__(out, "one_line", tuple(w))
        return out

    def support(self) -> frozenset[int]:
        """Simple reflections appearing in any reduced word.

        s_k lies in the support iff w does not preserve {1..k}.

        >>> sorted(parse_perm("2,3,2", 5).support())
        [2, 3]
        """
        w = self.one_line
        out = []
        top = 0
        for k in range(1, len(w)):
            top = max(top, w[k - 1])
            if top > k:
                out.append(k)
        return frozenset(out)

    def reduced_word(self) -> tuple[int, ...]:
        """The lexicographically least reduced word, as generator indices.

        Computed by repeatedly stripping the smallest left descent.

        >>> longest_element(3).reduced_word()
        (1, 2, 1)
        """
        w = list(self.one_line)
        word = []
        # peeling smallest left descent of w == bubble-sorting positions of values
        inv = [0] * len(w)
        for i, x in enumerate(w):
            inv[x - 1] = i
        i = 0
        while i < len(w) - 1:
            if inv[i] > inv[i + 1]:
                word.append(i + 1)
                inv[i], inv[i + 1] = inv[i + 1], inv[i]
                i = max(i - 1, 0)
            else:
                i += 1
        return tuple(word)

    def bruhat_leq(self, other: "Permutation") -> bool:
        """Bruhat order via the dot/rank-matrix criterion, O(n^2).

        x <= y iff r_x(i,j) >= r_y(i,j) for all i, j, where
        r_w(i,j) = #{k <= i : w(k) <= j}.

        >>> all(identity(4).bruhat_leq(Permutation(p))
        ...     for p in itertools.permutations(range(1, 5)))
        True
        """
        if self.n != other.n:
            raise ValueError("degree mismatch")
        x, y = self.one_line, other.one_line
        n = len(x)
        for i in range(n - 1):
            rx = ry = 0
            cx = [0] * n
            cy = [0] * n
            for j in range(i + 1):
                cx[x[j] - 1] = 1
                cy[y[j] - 1] = 1
            for j in range(n - 1):
                rx += cx[j]
                ry += cy[j]
                if rx < ry:
                    return False
        return True

    def w0_conjugate(self) -> "Permutation":
        """Conjugation by the longest element: s_i goes to s_{n-i}."""
        n = self.n
        out = Permutation.__new__(Permutation)
        object.__setattr__(
            out, "one_line", tuple(n + 1 - self.one_line[n - k] for k in range(1, n + 1))
        )
        return out


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def simple_reflection(k: int, n: int) -> Permutation:
    if not 1 <= k <= n - 1:
        raise ValueError(f"s_{k} does not exist in S_{n}")
    return identity(n).times_s(k)


def from_word(word, n: int) -> Permutation:
    """Product s_{i1} s_{i2} ... of a Coxeter word, left to right.

    >>> from_word((1, 2, 1), 3) == longest_element(3)
    True
    """
    w = identity(n)
    for k in word:
        w = w.times_s(k)
    return w


# -- parabolic subgroups -------------------------------------------------------


@dataclass(frozen=True)
class ParabolicContext:
    """A subset I of simple reflections split into maximal consecutive runs.

    ``blocks`` lists the runs in increasing index order; block
    {a, .., b} acts on one-line positions a .. b+1 and generates a factor
    isomorphic to S_{b-a+2}.
    """

    n: int
    subset: frozenset[int]

    def __post_init__(self):
        if not all(1 <= k <= self.n - 1 for k in self.subset):
            raise ValueError(f"generator indices must lie in 1..{self.n - 1}")

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = []
        for k in sorted(self.subset):
            if out and out[-1][-1] == k - 1:
                out[-1].append(k)
            else:
                out.append([k])
        return tuple(tuple(b) for b in out)

    @property
    def factor_degrees(self) -> tuple[int, ...]:
        return tuple(len(b) + 1 for b in self.blocks)

    def contains(self, w: Permutation) -> bool:
        return w.support() <= self.subset

    def longest_element(self) -> Permutation:
        """w_0^I: reverses each block of positions, fixes the rest.

        >>> ParabolicContext(7, frozenset({2, 3, 4})).longest_element().one_line
        (1, 5, 4, 3, 2, 6, 7)
        """
        w = list(range(1, self.n + 1))
        for b in self.blocks:
            a, z = b[0], b[-1] + 1
            w[a - 1 : z] = reversed(w[a - 1 : z])
        return Permutation(w)

    def coset_decompose(self, w: Permutation) -> tuple[Permutation, Permutation]:
        """Unique w = z * y with z minimal in z S_n(I) and y in S_n(I).

        The minimal representative sorts the one-line entries on each block
        of positions; lengths add: l(w) = l(z) + l(y).
        """
        if w.n != self.n:
            raise ValueError("degree mismatch")
        z = list(w.one_line)
        for b in self.blocks:
            a, e = b[0], b[-1] + 1
            z[a - 1 : e] = sorted(z[a - 1 : e])
        zp = Permutation(z)
        y = zp.inverse() * w
        return zp, y

    def components(self, w: Permutation) -> tuple[Permutation, ...]:
        """Image of w in S_{n_1} x ... x S_{n_k}, index order preserved."""
        if not self.contains(w):
            raise ValueError(f"{w} is not generated by I = {sorted(self.subset)}")
        out = []
        for b in self.blocks:
            a, e = b[0], b[-1] + 1
            seg = w.one_line[a - 1 : e]
            out.append(Permutation(x - (a - 1) for x in seg))
        return tuple(out)

    def embed(self, factors) -> Permutation:
        """Inverse of :meth:`components`."""
        factors = tuple(factors)
        if len(factors) != len(self.blocks):
            raise ValueError("wrong number of factors")
        w = list(range(1, self.n + 1))
        for b, f in zip(self.blocks, factors):
            a = b[0]
            if f.n != len(b) + 1:
                raise ValueError("factor degree mismatch")
            w[a - 1 : a - 1 + f.n] = [x + (a - 1) for x in f.one_line]
        return Permutation(w)


def longest_element(n: int, subset=None) -> Permutation:
    """w_0 of S_n, or w_0^I when a generator subset is given.

    >>> longest_element(7).one_line
    (7, 6, 5, 4, 3, 2, 1)
    """
    if subset is None:
        return Permutation(range(n, 0, -1))
    return ParabolicContext(n, frozenset(subset)).longest_element()


def enumerate_involutions(n: int) -> list[Permutation]:
    """All involutions of S_n, in lexicographic one-line order.

    >>> [len(enumerate_involutions(k)) for k in range(1, 8)]
    [1, 2, 4, 10, 26, 76, 232]
    """
    out: list[tuple[int, ...]] = []

    def build(state: list[int], free: list[int]):
        if not free:
            out.append(tuple(state))
            return
        a = free[0]
        # a is a fixed point
        state[a - 1] = a
        build(state, free[1:])
        state[a - 1] = 0
        # or a is swapped with some later free point
        for i in range(1, len(free)):
            b = free[i]
            state[a - 1], state[b - 1] = b, a
            build(state, free[1:i] + free[i + 1 :])
            state[a - 1] = state[b - 1] = 0

    build([0] * n, list(range(1, n + 1)))
    return [Permutation(w) for w in sorted(out)]


# -- text forms ----------------------------------------------------------------


def _expand_compressed(text: str) -> list[int]:
    word: list[int] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if not ch.isdigit():
            raise ValueError(f"bad compressed word {text!r}")
        a = int(ch)
        i += 1
        if i < len(text) and text[i] == "_":
            i += 1
            if i >= len(text) or not text[i].isdigit():
                raise ValueError(f"bad compressed word {text!r}")
            b = int(text[i])
            i += 1
            if b > a:
                raise ValueError(f"run {a}_{b} must descend")
            word.extend(range(a, b - 1, -1))
        else:
            word.append(a)
    return word


def parse_perm(text: str, n: int) -> Permutation:
    """
    Parse a permutation of S_n from any accepted text form.

    Comma-separated digits are a Coxeter word; a string containing "_" is a
    compressed word; a string of exactly n digits using each of 1..n once is
    one-line notation; anything else made of digits is a plain Coxeter word.

    >>> parse_perm("1524376", 7).one_line
    (1, 5, 2, 4, 3, 7, 6)
    >>> parse_perm("12_1", 3) == longest_element(3)
    True
    >>> parse_perm("21", 7) == from_word((2, 1), 7)
    True
    >>> parse_perm("e", 4).is_identity()
    True
    """
    s = text.strip()
    if s in ("e", ""):
        return identity(n)
    if "," in s:
        return from_word((int(t) for t in s.split(",") if t.strip()), n)
    if "_" in s:
        return from_word(_expand_compressed(s), n)
    if not s.isdigit():
        raise ValueError(f"cannot parse permutation {text!r}")
    if len(s) == n and sorted(s) == [str(k) for k in range(1, n + 1)]:
        return Permutation(int(c) for c in s)
    return from_word((int(c) for c in s), n)


def compressed_str(w: Permutation) -> str:
    """
    Compressed form of the lex-minimal reduced word: maximal descending runs
    i, i-1, .., j print as "i_j".

    >>> compressed_str(parse_perm("2,3,2,4,3,2,1,5,4", 7))
    '23_24_15_4'
    >>> compressed_str(identity(5))
    'e'
    """
    word = w.reduced_word()
    if not word:
        return "e"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j + 1 < len(word) and word[j + 1] == word[j] - 1:
            j += 1
        parts.append(str(word[i]) if i == j else f"{word[i]}_{word[j]}")
        i = j + 1
    return "".join(parts)
