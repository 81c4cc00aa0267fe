"""
Exact sparse Laurent polynomials over the integers in one variable ``v``.

A polynomial is stored as a mapping from exponent (possibly negative) to a
nonzero integer coefficient, so the representation is canonical: two
polynomials are equal iff their term maps are equal.  Coefficients are
ordinary Python integers, hence arbitrary precision.

>>> p = LaurentPoly({1: 1, -1: 1})          # v + v^-1
>>> p * p
LaurentPoly({-2: 1, 0: 2, 2: 1})
>>> print(p * p)
v^2 + 2 + v^(-2)
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "V",
    "v_power",
    "gauss",
    "cheb_nonneg_decompose",
    "parse_poly",
]


class LaurentPoly:
    """An element of Z[v, v^-1] in canonical sparse form."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[int, int] = {}
        for e, c in items:
            if c:
                nc = d.get(e, 0) + c
                if nc:
                    d[e] = nc
                elif e in d:
                    del d[e]
        self.terms = d

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = dict(self.terms)
        for e, c in other.terms.items():
            nc = d.get(e, 0) + c
            if nc:
                d[e] = nc
            elif e in d:
                del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = d
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = dict(self.terms)
        for e, c in other.terms.items():
            nc = d.get(e, 0) - c
            if nc:
                d[e] = nc
            elif e in d:
                del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = d
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            out = LaurentPoly.__new__(LaurentPoly)
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        d: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                nc = d.get(e, 0) + c1 * c2
                if nc:
                    d[e] = nc
                elif e in d:
                    del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = d
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection ---------------------------------------------------------

    def coefficient_at(self, e: int) -> int:
        """Coefficient of v^e (0 when absent).

        >>> parse_poly("v^3 + 3*v").coefficient_at(1)
        3
        """
        return self.terms.get(e, 0)

    def degree_span(self) -> tuple[int, int]:
        """(min exponent, max exponent); raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree span")
        return min(self.terms), max(self.terms)

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1.

        >>> parse_poly("v + v^(-1)").bar() == parse_poly("v + v^(-1)")
        True
        """
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {-e: c for e, c in self.terms.items()}
        return out

    def eval_at_one(self) -> int:
        """Specialize v = 1.

        >>> parse_poly("v^3 + 3*v + 3*v^(-1) + v^(-3)").eval_at_one()
        8
        """
        return sum(self.terms.values())

    def is_symmetric(self) -> bool:
        return self.terms == {-e: c for e, c in self.terms.items()}

    # -- text forms ----------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self.terms.items()))})"

    def __str__(self):
        return self.gap_str()

    def gap_str(self) -> str:
        """GAP3-style display, terms by decreasing exponent.

        >>> parse_poly("v^3+3*v+3*v^(-1)+v^(-3)").gap_str()
        'v^3 + 3*v + 3*v^(-1) + v^(-3)'
        >>> ZERO.gap_str()
        '0'
        """
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mag = _monomial(abs(c), e, parens=True)
            if not parts:
                parts.append(mag if c > 0 else "-" + mag)
            else:
                parts.append(("+ " if c > 0 else "- ") + mag)
        return " ".join(parts)

    def compact_str(self) -> str:
        """Inline display used for basis-element coefficients.

        >>> parse_poly("v + v^(-1)").compact_str()
        'v+v^-1'
        """
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mag = _monomial(abs(c), e, parens=False)
            if not parts:
                parts.append(mag if c > 0 else "-" + mag)
            else:
                parts.append(("+" if c > 0 else "-") + mag)
        return "".join(parts)


def _monomial(c: int, e: int, parens: bool) -> str:
    if e == 0:
        return str(c)
    if e == 1:
        vs = "v"
    elif e > 1 or not parens:
        vs = f"v^{e}"
    else:
        vs = f"v^({e})"
    return vs if c == 1 else f"{c}*{vs}"


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})


def v_power(e: int) -> LaurentPoly:
    """The monomial v^e."""
    return LaurentPoly({e: 1})


#: v + v^-1, the degree-one building block of symmetric positivity.
gauss = LaurentPoly({1: 1, -1: 1})


def cheb_nonneg_decompose(p: LaurentPoly) -> Optional[list[int]]:
    """
    Write ``p`` as ``sum_k c_k (v + v^-1)^k`` with all ``c_k >= 0``.

    Returns the list ``[c_0, c_1, ..., c_K]`` (empty for the zero
    polynomial), or None when no such expression with nonnegative
    coefficients exists.  Greedy top-degree subtraction is valid because
    ``(v + v^-1)^k`` has unitriangular leading term ``v^k``.

    >>> cheb_nonneg_decompose(gauss * gauss)
    [0, 0, 1]
    >>> cheb_nonneg_decompose(V) is None
    True
    >>> cheb_nonneg_decompose(ZERO)
    []
    """
    rem = p
    out: dict[int, int] = {}
    while rem:
        lo, hi = rem.degree_span()
        if hi < 0 or lo != -hi:
            return None
        c = rem.coefficient_at(hi)
        if c < 0:
            return None
        out[hi] = c
        rem = rem - c * gauss ** hi
    if not out:
        return []
    cs = [0] * (max(out) + 1)
    for k, c in out.items():
        cs[k] = c
    return cs


def parse_poly(text: str) -> LaurentPoly:
    """
    Parse GAP3-style polynomial text such as ``"v^3 + 3*v + 3*v^(-1) + v^(-3)"``.

    >>> parse_poly("-v + 2") == LaurentPoly({1: -1, 0: 2})
    True
    """
    s = text.replace(" ", "")
    if not s or s == "0":
        return ZERO
    # split into signed monomials
    terms: list[tuple[int, int]] = []
    i = 0
    while i < len(s):
        sign = 1
        while i < len(s) and s[i] in "+-":
            if s[i] == "-":
                sign = -sign
            i += 1
        j = i
        while j < len(s) and s[j] not in "+-":
            # a '-' inside v^(-k) or v^-k belongs to the exponent
            if s[j] == "^":
                j += 1
                if j < len(s) and s[j] == "(":
                    while j < len(s) and s[j] != ")":
                        j += 1
                elif j < len(s) and s[j] == "-":
                    j += 1
            j += 1
        mono = s[i:j]
        i = j
        coeff = 1
        e = 0
        if "v" in mono:
            head, _, tail = mono.partition("v")
            if head.rstrip("*"):
                coeff = int(head.rstrip("*"))
            if tail:
                if not tail.startswith("^"):
                    raise ValueError(f"bad monomial {mono!r}")
                e = int(tail[1:].strip("()"))
            else:
                e = 1
        else:
            coeff = int(mono)
        terms.append((e, sign * coeff))
    return LaurentPoly(terms)
