"""
Pure-Python computational kernel for the Hecke algebra of S_n.

This is the reference backend: `snhecke._kernel` (Cython) implements the
same interface on packed arrays for degree-7 workloads; this module keeps a
readable, arbitrary-precision implementation that is plenty fast through
degree 6.  `snhecke.backend` picks one at import time.

Conventions shared by both kernels:

* permutations are dense integer indices, the lexicographic rank of the
  one-line word; index 0 is the identity;
* an algebra element is a dict {perm index: {exponent: coefficient}} with no
  zero coefficients and no empty polynomials;
* generator arguments k are 1-based (s_1 .. s_{n-1});
* the standard-basis relations are H_w H_s = H_{ws} for ws > w and
  H_w H_s = H_{ws} + (v^-1 - v) H_w for ws < w, with the canonical basis
  element of a simple reflection equal to H_s + v H_e.
"""

from __future__ import annotations

import itertools

import numpy as np

Elt = dict  # {perm index: {exp: coeff}}


def _padd(dst: dict, src: dict, *, sign: int = 1) -> None:
    for e, c in src.items():
        nc = dst.get(e, 0) + sign * c
        if nc:
            dst[e] = nc
        elif e in dst:
            del dst[e]


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            nc = out.get(e, 0) + c1 * c2
            if nc:
                out[e] = nc
            elif e in out:
                del out[e]
    return out


def _eadd(dst: Elt, u: int, p: dict, *, sign: int = 1) -> None:
    q = dst.get(u)
    if q is None:
        q = {}
        dst[u] = q
    _padd(q, p, sign=sign)
    if not q:
        del dst[u]


class Kernel:
    """Degree-bound tables and algebra operations for S_n."""

    backend_name = "python"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("degree must be at least 1")
        self.n = n
        perms = list(itertools.permutations(range(1, n + 1)))
        self.size = len(perms)
        self._words = perms
        self._index = {w: i for i, w in enumerate(perms)}
        self._length = np.array(
            [sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b]) for w in perms],
            dtype=np.int16,
        )
        rmult = np.empty((self.size, max(n - 1, 1)), dtype=np.int32)
        inv = np.empty(self.size, dtype=np.int32)
        for i, w in enumerate(perms):
            lw = list(w)
            for k in range(n - 1):
                lw[k], lw[k + 1] = lw[k + 1], lw[k]
                rmult[i, k] = self._index[tuple(lw)]
                lw[k], lw[k + 1] = lw[k + 1], lw[k]
            iv = [0] * n
            for pos, val in enumerate(w):
                iv[val - 1] = pos + 1
            inv[i] = self._index[tuple(iv)]
        self._rmult = rmult
        self._inv = inv
        # left multiplication: s_k * w = (w^-1 s_k)^-1
        self._lmult = np.empty_like(rmult)
        for i in range(self.size):
            for k in range(n - 1):
                self._lmult[i, k] = inv[rmult[inv[i], k]]
        self.identity = self._index[tuple(range(1, n + 1))]
        self.longest = self._index[tuple(range(n, 0, -1))]
        self._order = sorted(range(self.size), key=lambda i: (int(self._length[i]), i))
        # KL state
        self._kl: list[Elt] | None = None
        self._mu_up: list[list[tuple[int, int]]] | None = None
        self._duals: dict[int, Elt] = {}

    # -- table accessors -----------------------------------------------------

    def word(self, i: int) -> tuple[int, ...]:
        return self._words[i]

    def index(self, one_line) -> int:
        return self._index[tuple(one_line)]

    def rmult(self, i: int, k: int) -> int:
        return int(self._rmult[i, k - 1])

    def lmult(self, i: int, k: int) -> int:
        return int(self._lmult[i, k - 1])

    def inv(self, i: int) -> int:
        return int(self._inv[i])

    def length(self, i: int) -> int:
        return int(self._length[i])

    def has_rdesc(self, i: int, k: int) -> bool:
        w = self._words[i]
        return w[k - 1] > w[k]

    def has_ldesc(self, i: int, k: int) -> bool:
        return self.has_rdesc(int(self._inv[i]), k)

    def right_descents(self, i: int):
        w = self._words[i]
        return [k for k in range(1, self.n) if w[k - 1] > w[k]]

    def left_descents(self, i: int):
        return self.right_descents(int(self._inv[i]))

    def length_order(self):
        return self._order

    # -- elementary algebra ops ------------------------------------------------

    def rmul_s(self, X: Elt, k: int) -> Elt:
        out: Elt = {}
        for u, p in X.items():
            us = int(self._rmult[u, k - 1])
            _eadd(out, us, p)
            if self.has_rdesc(u, k):
                # H_u H_s = H_{us} + (v^-1 - v) H_u
                _eadd(out, u, {e - 1: c for e, c in p.items()})
                _eadd(out, u, {e + 1: c for e, c in p.items()}, sign=-1)
        return out

    def lmul_s(self, X: Elt, k: int) -> Elt:
        out: Elt = {}
        for u, p in X.items():
            su = int(self._lmult[u, k - 1])
            _eadd(out, su, p)
            if self.has_ldesc(u, k):
                _eadd(out, u, {e - 1: c for e, c in p.items()})
                _eadd(out, u, {e + 1: c for e, c in p.items()}, sign=-1)
        return out

    def add(self, X: Elt, Y: Elt, coeff: dict | None = None) -> Elt:
        """X + coeff * Y (coeff defaults to 1)."""
        out = {u: dict(p) for u, p in X.items()}
        for u, p in Y.items():
            _eadd(out, u, p if coeff is None else _pmul(coeff, p))
        return out

    def mul(self, X: Elt, Y: Elt) -> Elt:
        """Standard-basis product X * Y.

        Walks a spanning descent tree of the Bruhat lower closure of
        supp(Y), so the partial products X * H_u are shared across terms.
        """
        if not X or not Y:
            return {}
        closure: set[int] = {self.identity}
        children: dict[int, list[tuple[int, int]]] = {}
        stack = list(Y.keys())
        while stack:
            u = stack.pop()
            if u in closure:
                continue
            closure.add(u)
            k = min(self.right_descents(u))
            parent = int(self._rmult[u, k - 1])
            children.setdefault(parent, []).append((u, k))
            if parent not in closure:
                stack.append(parent)
        acc: Elt = {}

        def visit(u: int, P: Elt):
            cu = Y.get(u)
            if cu:
                for perm, p in P.items():
                    _eadd(acc, perm, _pmul(p, cu))
            for child, k in sorted(children.get(u, ())):
                visit(child, self.rmul_s(P, k))

        visit(self.identity, X)
        return acc

    def ev(self, X: Elt) -> dict[int, int]:
        out = {}
        for u, p in X.items():
            s = sum(p.values())
            if s:
                out[u] = s
        return out

    # -- Kazhdan-Lusztig basis ---------------------------------------------------

    def kl_ready(self) -> bool:
        return self._kl is not None

    def ensure_kl(self) -> None:
        if self._kl is not None:
            return
        kl: list[Elt] = [None] * self.size  # type: ignore[list-item]
        kl[self.identity] = {self.identity: {0: 1}}
        for w in self._order:
            if w == self.identity:
                continue
            k = min(self.left_descents(w))
            sw = int(self._lmult[w, k - 1])
            base = kl[sw]
            X: Elt = {}
            for u, p in base.items():
                su = int(self._lmult[u, k - 1])
                _eadd(X, su, p)
                if self.has_ldesc(u, k):
                    _eadd(X, u, {e - 1: c for e, c in p.items()})
                    _eadd(X, u, {e + 1: c for e, c in p.items()}, sign=-1)
                _eadd(X, u, {e + 1: c for e, c in p.items()})
            for z, p in base.items():
                m = p.get(1, 0)
                if m and self.has_ldesc(z, k):
                    for u, q in kl[z].items():
                        _eadd(X, u, {e: m * c for e, c in q.items()}, sign=-1)
            assert X.get(w) == {0: 1}, "KL recursion lost unitriangularity"
            kl[w] = X
        self._kl = kl

    def kl_element(self, w: int) -> Elt:
        self.ensure_kl()
        return self._kl[w]

    def kl_poly(self, u: int, w: int) -> dict:
        """p_{u,w}: coefficient of H_u in the canonical basis element of w."""
        self.ensure_kl()
        return dict(self._kl[w].get(u, {}))

    def mu(self, x: int, y: int) -> int:
        """Symmetric mu: coefficient of v in p over the Bruhat-smaller element."""
        if self.length(x) > self.length(y):
            x, y = y, x
        self.ensure_kl()
        p = self._kl[y].get(x)
        return p.get(1, 0) if p else 0

    def mu_up(self, u: int) -> list[tuple[int, int]]:
        if self._mu_up is None:
            self.ensure_kl()
            up: list[list[tuple[int, int]]] = [[] for _ in range(self.size)]
            for w in self._order:
                for u2, p in self._kl[w].items():
                    m = p.get(1, 0)
                    if m and u2 != w:
                        up[u2].append((w, m))
            self._mu_up = up
        return self._mu_up[u]

    # -- dual Kazhdan-Lusztig basis -----------------------------------------------

    def dual_element(self, d: int) -> Elt:
        """Standard expansion of the dual canonical basis element of d.

        Column d^-1 of the inverse KL transition matrix, indexed so that the
        defining biorthogonality (canonical(x), dual(y)) = delta_{x, y^-1}
        holds for the form (X, Y) = [H_e] X Y.
        """
        got = self._duals.get(d)
        if got is not None:
            return got
        self.ensure_kl()
        di = int(self._inv[d])
        ld = self.length(di)
        c: dict[int, dict] = {di: {0: 1}}
        for x in self._order:
            if self.length(x) <= ld or x == di:
                continue
            acc: dict = {}
            for u, p in self._kl[x].items():
                if u == x:
                    continue
                cu = c.get(u)
                if cu:
                    _padd(acc, _pmul(p, cu))
            if acc:
                c[x] = {e: -cc for e, cc in acc.items()}
        out = {int(self._inv[x]): p for x, p in c.items()}
        self._duals[d] = out
        return out

    def dual_preload(self, d: int, elt: Elt) -> None:
        self._duals[d] = elt

    # -- coordinate conversions ------------------------------------------------

    def to_kl(self, X: Elt) -> Elt:
        """Coordinates of X in the canonical basis (triangular elimination)."""
        self.ensure_kl()
        work = {u: dict(p) for u, p in X.items()}
        coords: Elt = {}
        for w in reversed(self._order):
            p = work.get(w)
            if not p:
                continue
            coords[w] = p
            del work[w]
            for u, q in self._kl[w].items():
                if u != w:
                    _eadd(work, u, _pmul(p, q), sign=-1)
        if work:
            raise AssertionError("triangular elimination failed")
        return coords

    def from_kl(self, C: Elt) -> Elt:
        self.ensure_kl()
        out: Elt = {}
        for w, a in C.items():
            for u, p in self._kl[w].items():
                _eadd(out, u, _pmul(a, p))
        return out

    def to_dual(self, X: Elt) -> Elt:
        """Coordinates of X in the dual canonical basis.

        The coefficient on y is the pairing (canonical(y^-1), X), which
        expands to sum_u p_{u, y^-1} X_{u^-1}.
        """
        self.ensure_kl()
        if not X:
            return {}
        # dual coordinates live on the upward Bruhat closure of supp(X), so
        # every y at or above the minimal support length must be scanned
        minlen = min(self.length(u) for u in X)
        Xi = {int(self._inv[u]): p for u, p in X.items()}
        out: Elt = {}
        for y in self._order:
            if self.length(y) < minlen:
                continue
            acc: dict = {}
            for u, p in self._kl[int(self._inv[y])].items():
                xu = Xi.get(u)
                if xu:
                    _padd(acc, _pmul(p, xu))
            if acc:
                out[y] = acc
        return out

    def from_dual(self, C: Elt) -> Elt:
        out: Elt = {}
        for y, a in C.items():
            for u, p in self.dual_element(y).items():
                _eadd(out, u, _pmul(a, p))
        return out

    def dual_rmul_Cs(self, C: Elt, k: int) -> Elt:
        """Right multiplication by the canonical generator, in dual coordinates."""
        out: Elt = {}
        for w, a in C.items():
            if not self.has_rdesc(w, k):
                continue
            _eadd(out, w, {e + 1: c for e, c in a.items()})
            _eadd(out, w, {e - 1: c for e, c in a.items()})
            _eadd(out, int(self._rmult[w, k - 1]), a)
            for x, m in self.mu_up(w):
                if not self.has_rdesc(x, k):
                    _eadd(out, x, {e: m * c for e, c in a.items()})
        return out

    # -- cache (de)serialization -------------------------------------------------

    def kl_dump_arrays(self):
        self.ensure_kl()
        ws, counts, us, es, cs = [], [], [], [], []
        for w in self._order:
            ws.append(w)
            cnt = 0
            for u in sorted(self._kl[w]):
                for e in sorted(self._kl[w][u]):
                    us.append(u)
                    es.append(e)
                    cs.append(self._kl[w][u][e])
                    cnt += 1
            counts.append(cnt)
        return (
            np.array(ws, dtype=np.uint32),
            np.array(counts, dtype=np.uint32),
            np.array(us, dtype=np.uint32),
            np.array(es, dtype=np.int32),
            np.array(cs, dtype=np.int64),
        )

    def kl_load_arrays(self, ws, counts, us, es, cs) -> None:
        kl: list[Elt] = [None] * self.size  # type: ignore[list-item]
        pos = 0
        for w, cnt in zip(ws, counts):
            elt: Elt = {}
            for j in range(pos, pos + int(cnt)):
                elt.setdefault(int(us[j]), {})[int(es[j])] = int(cs[j])
            kl[int(w)] = elt
            pos += int(cnt)
        if any(x is None for x in kl):
            raise ValueError("incomplete canonical-basis table")
        self._kl = kl
        self._mu_up = None
