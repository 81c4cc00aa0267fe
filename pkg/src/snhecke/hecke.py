"""
The Hecke algebra of S_n over Z[v, v^-1]: standard basis H, canonical basis
C (Kazhdan-Lusztig), and dual canonical basis D, together with the
mu-function, the bilinear form (X, Y) = [H_e] X Y, the specialization down
to the group ring, and a versioned on-disk cache for the canonical-basis
table.

Elements print GAP3-style, e.g. ``C'(1,2,3,2,6)+C'(1,2,3,2,5,6,5)``, so the
command-line surface can be diffed against CHEVIE session transcripts.
"""

from __future__ import annotations

import os
import struct
from pathlib import Path

import numpy as np

from .backend import get_kernel
from .laurent import ONE, LaurentPoly
from .perm import Permutation, parse_perm

__all__ = ["HeckeAlgebra", "HeckeElement", "GroupRingElement", "KLCache"]

_BASIS_ALIASES = {
    "h": "H", "standard": "H", "std": "H",
    "c": "C", "kl": "C", "canonical": "C",
    "d": "D", "dualkl": "D", "dual": "D",
}

_MAGIC_KL = b"SNHKKL\x00\x01"
_MAGIC_DUAL = b"SNHKDL\x00\x01"
_FORMAT_VERSION = 1


def _norm_basis(basis: str) -> str:
    b = _BASIS_ALIASES.get(basis.lower())
    if b is None:
        raise ValueError(f"unknown basis {basis!r}")
    return b


class HeckeAlgebra:
    """Degree-bound handle: element constructors plus the basis cache."""

    def __init__(self, n: int, backend: str | None = None):
        self.n = n
        self.kernel = get_kernel(n, backend)

    # -- permutation plumbing ------------------------------------------------

    def perm(self, w) -> Permutation:
        if isinstance(w, Permutation):
            if w.n != self.n:
                raise ValueError("degree mismatch")
            return w
        if isinstance(w, str):
            return parse_perm(w, self.n)
        return Permutation(w)

    def _idx(self, w) -> int:
        return self.kernel.index(self.perm(w).one_line)

    def _perm_of(self, i: int) -> Permutation:
        return Permutation(self.kernel.word(i))

    # -- element constructors ---------------------------------------------------

    def element(self, basis: str, data) -> "HeckeElement":
        """Build an element from {permutation: coefficient} data."""
        basis = _norm_basis(basis)
        raw: dict[int, dict[int, int]] = {}
        for w, c in data.items():
            poly = c if isinstance(c, LaurentPoly) else LaurentPoly({0: int(c)})
            if poly:
                raw[self._idx(w)] = dict(poly.terms)
        return HeckeElement(self, basis, raw)

    def zero(self, basis: str = "H") -> "HeckeElement":
        return HeckeElement(self, _norm_basis(basis), {})

    def one(self, basis: str = "H") -> "HeckeElement":
        return HeckeElement(self, _norm_basis(basis), {self.kernel.identity: {0: 1}})

    def standard(self, w) -> "HeckeElement":
        return HeckeElement(self, "H", {self._idx(w): {0: 1}})

    def kl(self, w) -> "HeckeElement":
        """The canonical basis element, expanded in the standard basis."""
        return HeckeElement(self, "H", self.kernel.kl_element(self._idx(w)))

    def dual_kl(self, w) -> "HeckeElement":
        """The dual canonical basis element, expanded in the standard basis."""
        return HeckeElement(self, "H", self.kernel.dual_element(self._idx(w)))

    def kl_unit(self, w) -> "HeckeElement":
        return HeckeElement(self, "C", {self._idx(w): {0: 1}})

    def dual_unit(self, w) -> "HeckeElement":
        return HeckeElement(self, "D", {self._idx(w): {0: 1}})

    # -- structure maps -----------------------------------------------------------

    def kl_polynomial(self, x, w) -> LaurentPoly:
        """p_{x,w}: the standard-basis coefficient of the canonical element."""
        return LaurentPoly(self.kernel.kl_poly(self._idx(x), self._idx(w)))

    def mu(self, x, w) -> int:
        """Symmetric mu(x, w): the v-coefficient over the Bruhat-smaller one."""
        return self.kernel.mu(self._idx(x), self._idx(w))

    def bilinear_form(self, X: "HeckeElement", Y: "HeckeElement") -> LaurentPoly:
        prod = (X * Y).to_basis("H")
        return LaurentPoly(prod._data.get(self.kernel.identity, {}))

    def ev(self, X: "HeckeElement") -> "GroupRingElement":
        """Specialize v = 1 after expanding in the standard basis."""
        raw = self.kernel.ev(X.to_basis("H")._data)
        return GroupRingElement(self, raw)

    # -- cache --------------------------------------------------------------------

    def prebuild(self) -> None:
        self.kernel.ensure_kl()

    def cache(self, directory: str | os.PathLike | None = None) -> "KLCache":
        return KLCache(self, directory)


class HeckeElement:
    """A basis-tagged sparse element; coefficients are exact Laurent polynomials."""

    __slots__ = ("algebra", "basis", "_data")

    def __init__(self, algebra: HeckeAlgebra, basis: str, data: dict[int, dict[int, int]]):
        self.algebra = algebra
        self.basis = basis
        self._data = data

    # -- views ------------------------------------------------------------------

    def coefficient(self, w) -> LaurentPoly:
        return LaurentPoly(self._data.get(self.algebra._idx(w), {}))

    def items(self):
        """(Permutation, LaurentPoly) pairs, sorted by (length, index)."""
        kern = self.algebra.kernel
        for i in sorted(self._data, key=lambda j: (kern.length(j), j)):
            yield self.algebra._perm_of(i), LaurentPoly(self._data[i])

    def support(self) -> list[Permutation]:
        return [w for w, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._data

    def __bool__(self):
        return bool(self._data)

    # -- basis conversion ----------------------------------------------------------

    def to_basis(self, basis: str) -> "HeckeElement":
        basis = _norm_basis(basis)
        if basis == self.basis:
            return self
        kern = self.algebra.kernel
        std = self._data
        if self.basis == "C":
            std = kern.from_kl(self._data)
        elif self.basis == "D":
            std = kern.from_dual(self._data)
        if basis == "H":
            return HeckeElement(self.algebra, "H", std)
        if basis == "C":
            return HeckeElement(self.algebra, "C", kern.to_kl(std))
        return HeckeElement(self.algebra, "D", kern.to_dual(std))

    # -- arithmetic -------------------------------------------------------------------

    def _coerced(self, other: "HeckeElement") -> tuple[dict, dict, str]:
        if self.algebra.n != other.algebra.n:
            raise ValueError("degree mismatch")
        if self.basis == other.basis:
            return self._data, other._data, self.basis
        return self.to_basis("H")._data, other.to_basis("H")._data, "H"

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        a, b, basis = self._coerced(other)
        return HeckeElement(self.algebra, basis, self.algebra.kernel.add(a, b))

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        a, b, basis = self._coerced(other)
        return HeckeElement(
            self.algebra, basis, self.algebra.kernel.add(a, b, {0: -1})
        )

    def scale(self, c) -> "HeckeElement":
        poly = c if isinstance(c, LaurentPoly) else LaurentPoly({0: int(c)})
        return HeckeElement(
            self.algebra, self.basis, self.algebra.kernel.add({}, self._data, dict(poly.terms))
        )

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        a = self.to_basis("H")._data
        b = other.to_basis("H")._data
        return HeckeElement(self.algebra, "H", self.algebra.kernel.mul(a, b))

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.algebra.n != other.algebra.n:
            return False
        a, b, _ = self._coerced(other)
        return a == b

    def __hash__(self):
        raise TypeError("HeckeElement is not hashable")

    # -- display ---------------------------------------------------------------------

    def __str__(self):
        if not self._data:
            return "0"
        name = {"H": "H", "C": "C'", "D": "D'"}[self.basis]
        parts = []
        for w, poly in self.items():
            word = ",".join(map(str, w.reduced_word()))
            atom = f"{name}({word})"
            if poly == ONE:
                parts.append(atom)
            else:
                parts.append(f"({poly.compact_str()}){atom}")
        return "+".join(parts)

    def __repr__(self):
        return f"<HeckeElement basis={self.basis} n={self.algebra.n} {self}>"


class GroupRingElement:
    """An element of the integral group ring, the image of ev."""

    __slots__ = ("algebra", "_data")

    def __init__(self, algebra: HeckeAlgebra, data: dict[int, int]):
        self.algebra = algebra
        self._data = {u: c for u, c in data.items() if c}

    def coefficient(self, w) -> int:
        return self._data.get(self.algebra._idx(w), 0)

    def items(self):
        kern = self.algebra.kernel
        for i in sorted(self._data, key=lambda j: (kern.length(j), j)):
            yield self.algebra._perm_of(i), self._data[i]

    def is_zero(self) -> bool:
        return not self._data

    def __bool__(self):
        return bool(self._data)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self._data)
        for u, c in other._data.items():
            out[u] = out.get(u, 0) + c
        return GroupRingElement(self.algebra, out)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        kern = self.algebra.kernel
        out: dict[int, int] = {}
        for u, cu in self._data.items():
            pu = Permutation(kern.word(u))
            for w, cw in other._data.items():
                uw = kern.index((pu * Permutation(kern.word(w))).one_line)
                out[uw] = out.get(uw, 0) + cu * cw
        return GroupRingElement(self.algebra, out)

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElement)
            and self.algebra.n == other.algebra.n
            and self._data == other._data
        )

    def __hash__(self):
        raise TypeError("GroupRingElement is not hashable")

    def __str__(self):
        if not self._data:
            return "0"
        parts = []
        for w, c in self.items():
            word = ",".join(map(str, w.reduced_word()))
            parts.append(f"({word})" if c == 1 else f"{c}*({word})")
        return "+".join(parts)


def default_cache_dir() -> Path:
    env = os.environ.get("SNHECKE_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "snhecke"


class KLCache:
    """
    Disk persistence for the canonical-basis table (and dual elements).

    File layout (little-endian): an 8-byte magic carrying the format
    version, u32 format version, u32 degree, u64 record count; then
    length-sorted records ``{w: u32, nmono: u32, (u: u32, exp: i32,
    coeff: i64) * nmono}`` where the triples list every monomial of every
    standard-basis coefficient of the canonical element of w.
    """

    def __init__(self, algebra: HeckeAlgebra, directory: str | os.PathLike | None = None):
        self.algebra = algebra
        self.directory = Path(directory) if directory else default_cache_dir()

    @property
    def kl_path(self) -> Path:
        return self.directory / f"kl-n{self.algebra.n}-v{_FORMAT_VERSION}.bin"

    @property
    def dual_path(self) -> Path:
        return self.directory / f"dualkl-n{self.algebra.n}-v{_FORMAT_VERSION}.bin"

    # -- canonical table ----------------------------------------------------------

    def save(self) -> Path:
        kern = self.algebra.kernel
        ws, counts, us, es, cs = kern.kl_dump_arrays()
        self.directory.mkdir(parents=True, exist_ok=True)
        tmp = self.kl_path.with_suffix(".tmp")
        with open(tmp, "wb") as fh:
            fh.write(_MAGIC_KL)
            fh.write(struct.pack("<IIQ", _FORMAT_VERSION, self.algebra.n, len(ws)))
            triples = np.empty(
                len(us), dtype=np.dtype([("u", "<u4"), ("e", "<i4"), ("c", "<i8")])
            )
            triples["u"] = us
            triples["e"] = es
            triples["c"] = cs
            pos = 0
            head = np.empty(len(ws), dtype=np.dtype([("w", "<u4"), ("n", "<u4")]))
            head["w"] = ws
            head["n"] = counts
            for i in range(len(ws)):
                fh.write(head[i].tobytes())
                cnt = int(counts[i])
                fh.write(triples[pos : pos + cnt].tobytes())
                pos += cnt
        os.replace(tmp, self.kl_path)
        return self.kl_path

    def load(self) -> bool:
        """Load the table if a valid cache file exists; returns success."""
        path = self.kl_path
        if not path.exists():
            return False
        with open(path, "rb") as fh:
            blob = fh.read()
        if blob[:8] != _MAGIC_KL:
            raise ValueError(f"{path} is not a canonical-basis cache file")
        version, degree, nrec = struct.unpack_from("<IIQ", blob, 8)
        if version != _FORMAT_VERSION or degree != self.algebra.n:
            return False
        ws = np.empty(nrec, dtype=np.uint32)
        counts = np.empty(nrec, dtype=np.uint32)
        tdt = np.dtype([("u", "<u4"), ("e", "<i4"), ("c", "<i8")])
        us_parts, es_parts, cs_parts = [], [], []
        pos = 24
        for i in range(nrec):
            w, cnt = struct.unpack_from("<II", blob, pos)
            pos += 8
            ws[i] = w
            counts[i] = cnt
            arr = np.frombuffer(blob, dtype=tdt, count=cnt, offset=pos)
            pos += cnt * tdt.itemsize
            us_parts.append(arr["u"])
            es_parts.append(arr["e"])
            cs_parts.append(arr["c"])
        us = np.concatenate(us_parts) if us_parts else np.empty(0, dtype=np.uint32)
        es = np.concatenate(es_parts) if es_parts else np.empty(0, dtype=np.int32)
        cs = np.concatenate(cs_parts) if cs_parts else np.empty(0, dtype=np.int64)
        self.algebra.kernel.kl_load_arrays(ws, counts, us, es, cs)
        return True

    def ensure(self, *, save_if_built: bool = True) -> None:
        """Load from disk when possible, otherwise build (and persist)."""
        kern = self.algebra.kernel
        if kern.kl_ready():
            return
        if self.load():
            return
        kern.ensure_kl()
        if save_if_built:
            try:
                self.save()
            except OSError:
                pass  # cache directory not writable; stay in-memory

    # -- dual elements --------------------------------------------------------------

    def save_duals(self, ds) -> Path:
        kern = self.algebra.kernel
        self.directory.mkdir(parents=True, exist_ok=True)
        tmp = self.dual_path.with_suffix(".tmp")
        records = []
        for d in ds:
            elt = kern.dual_element(d)
            triples = []
            for u in sorted(elt):
                for e in sorted(elt[u]):
                    triples.append((u, e, elt[u][e]))
            records.append((d, triples))
        with open(tmp, "wb") as fh:
            fh.write(_MAGIC_DUAL)
            fh.write(struct.pack("<IIQ", _FORMAT_VERSION, self.algebra.n, len(records)))
            for d, triples in records:
                fh.write(struct.pack("<II", d, len(triples)))
                for u, e, c in triples:
                    fh.write(struct.pack("<Iiq", u, e, c))
        os.replace(tmp, self.dual_path)
        return self.dual_path

    def load_duals(self) -> int:
        path = self.dual_path
        if not path.exists():
            return 0
        kern = self.algebra.kernel
        with open(path, "rb") as fh:
            blob = fh.read()
        if blob[:8] != _MAGIC_DUAL:
            raise ValueError(f"{path} is not a dual-basis cache file")
        version, degree, nrec = struct.unpack_from("<IIQ", blob, 8)
        if version != _FORMAT_VERSION or degree != self.algebra.n:
            return 0
        pos = 24
        loaded = 0
        for _ in range(nrec):
            d, cnt = struct.unpack_from("<II", blob, pos)
            pos += 8
            elt: dict[int, dict[int, int]] = {}
            for _ in range(cnt):
                u, e, c = struct.unpack_from("<Iiq", blob, pos)
                pos += 16
                elt.setdefault(u, {})[e] = c
            kern.dual_preload(d, elt)
            loaded += 1
        return loaded
