# cython: boundscheck=False, wraparound=False, cdivision=True
"""
Compiled computational kernel for the Hecke algebra of S_n.

Same interface and element exchange format as `snhecke._kernel_py` (see the
conventions documented there); this version keeps the canonical-basis table
in packed arrays and runs the multiplication / triangular-conversion loops
in C.  Coefficients are int64 with explicit overflow guards; the pure
backend remains the arbitrary-precision fallback.
"""

import itertools

import numpy as np

cimport numpy as cnp
from libc.string cimport memset

cnp.import_array()

ctypedef cnp.int64_t i64
ctypedef cnp.int32_t i32
ctypedef cnp.int16_t i16
ctypedef cnp.uint8_t u8

cdef i64 COEFF_LIMIT = <i64>1 << 62


class KernelError(RuntimeError):
    pass


cdef class _Packed:
    """Packed algebra element: parallel arrays, permutations ascending."""
    cdef cnp.ndarray perms     # int32[k]
    cdef cnp.ndarray offs      # int64[k+1]
    cdef cnp.ndarray exps      # int32[m]
    cdef cnp.ndarray coeffs    # int64[m]

    def __init__(self, perms, offs, exps, coeffs):
        self.perms = perms
        self.offs = offs
        self.exps = exps
        self.coeffs = coeffs


cdef class Kernel:
    cdef public int n
    cdef public int size
    cdef public int identity
    cdef public int longest
    cdef int W
    cdef int OFF
    cdef list _words
    cdef dict _index
    cdef cnp.ndarray _rmult_a, _lmult_a, _inv_a, _length_a, _rdesc_a, _ldesc_a, _order_a
    cdef i32[:, ::1] rmult_v
    cdef i32[:, ::1] lmult_v
    cdef i32[::1] inv_v
    cdef i16[::1] length_v
    cdef u8[::1] rdesc_v
    cdef u8[::1] ldesc_v
    cdef i32[::1] order_v
    cdef cnp.ndarray _buf1_a, _buf2_a, _act1_a, _act2_a, _tch1_a, _tch2_a
    cdef i64[::1] buf1
    cdef i64[::1] buf2
    cdef u8[::1] act1
    cdef u8[::1] act2
    cdef i32[::1] tch1
    cdef i32[::1] tch2
    cdef long ntch1, ntch2
    cdef bint _kl_built
    cdef cnp.ndarray _kl_toff_a, _kl_u_a, _kl_poff_a, _kl_e_a, _kl_c_a
    cdef i64[::1] kl_toff
    cdef i32[::1] kl_u
    cdef i64[::1] kl_poff
    cdef i32[::1] kl_e
    cdef i64[::1] kl_c
    cdef cnp.ndarray _mu_off_a, _mu_w_a, _mu_v_a
    cdef i64[::1] mu_off
    cdef i32[::1] mu_w
    cdef i64[::1] mu_v
    cdef bint _mu_built
    cdef dict _duals
    cdef dict _kl_dict_cache
    cdef public str backend_name

    def __init__(self, int n):
        if n < 1:
            raise ValueError("degree must be at least 1")
        if n > 9:
            raise ValueError("compiled kernel supports degree <= 9")
        self.backend_name = "cython"
        self.n = n
        perms = list(itertools.permutations(range(1, n + 1)))
        cdef int N = len(perms)
        self.size = N
        self._words = perms
        self._index = {w: i for i, w in enumerate(perms)}
        cdef int lw0 = n * (n - 1) // 2
        self.OFF = 4 * lw0 + 8
        self.W = 2 * self.OFF + 1

        cdef cnp.ndarray rmult = np.empty((N, max(n - 1, 1)), dtype=np.int32)
        cdef cnp.ndarray lmult = np.empty((N, max(n - 1, 1)), dtype=np.int32)
        cdef cnp.ndarray inv = np.empty(N, dtype=np.int32)
        cdef cnp.ndarray length = np.empty(N, dtype=np.int16)
        cdef cnp.ndarray rdesc = np.zeros(N, dtype=np.uint8)
        cdef cnp.ndarray ldesc = np.zeros(N, dtype=np.uint8)
        cdef int i, k, a, b, ln, mask
        for i, w in enumerate(perms):
            ln = 0
            for a in range(n):
                for b in range(a + 1, n):
                    if w[a] > w[b]:
                        ln += 1
            length[i] = ln
            lw = list(w)
            mask = 0
            for k in range(n - 1):
                if lw[k] > lw[k + 1]:
                    mask |= 1 << k
                lw[k], lw[k + 1] = lw[k + 1], lw[k]
                rmult[i, k] = self._index[tuple(lw)]
                lw[k], lw[k + 1] = lw[k + 1], lw[k]
            rdesc[i] = mask
            iv = [0] * n
            for a in range(n):
                iv[w[a] - 1] = a + 1
            inv[i] = self._index[tuple(iv)]
        for i in range(N):
            ldesc[i] = rdesc[inv[i]]
            for k in range(n - 1):
                lmult[i, k] = inv[rmult[inv[i], k]]
        self._rmult_a = rmult; self.rmult_v = rmult
        self._lmult_a = lmult; self.lmult_v = lmult
        self._inv_a = inv; self.inv_v = inv
        self._length_a = length; self.length_v = length
        self._rdesc_a = rdesc; self.rdesc_v = rdesc
        self._ldesc_a = ldesc; self.ldesc_v = ldesc
        order = np.array(sorted(range(N), key=lambda j: (int(length[j]), j)), dtype=np.int32)
        self._order_a = order; self.order_v = order
        self.identity = self._index[tuple(range(1, n + 1))]
        self.longest = self._index[tuple(range(n, 0, -1))]

        self._buf1_a = np.zeros(<i64>N * self.W, dtype=np.int64); self.buf1 = self._buf1_a
        self._buf2_a = np.zeros(<i64>N * self.W, dtype=np.int64); self.buf2 = self._buf2_a
        self._act1_a = np.zeros(N, dtype=np.uint8); self.act1 = self._act1_a
        self._act2_a = np.zeros(N, dtype=np.uint8); self.act2 = self._act2_a
        self._tch1_a = np.empty(N, dtype=np.int32); self.tch1 = self._tch1_a
        self._tch2_a = np.empty(N, dtype=np.int32); self.tch2 = self._tch2_a
        self.ntch1 = 0
        self.ntch2 = 0
        self._kl_built = False
        self._mu_built = False
        self._duals = {}
        self._kl_dict_cache = {}

    # -- table accessors -------------------------------------------------------

    def word(self, int i):
        return self._words[i]

    def index(self, one_line):
        return self._index[tuple(one_line)]

    def rmult(self, int i, int k):
        return int(self.rmult_v[i, k - 1])

    def lmult(self, int i, int k):
        return int(self.lmult_v[i, k - 1])

    def inv(self, int i):
        return int(self.inv_v[i])

    def length(self, int i):
        return int(self.length_v[i])

    def has_rdesc(self, int i, int k):
        return bool(self.rdesc_v[i] & (1 << (k - 1)))

    def has_ldesc(self, int i, int k):
        return bool(self.ldesc_v[i] & (1 << (k - 1)))

    def right_descents(self, int i):
        return [k for k in range(1, self.n) if self.rdesc_v[i] & (1 << (k - 1))]

    def left_descents(self, int i):
        return [k for k in range(1, self.n) if self.ldesc_v[i] & (1 << (k - 1))]

    def length_order(self):
        return [int(x) for x in self._order_a]

    # -- dense buffer helpers ----------------------------------------------------

    cdef void _clear1(self):
        cdef long t
        cdef i64 base
        for t in range(self.ntch1):
            base = <i64>self.tch1[t] * self.W
            memset(&self.buf1[base], 0, self.W * sizeof(i64))
            self.act1[self.tch1[t]] = 0
        self.ntch1 = 0

    cdef void _clear2(self):
        cdef long t
        cdef i64 base
        for t in range(self.ntch2):
            base = <i64>self.tch2[t] * self.W
            memset(&self.buf2[base], 0, self.W * sizeof(i64))
            self.act2[self.tch2[t]] = 0
        self.ntch2 = 0

    cdef inline void _touch1(self, i32 p):
        if not self.act1[p]:
            self.act1[p] = 1
            self.tch1[self.ntch1] = p
            self.ntch1 += 1

    cdef inline void _touch2(self, i32 p):
        if not self.act2[p]:
            self.act2[p] = 1
            self.tch2[self.ntch2] = p
            self.ntch2 += 1

    cdef _Packed _compress(self, i64[::1] buf, i32[::1] tch, long ntch):
        srt_a = np.sort(np.asarray(tch[:ntch]).copy())
        cdef i32[::1] srt = srt_a
        cdef long nt = srt_a.shape[0]
        cdef long i, cnt, total = 0, nperms = 0
        cdef int e
        cdef i64 base
        for i in range(nt):
            base = <i64>srt[i] * self.W
            cnt = 0
            for e in range(self.W):
                if buf[base + e] != 0:
                    cnt += 1
            if cnt:
                nperms += 1
                total += cnt
        perms_a = np.empty(nperms, dtype=np.int32)
        offs_a = np.empty(nperms + 1, dtype=np.int64)
        exps_a = np.empty(total, dtype=np.int32)
        coeffs_a = np.empty(total, dtype=np.int64)
        cdef i32[::1] perms = perms_a
        cdef i64[::1] offs = offs_a
        cdef i32[::1] exps = exps_a
        cdef i64[::1] coeffs = coeffs_a
        cdef long pp = 0, mm = 0
        offs[0] = 0
        for i in range(nt):
            base = <i64>srt[i] * self.W
            cnt = 0
            for e in range(self.W):
                if buf[base + e] != 0:
                    exps[mm] = e - self.OFF
                    coeffs[mm] = buf[base + e]
                    mm += 1
                    cnt += 1
            if cnt:
                perms[pp] = srt[i]
                pp += 1
                offs[pp] = mm
        return _Packed(perms_a, offs_a, exps_a, coeffs_a)

    # -- packed <-> dict ----------------------------------------------------------

    cdef _Packed _from_dict(self, dict X):
        items = sorted(X.items())
        cdef long k = 0
        cdef long total = 0
        for _, p in items:
            total += len(p)
        perms_a = np.empty(len(items), dtype=np.int32)
        offs_a = np.empty(len(items) + 1, dtype=np.int64)
        exps_a = np.empty(total, dtype=np.int32)
        coeffs_a = np.empty(total, dtype=np.int64)
        cdef long m = 0
        offs_a[0] = 0
        for u, p in items:
            perms_a[k] = u
            for e in sorted(p):
                c = p[e]
                if c:
                    exps_a[m] = e
                    coeffs_a[m] = c
                    m += 1
            k += 1
            offs_a[k] = m
        return _Packed(perms_a, offs_a, exps_a[:m].copy(), coeffs_a[:m].copy())

    cdef dict _to_dict(self, _Packed P):
        cdef dict out = {}
        cdef i32[::1] perms = P.perms
        cdef i64[::1] offs = P.offs
        cdef i32[::1] exps = P.exps
        cdef i64[::1] coeffs = P.coeffs
        cdef long i, j
        for i in range(perms.shape[0]):
            p = {}
            for j in range(offs[i], offs[i + 1]):
                p[int(exps[j])] = int(coeffs[j])
            if p:
                out[int(perms[i])] = p
        return out

    # -- elementary ops -------------------------------------------------------------

    cdef void _rmul_s_into1(self, _Packed X, int k) except *:
        cdef i32[::1] perms = X.perms
        cdef i64[::1] offs = X.offs
        cdef i32[::1] exps = X.exps
        cdef i64[::1] coeffs = X.coeffs
        cdef long i, j
        cdef i32 u, us
        cdef i64 base, ubase, c
        cdef int e
        for i in range(perms.shape[0]):
            u = perms[i]
            us = self.rmult_v[u, k - 1]
            self._touch1(us)
            base = <i64>us * self.W
            if self.rdesc_v[u] & (1 << (k - 1)):
                self._touch1(u)
                ubase = <i64>u * self.W
                for j in range(offs[i], offs[i + 1]):
                    e = exps[j] + self.OFF
                    if e < 1 or e >= self.W - 1:
                        raise KernelError("exponent window exceeded")
                    c = coeffs[j]
                    self.buf1[base + e] += c
                    self.buf1[ubase + e - 1] += c
                    self.buf1[ubase + e + 1] -= c
                    if (self.buf1[base + e] >= COEFF_LIMIT or self.buf1[base + e] <= -COEFF_LIMIT
                            or self.buf1[ubase + e - 1] >= COEFF_LIMIT or self.buf1[ubase + e - 1] <= -COEFF_LIMIT):
                        raise KernelError("coefficient overflow")
            else:
                for j in range(offs[i], offs[i + 1]):
                    e = exps[j] + self.OFF
                    if e < 0 or e >= self.W:
                        raise KernelError("exponent window exceeded")
                    self.buf1[base + e] += coeffs[j]
                    if self.buf1[base + e] >= COEFF_LIMIT or self.buf1[base + e] <= -COEFF_LIMIT:
                        raise KernelError("coefficient overflow")

    cdef void _accumulate2(self, _Packed P, list poly) except *:
        cdef i32[::1] perms = P.perms
        cdef i64[::1] offs = P.offs
        cdef i32[::1] exps = P.exps
        cdef i64[::1] coeffs = P.coeffs
        cdef long i, j, t
        cdef i64 base
        cdef int e
        cdef long npoly = len(poly)
        pe_a = np.empty(npoly, dtype=np.int32)
        pc_a = np.empty(npoly, dtype=np.int64)
        cdef i32[::1] pe = pe_a
        cdef i64[::1] pc = pc_a
        for t in range(npoly):
            pe[t] = poly[t][0]
            pc[t] = poly[t][1]
        for i in range(perms.shape[0]):
            self._touch2(perms[i])
            base = <i64>perms[i] * self.W
            for j in range(offs[i], offs[i + 1]):
                for t in range(npoly):
                    e = exps[j] + pe[t] + self.OFF
                    if e < 0 or e >= self.W:
                        raise KernelError("exponent window exceeded")
                    self.buf2[base + e] += coeffs[j] * pc[t]
                    if self.buf2[base + e] >= COEFF_LIMIT or self.buf2[base + e] <= -COEFF_LIMIT:
                        raise KernelError("coefficient overflow")

    def rmul_s(self, dict X, int k):
        cdef _Packed P = self._from_dict(X)
        self._clear1()
        self._rmul_s_into1(P, k)
        out = self._to_dict(self._compress(self.buf1, self.tch1, self.ntch1))
        self._clear1()
        return out

    def lmul_s(self, dict X, int k):
        cdef dict Xi = {int(self.inv_v[u]): p for u, p in X.items()}
        cdef dict Y = self.rmul_s(Xi, k)
        return {int(self.inv_v[u]): p for u, p in Y.items()}

    def add(self, dict X, dict Y, coeff=None):
        out = {u: dict(p) for u, p in X.items()}
        cpoly = None if coeff is None else list(coeff.items())
        for u, p in Y.items():
            q = out.setdefault(u, {})
            if cpoly is None:
                for e, c in p.items():
                    nc = q.get(e, 0) + c
                    if nc:
                        q[e] = nc
                    elif e in q:
                        del q[e]
            else:
                for e1, c1 in cpoly:
                    for e, c in p.items():
                        nc = q.get(e + e1, 0) + c1 * c
                        if nc:
                            q[e + e1] = nc
                        elif e + e1 in q:
                            del q[e + e1]
            if not q:
                del out[u]
        return out

    def mul(self, dict X, dict Y):
        """Standard-basis product via a spanning descent tree of supp(Y)."""
        if not X or not Y:
            return {}
        cdef set closure = {self.identity}
        cdef dict children = {}
        cdef list stack = [u for u in Y.keys() if u != self.identity]
        cdef int u, k, parent
        while stack:
            u = stack.pop()
            if u in closure:
                continue
            closure.add(u)
            k = 1
            while not (self.rdesc_v[u] & (1 << (k - 1))):
                k += 1
            parent = self.rmult_v[u, k - 1]
            children.setdefault(parent, []).append((u, k))
            if parent not in closure and parent != self.identity:
                stack.append(parent)
        self._clear2()
        cdef _Packed P0 = self._from_dict(X)
        poly = Y.get(self.identity)
        if poly:
            self._accumulate2(P0, sorted(poly.items()))
        cdef list dfs = [(P0, iter(sorted(children.get(self.identity, ()))))]
        cdef _Packed P, Q
        while dfs:
            top = dfs[len(dfs) - 1]
            P = <_Packed>top[0]
            nxt = next(top[1], None)
            if nxt is None:
                dfs.pop()
                continue
            u = nxt[0]
            k = nxt[1]
            self._clear1()
            self._rmul_s_into1(P, k)
            Q = self._compress(self.buf1, self.tch1, self.ntch1)
            self._clear1()
            poly = Y.get(u)
            if poly:
                self._accumulate2(Q, sorted(poly.items()))
            dfs.append((Q, iter(sorted(children.get(u, ())))))
        out = self._to_dict(self._compress(self.buf2, self.tch2, self.ntch2))
        self._clear2()
        return out

    def ev(self, dict X):
        out = {}
        for u, p in X.items():
            s = sum(p.values())
            if s:
                out[u] = s
        return out

    # -- canonical basis --------------------------------------------------------------

    def kl_ready(self):
        return self._kl_built

    def ensure_kl(self):
        if self._kl_built:
            return
        cdef int N = self.size
        cdef i64 cap_t = 64 + 4 * <i64>N
        cdef i64 cap_m = 64 + 8 * <i64>N
        tstart_a = np.full(N, -1, dtype=np.int64)
        tcnt_a = np.zeros(N, dtype=np.int64)
        u_buf = np.empty(cap_t, dtype=np.int32)
        poff_buf = np.empty(cap_t + 1, dtype=np.int64)
        e_buf = np.empty(cap_m, dtype=np.int32)
        c_buf = np.empty(cap_m, dtype=np.int64)
        cdef i64 nt = 0, nm = 0

        cdef i64[::1] tstart = tstart_a
        cdef i64[::1] tcnt = tcnt_a
        cdef i32[::1] u_v = u_buf
        cdef i64[::1] poff_v = poff_buf
        cdef i32[::1] e_v = e_buf
        cdef i64[::1] c_v = c_buf

        cdef int w, k, sw, u, su, z
        cdef long oi, j, t, mrow, i
        cdef i64 base, m, c, cnt_terms, cnt_monos
        cdef int e
        cdef bint diag_ok, first

        poff_v[0] = 0
        tstart[self.identity] = 0
        tcnt[self.identity] = 1
        u_v[0] = self.identity
        poff_v[1] = 1
        e_v[0] = 0
        c_v[0] = 1
        nt = 1
        nm = 1

        for oi in range(N):
            w = self.order_v[oi]
            if w == self.identity:
                continue
            k = 1
            while not (self.ldesc_v[w] & (1 << (k - 1))):
                k += 1
            sw = self.lmult_v[w, k - 1]
            self._clear1()
            for t in range(tstart[sw], tstart[sw] + tcnt[sw]):
                u = u_v[t]
                su = self.lmult_v[u, k - 1]
                self._touch1(su)
                base = <i64>su * self.W
                for j in range(poff_v[t], poff_v[t + 1]):
                    e = e_v[j] + self.OFF
                    self.buf1[base + e] += c_v[j]
                self._touch1(u)
                base = <i64>u * self.W
                if self.ldesc_v[u] & (1 << (k - 1)):
                    # (v^-1 - v) + v contributions collapse to a shift by -1
                    for j in range(poff_v[t], poff_v[t + 1]):
                        e = e_v[j] + self.OFF
                        self.buf1[base + e - 1] += c_v[j]
                else:
                    for j in range(poff_v[t], poff_v[t + 1]):
                        e = e_v[j] + self.OFF
                        self.buf1[base + e + 1] += c_v[j]
            for t in range(tstart[sw], tstart[sw] + tcnt[sw]):
                z = u_v[t]
                if not (self.ldesc_v[z] & (1 << (k - 1))):
                    continue
                m = 0
                for j in range(poff_v[t], poff_v[t + 1]):
                    if e_v[j] == 1:
                        m = c_v[j]
                        break
                if m == 0:
                    continue
                for mrow in range(tstart[z], tstart[z] + tcnt[z]):
                    u = u_v[mrow]
                    self._touch1(u)
                    base = <i64>u * self.W
                    for j in range(poff_v[mrow], poff_v[mrow + 1]):
                        e = e_v[j] + self.OFF
                        self.buf1[base + e] -= m * c_v[j]

            srt_a = np.sort(np.asarray(self.tch1[: self.ntch1]).copy())
            srt_v = srt_a
            cnt_terms = 0
            cnt_monos = 0
            for i in range(len(srt_a)):
                u = srt_a[i]
                base = <i64>u * self.W
                first = True
                for e in range(self.W):
                    if self.buf1[base + e] != 0:
                        cnt_monos += 1
                        first = False
                if not first:
                    cnt_terms += 1
            while nt + cnt_terms > cap_t:
                cap_t *= 2
                u_buf = np.concatenate([u_buf, np.empty(cap_t - len(u_buf), dtype=np.int32)])
                poff_buf = np.concatenate([poff_buf, np.empty(cap_t + 1 - len(poff_buf), dtype=np.int64)])
                u_v = u_buf
                poff_v = poff_buf
            while nm + cnt_monos > cap_m:
                cap_m *= 2
                e_buf = np.concatenate([e_buf, np.empty(cap_m - len(e_buf), dtype=np.int32)])
                c_buf = np.concatenate([c_buf, np.empty(cap_m - len(c_buf), dtype=np.int64)])
                e_v = e_buf
                c_v = c_buf
            tstart[w] = nt
            diag_ok = False
            for i in range(len(srt_a)):
                u = srt_a[i]
                base = <i64>u * self.W
                first = True
                for e in range(self.W):
                    c = self.buf1[base + e]
                    if c != 0:
                        if c >= COEFF_LIMIT or c <= -COEFF_LIMIT:
                            raise KernelError("coefficient overflow")
                        if first:
                            u_v[nt] = u
                            first = False
                        e_v[nm] = e - self.OFF
                        c_v[nm] = c
                        nm += 1
                if not first:
                    nt += 1
                    poff_v[nt] = nm
                    if u == w:
                        diag_ok = (
                            poff_v[nt] - poff_v[nt - 1] == 1
                            and e_v[nm - 1] == 0
                            and c_v[nm - 1] == 1
                        )
            tcnt[w] = nt - tstart[w]
            self._clear1()
            if not diag_ok:
                raise KernelError("canonical-basis recursion lost unitriangularity")

        # repack into contiguous index-ordered storage
        toff2 = np.zeros(N + 1, dtype=np.int64)
        for w in range(N):
            toff2[w + 1] = toff2[w] + tcnt[w]
        cdef i64 total_t = toff2[N]
        u_final = np.empty(total_t, dtype=np.int32)
        poff_final = np.empty(total_t + 1, dtype=np.int64)
        cdef i64 pos = 0, total_m = 0
        poff_final[0] = 0
        for w in range(N):
            for t in range(tstart[w], tstart[w] + tcnt[w]):
                u_final[pos] = u_v[t]
                total_m += poff_v[t + 1] - poff_v[t]
                poff_final[pos + 1] = total_m
                pos += 1
        e_final = np.empty(total_m, dtype=np.int32)
        c_final = np.empty(total_m, dtype=np.int64)
        cdef i64 mpos = 0
        for w in range(N):
            for t in range(tstart[w], tstart[w] + tcnt[w]):
                for j in range(poff_v[t], poff_v[t + 1]):
                    e_final[mpos] = e_v[j]
                    c_final[mpos] = c_v[j]
                    mpos += 1
        self._kl_toff_a = toff2; self.kl_toff = toff2
        self._kl_u_a = u_final; self.kl_u = u_final
        self._kl_poff_a = poff_final; self.kl_poff = poff_final
        self._kl_e_a = e_final; self.kl_e = e_final
        self._kl_c_a = c_final; self.kl_c = c_final
        self._kl_built = True

    def kl_element(self, int w):
        self.ensure_kl()
        got = self._kl_dict_cache.get(w)
        if got is not None:
            return got
        cdef dict out = {}
        cdef long t, j
        for t in range(self.kl_toff[w], self.kl_toff[w + 1]):
            p = {}
            for j in range(self.kl_poff[t], self.kl_poff[t + 1]):
                p[int(self.kl_e[j])] = int(self.kl_c[j])
            out[int(self.kl_u[t])] = p
        if len(self._kl_dict_cache) < 4096:
            self._kl_dict_cache[w] = out
        return out

    def kl_poly(self, int u, int w):
        self.ensure_kl()
        cdef long t, j
        for t in range(self.kl_toff[w], self.kl_toff[w + 1]):
            if self.kl_u[t] == u:
                return {
                    int(self.kl_e[j]): int(self.kl_c[j])
                    for j in range(self.kl_poff[t], self.kl_poff[t + 1])
                }
        return {}

    def mu(self, int x, int y):
        if self.length_v[x] > self.length_v[y]:
            x, y = y, x
        self.ensure_kl()
        cdef long t, j
        for t in range(self.kl_toff[y], self.kl_toff[y + 1]):
            if self.kl_u[t] == x:
                for j in range(self.kl_poff[t], self.kl_poff[t + 1]):
                    if self.kl_e[j] == 1:
                        return int(self.kl_c[j])
                return 0
        return 0

    cdef void _build_mu(self):
        if self._mu_built:
            return
        self.ensure_kl()
        cdef int N = self.size
        cnt = np.zeros(N + 1, dtype=np.int64)
        cdef i64[::1] cnt_v = cnt
        cdef int w, u
        cdef long t, j, oi
        for w in range(N):
            for t in range(self.kl_toff[w], self.kl_toff[w + 1]):
                u = self.kl_u[t]
                if u == w:
                    continue
                for j in range(self.kl_poff[t], self.kl_poff[t + 1]):
                    if self.kl_e[j] == 1:
                        cnt_v[u + 1] += 1
                        break
        off = np.cumsum(cnt, dtype=np.int64)
        cdef i64 total = off[N]
        mw = np.empty(total, dtype=np.int32)
        mv = np.empty(total, dtype=np.int64)
        fill = off[:N].copy()
        cdef i32[::1] mw_v = mw
        cdef i64[::1] mv_v = mv
        cdef i64[::1] fill_v = fill
        cdef int ww
        for oi in range(N):
            ww = self.order_v[oi]
            for t in range(self.kl_toff[ww], self.kl_toff[ww + 1]):
                u = self.kl_u[t]
                if u == ww:
                    continue
                for j in range(self.kl_poff[t], self.kl_poff[t + 1]):
                    if self.kl_e[j] == 1:
                        mw_v[fill_v[u]] = ww
                        mv_v[fill_v[u]] = self.kl_c[j]
                        fill_v[u] += 1
                        break
        self._mu_off_a = off; self.mu_off = off
        self._mu_w_a = mw; self.mu_w = mw
        self._mu_v_a = mv; self.mu_v = mv
        self._mu_built = True

    def mu_up(self, int u):
        self._build_mu()
        cdef long j
        return [
            (int(self.mu_w[j]), int(self.mu_v[j]))
            for j in range(self.mu_off[u], self.mu_off[u + 1])
        ]

    # -- dual canonical basis -------------------------------------------------------

    def dual_element(self, int d):
        got = self._duals.get(d)
        if got is not None:
            return got
        self.ensure_kl()
        cdef int di = self.inv_v[d]
        cdef int ld = self.length_v[di]
        self._clear1()
        # per-row exponent bounds keep the convolution scans tight
        lo_a = np.zeros(self.size, dtype=np.int32)
        hi_a = np.zeros(self.size, dtype=np.int32)
        cdef i32[::1] lo = lo_a
        cdef i32[::1] hi = hi_a
        self._touch1(di)
        self.buf1[<i64>di * self.W + self.OFF] = 1
        lo[di] = self.OFF
        hi[di] = self.OFF
        cdef long oi, t, j
        cdef int x, u, e1, e
        cdef i64 ubase, xbase, cu
        cdef bint xtouched
        for oi in range(self.size):
            x = self.order_v[oi]
            if self.length_v[x] <= ld or x == di:
                continue
            xbase = <i64>x * self.W
            xtouched = False
            for t in range(self.kl_toff[x], self.kl_toff[x + 1]):
                u = self.kl_u[t]
                if u == x or not self.act1[u]:
                    continue
                ubase = <i64>u * self.W
                for e1 in range(lo[u], hi[u] + 1):
                    cu = self.buf1[ubase + e1]
                    if cu == 0:
                        continue
                    if not xtouched:
                        self._touch1(x)
                        lo[x] = self.W
                        hi[x] = 0
                        xtouched = True
                    for j in range(self.kl_poff[t], self.kl_poff[t + 1]):
                        e = e1 + self.kl_e[j]
                        if e < 0 or e >= self.W:
                            raise KernelError("exponent window exceeded")
                        self.buf1[xbase + e] -= self.kl_c[j] * cu
                        if self.buf1[xbase + e] >= COEFF_LIMIT or self.buf1[xbase + e] <= -COEFF_LIMIT:
                            raise KernelError("coefficient overflow")
                        if e < lo[x]:
                            lo[x] = e
                        if e > hi[x]:
                            hi[x] = e
        cdef dict out = {}
        srt_a = np.sort(np.asarray(self.tch1[: self.ntch1]).copy())
        for i in range(len(srt_a)):
            x = srt_a[i]
            xbase = <i64>x * self.W
            p = {}
            for e1 in range(lo[x], hi[x] + 1):
                if self.buf1[xbase + e1] != 0:
                    p[int(e1 - self.OFF)] = int(self.buf1[xbase + e1])
            if p:
                out[int(self.inv_v[x])] = p
        self._clear1()
        if len(self._duals) < 1024:
            self._duals[d] = out
        return out

    def dual_preload(self, int d, dict elt):
        self._duals[d] = elt

    # -- conversions -------------------------------------------------------------------

    def to_kl(self, dict X):
        self.ensure_kl()
        cdef dict work = {u: dict(p) for u, p in X.items()}
        cdef dict coords = {}
        cdef long oi, t, j
        cdef int w, u
        for oi in range(self.size - 1, -1, -1):
            w = self.order_v[oi]
            p = work.pop(w, None)
            if not p:
                continue
            coords[w] = p
            for t in range(self.kl_toff[w], self.kl_toff[w + 1]):
                u = self.kl_u[t]
                if u == w:
                    continue
                q = work.setdefault(u, {})
                for e1, c1 in p.items():
                    for j in range(self.kl_poff[t], self.kl_poff[t + 1]):
                        e = e1 + int(self.kl_e[j])
                        nc = q.get(e, 0) - c1 * int(self.kl_c[j])
                        if nc:
                            q[e] = nc
                        elif e in q:
                            del q[e]
                if not q:
                    del work[u]
        if any(work.values()):
            raise KernelError("triangular elimination failed")
        return coords

    def from_kl(self, dict C):
        self.ensure_kl()
        cdef dict out = {}
        cdef long t, j
        cdef int w, u
        for w, a in C.items():
            for t in range(self.kl_toff[w], self.kl_toff[w + 1]):
                u = self.kl_u[t]
                q = out.setdefault(u, {})
                for e1, c1 in a.items():
                    for j in range(self.kl_poff[t], self.kl_poff[t + 1]):
                        e = e1 + int(self.kl_e[j])
                        nc = q.get(e, 0) + c1 * int(self.kl_c[j])
                        if nc:
                            q[e] = nc
                        elif e in q:
                            del q[e]
                if not q:
                    del out[u]
        return out

    def to_dual(self, dict X):
        self.ensure_kl()
        if not X:
            return {}
        cdef int minlen = min(int(self.length_v[u]) for u in X)
        # presence mask lets the scan over the whole table stay in C
        pres_a = np.zeros(self.size, dtype=np.uint8)
        cdef u8[::1] pres = pres_a
        cdef list polys = [None] * self.size
        cdef int u, y, yi
        for uu, p in X.items():
            u = self.inv_v[uu]
            pres[u] = 1
            polys[u] = sorted(p.items())
        cdef dict out = {}
        cdef long oi, t, j
        for oi in range(self.size):
            y = self.order_v[oi]
            if self.length_v[y] < minlen:
                continue
            yi = self.inv_v[y]
            acc = None
            for t in range(self.kl_toff[yi], self.kl_toff[yi + 1]):
                u = self.kl_u[t]
                if not pres[u]:
                    continue
                if acc is None:
                    acc = {}
                for e1, c1 in polys[u]:
                    for j in range(self.kl_poff[t], self.kl_poff[t + 1]):
                        e = e1 + int(self.kl_e[j])
                        nc = acc.get(e, 0) + c1 * int(self.kl_c[j])
                        if nc:
                            acc[e] = nc
                        elif e in acc:
                            del acc[e]
            if acc:
                out[y] = acc
        return out

    def from_dual(self, dict C):
        out = {}
        for y, a in C.items():
            out = self.add(out, self.dual_element(y), a)
        return out

    def dual_rmul_Cs(self, dict C, int k):
        self._build_mu()
        cdef dict out = {}
        cdef long j
        cdef int w, x

        def _acc(u, p, shift, m):
            q = out.setdefault(u, {})
            for e, c in p.items():
                nc = q.get(e + shift, 0) + m * c
                if nc:
                    q[e + shift] = nc
                elif e + shift in q:
                    del q[e + shift]
            if not q:
                del out[u]

        for w, a in C.items():
            if not (self.rdesc_v[w] & (1 << (k - 1))):
                continue
            _acc(w, a, 1, 1)
            _acc(w, a, -1, 1)
            _acc(int(self.rmult_v[w, k - 1]), a, 0, 1)
            for j in range(self.mu_off[w], self.mu_off[w + 1]):
                x = self.mu_w[j]
                if not (self.rdesc_v[x] & (1 << (k - 1))):
                    _acc(int(x), a, 0, int(self.mu_v[j]))
        return out

    # -- cache (de)serialization ----------------------------------------------------------

    def kl_dump_arrays(self):
        self.ensure_kl()
        cdef int N = self.size
        ws = np.empty(N, dtype=np.uint32)
        counts = np.empty(N, dtype=np.uint32)
        cdef i64 total = self.kl_poff[self.kl_toff[N]]
        us = np.empty(total, dtype=np.uint32)
        es = np.empty(total, dtype=np.int32)
        cs = np.empty(total, dtype=np.int64)
        cdef cnp.uint32_t[::1] us_v = us
        cdef i32[::1] es_v = es
        cdef i64[::1] cs_v = cs
        cdef long oi, t, j
        cdef i64 m = 0, c0
        cdef int w
        for oi in range(N):
            w = self.order_v[oi]
            ws[oi] = w
            c0 = m
            for t in range(self.kl_toff[w], self.kl_toff[w + 1]):
                for j in range(self.kl_poff[t], self.kl_poff[t + 1]):
                    us_v[m] = self.kl_u[t]
                    es_v[m] = self.kl_e[j]
                    cs_v[m] = self.kl_c[j]
                    m += 1
            counts[oi] = m - c0
        return ws, counts, us, es, cs

    def kl_load_arrays(self, ws, counts, us, es, cs):
        cdef int N = self.size
        if len(ws) != N:
            raise ValueError("wrong record count for this degree")
        ws_a = np.ascontiguousarray(ws, dtype=np.int64)
        counts_a = np.ascontiguousarray(counts, dtype=np.int64)
        us_a = np.ascontiguousarray(us, dtype=np.int64)
        es_a = np.ascontiguousarray(es, dtype=np.int32)
        cs_a = np.ascontiguousarray(cs, dtype=np.int64)
        cdef i64[::1] ws_v = ws_a
        cdef i64[::1] counts_v = counts_a
        cdef i64[::1] us_v = us_a
        cdef i32[::1] es_v = es_a
        cdef i64[::1] cs_v = cs_a
        # record start offset per element index
        starts = np.zeros(N, dtype=np.int64)
        reccnt = np.zeros(N, dtype=np.int64)
        cdef i64[::1] starts_v = starts
        cdef i64[::1] reccnt_v = reccnt
        cdef i64 pos = 0
        cdef long i, j
        cdef int w
        for i in range(N):
            w = <int>ws_v[i]
            starts_v[w] = pos
            reccnt_v[w] = counts_v[i]
            pos += counts_v[i]
        # count terms (distinct u runs) per element
        nterms = np.zeros(N, dtype=np.int64)
        cdef i64[::1] nterms_v = nterms
        cdef i64 total_terms = 0, prev
        for w in range(N):
            prev = -1
            for j in range(starts_v[w], starts_v[w] + reccnt_v[w]):
                if us_v[j] != prev:
                    nterms_v[w] += 1
                    prev = us_v[j]
            total_terms += nterms_v[w]
        toff = np.zeros(N + 1, dtype=np.int64)
        cdef i64[::1] toff_v = toff
        for w in range(N):
            toff_v[w + 1] = toff_v[w] + nterms_v[w]
        cdef i64 total_m = len(us_a)
        u_final = np.empty(total_terms, dtype=np.int32)
        poff = np.empty(total_terms + 1, dtype=np.int64)
        e_final = np.empty(total_m, dtype=np.int32)
        c_final = np.empty(total_m, dtype=np.int64)
        cdef i32[::1] u_final_v = u_final
        cdef i64[::1] poff_v = poff
        cdef i32[::1] e_final_v = e_final
        cdef i64[::1] c_final_v = c_final
        cdef i64 tpos = 0, mpos = 0
        poff_v[0] = 0
        for w in range(N):
            prev = -1
            for j in range(starts_v[w], starts_v[w] + reccnt_v[w]):
                if us_v[j] != prev:
                    u_final_v[tpos] = <i32>us_v[j]
                    tpos += 1
                    prev = us_v[j]
                e_final_v[mpos] = es_v[j]
                c_final_v[mpos] = cs_v[j]
                mpos += 1
                poff_v[tpos] = mpos
        self._kl_toff_a = toff; self.kl_toff = toff
        self._kl_u_a = u_final; self.kl_u = u_final
        self._kl_poff_a = poff; self.kl_poff = poff
        self._kl_e_a = e_final; self.kl_e = e_final
        self._kl_c_a = c_final; self.kl_c = c_final
        self._kl_built = True
        self._mu_built = False
        self._duals = {}
        self._kl_dict_cache = {}
