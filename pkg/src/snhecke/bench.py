"""
Micro-benchmark comparing the compiled and pure kernels on identical
workloads, with a cross-check that both produce bit-identical results.

Run as ``snhecke bench`` or ``python -m snhecke.bench [degree]``; degree 6
by default (a pure-Python degree-7 basis build takes far too long to be a
useful comparison point).
"""

from __future__ import annotations

import sys
import time

from .backend import available_backends, get_kernel


def _time(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def run(n: int = 6, report=print) -> dict:
    backends = available_backends()
    if "cython" not in backends:
        report("compiled kernel not built; nothing to compare")
        return {}
    results: dict[str, dict[str, float]] = {}
    kernels = {}
    for name in ("cython", "python"):
        K = get_kernel(n, name)
        kernels[name] = K
        stats: dict[str, float] = {}
        _, stats["basis build"] = _time(K.ensure_kl)
        d = K.longest
        # a mid-length involution: descend a few steps from the top
        for k in (1, 3, 2, 1, 4):
            d = K.rmult(d, k)
        inv = [i for i in range(K.size) if K.inv(i) == i and 2 < K.length(i) < K.length(K.longest) - 2]
        d = inv[len(inv) // 2]
        _, stats["dual element"] = _time(K.dual_element, d)
        D = K.dual_element(d)
        x = inv[len(inv) // 3]
        _, stats["class product"] = _time(K.mul, D, K.kl_element(x))
        P = K.mul(D, K.kl_element(x))
        _, stats["dual coordinates"] = _time(K.to_dual, P)
        results[name] = stats
    # equivalence spot-check on the same inputs
    Kc, Kp = kernels["cython"], kernels["python"]
    same = all(Kc.kl_element(w) == Kp.kl_element(w) for w in range(0, Kc.size, 17))
    same = same and Kc.dual_element(d) == Kp.dual_element(d)
    report(f"degree {n}: backends agree on sampled outputs: {same}")
    if not same:
        raise AssertionError("backend outputs differ")
    report(f"{'operation':<18} {'cython':>10} {'python':>10} {'speedup':>9}")
    for op in results["cython"]:
        tc, tp = results["cython"][op], results["python"][op]
        ratio = tp / tc if tc > 0 else float("inf")
        report(f"{op:<18} {tc:>9.3f}s {tp:>9.3f}s {ratio:>8.1f}x")
    return results


def main(n: int | None = None) -> None:
    if n is None:
        n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    run(n)


if __name__ == "__main__":
    main()
