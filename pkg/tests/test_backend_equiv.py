"""The compiled kernel must agree bit-for-bit with the pure reference."""

import random

import pytest

from snhecke.backend import available_backends, get_kernel

pytestmark = pytest.mark.skipif(
    "cython" not in available_backends(), reason="compiled kernel not built"
)


@pytest.fixture(scope="module")
def kernels():
    Kc, Kp = get_kernel(5, "cython"), get_kernel(5, "python")
    Kc.ensure_kl()
    Kp.ensure_kl()
    return Kc, Kp


def random_element(rng, size, nterms=4):
    out = {}
    for _ in range(nterms):
        out[rng.randrange(size)] = {rng.randrange(-5, 6): rng.randrange(-4, 5) or 2}
    return {u: p for u, p in out.items() if any(p.values())}


def test_tables_agree(kernels):
    Kc, Kp = kernels
    assert Kc.size == Kp.size
    for i in range(Kc.size):
        assert Kc.word(i) == Kp.word(i)
        assert Kc.inv(i) == Kp.inv(i)
        assert Kc.length(i) == Kp.length(i)
        assert Kc.right_descents(i) == Kp.right_descents(i)
        assert Kc.left_descents(i) == Kp.left_descents(i)
        for k in range(1, 5):
            assert Kc.rmult(i, k) == Kp.rmult(i, k)
            assert Kc.lmult(i, k) == Kp.lmult(i, k)


def test_kl_table_and_mu_agree(kernels):
    Kc, Kp = kernels
    for w in range(Kc.size):
        assert Kc.kl_element(w) == Kp.kl_element(w)
        assert Kc.mu_up(w) == Kp.mu_up(w)


def test_duals_agree(kernels):
    Kc, Kp = kernels
    for d in range(Kc.size):
        if Kc.inv(d) == d:
            assert Kc.dual_element(d) == Kp.dual_element(d)


def test_operations_agree(kernels):
    Kc, Kp = kernels
    rng = random.Random(42)
    for _ in range(60):
        X = random_element(rng, Kc.size)
        Y = random_element(rng, Kc.size)
        k = rng.randrange(1, 5)
        assert Kc.mul(X, Y) == Kp.mul(X, Y)
        assert Kc.rmul_s(X, k) == Kp.rmul_s(X, k)
        assert Kc.lmul_s(X, k) == Kp.lmul_s(X, k)
        assert Kc.add(X, Y, {1: 2, -1: -1}) == Kp.add(X, Y, {1: 2, -1: -1})
        assert Kc.to_kl(X) == Kp.to_kl(X)
        assert Kc.from_kl(X) == Kp.from_kl(X)
        assert Kc.to_dual(X) == Kp.to_dual(X)
        assert Kc.dual_rmul_Cs(X, k) == Kp.dual_rmul_Cs(X, k)
        assert Kc.ev(X) == Kp.ev(X)


def test_serialization_cross_loading(kernels):
    import snhecke._kernel as ck
    import snhecke._kernel_py as pk

    Kc, Kp = kernels
    K1 = pk.Kernel(5)
    K1.kl_load_arrays(*Kc.kl_dump_arrays())
    K2 = ck.Kernel(5)
    K2.kl_load_arrays(*Kp.kl_dump_arrays())
    for w in range(Kc.size):
        assert K1.kl_element(w) == Kp.kl_element(w)
        assert K2.kl_element(w) == Kc.kl_element(w)


def test_overflow_guard():
    import snhecke._kernel as ck

    K = ck.Kernel(3)
    big = {K.identity: {0: (1 << 62) - 1}}
    with pytest.raises(RuntimeError):
        K.mul(big, big)
