import math

import pytest

import xi_kernels as xk


def test_constants():
    p = xk.params("s3", m=2)
    assert abs(p["beta"] - 5.059069) < 1e-5
    assert abs(p["a"] - 0.620177) < 1e-5


def test_theorem_condition_raises():
    with pytest.raises(ValueError, match="Theorem 1"):
        xk.params("s1", m=10)


def test_kernel_and_transform():
    assert xk.kernel("polya", [0.0])[0] == pytest.approx(4 * math.pi**2 * math.exp(-2 * math.pi))
    assert xk.xi("exact", [0.0])[0] == pytest.approx(0.4971207781883141, rel=1e-12)
    assert xk.phi(0.0) == pytest.approx(0.446696900467, rel=1e-11)


def test_bessel_half_order():
    assert xk.bessel_k(0.5, 0.0, 2 * math.pi).real == pytest.approx(0.5 * math.exp(-2 * math.pi), rel=1e-12)


def test_first_zero():
    exact = xk.zeros("exact", lo=0.0, hi=20.0)
    assert len(exact) == 1
    assert exact[0] == pytest.approx(14.134725, abs=1e-3)
    approx = xk.zeros("s3", lo=0.0, hi=20.0, m=2)
    assert len(approx) == 1
    assert abs(approx[0] - exact[0]) < 0.5


def test_unit_disk():
    assert xk.roots_in_unit_disk([1.0, 2.0, 3.0])
    assert not xk.roots_in_unit_disk([1.0, 0.5])
