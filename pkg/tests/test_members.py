import numpy as np
import pytest

from boothlem.members import (
    NonNormalizedInput,
    bk_extremal,
    extremal_fn,
    from_schwarz_bk,
    from_schwarz_bs,
    membership_probe,
    subordination_target,
)
from boothlem.schwarz import monomial, raw, sample_many
from boothlem.series import TruncatedSeries


def test_bs_from_identity_map_is_f1():
    for a in (0.0, 0.3, 1.0):
        m = from_schwarz_bs(monomial(1, 8), a, 8)
        assert abs(m.taylor(2) - 1.0) < 1e-14
        assert abs(m.taylor(3) - 0.5) < 1e-14
        assert abs(m.taylor(4) - (1 + 2 * a) / 6) < 1e-14


def test_bs_from_zero_map_is_identity():
    m = from_schwarz_bs(raw([0, 0, 0], 8), 0.4, 8)
    assert np.allclose(m.f.coeffs, TruncatedSeries.identity(8).coeffs)


def test_bs_from_cube_map_is_f3():
    m = from_schwarz_bs(monomial(3, 8), 0.25, 8)
    assert m.taylor(2) == 0 and m.taylor(3) == 0
    assert abs(m.taylor(4) - 1 / 3) < 1e-14


def test_bk_g1_expansion():
    for a in (0.0, 0.5, 1.0):
        g = from_schwarz_bk(monomial(1, 8), a, 8)
        assert abs(g.taylor(2) - 1 / 2) < 1e-14
        assert abs(g.taylor(3) - 1 / 6) < 1e-14
        assert abs(g.taylor(4) - (1 + 2 * a) / 24) < 1e-14


def test_bk_zero_map_is_identity():
    g = from_schwarz_bk(raw([0, 0, 0], 8), 0.9, 8)
    assert np.allclose(g.f.coeffs, TruncatedSeries.identity(8).coeffs)


def test_bk_g2_expansion():
    for a in (0.2, 0.8):
        g = bk_extremal(3, a, 8)
        assert g.taylor(2) == 0 and g.taylor(3) == 0
        assert abs(g.taylor(4) - 1 / 12) < 1e-14


def test_extremal_alpha0_limit_is_z_exp_z():
    import math

    m = extremal_fn(1, 0.0, 10)
    for n in range(1, 10):
        assert abs(m.f[n] - 1 / math.factorial(n - 1)) < 1e-14


def test_extremal_f2_coefficients():
    for a in (0.0, 0.5, 1.0):
        m = extremal_fn(2, a, 8)
        assert m.taylor(2) == 0
        assert abs(m.taylor(3) - 0.5) < 1e-14


def test_extremal_alpha1_log_series():
    # log(f_1/z) at alpha = 1 is z + z^3/3 + z^5/5 + ...
    m = extremal_fn(1, 1.0, 9)
    log = TruncatedSeries(m.f.coeffs[1:]).log1()
    expect = np.zeros(9)
    expect[1::2] = 1 / np.arange(1, 9, 2)
    assert np.allclose(log.coeffs, expect, atol=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_extremal_matches_construction(n):
    for a in np.arange(0.0, 1.01, 0.1):
        lhs = extremal_fn(n, float(a), 32).f.coeffs
        rhs = from_schwarz_bs(monomial(n, 32), float(a), 32).f.coeffs
        assert np.max(np.abs(lhs - rhs)) <= 1e-12


def test_reconstruct_target_from_member():
    for i, omega in enumerate(sample_many(77, 20, order=16)):
        a = (i % 10) / 10
        m = from_schwarz_bs(omega, a, 16)
        z = TruncatedSeries.identity(16)
        back = (z * m.fprime).div(m.f, cancel=1) - 1.0
        target = subordination_target(omega, a, 16)
        n = back.order
        assert np.max(np.abs(back.coeffs - target.coeffs[: n + 1])) <= 1e-10


def test_bk_bs_bridge():
    # if g is the BK member of omega then z g' is the BS member of omega
    for i, omega in enumerate(sample_many(78, 10, order=16)):
        a = 0.1 + 0.08 * i
        g = from_schwarz_bk(omega, a, 16)
        zgprime = TruncatedSeries.identity(g.fprime.order) * g.fprime
        f = from_schwarz_bs(omega, a, 16).f
        n = zgprime.order
        assert np.max(np.abs(zgprime.coeffs - f.coeffs[: n + 1])) <= 1e-12


def test_membership_probe_f1_inside():
    m = extremal_fn(1, 0.5, 32)
    rep = membership_probe(m.f, 0.5, "bs", radii=(0.5, 0.7, 0.85, 0.9))
    assert rep["inside"]


def test_membership_probe_identity():
    rep = membership_probe(TruncatedSeries.identity(16), 0.7, "bs")
    assert rep["inside"]


def test_membership_probe_koebe_violates_alpha0():
    # Koebe z/(1-z)^2 has zf'/f - 1 = 2z/(1-z) + ..., far outside the disk
    n = 32
    k = np.arange(n + 1, dtype=complex)
    koebe = TruncatedSeries(k)  # z/(1-z)^2 = sum n z^n
    rep = membership_probe(koebe, 0.0, "bs", radii=(0.9,))
    assert not rep["inside"]
    assert rep["violations"]


def test_membership_probe_bk_mode():
    g = bk_extremal(1, 0.3, 32)
    rep = membership_probe(g.f, 0.3, "bk", radii=(0.5, 0.7, 0.85))
    assert rep["inside"]


def test_membership_probe_rejects_unnormalized():
    with pytest.raises(NonNormalizedInput):
        membership_probe(TruncatedSeries([0, 2, 0]), 0.5)


def test_member_caches_derivative():
    m = extremal_fn(1, 0.25, 12)
    assert np.allclose(m.fprime.coeffs, m.f.derivative().coeffs)
