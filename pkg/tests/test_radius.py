import numpy as np
import pytest

from boothlem import radius as R


GOLDEN = (np.sqrt(5) - 1) / 2


def test_l_alpha0_root():
    r = (3 - np.sqrt(5)) / 2
    assert abs(R.l_alpha(0.0, r)) < 1e-15


def test_m_endpoint_signs():
    for a in (0.1, 0.5, 1.0):
        assert R.m_alpha(a, 0.0) == 1.0
        assert R.m_alpha(a, 1.0) == pytest.approx(-a)


def test_cho_reduces_to_l_at_alpha0():
    for r in np.linspace(0, 1, 11):
        assert R.cho_quartic(0.0, r) == pytest.approx(R.l_alpha(0.0, r))


def test_bisect_root_simple():
    root, res = R.bisect_root(lambda x: x * x - 2, 0, 2,
                              fprime=lambda x: 2 * x)
    assert abs(root - np.sqrt(2)) < 1e-13
    assert res < 1e-14


def test_bisect_root_requires_bracket():
    with pytest.raises(R.BracketFailure):
        R.bisect_root(lambda x: x * x + 1, 0, 1)


def test_radius_bs_alpha0():
    res = R.radius_bs(0.0)
    assert abs(res.radius - (3 - np.sqrt(5)) / 2) <= 1e-10
    assert res.r_doubleprime == 1.0


def test_radius_bs_alpha1():
    res = R.radius_bs(1.0)
    assert abs(res.r_doubleprime - GOLDEN) < 1e-12
    assert abs(R.l_alpha(1.0, res.r_prime)) <= 1e-11
    assert res.radius == min(res.r_prime, res.r_doubleprime)


def test_radius_bs_residuals():
    for a in np.arange(0.0, 1.01, 0.1):
        res = R.radius_bs(float(a))
        assert res.residual_l <= 1e-11
        assert res.residual_m <= 1e-14


def test_radius_bk_values():
    assert R.radius_bk(0.0) == 1.0
    assert abs(R.radius_bk(1.0) - GOLDEN) < 1e-15
    assert abs(R.radius_bk(0.25) - 2 * (np.sqrt(2) - 1)) < 1e-15
    assert abs(R.radius_bk(0.5) - (np.sqrt(3) - 1)) < 1e-15


def test_radius_bk_matches_bisection():
    for k in range(1, 101):
        a = 0.01 * k
        root, _ = R.bisect_root(lambda r: R.m_alpha(a, r), 1e-9, 1 - 1e-12)
        assert abs(R.radius_bk(a) - root) <= 1e-12


def test_radius_bk_strictly_decreasing():
    vals = [R.radius_bk(a) for a in np.linspace(0, 1, 101)]
    assert vals[0] == 1.0
    assert abs(vals[-1] - GOLDEN) < 1e-12
    assert all(x > y for x, y in zip(vals, vals[1:]))


def test_h_diagonal_identity():
    for a in (0.1, 0.5, 0.9):
        for r in (0.1, 0.25, 0.3):
            lhs = R.h(a, r, r)
            rhs = R.l_alpha(a, r) / ((1 - a * r * r) * R.m_alpha(a, r))
            assert abs(lhs - rhs) < 1e-13


def test_h_domain_errors():
    with pytest.raises(R.DomainViolation):
        R.h(0.5, 0.2, 0.3)  # s > r
    with pytest.raises(R.DomainViolation):
        R.h(1.0, 0.99, 0.99)  # m(s) < 0


def test_psi_values():
    for a in np.linspace(0, 1, 11):
        assert R.psi(float(a), 0.0) == 1.0
    for s in np.linspace(0, 0.99, 20):
        assert abs(R.psi(0.0, float(s)) - (1 - s) ** 2) < 1e-14


def test_psi_nonnegative_grid():
    s = np.arange(0.0, 0.999, 1e-3)
    for a in np.arange(0.0, 1.01, 0.1):
        assert float(np.min(R.psi(float(a), s))) >= -1e-12


def test_h_monotone_in_s():
    rng = np.random.default_rng(40)
    for _ in range(10_000):
        a = rng.uniform(0, 1)
        r = rng.uniform(0, 0.99)
        cap = min(r, R.radius_bk(a) - 1e-6)
        if cap <= 0:
            continue
        s1, s2 = np.sort(rng.uniform(0, cap, 2))
        assert R.h(a, r, s1) >= R.h(a, r, s2) - 1e-12


def test_f1_convexity_sign_change():
    for a in (0.1, 0.5, 1.0):
        res = R.radius_bs(a)
        below = R.f1_convexity_at(a, -(res.r_prime - 1e-3)).real
        assert below > 0
        if res.r_prime + 1e-3 < res.r_doubleprime:
            above = R.f1_convexity_at(a, -(res.r_prime + 1e-3)).real
            assert above < 0


def test_verify_radius_bs_sweep():
    for a in np.arange(0.1, 1.01, 0.1):
        v = R.verify_radius_bs(float(a), h_samples=500)
        assert v["holds"], v


def test_verify_radius_alpha0_sign_change_location():
    v = R.verify_radius_bs(0.0, h_samples=100)
    assert abs(v["r_prime"] - 0.3819660112501051) < 1e-10
    assert v["sign_change_at_rprime"]


def test_cho_root_examples():
    assert abs(R.cho_root(0.0) - (3 - np.sqrt(5)) / 2) < 1e-10
    # alpha = 1: the quartic is positive at both endpoints but dips negative
    root = R.cho_root(1.0)
    assert 0 < root < 1
    assert abs(R.cho_quartic(1.0, root)) < 1e-10


def test_refute_cho_finds_discrepancy():
    out = R.refute_cho()
    assert out["refuted"]
    assert out["confirmed_alphas"]
    gap0 = [r for r in out["rows"] if r["alpha"] == 0.0][0]["gap"]
    assert gap0 <= 1e-6  # theorem and conjecture agree at alpha = 0
    worst = max(r["gap"] for r in out["rows"])
    assert worst > 1e-3  # the disagreement is far beyond tolerance
