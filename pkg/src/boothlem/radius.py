"""Radii of convexity for BS(alpha) and BK(alpha).

The BS radius is min(r', r'') where r' is the unique root in (0,1) of

    l(r) = a^2 r^4 + a r^3 + (1-2a) r^2 - 3r + 1

and r'' is the root of m(r) = 1 - r - a r^2, closed form
(sqrt(1+4a)-1)/(2a) (limit 1 at a=0).  The BK radius is r'' itself.

The earlier conjecture replaced l by the quartic
1 - 3r + (1-6a) r^2 + 5a r^3 + 5a^2 r^4; ``refute_cho`` computes both and
confirms numerically which one matches the sign change of the convexity
quantity of the extremal function f_1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "RadiusResult",
    "BracketFailure",
    "DomainViolation",
    "l_alpha",
    "m_alpha",
    "cho_quartic",
    "bisect_root",
    "radius_bs",
    "radius_bk",
    "h",
    "psi",
    "f1_convexity_at",
    "verify_radius_bs",
    "cho_root",
    "refute_cho",
]


class BracketFailure(RuntimeError):
    """No sign change on the requested bracket."""


class DomainViolation(ValueError):
    """h(r, s) needs 0 <= s <= r < 1 with m(s) > 0."""


def l_alpha(alpha: float, r) -> float:
    return alpha**2 * r**4 + alpha * r**3 + (1.0 - 2.0 * alpha) * r * r - 3.0 * r + 1.0


def m_alpha(alpha: float, r) -> float:
    return 1.0 - r - alpha * r * r


def cho_quartic(alpha: float, r) -> float:
    return (1.0 - 3.0 * r + (1.0 - 6.0 * alpha) * r * r
            + 5.0 * alpha * r**3 + 5.0 * alpha**2 * r**4)


def bisect_root(f, lo: float, hi: float, xtol: float = 1e-13,
                fprime=None) -> tuple[float, float]:
    """Bracketed bisection to ``xtol``, optionally polished with one or two
    Newton steps kept inside the bracket.  Returns (root, residual)."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo, 0.0
    if fhi == 0.0:
        return hi, 0.0
    if np.sign(flo) == np.sign(fhi):
        raise BracketFailure(f"no sign change on [{lo}, {hi}]")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid, 0.0
        if np.sign(fm) == np.sign(flo):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    root = 0.5 * (lo + hi)
    if fprime is not None:
        for _ in range(2):
            d = fprime(root)
            if d == 0.0:
                break
            step = f(root) / d
            cand = root - step
            if lo <= cand <= hi or abs(step) < xtol:
                root = cand
    return root, abs(f(root))


@dataclass(frozen=True)
class RadiusResult:
    alpha: float
    r_prime: float
    r_doubleprime: float
    residual_l: float
    residual_m: float
    bracket: tuple[float, float]

    @property
    def radius(self) -> float:
        return min(self.r_prime, self.r_doubleprime)


def radius_bk(alpha: float) -> float:
    """(sqrt(1+4a)-1)/(2a), with the alpha->0 limit 1."""
    if alpha == 0.0:
        return 1.0
    return (np.sqrt(1.0 + 4.0 * alpha) - 1.0) / (2.0 * alpha)


def radius_bs(alpha: float) -> RadiusResult:
    lo, hi = 1e-9, 1.0 - 1e-9

    def lp(r):
        return 4 * alpha**2 * r**3 + 3 * alpha * r * r + 2 * (1 - 2 * alpha) * r - 3

    r_prime, res_l = bisect_root(lambda r: l_alpha(alpha, r), lo, hi, fprime=lp)
    if alpha == 0.0:
        # m_0(r) = 1 - r has its root exactly at 1; the min is unaffected
        r_dp, res_m = 1.0, 0.0
    else:
        r_dp = radius_bk(alpha)
        res_m = abs(m_alpha(alpha, r_dp))
    return RadiusResult(alpha, r_prime, r_dp, res_l, res_m, (lo, hi))


# -- lower-bound machinery of the BS proof ---------------------------------

def h(alpha: float, r: float, s: float) -> float:
    """Lower bound for Re(1 + z f''/f') at |z| = r when |omega(z)| = s."""
    if not (0.0 <= s <= r < 1.0):
        raise DomainViolation(f"need 0 <= s <= r < 1, got r={r}, s={s}")
    ms = m_alpha(alpha, s)
    if ms <= 0.0:
        raise DomainViolation(f"m(s) = {ms} <= 0 at s = {s}")
    one_as2 = 1.0 - alpha * s * s
    return (1.0 - s / one_as2
            - r * (1.0 + alpha * s * s) * (1.0 - s * s)
            / ((1.0 - r * r) * ms * one_as2))


def psi(alpha: float, s) -> float:
    """Positivity certificate polynomial for dh/ds < 0."""
    a = alpha
    return (1.0 - (2.0 - 6.0 * a) * s + (1.0 - 4.0 * a) * s * s
            - 4.0 * a * (1.0 + a) * s**3 + a * (4.0 - a) * s**4
            + 2.0 * a * a * (3.0 - a) * s**5 - a * a * s**6)


def f1_convexity_at(alpha: float, z: complex) -> complex:
    """1 + z f1''/f1' from the closed form
    f1''/f1' = (2+z) / ((1 + z - alpha z^2)(1 - alpha z^2))."""
    az2 = alpha * z * z
    return 1.0 + z * (2.0 + z) / ((1.0 + z - az2) * (1.0 - az2))


def verify_radius_bs(alpha: float, psi_step: float = 1e-3,
                     h_samples: int = 10_000, seed: int = 20240,
                     n_angles: int = 512) -> dict:
    """Three independent checks of the BS radius at one alpha:

    (i)   psi >= 0 on a fine s-grid of [0, 0.999];
    (ii)  h(r, .) nonincreasing on random (r, s1 <= s2) triples;
    (iii) the closed-form convexity quantity of f1: positive on the circle
          just inside the radius, negative at z = -r just outside r'.
    """
    res = radius_bs(alpha)
    s = np.arange(0.0, 0.999 + psi_step / 2, psi_step)
    psi_min = float(np.min(psi(alpha, s)))

    rng = np.random.default_rng(seed)
    mono_worst = np.inf
    for _ in range(h_samples):
        r = rng.uniform(0.0, 0.99)
        s1, s2 = np.sort(rng.uniform(0.0, min(r, _s_cap(alpha)), size=2))
        try:
            mono_worst = min(mono_worst, h(alpha, r, s1) - h(alpha, r, s2))
        except DomainViolation:
            continue

    radius = res.radius
    theta = np.linspace(0.0, 2 * np.pi, n_angles, endpoint=False)
    inner = (radius - 1e-6) * np.exp(1j * theta)
    min_on_circle = float(np.min(np.real(
        [f1_convexity_at(alpha, z) for z in inner])))
    below = float(np.real(f1_convexity_at(alpha, -(res.r_prime - 1e-6))))
    above_r = res.r_prime + 1e-6
    if above_r < res.r_doubleprime:
        above = float(np.real(f1_convexity_at(alpha, -above_r)))
        sign_change = below > 0.0 > above
    else:
        # r' >= r'': the quantity blows up at -r'' before reaching r'
        above = float("nan")
        sign_change = below > 0.0
    return {
        "alpha": alpha,
        "radius": radius,
        "r_prime": res.r_prime,
        "r_doubleprime": res.r_doubleprime,
        "residual_l": res.residual_l,
        "residual_m": res.residual_m,
        "psi_min": psi_min,
        "h_monotone_worst": mono_worst,
        "min_on_inner_circle": min_on_circle,
        "value_below_rprime": below,
        "value_above_rprime": above,
        "sign_change_at_rprime": sign_change,
        "holds": (psi_min >= -1e-12 and mono_worst >= -1e-12
                  and min_on_circle > 0.0 and sign_change),
    }


def _s_cap(alpha: float) -> float:
    # keep s strictly below the root of m so h is defined
    return radius_bk(alpha) - 1e-6


def cho_root(alpha: float, scan_step: float = 1e-3) -> float:
    """Smallest positive root of the conjectured quartic in (0, 1), located
    by sign-change scan plus bisection (both interval endpoints can be
    positive when the quartic dips twice)."""
    r_prev, f_prev = scan_step, cho_quartic(alpha, scan_step)
    r = 2 * scan_step
    while r < 1.0:
        f_cur = cho_quartic(alpha, r)
        if f_prev == 0.0:
            return r_prev
        if np.sign(f_prev) != np.sign(f_cur):
            root, _ = bisect_root(lambda x: cho_quartic(alpha, x), r_prev, r)
            return root
        r_prev, f_prev = r, f_cur
        r += scan_step
    raise BracketFailure(f"cho quartic has no root in (0, 1) at alpha={alpha}")


def refute_cho(alphas=None, min_gap: float = 1e-6) -> dict:
    """Compare the conjectured radius min(cho-root, r'') with the proven
    min(r', r'') across an alpha sweep; at each discrepancy check with the
    f1 closed form that the proven value is where convexity actually fails.
    """
    if alphas is None:
        alphas = [round(0.1 * k, 10) for k in range(0, 11)]
    rows = []
    confirmed = []
    for a in alphas:
        res = radius_bs(a)
        true_radius = res.radius
        rc = cho_root(a)
        conjectured = min(rc, res.r_doubleprime)
        gap = abs(conjectured - true_radius)
        row = {
            "alpha": a,
            "cho_root": rc,
            "conjectured_radius": conjectured,
            "r_prime": res.r_prime,
            "r_doubleprime": res.r_doubleprime,
            "radius": true_radius,
            "gap": gap,
        }
        if gap > min_gap:
            # oracle: f1 is still convex strictly between the conjectured
            # radius and the true one, and fails just past the true one
            mid = 0.5 * (conjectured + true_radius)
            probe = min(mid, true_radius - 1e-6)
            still_convex = float(np.real(f1_convexity_at(a, -probe))) > 0.0
            v = verify_radius_bs(a, h_samples=0)
            row["oracle_confirms"] = bool(still_convex and v["sign_change_at_rprime"])
            if row["oracle_confirms"]:
                confirmed.append(a)
        rows.append(row)
    return {
        "rows": rows,
        "refuted": bool(confirmed),
        "confirmed_alphas": confirmed,
        "min_gap": min_gap,
    }
