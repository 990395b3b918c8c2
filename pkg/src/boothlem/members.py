"""Members of the classes BS(alpha) and BK(alpha).

A member is built from a Schwarz map omega by integrating the subordination
relation: with B(z) = omega(z)/(1 - alpha omega(z)^2) = sum b_n z^n,

* BS:  z f'/f - 1 = B  =>  log(f/z) = sum (b_n/n) z^n,  f = z exp(...)
* BK:  z f''/f'  = B  =>  log f'   = sum (b_n/n) z^n,  f = int_0^z exp(...)

The named extremal family f_n = z ((1+sqrt(a) z^n)/(1-sqrt(a) z^n))^{1/(2n sqrt(a))}
has the closed-form log expansion log(f_n/z) = sum_k a^k z^{n(2k+1)} / (n(2k+1)),
which degenerates to z^n/n at alpha = 0 (f_n = z exp(z^n/n)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domain import BoothDomain, AlphaParam
from .schwarz import SchwarzMap, monomial
from .series import TruncatedSeries

__all__ = [
    "ClassMember",
    "NonNormalizedInput",
    "subordination_target",
    "from_schwarz_bs",
    "from_schwarz_bk",
    "extremal_fn",
    "bk_extremal",
    "membership_probe",
]

DEFAULT_ORDER = 32


class NonNormalizedInput(ValueError):
    """Member series must satisfy f(0)=0, f'(0)=1."""


@dataclass(frozen=True)
class ClassMember:
    class_tag: str  # "bs" or "bk"
    alpha: float
    omega: SchwarzMap | None
    f: TruncatedSeries
    fprime: TruncatedSeries

    def taylor(self, n: int) -> complex:
        """Coefficient a_n of f."""
        return self.f[n]


def subordination_target(omega: SchwarzMap, alpha: float,
                         order: int) -> TruncatedSeries:
    """B(z) = omega/(1 - alpha omega^2) as a truncated series."""
    w = omega.series.truncate(order)
    den = TruncatedSeries.constant(1.0, order) - alpha * (w * w)
    return w.div(den)


def _log_from_target(b: TruncatedSeries) -> TruncatedSeries:
    n = np.arange(1, b.order + 1)
    coeffs = np.zeros(b.order + 1, dtype=complex)
    coeffs[1:] = b.coeffs[1:] / n
    return TruncatedSeries(coeffs)


def from_schwarz_bs(omega: SchwarzMap, alpha: float,
                    order: int = DEFAULT_ORDER) -> ClassMember:
    """BS(alpha) member with z f'/f - 1 = F_alpha(omega(z))."""
    b = subordination_target(omega, alpha, order)
    f = TruncatedSeries.identity(order) * _log_from_target(b).exp0()
    return ClassMember("bs", alpha, omega, f, f.derivative())


def from_schwarz_bk(omega: SchwarzMap, alpha: float,
                    order: int = DEFAULT_ORDER) -> ClassMember:
    """BK(alpha) member with z f''/f' = F_alpha(omega(z))."""
    b = subordination_target(omega, alpha, order - 1)
    fprime = _log_from_target(b).exp0()
    f = fprime.integrate0()
    return ClassMember("bk", alpha, omega, f, fprime)


def extremal_fn(n: int, alpha: float, order: int = DEFAULT_ORDER) -> ClassMember:
    """Closed-form extremal f_n of BS(alpha); equals
    from_schwarz_bs(monomial(n), alpha) coefficientwise."""
    if n < 1:
        raise ValueError("n must be >= 1")
    log_coeffs = np.zeros(order + 1, dtype=complex)
    k = 0
    while n * (2 * k + 1) <= order:
        log_coeffs[n * (2 * k + 1)] = alpha**k / (n * (2 * k + 1))
        k += 1
    f = TruncatedSeries.identity(order) * TruncatedSeries(log_coeffs).exp0()
    return ClassMember("bs", alpha, monomial(n, order), f, f.derivative())


def bk_extremal(n: int, alpha: float, order: int = DEFAULT_ORDER) -> ClassMember:
    """BK(alpha) counterpart g_n built from the monomial map z^n
    (g_1 and g_2 are the sharpness witnesses for the Taylor bounds)."""
    return from_schwarz_bk(monomial(n, order), alpha, order)


def membership_probe(f: TruncatedSeries, alpha: float, mode: str = "bs",
                     radii=(0.5, 0.7, 0.85, 0.95), n_angles: int = 256) -> dict:
    """Grid test of the subordination image: evaluates w(z) = z f'/f - 1
    (BS) or z f''/f' (BK) from the truncated series and reports any grid
    point whose image leaves the target domain.

    Near-boundary verdicts are advisory: the probe evaluates a truncated
    polynomial, and the recorded truncation radius marks where that matters.
    """
    if f[0] != 0 or f[1] != 1:
        raise NonNormalizedInput("expected f(0)=0 and f'(0)=1")
    z_series = TruncatedSeries.identity(f.order)
    if mode == "bs":
        w_series = (z_series * f.derivative()).div(f, cancel=1) - 1.0
    elif mode == "bk":
        fp = f.derivative()
        w_series = (z_series.truncate(fp.order) * fp.derivative()).div(fp)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    dom = BoothDomain(AlphaParam(alpha))
    theta = np.linspace(0.0, 2 * np.pi, n_angles, endpoint=False)
    violations = []
    for r in radii:
        z = r * np.exp(1j * theta)
        w = w_series.eval_many(z)
        bad = ~dom.contains_many(w)
        for zz, ww in zip(z[bad], w[bad]):
            violations.append({"z": complex(zz), "w": complex(ww)})
    return {
        "mode": mode,
        "alpha": alpha,
        "violations": violations,
        "n_points": len(radii) * n_angles,
        "truncation_order": f.order,
        "max_radius": max(radii),
        "inside": not violations,
    }
