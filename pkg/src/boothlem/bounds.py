"""Coefficient functionals, sharp bounds, and falsification sweeps.

Taylor coefficients of a BS(alpha) member in terms of the Schwarz-map
coefficients c1, c2, c3:

    a2 = c1,   a3 = (c1^2 + c2)/2,   a4 = ((1+2a) c1^3 + 3 c1 c2 + 2 c3)/6

Logarithmic coefficients (log(f/z) = 2 sum gamma_n z^n):

    gamma_1 = c1/2,  gamma_2 = c2/4,  gamma_3 = (a c1^3 + c3)/6

The bound predicates mirror the Prokhorov functional |c3 + mu c1 c2 + nu c1^3|
region classification and the |c2 - mu c1^2| <= max(1, |mu|) inequality.
Falsification sweeps maximize a functional over monomials plus seeded random
Blaschke products and compare against the claimed sharp bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .domain import CONVEXITY_THRESHOLD
from .members import ClassMember, from_schwarz_bs, subordination_target
from .schwarz import SchwarzMap, monomial, sample_many

__all__ = [
    "BoundReport",
    "taylor_a234",
    "bk_taylor_a234",
    "bs_a_bounds",
    "bk_a_bounds",
    "log_coeffs",
    "log_coeffs_from_omega",
    "gamma_bounds",
    "prokhorov_region",
    "prokhorov_bound",
    "prokhorov_functional",
    "keogh_merkes_check",
    "falsify",
    "default_pool",
]

DEFAULT_TOL = 1e-9


@dataclass
class BoundReport:
    functional_name: str
    max_observed: float
    bound: float
    witness: str
    samples: int
    tolerance: float = DEFAULT_TOL

    @property
    def verdict(self) -> str:
        return "violated" if self.max_observed > self.bound + self.tolerance else "holds"

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def to_dict(self) -> dict:
        return {
            "functional": self.functional_name,
            "max_observed": self.max_observed,
            "bound": self.bound,
            "witness": self.witness,
            "samples": self.samples,
            "tolerance": self.tolerance,
            "verdict": self.verdict,
        }


# -- Taylor coefficient formulas and bounds --------------------------------

def taylor_a234(omega: SchwarzMap, alpha: float):
    """(a2, a3, a4) of the BS(alpha) member generated by omega."""
    c1, c2, c3 = omega.c123
    a2 = c1
    a3 = 0.5 * (c1 * c1 + c2)
    a4 = ((1.0 + 2.0 * alpha) * c1**3 + 3.0 * c1 * c2 + 2.0 * c3) / 6.0
    return a2, a3, a4


def bk_taylor_a234(omega: SchwarzMap, alpha: float):
    """(a2, a3, a4) for the BK(alpha) member: if g in BK then zg' in BS,
    so the BK coefficient a_n is the BS one divided by n."""
    a2, a3, a4 = taylor_a234(omega, alpha)
    return a2 / 2.0, a3 / 3.0, a4 / 4.0


def bs_a_bounds(alpha: float):
    """Sharp bounds (|a2|, |a3|, |a4|) for BS(alpha)."""
    a4 = 1.0 / 3.0 if alpha <= 0.5 else (1.0 + 2.0 * alpha) / 6.0
    return 1.0, 0.5, a4


def bk_a_bounds(alpha: float):
    """Sharp bounds (|a2|, |a3|, |a4|) for BK(alpha)."""
    a4 = 1.0 / 12.0 if alpha <= 0.5 else (1.0 + 2.0 * alpha) / 24.0
    return 0.5, 1.0 / 6.0, a4


# -- logarithmic coefficients ----------------------------------------------

def log_coeffs(member: ClassMember, n_max: int) -> np.ndarray:
    """gamma_1..gamma_n from the member's series: half the coefficients of
    log(f/z)."""
    f_over_z = member.f.coeffs[1:]  # starts at 1 by normalization
    from .series import TruncatedSeries

    log_series = TruncatedSeries(f_over_z).log1()
    if n_max > log_series.order:
        raise ValueError("series order too small for requested gamma count")
    return 0.5 * log_series.coeffs[1 : n_max + 1]


def log_coeffs_from_omega(omega: SchwarzMap, alpha: float,
                          n_max: int) -> np.ndarray:
    """gamma_n = b_n/(2n) where B = omega/(1 - alpha omega^2); avoids
    constructing f (2n gamma_n z^n summed equals z d/dz log(f/z) = B)."""
    b = subordination_target(omega, alpha, n_max)
    n = np.arange(1, n_max + 1)
    return b.coeffs[1:] / (2.0 * n)


def gamma_bounds(alpha: float, n: int) -> float:
    """Sharp bound on |gamma_n|: 1/(2n) for n <= 3 at any alpha, and for
    every n when alpha is below the convexity threshold; otherwise only the
    universal 1/2 is proved."""
    if n <= 3 or alpha <= CONVEXITY_THRESHOLD:
        return 1.0 / (2.0 * n)
    return 0.5


# -- Prokhorov / Keogh-Merkes lemmas ---------------------------------------

def prokhorov_region(mu: float, nu: float) -> str:
    """Classify (mu, nu) into Omega1/Omega2/Omega3/outside.

    The regions are closed; points on shared boundaries go to the region
    giving the smaller bound, so Omega1/Omega2 (bound 1) win ties with
    Omega3 (bound |nu| >= 1).
    """
    am = abs(mu)
    if am <= 0.5 and -1.0 <= nu <= 1.0:
        return "Omega1"
    if 0.5 <= am <= 2.0:
        lower = (4.0 / 27.0) * (am + 1.0) ** 3 - (am + 1.0)
        if lower <= nu <= 1.0:
            return "Omega2"
    if am <= 2.0 and nu >= 1.0:
        return "Omega3"
    return "outside"


def prokhorov_bound(mu: float, nu: float):
    region = prokhorov_region(mu, nu)
    if region in ("Omega1", "Omega2"):
        return region, 1.0
    if region == "Omega3":
        return region, abs(nu)
    return region, None


def prokhorov_functional(omega: SchwarzMap, mu: float, nu: float) -> float:
    c1, c2, c3 = omega.c123
    return abs(c3 + mu * c1 * c2 + nu * c1**3)


def keogh_merkes_check(omega: SchwarzMap, mu: complex) -> BoundReport:
    c1, c2, _ = omega.c123
    return BoundReport(
        functional_name=f"|c2 - {mu} c1^2|",
        max_observed=abs(c2 - mu * c1 * c1),
        bound=max(1.0, abs(mu)),
        witness=omega.describe(),
        samples=1,
    )


# -- falsification ---------------------------------------------------------

def default_pool(seed: int, samples: int, max_degree: int = 5,
                 order: int = 12):
    """Monomials z..z^5 (the paper-style extremizers) followed by seeded
    random Blaschke products."""
    pool = [monomial(n, order) for n in range(1, max_degree + 1)]
    pool += sample_many(seed, samples, max_degree, order)
    return pool


def falsify(functional, bound: float, name: str, pool,
            tolerance: float = DEFAULT_TOL) -> BoundReport:
    """Maximize ``functional(omega)`` over the pool and compare to ``bound``."""
    best = -np.inf
    witness = "none"
    for omega in pool:
        v = float(functional(omega))
        if v > best:
            best = v
            witness = omega.describe()
    return BoundReport(name, best, bound, witness, len(pool), tolerance)
