"""Schwarz functions: analytic self-maps of the unit disk fixing the origin.

Three constructions are supported: monomials z^n, finite Blaschke products
with a rotation factor, and raw coefficient lists.  Monomials and Blaschke
products are the search family for every falsification sweep; sampling is
seeded and reproducible (numpy PCG64 via ``default_rng``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .series import TruncatedSeries, geometric

__all__ = [
    "SchwarzMap",
    "ZeroOutsideDisk",
    "monomial",
    "blaschke",
    "raw",
    "sample",
    "sample_many",
    "schwarz_pick_check",
    "SAMPLER_ZERO_CAP",
]

# Blaschke zeros are capped away from the boundary so that series expansion
# at order 32 stays well-conditioned.
SAMPLER_ZERO_CAP = 0.95

DEFAULT_ORDER = 32


class ZeroOutsideDisk(ValueError):
    """Blaschke zeros must lie strictly inside the unit disk."""


@dataclass(frozen=True)
class SchwarzMap:
    """A disk self-map omega with omega(0) = 0.

    ``kind`` is "monomial", "blaschke" or "raw"; ``series`` caches the
    expansion used for coefficient extraction.
    """

    kind: str
    series: TruncatedSeries
    degree: int = 0  # monomial power, or number of Blaschke zeros
    zeros: tuple = ()
    rotation: complex = 1.0

    def coeff(self, n: int) -> complex:
        return self.series[n]

    @property
    def c123(self):
        s = self.series
        return s[1], s[2], s[3]

    def __call__(self, z: complex) -> complex:
        if self.kind == "monomial":
            return z**self.degree
        if self.kind == "blaschke":
            w = self.rotation * z
            for a in self.zeros:
                w *= (a - z) / (1.0 - np.conj(a) * z)
            return w
        return self.series(z)

    def eval_many(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        if self.kind == "monomial":
            return z**self.degree
        if self.kind == "blaschke":
            w = self.rotation * z
            for a in self.zeros:
                w = w * (a - z) / (1.0 - np.conj(a) * z)
            return w
        return self.series.eval_many(z)

    def describe(self) -> str:
        if self.kind == "monomial":
            return f"z^{self.degree}"
        if self.kind == "blaschke":
            zs = ", ".join(f"{a.real:+.6f}{a.imag:+.6f}j" for a in self.zeros)
            return f"blaschke(rot={self.rotation:.6f}, zeros=[{zs}])"
        return f"raw(c1={self.series[1]:.6f}, ...)"


def monomial(n: int, order: int = DEFAULT_ORDER) -> SchwarzMap:
    if n < 1:
        raise ValueError("monomial degree must be >= 1")
    return SchwarzMap("monomial", TruncatedSeries.monomial(n, order), degree=n)


def blaschke(zeros, rotation: complex = 1.0, order: int = DEFAULT_ORDER) -> SchwarzMap:
    """rotation * z * prod (a_i - z)/(1 - conj(a_i) z)."""
    zeros = tuple(complex(a) for a in zeros)
    for a in zeros:
        if abs(a) >= 1.0:
            raise ZeroOutsideDisk(f"|{a}| >= 1")
    if not np.isclose(abs(complex(rotation)), 1.0, atol=1e-12):
        raise ValueError("rotation must be unimodular")
    s = TruncatedSeries.identity(order) * rotation
    for a in zeros:
        num = TruncatedSeries.constant(a, order) - TruncatedSeries.identity(order)
        factor = num * geometric(TruncatedSeries.identity(order) * np.conj(a), order)
        s = s * factor
    return SchwarzMap("blaschke", s, degree=len(zeros), zeros=zeros,
                      rotation=complex(rotation))


def raw(coeffs, order: int = DEFAULT_ORDER) -> SchwarzMap:
    """Schwarz map from an explicit coefficient list (c0 must be 0)."""
    s = TruncatedSeries(np.pad(np.asarray(coeffs, dtype=complex),
                               (0, max(0, order + 1 - len(coeffs)))))
    if s[0] != 0:
        raise ValueError("Schwarz map requires omega(0) = 0")
    return SchwarzMap("raw", s.truncate(order))


def sample(seed: int, max_degree: int = 5, order: int = DEFAULT_ORDER) -> SchwarzMap:
    """One seeded random Blaschke product of degree ~ Uniform{0..max_degree}."""
    return _draw(np.random.default_rng(seed), max_degree, order)


def sample_many(seed: int, count: int, max_degree: int = 5,
                order: int = DEFAULT_ORDER):
    """Deterministic stream of ``count`` random maps from one seed."""
    rng = np.random.default_rng(seed)
    return [_draw(rng, max_degree, order) for _ in range(count)]


def _draw(rng: np.random.Generator, max_degree: int, order: int) -> SchwarzMap:
    deg = int(rng.integers(0, max_degree + 1))
    # uniform in the disk of radius SAMPLER_ZERO_CAP
    r = SAMPLER_ZERO_CAP * np.sqrt(rng.random(deg))
    phi = 2 * np.pi * rng.random(deg)
    zeros = r * np.exp(1j * phi)
    rot = np.exp(2j * np.pi * rng.random())
    return blaschke(zeros, rot, order)


def schwarz_pick_check(omega: SchwarzMap, grid: np.ndarray) -> dict:
    """Max violation of |omega(z)| <= |z| and the Schwarz-Pick derivative
    bound on the grid.  The derivative uses the truncated series, so the
    result is approximate near the boundary."""
    z = np.asarray(grid, dtype=complex)
    w = omega.eval_many(z)
    slack_value = np.abs(w) - np.abs(z)
    dw = omega.series.derivative().eval_many(z)
    bound = (1.0 - np.abs(w) ** 2) / (1.0 - np.abs(z) ** 2)
    slack_deriv = np.abs(dw) - bound
    return {
        "max_value_violation": float(slack_value.max()),
        "max_derivative_violation": float(slack_deriv.max()),
        "points": len(z),
    }
