"""Pre-Schwarzian derivative P_f = f''/f' and its hyperbolic sup-norm
sup (1-|z|^2) |P_f(z)|.

For BK(alpha) the norm is at most 1 (sharp, attained by the extremal g1
with P = 1/(1 - alpha z^2), witness at z = 0).  The BS extremal f1 has
P = (2+z)/((1+z-alpha z^2)(1-alpha z^2)), which has a pole at the real
point -r'' inside the disk, so its norm is infinite; the estimator detects
this as growth without saturation under grid refinement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .members import ClassMember
from .series import TruncatedSeries

__all__ = [
    "NormEstimate",
    "CriticalPointHit",
    "pre_schwarzian_series",
    "p_identity",
    "p_f1",
    "p_g1",
    "norm_estimate",
    "bk_norm_sweep",
]

ESCAPE_THRESHOLD = 1e3
GROWTH_FACTOR = 2.0
SERIES_RADIUS_CAP = 0.9


class CriticalPointHit(ZeroDivisionError):
    """f' vanishes (numerically) at an evaluation point."""


@dataclass(frozen=True)
class NormEstimate:
    value: float
    arg_witness: complex
    diverged: bool
    refinement_depth: int

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "arg_witness": [self.arg_witness.real, self.arg_witness.imag],
            "diverged": self.diverged,
            "refinement_depth": self.refinement_depth,
        }


# -- evaluators ------------------------------------------------------------

def p_identity(z):
    return np.zeros_like(np.asarray(z, dtype=complex))


def p_g1(alpha: float):
    """Closed-form P for the BK extremal g1."""
    def p(z):
        z = np.asarray(z, dtype=complex)
        return 1.0 / (1.0 - alpha * z * z)
    return p


def p_f1(alpha: float):
    """Closed-form P for the BS extremal f1 (pole at z = -r'')."""
    def p(z):
        z = np.asarray(z, dtype=complex)
        az2 = alpha * z * z
        return (2.0 + z) / ((1.0 + z - az2) * (1.0 - az2))
    return p


def pre_schwarzian_series(member: ClassMember, radius_cap: float = SERIES_RADIUS_CAP):
    """P evaluator from the member's truncated series, valid for
    |z| <= radius_cap where the series ratio is trustworthy."""
    fp = member.fprime
    fpp = fp.derivative()

    def p(z):
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) > radius_cap + 1e-12):
            raise ValueError(f"series evaluator restricted to |z| <= {radius_cap}")
        den = fp.eval_many(z)
        if np.any(np.abs(den) < 1e-14):
            raise CriticalPointHit("f' vanishes on the grid")
        return fpp.eval_many(z) / den

    return p


# -- sup estimation --------------------------------------------------------

def _weighted(p, z):
    # a refined point can land exactly on a pole of p; inf is a fine answer
    with np.errstate(divide="ignore", invalid="ignore"):
        return (1.0 - np.abs(z) ** 2) * np.abs(p(z))


def norm_estimate(p, max_radius: float = 1.0 - 1e-4, n_rings: int = 64,
                  n_angles: int = 256, levels: int = 3, refine_factor: int = 4,
                  top_k: int = 8, escape: float = ESCAPE_THRESHOLD) -> NormEstimate:
    """Adaptive sup of (1-|z|^2)|P(z)| over the disk.

    Coarse polar grid (plus the center point), then ``levels`` rounds of
    local refinement around the current top cells.  Divergence is declared
    when the estimate exceeds ``escape`` and kept growing by at least
    GROWTH_FACTOR across a refinement round.
    """
    center = float(np.abs(np.asarray(p(np.zeros(1, dtype=complex)))[0]))
    radii = np.linspace(max_radius / n_rings, max_radius, n_rings)
    angles = np.linspace(0.0, 2 * np.pi, n_angles, endpoint=False)
    dr = radii[1] - radii[0]
    dth = angles[1] - angles[0]

    z = np.outer(radii, np.exp(1j * angles)).ravel()
    vals = _weighted(p, z)
    order = np.argsort(vals)[::-1]
    best = float(vals[order[0]])
    witness = complex(z[order[0]])
    if center > best:
        best, witness = center, 0j

    history = [best]
    seeds = [complex(c) for c in z[order[:top_k]]]
    depth = 0
    for level in range(levels):
        dr /= refine_factor
        dth /= refine_factor
        new_seeds = []
        level_best = best
        for s in seeds:
            r0, t0 = abs(s), np.angle(s)
            rs = np.clip(r0 + dr * np.arange(-refine_factor, refine_factor + 1),
                         0.0, max_radius)
            ts = t0 + dth * np.arange(-refine_factor, refine_factor + 1)
            zz = np.outer(rs, np.exp(1j * ts)).ravel()
            vv = _weighted(p, zz)
            j = int(np.argmax(vv))
            new_seeds.append(complex(zz[j]))
            if float(vv[j]) > level_best:
                level_best = float(vv[j])
                witness = complex(zz[j])
        best = max(best, level_best)
        history.append(best)
        seeds = new_seeds
        depth = level + 1

    grew = any(history[i + 1] >= GROWTH_FACTOR * history[i]
               for i in range(len(history) - 1))
    diverged = best > escape and grew
    return NormEstimate(best, witness, diverged, depth)


def bk_norm_sweep(alpha: float, members, include_extremal=None,
                  radius_cap: float = SERIES_RADIUS_CAP):
    """Max estimated norm over series-built BK members (restricted to the
    trusted series radius) plus, optionally, the closed-form extremal g1."""
    from .bounds import BoundReport

    best = 0.0
    witness = "identity"
    for m in members:
        est = norm_estimate(pre_schwarzian_series(m, radius_cap),
                            max_radius=radius_cap, n_rings=24, n_angles=64,
                            levels=1)
        if est.value > best:
            best = est.value
            witness = m.omega.describe() if m.omega else "raw member"
    n = len(members)
    if include_extremal is not None:
        est = norm_estimate(p_g1(include_extremal))
        n += 1
        if est.value > best:
            best, witness = est.value, "g1 (closed form)"
    return BoundReport("pre-Schwarzian norm over BK samples", best, 1.0,
                       witness, n, tolerance=1e-4)
