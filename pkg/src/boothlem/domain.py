"""Geometry of the Booth-lemniscate target domain.

The domain is the image of the unit disk under w = z/(1 - alpha z^2).  For
alpha < 1 it is the interior of an elliptic Booth lemniscate; for alpha = 1
it degenerates to the plane minus the two imaginary-axis slits
{iy : |y| >= 1/2}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "AlphaParam",
    "BoothDomain",
    "PoleHit",
    "CONVEXITY_THRESHOLD",
    "f_alpha",
    "f_alpha_prime",
    "boundary_residual",
    "boundary_curve",
    "target_shape_checks",
]

# alpha at and below which the lemniscate (equivalently z/(1-alpha z^2))
# is convex: 3 - 2 sqrt(2)
CONVEXITY_THRESHOLD = 3.0 - 2.0 * np.sqrt(2.0)

SLIT_RE_TOL = 1e-12


class PoleHit(ZeroDivisionError):
    """Evaluation at a pole of z/(1 - alpha z^2)."""


@dataclass(frozen=True)
class AlphaParam:
    """Class parameter alpha in [0, 1] with derived constants."""

    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")

    @property
    def sqrt_alpha(self) -> float:
        return float(np.sqrt(self.alpha))

    @property
    def convexity_flag(self) -> bool:
        return self.alpha <= CONVEXITY_THRESHOLD


def f_alpha(alpha: float, z: complex) -> complex:
    """w = z/(1 - alpha z^2)."""
    den = 1.0 - alpha * z * z
    if den == 0:
        raise PoleHit(f"alpha z^2 = 1 at z = {z}")
    return z / den


def f_alpha_prime(alpha: float, z) -> complex:
    return (1.0 + alpha * z * z) / (1.0 - alpha * z * z) ** 2


@dataclass(frozen=True)
class BoothDomain:
    alpha: AlphaParam

    def quartic(self, w: complex) -> float:
        """Scaled defining polynomial, negative inside (alpha < 1 only).

        The textbook form has 1/(1-alpha)^2 coefficients that blow up as
        alpha -> 1; both sides are multiplied by (1-a)^2 (1+a)^2 here.
        """
        a = self.alpha.alpha
        x, y = w.real, w.imag
        p, q = (1.0 - a) ** 2, (1.0 + a) ** 2
        return (x * x + y * y) ** 2 * p * q - x * x * q - y * y * p

    def contains(self, w: complex) -> bool:
        w = complex(w)
        a = self.alpha.alpha
        if a == 1.0:
            return not (abs(w.real) < SLIT_RE_TOL and abs(w.imag) >= 0.5)
        if w == 0:
            return True
        return self.quartic(w) < 0.0

    def contains_many(self, w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=complex)
        a = self.alpha.alpha
        if a == 1.0:
            return ~((np.abs(w.real) < SLIT_RE_TOL) & (np.abs(w.imag) >= 0.5))
        x, y = w.real, w.imag
        p, q = (1.0 - a) ** 2, (1.0 + a) ** 2
        val = (x * x + y * y) ** 2 * p * q - x * x * q - y * y * p
        return (val < 0.0) | (w == 0)


def boundary_residual(alpha: float, theta: float) -> float:
    """Unscaled quartic evaluated at the boundary image w = F(e^{i theta});
    should vanish since the boundary of the disk maps onto the lemniscate."""
    if alpha >= 1.0:
        raise ValueError("boundary residual is defined for alpha < 1")
    w = f_alpha(alpha, np.exp(1j * theta))
    x, y = w.real, w.imag
    return float((x * x + y * y) ** 2
                 - x * x / (1.0 - alpha) ** 2
                 - y * y / (1.0 + alpha) ** 2)


def boundary_curve(alpha: float, n: int = 720) -> np.ndarray:
    """Boundary of the domain as F(e^{i theta}) on a closed theta grid."""
    theta = np.linspace(0.0, 2.0 * np.pi, n, endpoint=True)
    z = np.exp(1j * theta)
    return z / (1.0 - alpha * z * z)


def target_shape_checks(alpha: float, radii=None, n_angles: int = 256) -> dict:
    """Grid minima of the starlikeness and convexity quantities of
    z/(1 - alpha z^2): Re(zF'/F) and Re(1 + zF''/F')."""
    if radii is None:
        radii = np.linspace(0.05, 0.999, 60)
    theta = np.linspace(0.0, 2.0 * np.pi, n_angles, endpoint=False)
    z = np.outer(radii, np.exp(1j * theta)).ravel()
    az2 = alpha * z * z
    star = np.real((1.0 + az2) / (1.0 - az2))
    # zF''/F' = 2 alpha z^2 (3 + alpha z^2) / ((1 - alpha z^2)(1 + alpha z^2))
    conv = np.real(1.0 + 2.0 * az2 * (3.0 + az2) / ((1.0 - az2) * (1.0 + az2)))
    i_star = int(np.argmin(star))
    i_conv = int(np.argmin(conv))
    return {
        "alpha": alpha,
        "min_starlike": float(star[i_star]),
        "starlike_witness": complex(z[i_star]),
        "min_convex": float(conv[i_conv]),
        "convex_witness": complex(z[i_conv]),
        "starlike_holds": bool(star[i_star] >= -1e-8),
        "convex_holds": bool(conv[i_conv] >= -1e-8),
    }
