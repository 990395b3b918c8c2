"""Truncated complex power series arithmetic.

A :class:`TruncatedSeries` holds the coefficients c0..cN of a formal power
series truncated at order N.  Every operation is exact on the retained
coefficients; truncation is the only approximation.  Binary operations on
series of different orders return the minimum of the two orders.
"""

from __future__ import annotations

import cmath

import numpy as np

__all__ = [
    "TruncatedSeries",
    "DivisionByZeroSeries",
    "CompositionRequiresZeroConstant",
    "BranchPointAtOrigin",
    "geometric",
]


class DivisionByZeroSeries(ZeroDivisionError):
    """Divisor vanishes at the origin to higher order than the dividend."""


class CompositionRequiresZeroConstant(ValueError):
    """Inner series of a composition must vanish at the origin."""


class BranchPointAtOrigin(ValueError):
    """log1/powc need a base series with constant term 1."""


class TruncatedSeries:
    """Power series c0 + c1 z + ... + cN z^N with complex coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = np.asarray(coeffs, dtype=complex)
        if self.coeffs.ndim != 1 or len(self.coeffs) < 2:
            raise ValueError("need at least coefficients c0, c1")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(np.zeros(order + 1, dtype=complex))

    @classmethod
    def constant(cls, value: complex, order: int) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        return cls(c)

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=complex)
        c[1] = 1.0
        return cls(c)

    @classmethod
    def monomial(cls, n: int, order: int, coeff: complex = 1.0) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=complex)
        if n <= order:
            c[n] = coeff
        return cls(c)

    # -- basic protocol ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> complex:
        return complex(self.coeffs[n])

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs!r})"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs[: order + 1].copy())

    def _common(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._common(other)
            return TruncatedSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1])
        c = self.coeffs.copy()
        c[0] += other
        return TruncatedSeries(c)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._common(other)
            return TruncatedSeries(self.coeffs[: n + 1] - other.coeffs[: n + 1])
        c = self.coeffs.copy()
        c[0] -= other
        return TruncatedSeries(c)

    def __rsub__(self, other):
        c = -self.coeffs
        c[0] += other
        return TruncatedSeries(c)

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._common(other)
            prod = np.convolve(self.coeffs[: n + 1], other.coeffs[: n + 1])
            return TruncatedSeries(prod[: n + 1])
        return TruncatedSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.div(other)
        return TruncatedSeries(self.coeffs / other)

    def div(self, other: "TruncatedSeries", cancel: int = 0) -> "TruncatedSeries":
        """Series quotient.

        With ``cancel=k`` both operands are required to vanish at the origin
        to order >= k; the common factor z^k is removed before dividing
        (zf'/f-type quotients).  The divisor after cancellation must have a
        nonzero constant term.
        """
        n = self._common(other)
        a = self.coeffs[: n + 1]
        b = other.coeffs[: n + 1]
        if cancel:
            if np.any(np.abs(a[:cancel]) > 0) or np.any(np.abs(b[:cancel]) > 0):
                raise DivisionByZeroSeries(
                    f"operands do not share a zero of order {cancel} at the origin"
                )
            a = a[cancel:]
            b = b[cancel:]
            n -= cancel
        if b[0] == 0:
            raise DivisionByZeroSeries("divisor vanishes at the origin")
        q = np.empty(n + 1, dtype=complex)
        q[0] = a[0] / b[0]
        for k in range(1, n + 1):
            q[k] = (a[k] - np.dot(q[:k], b[k:0:-1])) / b[0]
        return TruncatedSeries(q)

    # -- composition and elementary functions ------------------------------

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(z)) to truncation; inner must vanish at the origin."""
        if inner.coeffs[0] != 0:
            raise CompositionRequiresZeroConstant(
                "inner series has nonzero constant term"
            )
        n = self._common(inner)
        g = inner.truncate(n)
        # Horner: ((cN g + cN-1) g + ...) g + c0
        acc = TruncatedSeries.constant(self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            acc = acc * g + self.coeffs[k]
        return acc

    def log1(self) -> "TruncatedSeries":
        """log of a series with constant term 1, principal branch."""
        if self.coeffs[0] != 1:
            raise BranchPointAtOrigin("log1 requires constant term exactly 1")
        n = self.order
        a = self.coeffs
        # l' = a'/a  =>  k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
        l = np.zeros(n + 1, dtype=complex)
        for k in range(1, n + 1):
            s = k * a[k]
            for j in range(1, k):
                s -= j * l[j] * a[k - j]
            l[k] = s / k
        return TruncatedSeries(l)

    def exp0(self) -> "TruncatedSeries":
        """exp of the series; the constant term is exponentiated exactly."""
        n = self.order
        a = self.coeffs
        e = np.zeros(n + 1, dtype=complex)
        e[0] = cmath.exp(a[0])
        # e' = a' e  =>  k e_k = sum_{j=1}^{k} j a_j e_{k-j}
        for k in range(1, n + 1):
            s = 0.0
            for j in range(1, k + 1):
                s += j * a[j] * e[k - j]
            e[k] = s / k
        return TruncatedSeries(e)

    def powc(self, gamma: complex) -> "TruncatedSeries":
        """Principal power a^gamma for a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise BranchPointAtOrigin("powc requires constant term exactly 1")
        return (self.log1() * gamma).exp0()

    # -- calculus ----------------------------------------------------------

    def derivative(self) -> "TruncatedSeries":
        n = self.order
        k = np.arange(1, n + 1)
        if n == 1:
            return TruncatedSeries([self.coeffs[1], 0.0])
        return TruncatedSeries(self.coeffs[1:] * k)

    def integrate0(self) -> "TruncatedSeries":
        """Antiderivative vanishing at the origin; gains one order exactly."""
        n = self.order
        k = np.arange(1, n + 2)
        out = np.zeros(n + 2, dtype=complex)
        out[1:] = self.coeffs / k
        return TruncatedSeries(out)

    # -- evaluation --------------------------------------------------------

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc

    def eval_many(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc


def geometric(ratio: TruncatedSeries, order: int) -> TruncatedSeries:
    """1/(1 - ratio) for a ratio series vanishing at the origin."""
    one = TruncatedSeries.constant(1.0, min(order, ratio.order))
    return one.div(one - ratio)
