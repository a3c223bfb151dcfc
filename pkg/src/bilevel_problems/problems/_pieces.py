"""Hand-differentiated non-polynomial building blocks."""

import numpy as np

from ..core import Piece, Smooth, as_piece
from ..poly import Poly


class Sum(Piece):
    def __init__(self, *parts):
        self.parts = [as_piece(p) for p in parts]
        self.linear = all(p.linear for p in self.parts)

    def value(self, z):
        return sum(p.value(z) for p in self.parts)

    def grad(self, z):
        return sum(p.grad(z) for p in self.parts)

    def hess(self, z):
        return sum(p.hess(z) for p in self.parts)


class ExpOf(Piece):
    """``scale * exp(p(z))`` for a polynomial ``p``."""

    def __init__(self, p: Poly, scale: float = 1.0):
        self.p, self.scale = p, scale

    def value(self, z):
        return self.scale * np.exp(self.p(z))

    def grad(self, z):
        return self.scale * np.exp(self.p(z)) * self.p.grad(z)

    def hess(self, z):
        e = self.scale * np.exp(self.p(z))
        dp = self.p.grad(z)
        return e * (np.outer(dp, dp) + self.p.hess(z))


class Quotient(Piece):
    """``scale * num(z) / den(z)`` for polynomials ``num`` and ``den``."""

    def __init__(self, num: Poly, den: Poly, scale: float = 1.0):
        self.num, self.den, self.scale = num, den, scale

    def value(self, z):
        return self.scale * self.num(z) / self.den(z)

    def grad(self, z):
        n, d = self.num(z), self.den(z)
        return self.scale * (self.num.grad(z) * d - n * self.den.grad(z)) / d**2

    def hess(self, z):
        n, d = self.num(z), self.den(z)
        gn, gd = self.num.grad(z), self.den.grad(z)
        cross = np.outer(gn, gd) + np.outer(gd, gn)
        h = (
            self.num.hess(z) / d
            - cross / d**2
            - n * self.den.hess(z) / d**2
            + 2 * n * np.outer(gd, gd) / d**3
        )
        return self.scale * h


class OfAffine(Piece):
    """``phi(c @ z + d)`` for a univariate ``phi`` given with two derivatives."""

    def __init__(self, c, d, phi, dphi, d2phi):
        self.c = np.asarray(c, dtype=float)
        self.d = float(d)
        self.phi, self.dphi, self.d2phi = phi, dphi, d2phi

    def arg(self, z):
        return np.asarray(z, dtype=float) @ self.c + self.d

    def value(self, z):
        return self.phi(self.arg(z))

    def grad(self, z):
        return self.dphi(self.arg(z)) * self.c

    def hess(self, z):
        return self.d2phi(self.arg(z)) * np.outer(self.c, self.c)


def smooth(value, grad, hess) -> Smooth:
    return Smooth(value, grad, hess)


def power_of_affine(c, d: float, k: int) -> OfAffine:
    """``(c @ z + d)**k`` kept in factored form, which avoids the cancellation
    of the expanded monomials near the root of the affine argument."""
    return OfAffine(
        c, d,
        lambda t: t**k,
        lambda t: k * t ** (k - 1),
        lambda t: k * (k - 1) * t ** (k - 2),
    )
