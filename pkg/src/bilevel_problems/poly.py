"""Sparse (generalized) polynomials over the stacked variable z = (x, y).

Most problem formulas are polynomials, so they are written with ordinary
arithmetic on :class:`Poly` objects and differentiated with the power rule.
Exponents may be non-integer or negative for posynomial terms such as
``x**-0.71``; those only make sense where the variable is positive.
"""

from __future__ import annotations

import numbers

import numpy as np


class Poly:
    """Sum of monomials ``c * prod(z_j ** e_j)`` in ``n`` variables."""

    __slots__ = ("n", "terms", "_compiled", "_grad", "_hess")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {}
        for exps, coef in (terms or {}).items():
            if coef != 0:
                self.terms[tuple(exps)] = float(coef)
        self._compiled = None
        self._grad = None
        self._hess = None

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, n: int, value: float) -> "Poly":
        return cls(n, {(0,) * n: value})

    @classmethod
    def var(cls, n: int, j: int) -> "Poly":
        exps = [0] * n
        exps[j] = 1
        return cls(n, {tuple(exps): 1.0})

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.n != self.n:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, numbers.Real):
            return Poly.const(self.n, float(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0.0) + c
        return Poly(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.n, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0.0) + c1 * c2
        return Poly(self.n, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return self * (1.0 / float(other))
        return NotImplemented

    def __pow__(self, p):
        if isinstance(p, numbers.Integral) and p >= 0:
            out = Poly.const(self.n, 1.0)
            for _ in range(int(p)):
                out = out * self
            return out
        # real powers only for a bare monomial with unit coefficient
        if len(self.terms) != 1:
            raise ValueError("non-integer power of a multi-term polynomial")
        (exps, coef), = self.terms.items()
        if coef != 1.0:
            raise ValueError("non-integer power needs a unit coefficient")
        return Poly(self.n, {tuple(e * p for e in exps): 1.0})

    # inspection ---------------------------------------------------------
    @property
    def degree(self) -> float:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def is_linear(self) -> bool:
        return all(
            all(float(v).is_integer() and v >= 0 for v in e) and sum(e) <= 1
            for e in self.terms
        )

    def linear_coefficients(self):
        """Return ``(a, c)`` with ``p(z) = a @ z + c`` (linear polys only)."""
        a = np.zeros(self.n)
        c = 0.0
        for e, coef in self.terms.items():
            if sum(e) == 0:
                c += coef
            else:
                a[int(np.argmax(e))] += coef
        return a, c

    # calculus -----------------------------------------------------------
    def derivative(self, j: int) -> "Poly":
        terms: dict = {}
        for e, c in self.terms.items():
            if e[j] == 0:
                continue
            d = list(e)
            d[j] = e[j] - 1
            key = tuple(d)
            terms[key] = terms.get(key, 0.0) + c * e[j]
        return Poly(self.n, terms)

    def _compile(self):
        if self._compiled is None:
            if self.terms:
                exps = np.array(list(self.terms), dtype=float).reshape(-1, self.n)
                coefs = np.array(list(self.terms.values()))
            else:
                exps = np.zeros((0, self.n))
                coefs = np.zeros(0)
            # sparse form: per term the (variable, exponent) factors
            factors = [
                tuple((j, int(e) if float(e).is_integer() else float(e)) for j, e in enumerate(row) if e != 0)
                for row in exps
            ]
            self._compiled = (exps, coefs, factors)
        return self._compiled

    def __call__(self, z):
        """Evaluate at ``z`` of shape ``(..., n)``."""
        _, coefs, factors = self._compile()
        z = np.asarray(z, dtype=float)
        out = np.zeros(z.shape[:-1])
        powers = {}
        for c, fac in zip(coefs, factors):
            term = c
            for key in fac:
                if key not in powers:
                    j, e = key
                    powers[key] = z[..., j] if e == 1 else z[..., j] ** e
                term = term * powers[key]
            out = out + term
        return out

    def grad(self, z) -> np.ndarray:
        if self._grad is None:
            self._grad = _Stacked([self.derivative(j) for j in range(self.n)])
        return self._grad(z)

    def hess(self, z) -> np.ndarray:
        n = self.n
        if self._hess is None:
            polys, index = [], []
            for i in range(n):
                di = self.derivative(i)
                for j in range(i, n):
                    polys.append(di.derivative(j))
                    index.append((i, j))
            self._hess = (_Stacked(polys), index)
        stacked, index = self._hess
        vals = stacked(z)
        out = np.zeros((n, n))
        for v, (i, j) in zip(vals, index):
            out[i, j] = v
            out[j, i] = v
        return out

    def __repr__(self):
        return f"Poly(n={self.n}, terms={len(self.terms)})"


class _Stacked:
    """Evaluate many polynomials at a single point with one numpy pass."""

    def __init__(self, polys):
        exps, coefs, owner = [], [], []
        for k, p in enumerate(polys):
            e, c, _ = p._compile()
            exps.append(e)
            coefs.append(c)
            owner.append(np.full(c.size, k))
        self.size = len(polys)
        self.exps = np.concatenate(exps) if exps else np.zeros((0, 0))
        self.coefs = np.concatenate(coefs) if coefs else np.zeros(0)
        self.owner = np.concatenate(owner) if owner else np.zeros(0, dtype=int)

    def __call__(self, z):
        if not self.coefs.size:
            return np.zeros(self.size)
        z = np.asarray(z, dtype=float)
        mono = np.prod(z ** self.exps, axis=1) * self.coefs
        return np.bincount(self.owner, weights=mono, minlength=self.size)


def variables(nx: int, ny: int):
    """Return lists ``(x, y)`` of coordinate polynomials in n = nx + ny variables."""
    n = nx + ny
    x = [Poly.var(n, j) for j in range(nx)]
    y = [Poly.var(n, nx + j) for j in range(ny)]
    return x, y
