"""Exact arithmetic in Z[zeta_e].

A value is a coefficient vector of length e over the powers of a fixed
primitive e-th root of unity zeta. The normal form is the remainder modulo
the e-th cyclotomic polynomial, so only the first phi(e) coefficients can be
nonzero and equality is plain coefficient equality.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import Symbol, cyclotomic_poly


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(e):
    poly = cyclotomic_poly(e, Symbol("x"), polys=True)
    return np.array([int(c) for c in reversed(poly.all_coeffs())], dtype=np.int64)


def totient_degree(e):
    return len(_cyclotomic_coeffs(e)) - 1


def _normalize(vec, e):
    folded = np.zeros(e, dtype=np.int64)
    vec = np.asarray(vec, dtype=np.int64)
    np.add.at(folded, np.arange(len(vec)) % e, vec)
    phi = _cyclotomic_coeffs(e)
    d = len(phi) - 1
    for k in range(e - 1, d - 1, -1):
        c = folded[k]
        if c:
            folded[k - d:k + 1] -= c * phi
    return tuple(int(c) for c in folded)


@dataclass(frozen=True)
class CyclotomicInt:
    exponent: int
    coeffs: tuple

    @classmethod
    def from_vector(cls, e, vec):
        return cls(e, _normalize(vec, e))

    @classmethod
    def integer(cls, e, n):
        return cls(e, (int(n),) + (0,) * (e - 1))

    @classmethod
    def root(cls, e, k=1):
        vec = [0] * e
        vec[k % e] = 1
        return cls.from_vector(e, vec)

    def _coerce(self, other):
        if isinstance(other, CyclotomicInt):
            if other.exponent != self.exponent:
                raise ValueError(f"exponent mismatch: {self.exponent} vs {other.exponent}")
            return other
        return CyclotomicInt.integer(self.exponent, other)

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicInt(self.exponent, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.exponent, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.exponent, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        product = np.convolve(np.array(self.coeffs, dtype=np.int64), np.array(other.coeffs, dtype=np.int64))
        return CyclotomicInt.from_vector(self.exponent, product)

    __rmul__ = __mul__

    def galois(self, k):
        """Image under zeta -> zeta^k."""
        e = self.exponent
        vec = np.zeros(e, dtype=np.int64)
        for i, c in enumerate(self.coeffs):
            if c:
                vec[(i * k) % e] += c
        return CyclotomicInt.from_vector(e, vec)

    def conjugate(self):
        return self.galois(-1)

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_int(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def __complex__(self):
        zeta = np.exp(2j * np.pi / self.exponent)
        return complex(sum(c * zeta ** i for i, c in enumerate(self.coeffs) if c))

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z{self.exponent}^{i}")
        return " + ".join(terms)


def cyclotomic_sum(values, e):
    total = CyclotomicInt.integer(e, 0)
    for v in values:
        total = total + v
    return total
