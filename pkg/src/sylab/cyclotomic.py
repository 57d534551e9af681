"""Exact arithmetic in Z[zeta_e] on the power basis modulo the cyclotomic polynomial."""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd

import numpy as np

from .numtheory import divisors


def _poly_divexact(a, b):
    """Exact integer division of polynomials (low to high), b monic."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1]
        out[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


class CycloField:
    """Q(zeta_e) with elements stored as integer coefficient vectors of length phi(e)."""

    def __init__(self, e):
        self.e = e
        self.poly = cyclotomic_poly(e)
        self.phi = len(self.poly) - 1
        # row n holds x^n reduced modulo the cyclotomic polynomial, 0 <= n < e
        red = np.zeros((e, self.phi), dtype=np.int64)
        cur = np.zeros(self.phi, dtype=np.int64)
        cur[0] = 1
        low = np.array(self.poly[:-1], dtype=np.int64)
        for n in range(e):
            red[n] = cur
            top = cur[-1]
            cur = np.concatenate(([0], cur[:-1]))
            if top:
                cur = cur - top * low
        self.red = red

    def zero(self):
        return np.zeros(self.phi, dtype=np.int64)

    def integer(self, n):
        v = self.zero()
        v[0] = n
        return v

    def from_exponents(self, counts):
        """Sum of m * zeta^k over a mapping k -> m."""
        full = np.zeros(self.e, dtype=np.int64)
        for k, m in counts.items():
            full[k % self.e] += m
        return full @ self.red

    def reduce(self, poly):
        """Reduce a coefficient vector of any length (x^e = 1 is used first)."""
        poly = np.asarray(poly, dtype=np.int64)
        n = len(poly)
        if n > self.e:
            pad = (-n) % self.e
            poly = np.concatenate((poly, np.zeros(pad, dtype=np.int64))).reshape(-1, self.e).sum(axis=0)
        elif n < self.e:
            poly = np.concatenate((poly, np.zeros(self.e - n, dtype=np.int64)))
        return poly @ self.red

    def mul(self, a, b):
        if self.is_rational(a):
            return a[0] * b
        if self.is_rational(b):
            return b[0] * a
        return self.reduce(np.convolve(a, b))

    @staticmethod
    def is_rational(a):
        return not a[1:].any()

    def galois(self, a, k):
        """Image under zeta -> zeta^k (k coprime to e)."""
        if gcd(k, self.e) != 1:
            raise ValueError("Galois exponent must be a unit")
        if self.is_rational(a):
            return a.copy()
        full = np.zeros(self.e, dtype=np.int64)
        idx = (np.arange(self.phi) * k) % self.e
        np.add.at(full, idx, a)
        return full @ self.red

    def conj(self, a):
        return self.galois(a, self.e - 1 if self.e > 1 else 1)

    def to_complex(self, a):
        z = cmath.exp(2j * cmath.pi / self.e)
        return complex(sum(int(c) * z ** i for i, c in enumerate(a) if c))

    def format(self, a):
        if self.is_rational(a):
            return str(int(a[0]))
        terms = []
        for i, c in enumerate(a):
            c = int(c)
            if not c:
                continue
            mono = "1" if i == 0 else (f"z{self.e}" if i == 1 else f"z{self.e}^{i}")
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms).replace("+-", "-")
