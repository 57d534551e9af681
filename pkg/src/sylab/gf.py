"""Finite fields GF(p^f).

Elements are integers 0..q-1 read as base-p digit strings: the element
c_0 + c_1 x + ... + c_{f-1} x^{f-1} is stored as sum(c_i p^i).  Integer
order on this encoding is the coefficient-lexicographic order with the
leading coefficient most significant.

The modulus is the least monic polynomial (in the same order on its
lower coefficients) for which x has multiplicative order q - 1; such a
polynomial is automatically irreducible, and irreducibility is checked
again independently at construction.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .numtheory import is_prime, prime_divisors


def _digits(n, p, f):
    out = [0] * f
    for i in range(f):
        n, out[i] = divmod(n, p)
    return out


def _undigits(cs, p):
    n = 0
    for c in reversed(cs):
        n = n * p + c
    return n


def _polmulmod(a, b, mod, p):
    """Product of coefficient lists a, b reduced by the monic ``mod``."""
    f = len(mod) - 1
    prod = [0] * (2 * f - 1 if f else 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, f - 1, -1):
        c = prod[k]
        if c:
            for j in range(f):
                prod[k - f + j] = (prod[k - f + j] - c * mod[j]) % p
            prod[k] = 0
    return prod[:f]


def _polpowmod(a, e, mod, p):
    f = len(mod) - 1
    result = [1] + [0] * (f - 1)
    base = list(a)
    while e:
        if e & 1:
            result = _polmulmod(result, base, mod, p)
        e >>= 1
        if e:
            base = _polmulmod(base, base, mod, p)
    return result


def _poly_gcd(a, b, p):
    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v
    a, b = trim(list(a)), trim(list(b))
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        while len(a) >= len(b) and a:
            c = a[-1] * inv_lead % p
            shift = len(a) - len(b)
            for i, y in enumerate(b):
                a[shift + i] = (a[shift + i] - c * y) % p
            trim(a)
        a, b = b, a
    return a


def is_irreducible(mod, p):
    """Rabin-style check that the monic ``mod`` (low to high) is irreducible mod p."""
    f = len(mod) - 1
    if f == 1:
        return True
    x = [0, 1] + [0] * (f - 2)
    if _polpowmod(x, p ** f, mod, p) != x:
        return False
    for r in prime_divisors(f):
        h = _polpowmod(x, p ** (f // r), mod, p)
        diff = list(h) + [0] * (f - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(list(mod), diff, p)
        if len(g) > 1:
            return False
    return True


class FieldSpec:
    """GF(p^f) with a fixed primitive modulus."""

    def __init__(self, p, f=1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if f < 1:
            raise ValueError("field degree must be positive")
        self.p = p
        self.f = f
        self.q = p ** f
        self.modulus = _least_primitive_modulus(p, f)
        if not is_irreducible(self.modulus, p):
            raise AssertionError("constructed modulus is reducible")
        self._ord_primes = prime_divisors(self.q - 1) if self.q > 2 else []
        self._exp = self._log = None
        if self.q <= 1 << 16:
            self._tables()

    def __repr__(self):
        return f"GF({self.p}^{self.f})"

    # representation -------------------------------------------------------

    def coeffs(self, a):
        return _digits(a, self.p, self.f)

    def from_coeffs(self, cs):
        cs = list(cs) + [0] * (self.f - len(cs))
        return _undigits([c % self.p for c in cs[: self.f]], self.p)

    @property
    def gen(self):
        """The class of x, a generator of the multiplicative group."""
        if self.f == 1:
            return (-self.modulus[0]) % self.p
        return self.p

    def elements(self):
        return range(self.q)

    # arithmetic -----------------------------------------------------------

    def add(self, a, b):
        if self.f == 1:
            return (a + b) % self.p
        p = self.p
        return _undigits([(x + y) % p for x, y in zip(self.coeffs(a), self.coeffs(b))], p)

    def neg(self, a):
        if self.f == 1:
            return (-a) % self.p
        p = self.p
        return _undigits([(-x) % p for x in self.coeffs(a)], p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.f == 1:
            return a * b % self.p
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return _undigits(_polmulmod(self.coeffs(a), self.coeffs(b), self.modulus, self.p), self.p)

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        e %= self.q - 1
        if self.f == 1:
            return pow(a, e, self.p)
        if self._log is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        return _undigits(_polpowmod(self.coeffs(a), e, self.modulus, self.p), self.p)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frobenius(self, a):
        return self.pow(a, self.p) if a else 0

    def order(self, a):
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.q - 1
        for r in self._ord_primes:
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def is_primitive(self, a):
        return a != 0 and self.order(a) == self.q - 1

    def least_primitive(self):
        for a in range(1, self.q):
            if self.is_primitive(a):
                return a
        raise AssertionError("no primitive element")

    def _tables(self):
        n = self.q - 1
        exp = [0] * n
        log = [0] * self.q
        x = 1
        g = self.gen
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        self._exp, self._log = exp, log

    def _slow_mul(self, a, b):
        if self.f == 1:
            return a * b % self.p
        return _undigits(_polmulmod(self.coeffs(a), self.coeffs(b), self.modulus, self.p), self.p)


@lru_cache(maxsize=None)
def _least_primitive_modulus(p, f):
    q = p ** f
    qs = prime_divisors(q - 1) if q > 2 else []
    if f == 1:
        for a0 in range(p):
            g = (-a0) % p
            if g and all(pow(g, (q - 1) // r, p) != 1 for r in qs):
                return (a0, 1)
        raise AssertionError("no primitive root")
    x = [0, 1] + [0] * (f - 2)
    one = [1] + [0] * (f - 1)
    for n in range(p ** f):
        low = _digits(n, p, f)
        if low[0] == 0:
            continue
        mod = low + [1]
        if _polpowmod(x, q - 1, mod, p) != one:
            continue
        if all(_polpowmod(x, (q - 1) // r, mod, p) != one for r in qs):
            return tuple(mod)
    raise AssertionError(f"no primitive polynomial of degree {f} over GF({p})")


@lru_cache(maxsize=64)
def gf(p, f=1):
    return FieldSpec(p, f)


# factoring cyclotomic polynomials mod p -------------------------------------------
#
# Residue fields of Z[zeta_n] at a prime above p (p not dividing n) are
# GF(p)[x]/(g) for an irreducible factor g of Phi_n mod p.  Building them this
# way never needs the factorisation of p^k - 1, which is hopeless for the
# residue degrees (up to ~100) that occur in the catalog.

def _trim(a):
    n = len(a)
    while n > 1 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _np_mod(a, f, p):
    """a mod the monic f, coefficient arrays low to high."""
    a = np.array(a, dtype=np.int64) % p
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            a[i - df:i + 1] = (a[i - df:i + 1] - c * f) % p
    return _trim(a[:df] if len(a) > df else a)


def _np_mulmod(a, b, f, p):
    return _np_mod(np.convolve(a, b) % p, f, p)


def _np_powmod(a, e, f, p):
    result = np.array([1], dtype=np.int64)
    base = _np_mod(a, f, p)
    while e:
        if e & 1:
            result = _np_mulmod(result, base, f, p)
        e >>= 1
        if e:
            base = _np_mulmod(base, base, f, p)
    return result


def _np_monic(a, p):
    a = _trim(np.array(a, dtype=np.int64) % p)
    return a * pow(int(a[-1]), p - 2, p) % p


def _np_gcd(a, b, p):
    a, b = _trim(np.array(a, dtype=np.int64) % p), _trim(np.array(b, dtype=np.int64) % p)
    while b.any():
        b = _np_monic(b, p)
        a, b = b, _np_mod(a, b, p)
    return _np_monic(a, p)


def _np_divexact(a, b, p):
    a = np.array(a, dtype=np.int64) % p
    db = len(b) - 1
    out = np.zeros(len(a) - db, dtype=np.int64)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        out[i - db] = c
        if c:
            a[i - db:i + 1] = (a[i - db:i + 1] - c * b) % p
    return out


def equal_degree_factors(f, k, p, rng):
    """Irreducible factors of a squarefree monic f whose factors all have degree k."""
    f = np.array(f, dtype=np.int64) % p
    n = len(f) - 1
    if n == k:
        return [f]
    while True:
        a = np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)
        if len(_trim(a)) < 2:
            continue
        if p == 2:
            # absolute trace from GF(2^k) down to GF(2)
            t = _np_mod(a, f, p)
            acc = t
            for _ in range(k - 1):
                t = _np_mulmod(t, t, f, p)
                acc = np.pad(acc, (0, max(0, len(t) - len(acc))))
                acc[: len(t)] = (acc[: len(t)] + t) % p
            b = acc
        else:
            b = _np_powmod(a, (p ** k - 1) // 2, f, p)
            b = b.copy()
            b[0] = (b[0] - 1) % p
        g = _np_gcd(f, b, p)
        if 0 < len(g) - 1 < n:
            h = _np_divexact(f, g, p)
            return equal_degree_factors(g, k, p, rng) + equal_degree_factors(h, k, p, rng)


@lru_cache(maxsize=64)
def least_cyclotomic_factor(p, n):
    """The least (in the base-p encoding) monic irreducible factor of Phi_n mod p."""
    import random
    from .cyclotomic import cyclotomic_poly
    if n % p == 0:
        raise ValueError("n must be prime to p")
    k = 1
    while pow(p, k, n) != 1 % n:
        k += 1
    phi = np.array(cyclotomic_poly(n), dtype=np.int64) % p
    factors = equal_degree_factors(phi, k, p, random.Random(0))
    best = min(factors, key=lambda g: _undigits([int(c) for c in g], p))
    return tuple(int(c) for c in best)
