"""Small integer helpers shared across modules."""

from functools import reduce
from math import gcd, isqrt


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def factorize(n):
    """Prime factorization as a dict {prime: exponent}."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n):
    return sorted(factorize(n))


def p_part(n, p):
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


def valuation(n, p):
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def prime_power(q):
    """(p, f) with q = p**f, or None."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    (p, f), = fac.items()
    return p, f


def lcm(*args):
    return reduce(lambda a, b: a * b // gcd(a, b), args, 1)


def next_prime(n):
    n += 1
    while not is_prime(n):
        n += 1
    return n


def primitive_root(p):
    """Least primitive root modulo the prime p."""
    if p == 2:
        return 1
    qs = prime_divisors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ValueError(f"{p} has no primitive root")


def multiplicative_order(a, n):
    if gcd(a, n) != 1:
        raise ValueError("not a unit")
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


def divisors(n):
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))
