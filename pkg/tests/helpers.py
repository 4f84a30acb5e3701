"""Independent brute-force oracles shared by the tests."""

import cmath
import math

from autjac.exactpoly import Poly


def poly_from_root_exponents(exps, n):
    """Expand prod (x - exp(2 pi i k / n)) numerically and round to integers."""
    coeffs = [complex(1)]
    for k in exps:
        z = cmath.exp(2j * math.pi * k / n)
        new = [complex(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] += c
            new[i] -= z * c
        coeffs = new
    out = []
    for c in coeffs:
        r = round(c.real)
        assert abs(c.real - r) < 1e-6 and abs(c.imag) < 1e-6, coeffs
        out.append(r)
    return Poly(tuple(out))


def brute_phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def is_prime(p):
    return p >= 2 and all(p % q for q in range(2, p))


def brute_mobius(n):
    primes = [p for p in brute_divisors(n) if is_prime(p)]
    if any(n % (p * p) == 0 for p in primes):
        return 0
    return (-1) ** len(primes)
