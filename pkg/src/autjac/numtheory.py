"""Divisors, Moebius, Euler phi and cyclotomic polynomials for small integers."""

from __future__ import annotations

from functools import lru_cache

from .exactpoly import Poly, exact_div, mul


def factorize(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization as increasing ``(prime, exponent)`` pairs."""
    if n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors needs a positive integer, got {n}")
    divs = [1]
    for p, k in factorize(n):
        divs = [d * p**i for d in divs for i in range(k + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(k > 1 for _, k in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> Poly:
    """The d-th cyclotomic polynomial, via ``x^d - 1 = prod_{e | d} Phi_e``."""
    if d < 1:
        raise ValueError(f"cyclotomic needs a positive index, got {d}")
    denom = Poly.one()
    for e in divisors(d)[:-1]:
        denom = mul(denom, cyclotomic(e))
    return exact_div(Poly.monomial(d) - Poly.one(), denom)
