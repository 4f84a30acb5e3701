"""Moving between a root-of-unity polynomial and its eigenvalue counts.

For an automorphism of order ``n`` with eigenvalues that are ``n``-th roots of
unity, ``N_d`` counts the primitive ``d``-th roots among them and ``M_d`` counts
those with ``zeta**d == 1``. The two are related by summation over divisors and
Moebius inversion, and the polynomial is ``prod Phi_d ** (N_d / phi(d))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    MissingCount,
    NegativeCount,
    NonCyclotomicFactor,
    NonOrbitCount,
    NotADivisor,
)
from .exactpoly import Poly, divmod_poly, mul, power
from .numtheory import cyclotomic, divisors, euler_phi, mobius


@dataclass(frozen=True)
class CyclotomicProfile:
    """Primitive-root multiplicities ``d -> N_d``; zero counts are dropped."""

    order: int
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"order must be positive, got {self.order}")
        clean = {}
        for d, c in sorted(self.counts.items()):
            d, c = int(d), int(c)
            if self.order % d:
                raise NotADivisor(f"{d} does not divide {self.order}")
            if c < 0:
                raise NegativeCount(f"N_{d} = {c}")
            if c % euler_phi(d):
                raise NonOrbitCount(f"N_{d} = {c} is not a multiple of phi({d}) = {euler_phi(d)}")
            if c:
                clean[d] = c
        object.__setattr__(self, "counts", clean)

    def __getitem__(self, d: int) -> int:
        return self.counts.get(d, 0)

    @property
    def degree(self) -> int:
        return sum(self.counts.values())

    def exponents(self) -> list[tuple[int, int]]:
        """``[(d, N_d / phi(d)), ...]`` in increasing ``d``; the factored form of the polynomial."""
        return [(d, c // euler_phi(d)) for d, c in self.counts.items()]

    def to_json(self) -> dict:
        return {"order": self.order, "counts": {str(d): c for d, c in self.counts.items()}}

    @classmethod
    def from_json(cls, obj: Mapping) -> CyclotomicProfile:
        return cls(int(obj["order"]), {int(d): int(c) for d, c in obj["counts"].items()})


def _peel_order(n: int) -> list[int]:
    return sorted(divisors(n), key=lambda d: (-euler_phi(d), -d))


def profile_from_poly(f: Poly, n: int) -> CyclotomicProfile:
    """Strip cyclotomic factors ``Phi_d`` (``d | n``) off ``f`` until nothing is left."""
    if not f.is_monic():
        raise NonCyclotomicFactor(f"{f} is not monic")
    counts = {}
    rest = f
    for d in _peel_order(n):
        phi_d = cyclotomic(d)
        k = 0
        while rest.degree >= phi_d.degree:
            q, r = divmod_poly(rest, phi_d)
            if not r.is_zero():
                break
            rest = q
            k += 1
        if k:
            counts[d] = k * euler_phi(d)
    if rest != Poly.one():
        raise NonCyclotomicFactor(f"residual {rest} after removing cyclotomic factors of order dividing {n}")
    return CyclotomicProfile(n, counts)


def m_from_profile(p: CyclotomicProfile, d: int) -> int:
    if d < 1 or p.order % d:
        raise NotADivisor(f"{d} does not divide {p.order}")
    return sum(c for e, c in p.counts.items() if d % e == 0)


def m_values(p: CyclotomicProfile) -> dict[int, int]:
    return {d: m_from_profile(p, d) for d in divisors(p.order)}


def profile_from_m(m_vals: Mapping[int, int]) -> CyclotomicProfile:
    """Moebius-invert ``d -> M_d``; the keys must be exactly the divisors of their maximum."""
    if not m_vals:
        raise MissingCount("empty M-value map")
    n = max(m_vals)
    divs = divisors(n)
    extra = sorted(set(m_vals) - set(divs))
    if extra:
        raise NotADivisor(f"{extra} do not divide {n}")
    missing = [d for d in divs if d not in m_vals]
    if missing:
        raise MissingCount(f"no M value for divisors {missing} of {n}")
    counts = {}
    for d in divs:
        nd = sum(mobius(d // e) * m_vals[e] for e in divisors(d))
        if nd < 0:
            raise NegativeCount(f"N_{d} = {nd}")
        if nd % euler_phi(d):
            raise NonOrbitCount(f"N_{d} = {nd} is not a multiple of phi({d})")
        counts[d] = nd
    return CyclotomicProfile(n, counts)


def poly_from_profile(p: CyclotomicProfile) -> Poly:
    f = Poly.one()
    for d, k in p.exponents():
        f = mul(f, power(cyclotomic(d), k))
    return f
