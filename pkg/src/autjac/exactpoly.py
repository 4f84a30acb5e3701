"""Dense univariate polynomials with Python integer coefficients.

Coefficients are stored low-degree first, so ``x**2 - 1`` is ``Poly((-1, 0, 1))``.
The zero polynomial has no coefficients and degree ``-inf``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InexactDivision

NEG_INF = float("-inf")


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> Poly:
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Poly:
        return cls((0,) * k + (c,))

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        return add(self, other)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return add(self, -other)

    def __mul__(self, other: Poly) -> Poly:
        return mul(self, other)

    def __pow__(self, k: int) -> Poly:
        return power(self, k)

    def __floordiv__(self, other: Poly) -> Poly:
        return exact_div(self, other)

    def __call__(self, v: int) -> int:
        return eval_int(self, v)

    def __str__(self) -> str:
        return pretty(self)


def add(a: Poly, b: Poly) -> Poly:
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return Poly(tuple(x + y for x, y in zip(ca, cb)))


def mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return Poly(tuple(out))


def power(a: Poly, k: int) -> Poly:
    """``a**k`` by repeated squaring; ``power(a, 0)`` is 1, including for ``a = 0``."""
    if k < 0:
        raise ValueError("negative exponent")
    result, base = Poly.one(), a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Integer long division. Requires every quotient coefficient to stay integral."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lc = len(b.coeffs) - 1, b.leading
    if len(rem) - 1 < db:
        return Poly(), a
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        top = rem[k + db]
        if top == 0:
            continue
        q, r = divmod(top, lc)
        if r:
            raise InexactDivision(f"leading coefficient {lc} does not divide {top}")
        quot[k] = q
        for i, c in enumerate(b.coeffs):
            rem[k + i] -= q * c
    return Poly(tuple(quot)), Poly(tuple(rem))


def exact_div(a: Poly, b: Poly) -> Poly:
    """Return ``q`` with ``a == q * b``; raise :class:`InexactDivision` otherwise."""
    q, r = divmod_poly(a, b)
    if not r.is_zero():
        raise InexactDivision(f"({pretty(a)}) is not divisible by ({pretty(b)})")
    return q


def substitute_neg(a: Poly) -> Poly:
    """``a(-x)``."""
    return Poly(tuple(-c if i % 2 else c for i, c in enumerate(a.coeffs)))


def eval_int(a: Poly, v: int) -> int:
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * v + c
    return acc


def pretty(a: Poly, var: str = "x") -> str:
    """Human-readable form, highest degree first: ``x^2 - 1``."""
    if a.is_zero():
        return "0"
    parts = []
    for i in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            term = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            term = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


X = Poly((0, 1))
ONE = Poly((1,))
