"""Characteristic polynomials of hyperelliptic automorphisms from ``(g, n, nbar)``.

``n`` is the order of the automorphism alpha of the genus-``g`` curve and
``nbar`` the order of the induced automorphism of the genus-0 quotient by the
hyperelliptic involution, so ``n`` is ``nbar`` or ``2 * nbar``.

Case tags:

====  ==============  ============  ==========================
tag   nbar            n             congruence on ``2g``
====  ==============  ============  ==========================
B     odd             nbar          0, -1 or -2 mod nbar
A     odd             2 nbar        0, -1 or -2 mod nbar
D1    even            nbar          -2 mod nbar, (2g+2)/nbar odd
D2    even            nbar          -2 mod nbar, (2g+2)/nbar even
C     even            2 nbar        0 mod nbar
====  ==============  ============  ==========================

D2 is the only case with two possible polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import (
    InadmissibleTriple,
    InvalidE1,
    InvalidRamConfig,
    NonIntegralGenus,
    NotPossibleConfiguration,
    UncoveredByLemma,
)
from .exactpoly import Poly, exact_div, power

CharClass = Literal["not-two", "two"]

B, A, D1, D2, C = "B", "A", "D1", "D2", "C"


@dataclass(frozen=True)
class Triple:
    g: int
    n: int
    nbar: int


@dataclass(frozen=True)
class TheoremCase:
    tag: str
    # residue of 2g mod nbar written as 0, -1 or -2
    congruence_class: int


@dataclass(frozen=True)
class CharPolyResult:
    triple: Triple
    case: TheoremCase
    candidates: tuple[Poly, ...]

    @property
    def ambiguous(self) -> bool:
        return len(self.candidates) == 2


def _x_pow_pm1(k: int, sign: int) -> Poly:
    return Poly.monomial(k) + Poly((sign,))


def match_case(g: int, n: int, nbar: int, *, allow_genus_one: bool = False) -> TheoremCase:
    """Decide which statement of the theorem covers ``(g, n, nbar)``.

    ``allow_genus_one`` admits ``g = 1``, where the formulas still make sense
    although the curve is not hyperelliptic.
    """
    min_g = 1 if allow_genus_one else 2
    if g < min_g:
        raise InadmissibleTriple(g, n, nbar, f"genus must be at least {min_g}")
    if nbar < 1 or n < 1:
        raise InadmissibleTriple(g, n, nbar, "orders must be positive")
    if n not in (nbar, 2 * nbar):
        raise InadmissibleTriple(g, n, nbar, "n must equal nbar or 2*nbar")
    r = (2 * g) % nbar
    if nbar % 2:
        if r == 0:
            cls = 0
        elif r == nbar - 1:
            cls = -1
        elif r == nbar - 2:
            cls = -2
        else:
            raise InadmissibleTriple(g, n, nbar, f"2g = {r} mod {nbar}, not 0, -1 or -2")
        return TheoremCase(B if n == nbar else A, cls)
    if n == nbar:
        if (2 * g + 2) % nbar:
            raise InadmissibleTriple(g, n, nbar, f"2g is not -2 mod {nbar}")
        return TheoremCase(D1 if ((2 * g + 2) // nbar) % 2 else D2, -2)
    if r:
        raise InadmissibleTriple(g, n, nbar, f"2g is not 0 mod {nbar}")
    return TheoremCase(C, 0)


def _odd_branches(g: int, nbar: int, sign: int) -> dict[int, Poly]:
    """The three odd-``nbar`` expressions, keyed by congruence class, where they are defined."""
    base = _x_pow_pm1(nbar, sign)
    lin = _x_pow_pm1(1, sign)
    out = {}
    if (2 * g + 2) % nbar == 0:
        out[-2] = exact_div(power(base, (2 * g + 2) // nbar), power(lin, 2))
    if (2 * g + 1) % nbar == 0:
        out[-1] = exact_div(power(base, (2 * g + 1) // nbar), lin)
    if (2 * g) % nbar == 0:
        out[0] = power(base, 2 * g // nbar)
    return out


def charpoly_cases(g: int, n: int, nbar: int, *, allow_genus_one: bool = False) -> CharPolyResult:
    case = match_case(g, n, nbar, allow_genus_one=allow_genus_one)
    triple = Triple(g, n, nbar)
    if case.tag in (B, A):
        branches = _odd_branches(g, nbar, -1 if case.tag == B else 1)
        if nbar == 1:
            values = set(branches.values())
            assert len(branches) == 3 and len(values) == 1, "nbar = 1 expressions disagree"
        cands = (branches[case.congruence_class],)
    elif case.tag in (D1, D2):
        top = power(_x_pow_pm1(nbar, -1), (2 * g + 2) // nbar)
        if case.tag == D1:
            cands = (exact_div(top, Poly((-1, 0, 1))),)
        else:
            cands = (
                exact_div(top, power(Poly((-1, 1)), 2)),
                exact_div(top, power(Poly((1, 1)), 2)),
            )
    else:
        cands = (power(_x_pow_pm1(nbar, 1), 2 * g // nbar),)
    return CharPolyResult(triple, case, cands)


def classify(g: int) -> list[tuple[int, int, CharPolyResult]]:
    """Every admissible ``(n, nbar)`` for genus ``g``, sorted by ``(n, nbar)``."""
    if g < 2:
        raise InadmissibleTriple(g, 0, 0, "genus must be at least 2")
    out = []
    for nbar in range(1, 2 * g + 3):
        for n in (nbar, 2 * nbar):
            try:
                res = charpoly_cases(g, n, nbar)
            except InadmissibleTriple:
                continue
            out.append((n, nbar, res))
    out.sort(key=lambda item: (item[0], item[1]))
    return out


def predicted_m(g: int, n: int, nbar: int, d: int, e1: int) -> int:
    """M_d (twice the genus of ``C / <alpha^d>``) predicted from quotient genera.

    ``e1`` is the number of points downstairs ramified in both the double cover
    and the cyclic cover for ``alpha`` itself. It is forced by the congruence in
    cases B and A (2g = -2, -1, 0 gives e1 = 0, 1, 2), must have the parity of
    ``(2g+2)/n`` in case D, and is ignored in case C.
    """
    case = match_case(g, n, nbar)
    if d < 1 or n % d:
        raise InadmissibleTriple(g, n, nbar, f"{d} does not divide n = {n}")
    if case.tag == C:
        return 2 * g * d // n if (n // d) % 2 else 0
    if e1 not in (0, 1, 2):
        raise InvalidE1(f"e1 must be 0, 1 or 2, got {e1}")
    if case.tag in (B, A):
        if nbar > 1 and e1 != case.congruence_class + 2:
            forced = case.congruence_class + 2
            raise InvalidE1(f"case {case.tag} with 2g = {case.congruence_class} mod {nbar} forces e1 = {forced}")
        if case.tag == A:
            # alpha^nbar is the involution; even powers agree with those of the odd-order twist
            if d % 2:
                return 0
            d //= 2
        return ((2 * g + 2 - e1) * d) // nbar - 2 + e1
    if e1 % 2 != ((2 * g + 2) // n) % 2:
        raise InvalidE1(f"e1 = {e1} must have the parity of (2g+2)/n = {(2 * g + 2) // n}")
    m = (2 * g + 2) * d // n - 2
    return m + e1 if d % 2 else m


@dataclass(frozen=True)
class RamConfig:
    """Data of a quotient ``C -> C/<beta>`` with the involution not in ``<beta>``.

    ``e`` counts points of the bottom quotient ramified both in the double
    cover and in the cyclic cover of genus-0 curves.
    """

    g: int
    m: int
    e: int
    char_class: CharClass = "not-two"

    def __post_init__(self):
        if self.char_class not in ("not-two", "two"):
            raise InvalidRamConfig(f"unknown characteristic class {self.char_class!r}")
        if self.g < 0 or self.m < 1:
            raise InvalidRamConfig(f"need g >= 0 and m >= 1, got g={self.g}, m={self.m}")
        if self.e not in (0, 1, 2):
            raise InvalidRamConfig(f"e must be 0, 1 or 2, got {self.e}")


def twice_quotient_genus(cfg: RamConfig) -> Fraction:
    """The table value of ``2h`` as an exact rational, before integrality checks."""
    g, m, e = cfg.g, cfg.m, cfg.e
    if cfg.char_class == "two" and m % 2 == 0:
        if e == 2:
            raise NotPossibleConfiguration("e = 2 cannot occur for even m in characteristic 2")
        if m != 2:
            raise InvalidRamConfig(f"even m in characteristic 2 must be 2, got {m}")
        if e == 0:
            return Fraction(g - 1)
        return Fraction(g if g % 2 == 0 else g + 1)
    if m % 2:
        return {0: Fraction(2 * g + 2, m) - 2, 1: Fraction(2 * g + 1, m) - 1, 2: Fraction(2 * g, m)}[e]
    return Fraction(2 * g + 2, m) - 2 + e


def quotient_genus(cfg: RamConfig) -> int:
    two_h = twice_quotient_genus(cfg)
    if two_h.denominator != 1 or two_h.numerator % 2 or two_h < 0:
        raise NonIntegralGenus(f"2h = {two_h} does not give a non-negative integer genus for {cfg}")
    return two_h.numerator // 2


TRIVIAL, IOTA, BETA, IOTA_BETA, WHOLE = "1", "<iota>", "<beta>", "<iota*beta>", "G"


def inertia_options(m_parity: Literal["odd", "even"], char_class: CharClass) -> frozenset[str]:
    """Possible inertia groups of a point in the cover ``C -> C/<beta, iota>``."""
    if m_parity not in ("odd", "even") or char_class not in ("not-two", "two"):
        raise ValueError(f"bad arguments {m_parity!r}, {char_class!r}")
    if m_parity == "odd":
        return frozenset({TRIVIAL, IOTA, BETA, WHOLE})
    if char_class == "not-two":
        return frozenset({TRIVIAL, IOTA, BETA, IOTA_BETA})
    raise UncoveredByLemma("even m in characteristic 2 is not covered")
