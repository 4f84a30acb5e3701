"""Independent check of the characteristic-polynomial formulas by point counting.

The curve is ``y^2 = F(x)`` with ``F = x^s0 * prod_{i<t} (x^nbar - c_i)``
(distinct nonzero ``c_i``), over a field of characteristic 0. The rotation
``x -> xi*x`` (``xi`` a primitive ``nbar``-th root of unity) lifts to
``(x, y) -> (xi*x, lam*y)`` whenever ``lam^2 = xi^s0``. Roots of unity are
written additively as exponents of ``exp(2*pi*i / (2*nbar))``, so ``xi`` has
exponent 2 and ``lam`` exponent ``ell``.

Fixed points of each power of the lift give traces on H^1 through
``#Fix = 2 - trace``, and Newton's identities turn the traces into the
characteristic polynomial. Nothing here consults the theorem module except
:func:`verify_range`, which compares the two.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InadmissibleTriple, NonIntegralCoefficient, OutOfRange, VerificationFailure
from .exactpoly import Poly, substitute_neg
from .numtheory import divisors
from .spectrum import m_from_profile, profile_from_poly
from .theorem import D2, charpoly_cases, classify


@dataclass(frozen=True)
class CurveModel:
    nbar: int
    t: int
    s0: int
    sinf: int

    def __post_init__(self):
        if self.nbar < 1 or self.t < 0 or self.s0 not in (0, 1):
            raise ValueError(f"malformed model {self}")
        if self.sinf != (self.t * self.nbar + self.s0) % 2:
            raise ValueError(f"infinity is a branch point iff deg F is odd: {self}")

    @property
    def branch_points(self) -> int:
        return self.t * self.nbar + self.s0 + self.sinf

    @property
    def g(self) -> int:
        return self.branch_points // 2 - 1

    def to_json(self) -> dict:
        return {"nbar": self.nbar, "t": self.t, "s0": self.s0, "sinf": self.sinf}


@dataclass(frozen=True)
class Lift:
    nbar: int
    ell: int
    n: int = field(init=False)

    def __post_init__(self):
        two = 2 * self.nbar
        object.__setattr__(self, "ell", self.ell % two)
        lam_order = two // math.gcd(self.ell, two)
        object.__setattr__(self, "n", math.lcm(self.nbar, lam_order))


@dataclass(frozen=True)
class TraceSequence:
    g: int
    n: int
    p: tuple[int, ...]

    def __post_init__(self):
        if len(self.p) != self.n or self.p[0] != 2 * self.g:
            raise ValueError("trace sequence must have length n and start with 2g")
        if any(abs(v) > 2 * self.g for v in self.p):
            raise ValueError(f"trace out of range in {self.p}")

    def __getitem__(self, j: int) -> int:
        return self.p[j % self.n]


def enumerate_models(g: int) -> list[CurveModel]:
    """All rotation models of genus ``g``, ordered by ``(nbar, t, s0)``."""
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    out = []
    total = 2 * g + 2
    for nbar in range(1, total + 1):
        for t in range(total // nbar + 1):
            for s0 in (0, 1):
                sinf = (t * nbar + s0) % 2
                if t * nbar + s0 + sinf == total:
                    out.append(CurveModel(nbar, t, s0, sinf))
    return out


def lifts(m: CurveModel) -> list[Lift]:
    """The two lifts of the rotation; they differ by the hyperelliptic involution."""
    return [Lift(m.nbar, m.s0), Lift(m.nbar, m.s0 + m.nbar)]


def fixed_points(m: CurveModel, lift: Lift, j: int) -> int:
    """Number of fixed points of ``alpha^j`` for ``1 <= j < n``."""
    if not 1 <= j < lift.n:
        raise OutOfRange(f"power {j} outside 1..{lift.n - 1}")
    two = 2 * m.nbar
    if j % m.nbar == 0:
        # x is fixed everywhere; alpha^j is the involution since it is not the identity
        assert (j * lift.ell) % two == m.nbar
        return m.branch_points
    count = 0
    if m.s0:
        count += 1
    elif (j * lift.ell) % two == 0:
        count += 2
    # chart at infinity: u = 1/x, w = y / x^(g+1)
    if m.sinf:
        count += 1
    elif (j * (lift.ell - 2 * (m.g + 1))) % two == 0:
        count += 2
    return count


def trace_sequence(m: CurveModel, lift: Lift) -> TraceSequence:
    p = [2 * m.g] + [2 - fixed_points(m, lift, j) for j in range(1, lift.n)]
    return TraceSequence(m.g, lift.n, tuple(p))


def charpoly_from_traces(ts: TraceSequence) -> Poly:
    """Monic degree-2g polynomial whose roots have power sums ``ts[1], ts[2], ...``."""
    deg = 2 * ts.g
    e = [Fraction(1)]
    for k in range(1, deg + 1):
        s = sum((-1) ** (i - 1) * e[k - i] * ts[i] for i in range(1, k + 1))
        e.append(Fraction(s, k))
    coeffs = [0] * (deg + 1)
    for k, ek in enumerate(e):
        if ek.denominator != 1:
            raise NonIntegralCoefficient(f"e_{k} = {ek} for traces {ts.p}")
        coeffs[deg - k] = (-1) ** k * ek.numerator
    return Poly(tuple(coeffs))


def oracle_charpoly(m: CurveModel, lift: Lift) -> Poly:
    return charpoly_from_traces(trace_sequence(m, lift))


@dataclass
class VerificationReport:
    genus_range: tuple[int, int]
    models_checked: int = 0
    lifts_checked: int = 0
    mismatches: list[dict] = field(default_factory=list)
    # genus -> sorted (n, nbar) pairs realized by some model
    witnessed: dict[int, list[tuple[int, int]]] = field(default_factory=dict)
    not_witnessed: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "schema": "autjac/1",
            "genus_range": list(self.genus_range),
            "models_checked": self.models_checked,
            "lifts_checked": self.lifts_checked,
            "mismatches": self.mismatches,
            "not_witnessed": [list(t) for t in self.not_witnessed],
        }


def _mismatch(g, model, lift, f, reason):
    return {
        "genus": g,
        "model": model.to_json(),
        "ell": lift.ell,
        "order": lift.n,
        "reduced_order": model.nbar,
        "polynomial": f.to_list() if f is not None else None,
        "reason": reason,
    }


def check_genus(g: int) -> VerificationReport:
    """Compare oracle and theorem on every model and lift of genus ``g``."""
    rep = VerificationReport((g, g))
    seen = set()
    for model in enumerate_models(g):
        rep.models_checked += 1
        pair = lifts(model)
        polys = []
        for lift in pair:
            rep.lifts_checked += 1
            f = oracle_charpoly(model, lift)
            polys.append(f)
            seen.add((lift.n, model.nbar))
            try:
                res = charpoly_cases(g, lift.n, model.nbar)
            except InadmissibleTriple as exc:
                rep.mismatches.append(_mismatch(g, model, lift, f, f"theorem rejects triple: {exc.reason}"))
                continue
            if f not in res.candidates:
                rep.mismatches.append(_mismatch(g, model, lift, f, "oracle polynomial not among candidates"))
                continue
            prof = profile_from_poly(f, lift.n)
            for d in divisors(lift.n):
                md = m_from_profile(prof, d)
                if md < 0 or md % 2:
                    rep.mismatches.append(_mismatch(g, model, lift, f, f"M_{d} = {md} is not twice a genus"))
        if polys[1] != substitute_neg(polys[0]):
            rep.mismatches.append(_mismatch(g, model, pair[1], polys[1], "lifts not related by x -> -x"))
        a, b = pair
        if model.s0 == 0 and a.n == b.n:
            res = charpoly_cases(g, a.n, model.nbar)
            if res.case.tag == D2 and set(polys) != set(res.candidates):
                rep.mismatches.append(_mismatch(g, model, b, polys[1], "D2 lifts do not realize both candidates"))
    rep.witnessed[g] = sorted(seen)
    rep.not_witnessed = [(g, n, nbar) for n, nbar, _ in classify(g) if (n, nbar) not in seen]
    return rep


def verify_range(g_min: int, g_max: int, *, jobs: int = 1, strict: bool = True) -> VerificationReport:
    """Run :func:`check_genus` over ``g_min..g_max``.

    The merged report does not depend on ``jobs``. With ``strict`` the first
    mismatch is raised as :class:`VerificationFailure`.
    """
    if g_min < 2 or g_max < g_min:
        raise ValueError(f"bad genus range {g_min}..{g_max}")
    genera = list(range(g_min, g_max + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(check_genus, genera))
    else:
        parts = [check_genus(g) for g in genera]
    rep = VerificationReport((g_min, g_max))
    for part in parts:
        rep.models_checked += part.models_checked
        rep.lifts_checked += part.lifts_checked
        rep.mismatches.extend(part.mismatches)
        rep.witnessed.update(part.witnessed)
        rep.not_witnessed.extend(part.not_witnessed)
    if strict and rep.mismatches:
        raise VerificationFailure(rep.mismatches[0])
    return rep
