"""Independent brute-force validators backing the closed-form checkers.

Nothing in this module knows about hypergeometric functions: it deals in the
raw algebra (a squared-modulus identity, quadratic nonnegativity on the real
line, a power-sum bound) plus a log-grid line minimizer for inequalities
quantified over s in (0, infinity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import NonFinite

_GOLDEN = (math.sqrt(5) - 1) / 2

SAFE_BOTH_ENDS = "SafeBothEnds"
DIVERGES_AT_ZERO = "DivergesAtZero"
DIVERGES_AT_INFINITY = "DivergesAtInfinity"


def ab_gap_direct(w, a, b, c):
    """|B|^2 - |A|^2 straight from A = w(w + c - 1), B = (w + a)(w + b)."""
    B = (w + a) * (w + b)
    A = w * (w + c - 1)
    return np.abs(B) ** 2 - np.abs(A) ** 2


def ab_gap_formula(w, a, b, c):
    """The expanded form of |B|^2 - |A|^2 used by the boundary checkers:

    |w|^2 (2 Re[p conj(w)] + |a|^2 + |b|^2 - |c-1|^2)
      + (2 Re[a conj(w)] + |a|^2)(2 Re[b conj(w)] + |b|^2),

    with p = a + b + 1 - c.  Identical to ab_gap_direct for every input.
    """
    p = a + b + 1 - c
    wc = np.conjugate(w)
    t1 = np.abs(w) ** 2 * (2 * np.real(p * wc) + abs(a) ** 2 + abs(b) ** 2 - abs(c - 1) ** 2)
    t2 = (2 * np.real(a * wc) + abs(a) ** 2) * (2 * np.real(b * wc) + abs(b) ** 2)
    return t1 + t2


def ab_identity_residual(w, a, b, c):
    """|direct - expanded| for the squared-modulus identity; ~0 always."""
    return np.abs(ab_gap_direct(w, a, b, c) - ab_gap_formula(w, a, b, c))


def quadratic_nonneg_exact(L: float, M: float, N: float) -> bool:
    """Whether L s^2 - 2 M s + N >= 0 for every real s.

    Exact characterization: L >= 0, N >= 0 and L N - M^2 >= 0 (the L = 0 edge
    forces M = 0 through the discriminant condition).
    """
    return L >= 0 and N >= 0 and L * N - M * M >= 0


def golden_section(f: Callable[[float], float], lo: float, hi: float, iters: int) -> tuple[float, float]:
    """Golden-section minimization of f on [lo, hi]; returns (argmin, min)."""
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = f(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def quadratic_nonneg_sampled(L: float, M: float, N: float, grid: int = 2001) -> bool:
    """Sampled counterpart of quadratic_nonneg_exact.

    Substituting s = tan(u) and normalizing by 1 + s^2 turns the quadratic
    into L sin^2(u) - 2 M sin(u) cos(u) + N cos^2(u) on the closed interval
    [-pi/2, pi/2], whose endpoints carry the s -> +-infinity behaviour (the
    leading coefficient L) for free.  The grid minimum is sharpened by a
    golden-section pass so disagreements with the exact test only occur
    within rounding distance of the discriminant boundary.
    """
    u = np.linspace(-math.pi / 2, math.pi / 2, grid)
    su, cu = np.sin(u), np.cos(u)
    vals = L * su * su - 2 * M * su * cu + N * cu * cu
    i = int(np.argmin(vals))

    def trig(t: float) -> float:
        st, ct = math.sin(t), math.cos(t)
        return L * st * st - 2 * M * st * ct + N * ct * ct

    lo, hi = u[max(i - 1, 0)], u[min(i + 1, grid - 1)]
    _, refined = golden_section(trig, lo, hi, 80)
    best = min(float(vals.min()), refined)
    scale = max(1.0, abs(L), abs(M), abs(N))
    return best >= -1e-9 * scale


@dataclass(frozen=True)
class LineSearchSettings:
    """Controls for the positive-line minimizer."""

    s_min: float = 1e-8
    s_max: float = 1e8
    n_log_points: int = 2000
    refine_iters: int = 60
    min_margin: float = 1e-9

    def __post_init__(self):
        if not 0 < self.s_min < self.s_max:
            raise ValueError("need 0 < s_min < s_max")
        if self.n_log_points < 16:
            raise ValueError("n_log_points must be at least 16")


DEFAULT_LINE_SEARCH = LineSearchSettings()


@dataclass(frozen=True)
class MinimizerResult:
    min_value: float
    argmin_s: float
    endpoint_verdict: str
    conclusive: bool


def _net_leading(groups: list[tuple[float, float]]) -> float:
    """Coefficient of the dominant exponent after cancelling ties."""
    scale = max((abs(c) for _, c in groups), default=0.0)
    for _, coef in groups:
        if abs(coef) > 1e-12 * max(scale, 1.0):
            return coef
    return 0.0


def _group_terms(terms: Sequence[tuple[float, float]]) -> list[tuple[float, float]]:
    """Sum coefficients of exponents equal up to 1e-12, sorted descending."""
    ordered = sorted(terms, key=lambda t: -t[0])
    groups: list[tuple[float, float]] = []
    for expo, coef in ordered:
        if groups and abs(groups[-1][0] - expo) <= 1e-12:
            groups[-1] = (groups[-1][0], groups[-1][1] + coef)
        else:
            groups.append((expo, coef))
    return groups


def endpoint_verdict_from_terms(terms: Sequence[tuple[float, float]]) -> str:
    """Verdict for a residual of the form sum coef * s^expo at both ends.

    The residual tends to the sign of the dominant net coefficient: highest
    exponent as s -> infinity, lowest as s -> 0+.
    """
    groups = _group_terms(terms)
    if _net_leading(groups) < 0:
        return DIVERGES_AT_INFINITY
    if _net_leading(list(reversed(groups))) < 0:
        return DIVERGES_AT_ZERO
    return SAFE_BOTH_ENDS


def minimize_on_positive_line(
    residual: Callable,
    settings: LineSearchSettings = DEFAULT_LINE_SEARCH,
    terms: Optional[Sequence[tuple[float, float]]] = None,
) -> MinimizerResult:
    """Minimum of residual(s) over s in [s_min, s_max].

    Log-spaced scan followed by golden-section refinement (in log s) around
    the three smallest samples.  `terms`, when given, describes the residual
    as a power sum [(exponent, coefficient), ...] and supplies the verdict
    about behaviour beyond the scanned range; without it the verdict falls
    back on the signs at the extreme samples.  A minimum within +-min_margin
    of zero is flagged inconclusive rather than trusted either way.
    """
    s = np.logspace(math.log10(settings.s_min), math.log10(settings.s_max), settings.n_log_points)
    try:
        vals = np.asarray(residual(s), dtype=float)
        if vals.shape != s.shape:
            raise TypeError
    except (TypeError, ValueError):  # scalar-only callable
        vals = np.array([float(residual(float(si))) for si in s])
    if not np.all(np.isfinite(vals)):
        raise NonFinite("residual returned a non-finite value inside the search range")

    def in_log(t: float) -> float:
        return float(residual(math.exp(t)))

    best_v = float(vals.min())
    best_s = float(s[int(np.argmin(vals))])
    log_s = np.log(s)
    for i in np.argsort(vals, kind="stable")[:3]:
        lo = log_s[max(int(i) - 1, 0)]
        hi = log_s[min(int(i) + 1, len(s) - 1)]
        t, v = golden_section(in_log, float(lo), float(hi), settings.refine_iters)
        if not math.isfinite(v):
            raise NonFinite("residual returned a non-finite value during refinement")
        si = math.exp(t)
        if v < best_v or (v == best_v and si < best_s):
            best_v, best_s = v, si

    if terms is not None:
        verdict = endpoint_verdict_from_terms(terms)
    elif vals[-1] < -settings.min_margin and vals[-1] <= vals[-2]:
        verdict = DIVERGES_AT_INFINITY
    elif vals[0] < -settings.min_margin and vals[0] <= vals[1]:
        verdict = DIVERGES_AT_ZERO
    else:
        verdict = SAFE_BOTH_ENDS
    conclusive = not (-settings.min_margin <= best_v <= settings.min_margin)
    return MinimizerResult(best_v, best_s, verdict, conclusive)


def half_plane_bound_check(A: float, B: float, C: float, K: float, alpha: float) -> bool:
    """Whether B/2 + max(A, C) <= K together with max(A, C) <= K.

    Because 2 <= s^alpha + s^{-alpha} <= s + 1/s on (0, infinity) for
    0 < alpha < 1, a True answer guarantees
    A s^alpha + B + C s^{-alpha} <= K (s + 1/s) for every positive s.
    The second clause is not redundant: with B < 0 the first alone admits
    max(A, C) > K, and then A s^alpha can outrun K s over a mid range of s
    (A = 3, B = -10, C = 0, K = 1, alpha = 0.95, s = 1e6 violates the bound).
    When B >= 0 the first clause already forces the second.
    """
    if not K > 0:
        raise ValueError("K must be positive")
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    return B / 2 + max(A, C) <= K and max(A, C) <= K
