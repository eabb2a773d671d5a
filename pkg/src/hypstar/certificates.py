"""Closed-form sufficient-condition checkers for the shifted hypergeometric
function f(z) = z 2F1(a,b;c;z), plus a sampled boundary-grid checker.

Every checker returns a Certificate carrying the full condition trace: each
inequality is evaluated (no short-circuiting) and recorded with its value,
threshold and verdict, so a failed certificate shows exactly which margin
broke.  A passing closed-form certificate is a proof-grade statement about
membership; the grid checker is labelled grid-consistent evidence only.

Numeric conventions: "x is real" means |Im x| <= 1e-12 (1 + |x|); strict
inequalities require a margin above 1e-12; closed inequalities tolerate
-1e-12 times a problem-size scale.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import InvalidParams, PrecondFailed
from .hypergeom import HypergeomParams
from .oracles import (
    DEFAULT_LINE_SEARCH,
    SAFE_BOTH_ENDS,
    LineSearchSettings,
    _group_terms,
    _net_leading,
    ab_gap_formula,
    minimize_on_positive_line,
)
from .shapes import (
    THETA_MIN,
    ShapeClass,
    SpirallikeOrder,
    StarlikeOrder,
    StronglyStarlike,
    class_to_json,
    mu_of,
    spiral_boundary_Q,
    spiral_boundary_zQprime,
    sst_boundary_Q,
    sst_boundary_zQprime,
)

STRICT_TOL = 1e-12
REAL_TOL = 1e-12

KIND_GENERAL = "GeneralMain"
KIND_STARLIKE_ORDER = "StarlikeOrderThm"
KIND_COR_A2 = "CorA2"
KIND_SPIRALLIKE = "SpirallikeThm"
KIND_SPIRALLIKE_COR1 = "SpirallikeCor1"
KIND_SPIRALLIKE_COR2 = "SpirallikeCor2"
KIND_STRONG_STARLIKE = "StrongStarlikeThm"
KIND_SST_COR_P0 = "StrongStarlikeCorP0"
KIND_SST_COR_MAX = "StrongStarlikeCorMax"
KIND_SST_COR_FINAL = "StrongStarlikeCorFinal"
KIND_THEOREM_A = "TheoremA"
KIND_CONVEXITY = "ConvexityWrapper"


@dataclass(frozen=True)
class Condition:
    name: str
    value: Union[float, complex]
    threshold: str
    passed: bool


def _render_value(v: Union[float, complex]) -> str:
    if isinstance(v, complex):
        return f"{v.real:.15g}{v.imag:+.15g}j"
    return f"{v:.15g}"


def _pair(v: complex) -> list[float]:
    v = complex(v)
    return [v.real, v.imag]


@dataclass
class Certificate:
    """Outcome of one closed-form (or grid) membership check."""

    kind: str
    passed: bool
    conditions: list[Condition]
    params: HypergeomParams
    shape_class: ShapeClass
    notes: list[str] = field(default_factory=list)

    def failed_condition(self) -> str:
        for cond in self.conditions:
            if not cond.passed:
                return cond.name
        return ""

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "params": {"a": _pair(self.params.a), "b": _pair(self.params.b), "c": _pair(self.params.c)},
            "class": class_to_json(self.shape_class),
            "conditions": [
                {"name": c.name, "value": _render_value(c.value), "threshold": c.threshold, "pass": c.passed}
                for c in self.conditions
            ],
            "notes": list(self.notes),
        }


def _finish(kind, conditions, params, cls, notes=None) -> Certificate:
    return Certificate(kind, all(c.passed for c in conditions), conditions, params, cls, notes or [])


def _cond_real(name: str, value: complex) -> Condition:
    ok = abs(value.imag) <= REAL_TOL * (1 + abs(value))
    return Condition(f"Im[{name}]", value.imag, "|Im| <= 1e-12 (relative)", ok)


def _cond_strict_pos(name: str, value: float) -> Condition:
    return Condition(name, value, "> 0 (strict, tol 1e-12)", value > STRICT_TOL)


def _cond_nonneg(name: str, value: float, scale: float = 1.0) -> Condition:
    return Condition(name, value, ">= 0", value >= -STRICT_TOL * max(1.0, scale))


def _cond_info(name: str, value: Union[float, complex]) -> Condition:
    return Condition(name, value, "(informational)", True)


@dataclass(frozen=True)
class LMNCoefficients:
    """Coefficients of the boundary quadratic L s^2 - 2 M s + N; `source`
    records which checker's convention produced them (the two conventions
    differ by a positive factor, so the sign conditions agree)."""

    L: float
    M: float
    N: float
    source: str


def starlike_order_lmn(a: complex, b: complex, c: complex, alpha: float) -> LMNCoefficients:
    """Quadratic coefficients of the starlike-order boundary inequality."""
    one = 1 - alpha
    p = (a + b + 1 - c).real
    base = (a * b).real / one + p * (1 - 2 * alpha) - abs(a) ** 2 - abs(b) ** 2 + abs(c - 1) ** 2
    L = base - 4 * a.imag * b.imag
    M = (a * b * (a.conjugate() + b.conjugate() - 2 + 2 * alpha)).imag / one
    N = base - (2 * a.real - abs(a) ** 2 / one) * (2 * b.real - abs(b) ** 2 / one)
    return LMNCoefficients(L, M, N, "starlike-order")


def spirallike_lmn(a: complex, b: complex, lam: float, alpha: float) -> LMNCoefficients:
    """Quadratic coefficients of the spirallike boundary inequality (c = a+b+1)."""
    e1 = cmath.exp(-1j * lam)
    e2 = cmath.exp(-2j * lam)
    m0 = e1 * a * b
    L = (m0 * (2 - alpha + (1 - alpha) * e2)).real
    M = (m0 * (a.conjugate() + b.conjugate() - (1 - alpha) * (1 + e2))).imag
    N = (m0 * (2 * a.conjugate() + 2 * b.conjugate() + alpha - (1 - alpha) * e2)).real - (
        abs(a) * abs(b)
    ) ** 2 / ((1 - alpha) * math.cos(lam))
    return LMNCoefficients(L, M, N, "spirallike")


def _lmn_conditions(lmn: LMNCoefficients) -> list[Condition]:
    scale = max(1.0, abs(lmn.L), abs(lmn.M), abs(lmn.N))
    return [
        _cond_nonneg("L", lmn.L, scale),
        _cond_info("M", lmn.M),
        _cond_nonneg("N", lmn.N, scale),
        _cond_nonneg("L*N - M^2", lmn.L * lmn.N - lmn.M * lmn.M, scale * scale),
    ]


def certify_starlike_order(params: HypergeomParams, alpha: float) -> Certificate:
    """Sufficient condition for f to be starlike of order alpha.

    Requires p = a+b+1-c real, Re[ab] > p(1-alpha), and nonnegativity of the
    boundary quadratic given by L, M, N.
    """
    a, b, c = params.a, params.b, params.c
    if abs(a * b) <= STRICT_TOL:
        raise InvalidParams("ab must be nonzero")
    if not 0 <= alpha < 1:
        raise InvalidParams("alpha must lie in [0, 1)")
    p = params.p
    margin = (a * b).real - p.real * (1 - alpha)
    conditions = [
        _cond_real("p", p),
        _cond_strict_pos("Re[ab] - p(1-alpha)", margin),
        *_lmn_conditions(starlike_order_lmn(a, b, c, alpha)),
    ]
    notes = []
    if abs(margin) <= 1e-9:
        notes.append(
            "Re[ab] - p(1-alpha) is on the strict boundary; for real parameters with "
            "0 < a <= 2, b <= c and b + c = 3 the limiting-family checker (CorA2) still certifies"
        )
    return _finish(KIND_STARLIKE_ORDER, conditions, params, StarlikeOrder(alpha), notes)


def certify_cor_a2(a: float, b: float, c: float, s: float = 0.0) -> Certificate:
    """Real-parameter family f(z) = z 2F1(a, b+is; c+is; z): starlike of order
    1 - a/2 whenever 0 < a <= 2, b <= c and 3 <= b + c (the edge b + c = 3 is
    accepted; a compactness/limit argument covers it)."""
    a, b, c, s = float(a), float(b), float(c), float(s)
    conditions = [
        Condition("a", a, "0 < a <= 2", STRICT_TOL < a <= 2 + STRICT_TOL),
        Condition("b + c", b + c, ">= 3", b + c >= 3 - STRICT_TOL),
        Condition("c - b", c - b, ">= 0", c - b >= -STRICT_TOL),
    ]
    order = 1 - a / 2
    notes = [f"certified order 1 - a/2 = {order:.15g}"]
    if abs(b + c - 3) <= STRICT_TOL:
        notes.append("b + c = 3 boundary accepted via the limiting family")
    params = HypergeomParams(a, complex(b, s), complex(c, s))
    cls = StarlikeOrder(order) if 0 <= order < 1 else StarlikeOrder(0.0)
    return _finish(KIND_COR_A2, conditions, params, cls, notes)


def certify_spirallike(a: complex, b: complex, lam: float, alpha: float) -> Certificate:
    """Sufficient condition for z 2F1(a,b;a+b+1;z) to be lam-spirallike of
    order alpha: Re[e^{-i lam} ab] > 0 plus nonnegativity of the boundary
    quadratic.  The parameter c is pinned to a + b + 1."""
    a, b = complex(a), complex(b)
    if abs(a * b) <= STRICT_TOL:
        raise InvalidParams("ab must be nonzero")
    if not abs(lam) < math.pi / 2:
        raise InvalidParams("lam must lie in (-pi/2, pi/2)")
    if not 0 <= alpha < 1:
        raise InvalidParams("alpha must lie in [0, 1)")
    params = HypergeomParams(a, b, a + b + 1)  # rejects a+b at -1, -2, ...
    m0 = cmath.exp(-1j * lam) * a * b
    conditions = [
        _cond_strict_pos("Re[e^{-i lam} ab]", m0.real),
        *_lmn_conditions(spirallike_lmn(a, b, lam, alpha)),
    ]
    notes = []
    if m0.real < -STRICT_TOL:
        notes.append(
            "Re[e^{-i lam} ab] < 0: a nonnegative value is necessary for lam-spirallikeness, "
            "so f is not lam-spirallike of any order"
        )
    return _finish(KIND_SPIRALLIKE, conditions, params, SpirallikeOrder(lam, alpha), notes)


def _positive_real(name: str, value: complex) -> float:
    if abs(value.imag) > REAL_TOL * (1 + abs(value)) or value.real <= STRICT_TOL:
        raise PrecondFailed(f"{name} must be a positive real number, got {value}")
    return value.real


def certify_spirallike_cor1(a: complex, b: complex, lam: float, alpha: float) -> Certificate:
    """Spirallike checker for the special case m = e^{-i lam} ab positive real
    and lam nonzero; the quadratic test collapses to a single inequality."""
    a, b = complex(a), complex(b)
    if not 0 <= alpha < 1:
        raise InvalidParams("alpha must lie in [0, 1)")
    if not STRICT_TOL < abs(lam) < math.pi / 2:
        raise PrecondFailed("requires 0 < |lam| < pi/2")
    m = _positive_real("e^{-i lam} ab", cmath.exp(-1j * lam) * a * b)
    params = HypergeomParams(a, b, a + b + 1)
    lhs = ((a + b).imag - (1 - alpha) * math.sin(2 * lam)) ** 2
    rhs = (2 - alpha + (1 - alpha) * math.cos(2 * lam)) * (
        2 * (a + b).real + alpha - (1 - alpha) * math.cos(2 * lam) - m / ((1 - alpha) * math.cos(lam))
    )
    scale = max(1.0, abs(lhs), abs(rhs))
    conditions = [
        _cond_info("m = e^{-i lam} ab", m),
        Condition("RHS - LHS", rhs - lhs, ">= 0", rhs - lhs >= -STRICT_TOL * scale),
    ]
    return _finish(KIND_SPIRALLIKE_COR1, conditions, params, SpirallikeOrder(lam, alpha))


def certify_spirallike_cor2(a: complex, b: complex, lam: float, alpha: float) -> Certificate:
    """Spirallike checker for m = ab positive real, valid when cos^2(lam)
    lies strictly between (1-2alpha)/(4(1-alpha)) and 1."""
    a, b = complex(a), complex(b)
    if not 0 <= alpha < 1:
        raise InvalidParams("alpha must lie in [0, 1)")
    if not abs(lam) < math.pi / 2:
        raise InvalidParams("lam must lie in (-pi/2, pi/2)")
    m = _positive_real("ab", a * b)
    cos2 = math.cos(lam) ** 2
    lower = (1 - 2 * alpha) / (4 * (1 - alpha))
    if not lower + STRICT_TOL < cos2 < 1 - STRICT_TOL:
        raise PrecondFailed(f"requires {lower:.6g} < cos^2(lam) < 1, got cos^2(lam) = {cos2:.6g}")
    params = HypergeomParams(a, b, a + b + 1)
    rot = cmath.exp(1j * lam) * (a + b)
    lhs = (rot.imag / math.cos(lam) - 2 * (1 - alpha) * math.sin(2 * lam)) ** 2
    rhs = (4 * (1 - alpha) * cos2 + 2 * alpha - 1) * (
        2 * rot.real / math.cos(lam) - 4 * (1 - alpha) * cos2 + (3 - 2 * alpha) - m / ((1 - alpha) * cos2)
    )
    scale = max(1.0, abs(lhs), abs(rhs))
    conditions = [
        _cond_info("m = ab", m),
        Condition("RHS - LHS", rhs - lhs, ">= 0", rhs - lhs >= -STRICT_TOL * scale),
    ]
    return _finish(KIND_SPIRALLIKE_COR2, conditions, params, SpirallikeOrder(lam, alpha))


@dataclass(frozen=True)
class CubicCoefficients:
    """Coefficients of G_eps(x) = S x^3 + T_eps x^2 + U_eps x + V, the cubic
    (in x = s^alpha) equal to |B|^2 - |A|^2 on the strongly starlike boundary."""

    S: float
    T_plus: float
    T_minus: float
    U_plus: float
    U_minus: float
    V: float

    def T(self, eps: int) -> float:
        return self.T_plus if eps > 0 else self.T_minus

    def U(self, eps: int) -> float:
        return self.U_plus if eps > 0 else self.U_minus


def strong_starlike_cubic(a: complex, b: complex, c: complex, alpha: float) -> CubicCoefficients:
    p = (a + b + 1 - c).real
    ca = math.cos(math.pi * alpha / 2)
    base = abs(a) ** 2 + abs(b) ** 2 - abs(c - 1) ** 2

    def T(eps: int) -> float:
        eta = cmath.exp(-1j * eps * math.pi * alpha / 2)
        return base - 2 * p - 4 * p * ca * ca + 4 * (a * eta).real * (b * eta).real

    def U(eps: int) -> float:
        eta = cmath.exp(-1j * eps * math.pi * alpha / 2)
        return (
            -2 * (base - 3 * p) * ca
            + 2 * (a * eta).real * (abs(b) ** 2 - 2 * b.real)
            + 2 * (b * eta).real * (abs(a) ** 2 - 2 * a.real)
        )

    V = base - 2 * p + (abs(a) ** 2 - 2 * a.real) * (abs(b) ** 2 - 2 * b.real)
    return CubicCoefficients(2 * p * ca, T(1), T(-1), U(1), U(-1), V)


def _cubic_residual(alpha: float, K: float, S: float, T: float, U: float, V: float):
    """RHS - LHS of the boundary inequality, as a function of s > 0."""

    def residual(s):
        s = np.asarray(s, dtype=float)
        x = s**alpha
        return alpha * (s + 1 / s) * x * K - (((S * x + T) * x + U) * x + V)

    return residual


def _cubic_terms(alpha: float, K: float, S: float, T: float, U: float, V: float):
    return [
        (1 + alpha, alpha * K),
        (alpha - 1, alpha * K),
        (3 * alpha, -S),
        (2 * alpha, -T),
        (alpha, -U),
        (0.0, -V),
    ]


def _tail_coefficient(terms) -> float:
    """Net coefficient of the dominant exponent as s -> infinity."""
    return _net_leading(_group_terms(terms))


def _minimizer_conditions(
    label: str,
    alpha: float,
    K: float,
    S: float,
    T: float,
    U: float,
    V: float,
    line_search: LineSearchSettings,
    notes: list[str],
) -> list[Condition]:
    terms = _cubic_terms(alpha, K, S, T, U, V)
    result = minimize_on_positive_line(_cubic_residual(alpha, K, S, T, U, V), line_search, terms)
    tail = _tail_coefficient(terms)
    ok_min = result.min_value > line_search.min_margin
    if not result.conclusive:
        notes.append(
            f"{label}: inconclusive, min residual {result.min_value:.6g} at s = {result.argmin_s:.6g} "
            f"lies within +-{line_search.min_margin:g} of zero"
        )
    else:
        notes.append(f"{label}: min residual {result.min_value:.6g} at s = {result.argmin_s:.6g}")
    return [
        Condition(
            f"min residual ({label})",
            result.min_value,
            f"> {line_search.min_margin:g}",
            ok_min and result.endpoint_verdict == SAFE_BOTH_ENDS,
        ),
        Condition(f"tail coefficient ({label})", tail, "> 0 as s -> infinity", tail > 0),
    ]


def certify_strong_starlike(
    params: HypergeomParams, alpha: float, line_search: LineSearchSettings = DEFAULT_LINE_SEARCH
) -> Certificate:
    """Sufficient condition for f to be strongly starlike of order alpha.

    Requires p real, ab - p inside the open sector |arg| < pi alpha / 2, and
    the cubic bound G_eps(s^alpha) <= alpha (s + 1/s) s^alpha K_eps for both
    signs eps and all s > 0.  The quantified condition is decided by the
    positive-line minimizer on the residual plus a leading-exponent
    comparison at both ends of the range.
    """
    a, b, c = params.a, params.b, params.c
    if abs(a * b) <= STRICT_TOL:
        raise InvalidParams("ab must be nonzero")
    if not 0 < alpha < 1:
        raise InvalidParams("alpha must lie in (0, 1)")
    p = params.p
    pr = p.real
    w = a * b - pr
    sector = math.pi * alpha / 2 - abs(cmath.phase(w)) if abs(w) > STRICT_TOL else -math.pi * alpha / 2
    cubic = strong_starlike_cubic(a, b, c, alpha)
    notes = [
        f"S = {cubic.S:.6g}, T+ = {cubic.T_plus:.6g}, T- = {cubic.T_minus:.6g}, "
        f"U+ = {cubic.U_plus:.6g}, U- = {cubic.U_minus:.6g}, V = {cubic.V:.6g}"
    ]
    conditions = [
        _cond_real("p", p),
        _cond_strict_pos("pi*alpha/2 - |arg(ab - p)|", sector),
    ]
    for eps in (1, -1):
        K = (w * cmath.exp(1j * eps * math.pi * (1 - alpha) / 2)).real
        conditions.extend(
            _minimizer_conditions(
                f"eps={eps:+d}", alpha, K, cubic.S, cubic.T(eps), cubic.U(eps), cubic.V, line_search, notes
            )
        )
    return _finish(KIND_STRONG_STARLIKE, conditions, params, StronglyStarlike(alpha), notes)


def certify_sst_cor_p0(
    a: complex, b: complex, alpha: float, line_search: LineSearchSettings = DEFAULT_LINE_SEARCH
) -> Certificate:
    """Strong starlikeness of order alpha for c = a + b + 1 (so the cubic term
    vanishes): requires |arg(ab)| < pi alpha / 2 and a quantified quadratic
    bound decided by the same minimizer."""
    a, b = complex(a), complex(b)
    if abs(a * b) <= STRICT_TOL:
        raise InvalidParams("ab must be nonzero")
    if not 0 < alpha < 1:
        raise InvalidParams("alpha must lie in (0, 1)")
    params = HypergeomParams(a, b, a + b + 1)
    ab = a * b
    sector = math.pi * alpha / 2 - abs(cmath.phase(ab))
    conditions = [_cond_strict_pos("pi*alpha/2 - |arg(ab)|", sector)]
    notes: list[str] = []
    for eps in (1, -1):
        eta = cmath.exp(-1j * eps * math.pi * alpha / 2)
        A2 = 2 * (ab * eta * eta).real
        A1 = 2 * (ab * eta * (a.conjugate() + b.conjugate() - 2)).real
        A0 = abs(ab) ** 2 - 2 * (ab * (a.conjugate() + b.conjugate() - 1)).real
        K = (ab * cmath.exp(1j * eps * math.pi * (1 - alpha) / 2)).real
        conditions.extend(
            _minimizer_conditions(f"eps={eps:+d}", alpha, K, 0.0, A2, A1, A0, line_search, notes)
        )
    return _finish(KIND_SST_COR_P0, conditions, params, StronglyStarlike(alpha), notes)


def certify_sst_cor_max(a: complex, b: complex, alpha: float) -> Certificate:
    """Fully closed-form strong-starlikeness check for c = a + b + 1, obtained
    by bounding the quantified inequality with a power-sum estimate: with
    eta = e^{-i eps pi alpha/2}, A = 2 Re[eta^2 ab],
    B = 2 Re[eta ab (conj(a)+conj(b)-2)],
    C = |ab|^2 - 2 Re[ab (conj(a)+conj(b)-1)] and
    K = alpha Re[e^{i eps pi (1-alpha)/2} ab], the bound holds for every s > 0
    once B/2 + max(A, C) <= K and max(A, C) <= K (the second clause guards a
    region where the one-line estimate is invalid; see half_plane_bound_check).
    Strictly stronger than the minimizer-based checker."""
    a, b = complex(a), complex(b)
    if abs(a * b) <= STRICT_TOL:
        raise InvalidParams("ab must be nonzero")
    if not 0 < alpha < 1:
        raise InvalidParams("alpha must lie in (0, 1)")
    params = HypergeomParams(a, b, a + b + 1)
    ab = a * b
    sector = math.pi * alpha / 2 - abs(cmath.phase(ab))
    conditions = [_cond_strict_pos("pi*alpha/2 - |arg(ab)|", sector)]
    for eps in (1, -1):
        eta = cmath.exp(-1j * eps * math.pi * alpha / 2)
        half_b = (ab * eta * (a.conjugate() + b.conjugate() - 2)).real
        biggest = max(
            2 * (ab * eta * eta).real,
            abs(ab) ** 2 - 2 * (ab * (a.conjugate() + b.conjugate() - 1)).real,
        )
        rhs = alpha * (ab * cmath.exp(1j * eps * math.pi * (1 - alpha) / 2)).real
        scale = max(1.0, abs(half_b) + abs(biggest), abs(rhs))
        conditions.append(
            Condition(
                f"K - B/2 - max(A, C) (eps={eps:+d})",
                rhs - half_b - biggest,
                ">= 0",
                rhs - half_b - biggest >= -STRICT_TOL * scale,
            )
        )
        conditions.append(
            Condition(f"K - max(A, C) (eps={eps:+d})", rhs - biggest, ">= 0", rhs - biggest >= -STRICT_TOL * scale)
        )
    return _finish(KIND_SST_COR_MAX, conditions, params, StronglyStarlike(alpha), notes=[])


def certify_sst_cor_final(a: complex, b: complex, alpha: float) -> Certificate:
    """Strong starlikeness of order alpha for c = a + b + 1 with a + b real and
    ab real positive, via two explicit scalar inequalities on (a-2)(b-2) and
    a + b."""
    a, b = complex(a), complex(b)
    if not 0 < alpha < 1:
        raise InvalidParams("alpha must lie in (0, 1)")
    lsum = a + b
    if abs(lsum.imag) > REAL_TOL * (1 + abs(lsum)):
        raise PrecondFailed("a + b must be real")
    m = _positive_real("ab", a * b)
    prod = (a - 2) * (b - 2)
    if abs(prod.imag) > 1e-10 * (1 + abs(prod)):
        raise PrecondFailed("(a-2)(b-2) has a nonreal residue; inputs are inconsistent")
    params = HypergeomParams(a, b, a + b + 1)
    half = math.pi * alpha / 2
    cap1 = 4 * math.cos(half) ** 2
    cap2 = 2 - 2 * math.cos(math.pi * alpha) / math.cos(half) + alpha * math.tan(half)
    conditions = [
        Condition("(a-2)(b-2)", prod.real, f"<= 4 cos^2(pi alpha/2) = {cap1:.15g}", prod.real <= cap1 + STRICT_TOL * max(1.0, abs(prod.real))),
        Condition("a + b", lsum.real, f"<= {cap2:.15g}", lsum.real <= cap2 + STRICT_TOL * max(1.0, abs(lsum.real))),
    ]
    lo = 2 * math.sin(half) ** 2
    notes = [
        f"feasibility window for l = a + b: {lo:.6g} < ab/2 + {lo:.6g} = {m / 2 + lo:.6g} <= l <= {cap2:.6g}"
    ]
    return _finish(KIND_SST_COR_FINAL, conditions, params, StronglyStarlike(alpha), notes)


def certify_theorem_A(a: complex, b: complex, alpha: float) -> Certificate:
    """Single-inequality strong-starlikeness check for c = a + b + 1, a + b
    real, ab > 0, valid only for orders alpha in (1/3, 1):

        ((a-b)^2 + 6(a+b) - 3) sin^2(pi alpha/2) >= a^2 + ab + b^2.
    """
    a, b = complex(a), complex(b)
    if not 1 / 3 < alpha < 1:
        raise PrecondFailed("alpha must lie in (1/3, 1)")
    lsum = a + b
    if abs(lsum.imag) > REAL_TOL * (1 + abs(lsum)):
        raise PrecondFailed("a + b must be real")
    _positive_real("ab", a * b)
    diff2 = (a - b) * (a - b)
    quad = a * a + a * b + b * b
    if abs(diff2.imag) > 1e-10 * (1 + abs(diff2)) or abs(quad.imag) > 1e-10 * (1 + abs(quad)):
        raise PrecondFailed("derived real combinations have nonreal residues")
    params = HypergeomParams(a, b, a + b + 1)
    lhs = (diff2.real + 6 * lsum.real - 3) * math.sin(math.pi * alpha / 2) ** 2
    rhs = quad.real
    scale = max(1.0, abs(lhs), abs(rhs))
    conditions = [
        Condition(
            "((a-b)^2 + 6(a+b) - 3) sin^2(pi alpha/2) - (a^2 + ab + b^2)",
            lhs - rhs,
            ">= 0",
            lhs - rhs >= -STRICT_TOL * scale,
        )
    ]
    return _finish(KIND_THEOREM_A, conditions, params, StronglyStarlike(alpha), notes=[])


@dataclass(frozen=True)
class BoundaryGridSettings:
    """Sampling of the boundary circle for the grid checker; theta_min keeps
    the grid away from the generator's singular boundary points."""

    n_points: int = 2000
    theta_min: float = THETA_MIN

    def __post_init__(self):
        if self.n_points < 16:
            raise ValueError("n_points must be at least 16")
        if not 0 < self.theta_min < 0.1:
            raise ValueError("theta_min must lie in (0, 0.1)")


def certify_general(
    cls: ShapeClass,
    params: HypergeomParams,
    grid: BoundaryGridSettings = BoundaryGridSettings(),
    relaxed: bool = False,
) -> Certificate:
    """Boundary-grid check of the two master inequalities

        D(zeta) = -2 Re[(p Q(zeta) + ab) conj(zeta Q'(zeta))] > 0   and
        |B(zeta)|^2 - |A(zeta)|^2 <= D(zeta)

    over sampled non-exceptional boundary points.  `relaxed` weakens the
    first inequality to D >= 0 wherever A(zeta) != B(zeta).  The result is
    grid-consistent sampled evidence, never a proof; only the closed-form
    checkers are exact.
    """
    a, b, c = params.a, params.b, params.c
    p = params.p
    if isinstance(cls, StronglyStarlike):
        half = max(grid.n_points // 2, 8)
        th = np.linspace(grid.theta_min, math.pi - grid.theta_min, half)
        s = np.concatenate([1 / np.tan(th / 2)] * 2)
        eps = np.concatenate([np.ones(half), -np.ones(half)])
        theta = np.concatenate([th, -th])
        w = sst_boundary_Q(cls.alpha, s, eps)
        zqp = sst_boundary_zQprime(cls.alpha, s, eps)
        s_signed = s * eps
    else:
        th = np.linspace(grid.theta_min, 2 * math.pi - grid.theta_min, grid.n_points)
        theta = th
        s = 1 / np.tan(th / 2)
        mu = mu_of(cls)
        w = spiral_boundary_Q(mu, s)
        zqp = spiral_boundary_zQprime(mu, s)
        s_signed = s

    delta = p * w + a * b  # equals B - A on the boundary
    D = -2 * np.real(delta * np.conjugate(zqp))
    gap = ab_gap_formula(w, a, b, c)

    tol_d = STRICT_TOL * (1 + np.abs(delta) * np.abs(zqp))
    if relaxed:
        main1_ok = (D > tol_d) | ((D >= -tol_d) & (np.abs(delta) > tol_d))
        threshold1 = ">= 0 with A != B (relaxed)"
    else:
        main1_ok = D > tol_d
        threshold1 = "> 0 at every sampled point (strict)"
    excess = gap - D
    tol_2 = 1e-9 * (1 + np.abs(gap) + np.abs(D))
    main2_ok = excess <= tol_2

    n1 = int(np.count_nonzero(~main1_ok))
    n2 = int(np.count_nonzero(~main2_ok))
    conditions = [
        Condition("min D over boundary grid", float(D.min()), threshold1, n1 == 0),
        Condition("max (|B|^2 - |A|^2) - D", float(excess.max()), "<= 0 at every sampled point", n2 == 0),
    ]
    notes = [f"grid-consistent evidence from {len(theta)} sampled boundary points; not a proof"]
    if n1:
        j = int(np.argmin(D))
        notes.append(f"positivity fails at {n1} points; worst D = {D[j]:.6g} at theta = {theta[j]:.6g}, s = {s_signed[j]:.6g}")
    if n2:
        j = int(np.argmax(excess))
        notes.append(
            f"inequality fails at {n2} points; worst excess {excess[j]:.6g} at theta = {theta[j]:.6g}, s = {s_signed[j]:.6g}"
        )
    if not isinstance(cls, StronglyStarlike):
        mu = mu_of(cls)
        coef = -2 * p.real * mu.imag * abs(mu) ** 2
        if abs(p.real) > STRICT_TOL and abs(mu.imag) > STRICT_TOL and abs(p.imag) <= REAL_TOL * (1 + abs(p)):
            notes.append(
                f"structural obstruction: |B|^2 - |A|^2 grows like {coef:.6g} * s^3 against a degree-2 "
                "right-hand side, so the inequality must fail for large |s|; this route needs lam = 0 or p = 0"
            )
    if abs(p.imag) > REAL_TOL * (1 + abs(p)):
        notes.append("Im p != 0 makes D change sign linearly in s; positivity must fail for large |s|")
    return _finish(KIND_GENERAL, conditions, params, cls, notes)


def certify_convexity(cls: ShapeClass, params: HypergeomParams) -> Certificate:
    """Convexity-type counterpart: g(z) = (c/(ab)) (2F1(a,b;c;z) - 1) has
    1 + z g''/g' subordinate to the class generator exactly when
    z 2F1(a+1,b+1;c+1;z) lies in the starlike-type class, so the check
    delegates to the matching checker at shifted parameters."""
    if abs(params.a * params.b) <= STRICT_TOL:
        raise InvalidParams("ab must be nonzero")
    shifted = params.shifted(1)
    if isinstance(cls, StarlikeOrder):
        inner = certify_starlike_order(shifted, cls.alpha)
    elif isinstance(cls, StronglyStarlike):
        inner = certify_strong_starlike(shifted, cls.alpha)
    else:
        target = shifted.a + shifted.b + 1
        if abs(shifted.c - target) > REAL_TOL * (1 + abs(target)):
            raise InvalidParams("spirallike delegate requires c = a + b + 2")
        inner = certify_spirallike(shifted.a, shifted.b, cls.lam, cls.alpha)
    notes = list(inner.notes)
    notes.append(
        f"delegated from original (a, b, c) = ({params.a}, {params.b}, {params.c}); a passing "
        "certificate places the shifted function in the starlike-type class and hence the original "
        "g in the convexity-type class"
    )
    return Certificate(KIND_CONVEXITY, inner.passed, inner.conditions, inner.params, cls, notes)
