"""Power-series evaluation of the Gauss hypergeometric function on the unit disk.

Everything here is direct summation of the defining series
2F1(a,b;c;z) = sum (a)_n (b)_n / ((c)_n n!) z^n.  No continuation transforms
are applied, so complex parameters never touch branch-cut ambiguities; the
price is slow convergence near |z| = 1, which a generous term budget covers
at desk scale.  All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidC, NoConvergence, RadiusExceeded, ZeroOfF

# tolerance for rejecting c at a nonpositive integer
NONPOS_INT_TOL = 1e-12
# |F(z)| at or below this counts as a zero of F
ZERO_TOL = 1e-12
# consecutive relatively-small terms required before truncating
_STREAK = 3
# rounding slack for the radius gate: |r e^{i theta}| can land a few ulps
# above r when the grid sits exactly on the cap
_RADIUS_SLACK = 1e-12


def _is_nonpositive_integer(w: complex, tol: float = NONPOS_INT_TOL) -> bool:
    if abs(w.imag) > tol:
        return False
    k = round(w.real)
    return k <= 0 and abs(w.real - k) <= tol


@dataclass(frozen=True)
class HypergeomParams:
    """Parameter triple (a, b, c); c must stay away from 0, -1, -2, ...

    The roles of a and b are interchangeable: every operation in this module
    returns bit-identical results under a swap.
    """

    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", complex(self.c))
        if _is_nonpositive_integer(self.c):
            raise InvalidC("c is a nonpositive integer")

    @property
    def p(self) -> complex:
        """a + b + 1 - c, recomputed on every access."""
        return self.a + self.b + 1 - self.c

    def shifted(self, k: int = 1) -> "HypergeomParams":
        """The triple (a+k, b+k, c+k) appearing in the k-th derivative."""
        return HypergeomParams(self.a + k, self.b + k, self.c + k)

    def swapped(self) -> "HypergeomParams":
        return HypergeomParams(self.b, self.a, self.c)


@dataclass(frozen=True)
class SeriesSettings:
    """Truncation control for the power series.

    tol is a relative tolerance: summation stops once three consecutive terms
    fall below tol times the running partial sum.  radius_cap keeps requests
    off the unit circle, where the series cannot converge in finite time.
    """

    tol: float = 1e-15
    max_terms: int = 200_000
    radius_cap: float = 0.995

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")
        if not 0 < self.radius_cap < 1:
            raise ValueError("radius_cap must lie in (0, 1)")


DEFAULT_SERIES = SeriesSettings()


def gauss_2f1(params: HypergeomParams, z: complex, settings: SeriesSettings = DEFAULT_SERIES) -> complex:
    """2F1(a, b; c; z) by direct summation.

    Terminating cases (a or b a nonpositive integer) are handled naturally by
    the term recurrence, which hits an exact zero and stays there.
    """
    z = complex(z)
    if abs(z) > settings.radius_cap + _RADIUS_SLACK:
        raise RadiusExceeded(f"|z| = {abs(z):.6g} exceeds radius_cap = {settings.radius_cap}")
    if z == 0:
        return 1.0 + 0.0j
    a, b, c = params.a, params.b, params.c
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    comp = 0.0 + 0.0j  # Kahan compensation: partial sums can dwarf the result
    streak = 0
    for n in range(settings.max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if term == 0 or abs(term) < settings.tol * abs(total):
            streak += 1
            if streak >= _STREAK:
                return total
        else:
            streak = 0
    raise NoConvergence(f"series did not settle within {settings.max_terms} terms at z = {z}")


def gauss_2f1_grid(
    params: HypergeomParams, z: np.ndarray, settings: SeriesSettings = DEFAULT_SERIES
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized series evaluation over an array of points.

    Returns (values, converged).  Points that fail to settle within the term
    budget are flagged False in the mask instead of raising, so grid sweeps
    can record them and move on.
    """
    z = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(z) > settings.radius_cap + _RADIUS_SLACK):
        raise RadiusExceeded(f"grid exceeds radius_cap = {settings.radius_cap}")
    a, b, c = params.a, params.b, params.c
    term = np.ones(z.shape, dtype=np.complex128)
    total = np.ones(z.shape, dtype=np.complex128)
    comp = np.zeros(z.shape, dtype=np.complex128)  # Kahan compensation
    streak = np.zeros(z.shape, dtype=np.int64)
    for n in range(settings.max_terms):
        term *= ((a + n) * (b + n) / ((c + n) * (n + 1)))
        term *= z
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        small = (np.abs(term) < settings.tol * np.abs(total)) | (term == 0)
        streak = np.where(small, streak + 1, 0)
        if n >= _STREAK and int(streak.min()) >= _STREAK:
            return total, np.ones(z.shape, dtype=bool)
    return total, streak >= _STREAK


def gauss_2f1_derivative(
    params: HypergeomParams, z: complex, settings: SeriesSettings = DEFAULT_SERIES
) -> complex:
    """d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1, b+1; c+1; z)."""
    return params.a * params.b / params.c * gauss_2f1(params.shifted(), z, settings)


def shifted_f(params: HypergeomParams, z: complex, settings: SeriesSettings = DEFAULT_SERIES) -> complex:
    """f(z) = z 2F1(a,b;c;z), the normalized function under study."""
    return complex(z) * gauss_2f1(params, z, settings)


def log_derivative_q(
    params: HypergeomParams,
    z: complex,
    settings: SeriesSettings = DEFAULT_SERIES,
    zero_tol: float = ZERO_TOL,
) -> complex:
    """q(z) = z f'(z) / f(z) = 1 + z F'(z)/F(z); exactly 1 at z = 0.

    Raises ZeroOfF when |F(z)| <= zero_tol.  A zero of F means f is not
    zero-free, so callers must treat the point as a hard failure rather
    than skip it.
    """
    z = complex(z)
    if z == 0:
        return 1.0 + 0.0j
    F = gauss_2f1(params, z, settings)
    if abs(F) <= zero_tol:
        raise ZeroOfF(f"|F(z)| = {abs(F):.3g} at z = {z}; q is undefined there")
    return 1.0 + z * gauss_2f1_derivative(params, z, settings) / F


def ode_residual(params: HypergeomParams, z: complex, settings: SeriesSettings = DEFAULT_SERIES) -> complex:
    """(1-z) z F'' + [c - (a+b+1) z] F' - a b F, which should vanish.

    The second derivative comes from applying the exact derivative formula
    twice, not from finite differences, so the residual isolates series
    truncation error only.
    """
    z = complex(z)
    if abs(z) > 0.9 * settings.radius_cap + _RADIUS_SLACK:
        raise RadiusExceeded("ode_residual requires |z| <= 0.9 * radius_cap")
    a, b, c = params.a, params.b, params.c
    F = gauss_2f1(params, z, settings)
    F1 = a * b / c * gauss_2f1(params.shifted(), z, settings)
    F2 = a * b / c * (a + 1) * (b + 1) / (c + 1) * gauss_2f1(params.shifted(2), z, settings)
    return (1 - z) * z * F2 + (c - (a + b + 1) * z) * F1 - a * b * F
