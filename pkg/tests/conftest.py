"""Shared corpus helpers for the randomized identity tests.

Draws live inside |a|, |b|, |c| <= 5, |z| <= 0.8.  Triples whose series
summation is ill-conditioned in double precision (sum of |terms| exceeding
1e4 times |sum|) are redrawn: past that point the evaluator and any finite
difference of it lose the digits the tolerances ask for, so a comparison
would test the floating-point format, not the formulas.  The rejection rate
is about 3 percent.
"""

import cmath
import math

from hypstar import HypergeomParams

CONDITION_CAP = 1e4


def draw_params(rng, radius=5.0, min_ab=0.0):
    """Random (a, b, c) with c clear of nonpositive integers."""
    while True:
        a = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        b = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        c = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if min_ab and (abs(a) < min_ab or abs(b) < min_ab):
            continue
        if abs(c.imag) > 0.05 or c.real > 0.05 or abs(c.real - round(c.real)) > 0.05:
            return HypergeomParams(a, b, c)


def series_condition(params, z, nmax=5000):
    """Summation condition number sum |term_n| / |sum term_n| at z."""
    a, b, c = params.a, params.b, params.c
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    abs_sum = 1.0
    for n in range(nmax):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        abs_sum += abs(term)
        if n > 3 and abs(term) < 1e-17 * abs(total):
            break
    return abs_sum / max(abs(total), 1e-300)


def draw_corpus_point(rng, radius=5.0, z_max=0.8, min_ab=0.0, cap=CONDITION_CAP):
    """(params, z) draw, redrawn while the summation condition exceeds cap."""
    while True:
        params = draw_params(rng, radius, min_ab)
        z = rng.uniform(0, z_max) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        if series_condition(params, z) <= cap:
            return params, z
