"""Disk-grid numerical verification of the defining class inequalities.

This is the independent check on the certificates: it evaluates
w = z f'(z)/f(z) by direct series summation on a polar grid and applies the
class membership predicate pointwise.  Verdicts are evidence, not proofs,
so the vocabulary is Consistent / Violated / Degenerate (a zero of F inside
the grid, which rules the function out regardless of slacks).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .certificates import Certificate, _pair
from .hypergeom import ZERO_TOL, DEFAULT_SERIES, HypergeomParams, SeriesSettings, gauss_2f1_grid
from .shapes import ShapeClass, class_to_json, membership_slack_array

CONSISTENT = "Consistent"
VIOLATED = "Violated"
DEGENERATE = "Degenerate"

# slack below this counts as a violation; the strict inequalities genuinely
# tighten toward |z| = 1, so exact-zero thresholds would flag rounding noise
VIOLATION_TOL = 1e-9


@dataclass(frozen=True)
class DiskGridSettings:
    n_radii: int = 40
    r_max: float = 0.995
    n_angles: int = 720
    radial_spacing: str = "geometric-toward-boundary"

    def __post_init__(self):
        if not 0 < self.r_max < 1:
            raise ValueError("r_max must lie in (0, 1)")
        if self.n_angles < 8:
            raise ValueError("n_angles must be at least 8")
        if self.n_radii < 1:
            raise ValueError("n_radii must be at least 1")
        if self.radial_spacing not in ("uniform", "geometric-toward-boundary"):
            raise ValueError("radial_spacing must be 'uniform' or 'geometric-toward-boundary'")

    def radii(self) -> np.ndarray:
        k = np.arange(1, self.n_radii + 1)
        if self.radial_spacing == "uniform":
            return self.r_max * k / self.n_radii
        # distances to the unit circle shrink geometrically, crowding samples
        # where violations appear first
        return 1.0 - (1.0 - self.r_max) ** (k / self.n_radii)

    def to_json(self) -> dict:
        return {
            "n_radii": self.n_radii,
            "r_max": self.r_max,
            "n_angles": self.n_angles,
            "radial_spacing": self.radial_spacing,
        }


@dataclass
class VerificationReport:
    shape_class: ShapeClass
    params: HypergeomParams
    grid: DiskGridSettings
    min_slack: float
    argmin_z: complex
    n_violations: int
    n_f_zeros: int
    status: str
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "class": class_to_json(self.shape_class),
            "params": {"a": _pair(self.params.a), "b": _pair(self.params.b), "c": _pair(self.params.c)},
            "grid": self.grid.to_json(),
            "min_slack": self.min_slack,
            "argmin_z": _pair(self.argmin_z),
            "n_violations": self.n_violations,
            "n_f_zeros": self.n_f_zeros,
            "status": self.status,
            "notes": list(self.notes),
        }


def verify_on_disk(
    cls: ShapeClass,
    params: HypergeomParams,
    grid: DiskGridSettings = DiskGridSettings(),
    settings: SeriesSettings = DEFAULT_SERIES,
    zero_tol: float = ZERO_TOL,
    violation_tol: float = VIOLATION_TOL,
) -> VerificationReport:
    """Evaluate the membership slack of q(z) = z f'(z)/f(z) over a polar grid.

    The origin is handled analytically (q(0) = 1); series trouble at single
    points is recorded in the notes rather than aborting the sweep.  The
    reduction is deterministic: the reported argmin is the first grid point
    (radius-major, then angle) attaining the minimum slack.
    """
    theta = 2 * math.pi * np.arange(grid.n_angles) / grid.n_angles
    ring = np.exp(1j * theta)
    factor = params.a * params.b / params.c
    shifted = params.shifted()

    min_slack = float(membership_slack_array(cls, np.asarray(1.0 + 0.0j)))
    argmin_z = 0.0 + 0.0j
    n_violations = 1 if min_slack < -violation_tol else 0
    n_f_zeros = 0
    notes: list[str] = []

    for r in grid.radii():
        z = r * ring
        F, ok_f = gauss_2f1_grid(params, z, settings)
        G, ok_g = gauss_2f1_grid(shifted, z, settings)
        bad = ~(ok_f & ok_g)
        if bad.any():
            notes.append(f"series failed to settle at {int(bad.sum())} points on r = {r:.6g}")
        zero = (np.abs(F) <= zero_tol) & ~bad
        if zero.any():
            n_f_zeros += int(zero.sum())
            j = int(np.argmax(zero))
            notes.append(f"F vanishes at z = {complex(z[j]):.6g} (|F| <= {zero_tol:g})")
        valid = ~bad & ~zero
        slack_row = np.full(grid.n_angles, np.inf)
        if valid.any():
            q = 1.0 + z[valid] * (factor * G[valid]) / F[valid]
            slack_row[valid] = membership_slack_array(cls, q)
        n_violations += int(np.count_nonzero(slack_row < -violation_tol))
        j = int(np.argmin(slack_row))
        v = float(slack_row[j])
        if v < min_slack:
            min_slack = v
            argmin_z = complex(z[j])

    if n_f_zeros > 0:
        status = DEGENERATE
    elif n_violations > 0:
        status = VIOLATED
    else:
        status = CONSISTENT
    return VerificationReport(cls, params, grid, min_slack, argmin_z, n_violations, n_f_zeros, status, notes)


SOUND = "SOUND"
UNSOUND = "UNSOUND"
INFO = "INFO"


@dataclass
class CrossCheckResult:
    verdict: str
    certificate: Certificate
    report: VerificationReport

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "certificate": self.certificate.to_json(),
            "report": self.report.to_json(),
        }


def cross_check(
    cls: ShapeClass,
    params: HypergeomParams,
    certificate: Certificate,
    grid: DiskGridSettings = DiskGridSettings(),
    settings: SeriesSettings = DEFAULT_SERIES,
) -> CrossCheckResult:
    """Run the verifier against a certificate for the same (class, params).

    SOUND: the certificate passed and the disk evidence agrees.  UNSOUND: the
    certificate passed but the verifier found a violation or a zero of F; this
    is always a bug.  INFO: the certificate failed; sufficient conditions are
    not necessary, so a Consistent report alongside a failed certificate just
    exhibits the gap.
    """
    report = verify_on_disk(cls, params, grid, settings)
    if certificate.passed:
        verdict = SOUND if report.status == CONSISTENT else UNSOUND
    else:
        verdict = INFO
    return CrossCheckResult(verdict, certificate, report)
