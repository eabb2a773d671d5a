"""Disk-grid verifier: closed-form slack expectations, statuses, cross-checks."""

import json
import math

import pytest

from hypstar import (
    Certificate,
    DiskGridSettings,
    HypergeomParams,
    SpirallikeOrder,
    StarlikeOrder,
    StronglyStarlike,
    certify_starlike_order,
    certify_strong_starlike,
    cross_check,
    verify_on_disk,
)
from hypstar.verifier import CONSISTENT, DEGENERATE, INFO, SOUND, UNSOUND, VIOLATED

FAST = DiskGridSettings(n_radii=10, r_max=0.99, n_angles=120)


class TestGridSettings:
    def test_validation(self):
        with pytest.raises(ValueError):
            DiskGridSettings(r_max=1.0)
        with pytest.raises(ValueError):
            DiskGridSettings(n_angles=4)
        with pytest.raises(ValueError):
            DiskGridSettings(radial_spacing="linear")

    def test_radii_shapes(self):
        uniform = DiskGridSettings(n_radii=4, r_max=0.8, radial_spacing="uniform").radii()
        assert list(uniform) == pytest.approx([0.2, 0.4, 0.6, 0.8])
        geo = DiskGridSettings(n_radii=4, r_max=0.99).radii()
        assert geo[-1] == pytest.approx(0.99)
        assert all(x < y for x, y in zip(geo, geo[1:]))
        # spacing tightens toward the boundary
        gaps = [y - x for x, y in zip(geo, geo[1:])]
        assert all(g1 > g2 for g1, g2 in zip(gaps, gaps[1:]))


class TestVerifyOnDisk:
    def test_half_plane_function_slack(self):
        # q(z) = 1/(1-z): min Re q on |z| <= r is 1/(1+r)
        report = verify_on_disk(StarlikeOrder(0.0), HypergeomParams(2, 1, 2), FAST)
        assert report.status == CONSISTENT
        assert report.min_slack == pytest.approx(1 / (1 + 0.99), abs=1e-6)
        assert report.argmin_z.real == pytest.approx(-0.99, abs=1e-12)

    def test_detects_genuine_violation(self):
        report = verify_on_disk(StarlikeOrder(0.9), HypergeomParams(2, 1, 2), FAST)
        assert report.status == VIOLATED
        assert report.n_violations > 0
        assert report.min_slack == pytest.approx(1 / 1.99 - 0.9, abs=1e-6)

    def test_strongly_starlike_instance(self):
        report = verify_on_disk(StronglyStarlike(0.5), HypergeomParams(1, 1, 3), FAST)
        assert report.status == CONSISTENT
        max_arg = math.pi / 4 - report.min_slack
        assert 0 < max_arg <= math.pi / 4

    def test_degenerate_zero_of_f(self):
        # F(-1, 2; 1; z) = 1 - 2z vanishes at z = 0.5; put a grid point there
        grid = DiskGridSettings(n_radii=3, r_max=0.75, n_angles=8, radial_spacing="uniform")
        report = verify_on_disk(StarlikeOrder(0.0), HypergeomParams(-1, 2, 1), grid)
        assert report.status == DEGENERATE
        assert report.n_f_zeros >= 1

    def test_origin_is_analytic_point(self):
        # a = 0 makes F constant 1, so q is identically 1 and every slack ties;
        # the deterministic reduction reports the origin
        report = verify_on_disk(StarlikeOrder(0.25), HypergeomParams(0, 1, 2), FAST)
        assert report.status == CONSISTENT
        assert report.argmin_z == 0
        assert report.min_slack == pytest.approx(0.75)

    def test_spirallike_class(self):
        report = verify_on_disk(SpirallikeOrder(0.3, 0.0), HypergeomParams(1, 1, 3), FAST)
        assert report.status == CONSISTENT

    def test_json_mirror(self):
        report = verify_on_disk(StarlikeOrder(0.0), HypergeomParams(2, 1, 2), FAST)
        data = json.loads(json.dumps(report.to_json()))
        assert data["status"] == "Consistent"
        assert data["grid"]["n_radii"] == 10
        assert data["params"]["a"] == [2.0, 0.0]
        assert len(data["argmin_z"]) == 2


class TestMonotoneSlack:
    def test_slack_shrinks_toward_boundary(self, capsys):
        """Diagnostic: on certified instances the per-radius minimum slack
        should not grow with r (the real part of a nonconstant meromorphic q
        attains ring minima on the outer circle away from zeros of F).  This
        is a heuristic, so violations are printed as findings, not failures."""
        findings = []
        for params, cls in [
            (HypergeomParams(2, 1, 2), StarlikeOrder(0.0)),
            (HypergeomParams(2, 2 + 5j, 3 + 5j), StarlikeOrder(0.0)),
            (HypergeomParams(1, 1, 3), StronglyStarlike(0.5)),
        ]:
            slacks = []
            for r in (0.3, 0.5, 0.7, 0.9, 0.97):
                grid = DiskGridSettings(n_radii=1, r_max=r, n_angles=90, radial_spacing="uniform")
                slacks.append(verify_on_disk(cls, params, grid).min_slack)
            for inner, outer in zip(slacks, slacks[1:]):
                if not inner >= outer - 1e-9:
                    findings.append((params, cls, slacks))
                    break
        for f in findings:
            print(f"monotone-slack finding: {f}")
        # the diagnostic itself must have run on every instance
        assert len(findings) <= 3


class TestCrossCheck:
    def test_sound(self):
        params = HypergeomParams(2, 2 + 5j, 3 + 5j)
        cert = certify_starlike_order(params, 0.0)
        result = cross_check(StarlikeOrder(0.0), params, cert, FAST)
        assert result.verdict == SOUND

    def test_info_gap(self):
        params = HypergeomParams(1, 1, 3)
        cert = certify_strong_starlike(params, 0.05)
        assert not cert.passed
        result = cross_check(StronglyStarlike(0.05), params, cert, FAST)
        assert result.verdict == INFO

    def test_unsound_flags_fabricated_certificate(self):
        params = HypergeomParams(2, 1, 2)
        cls = StarlikeOrder(0.9)
        fake = Certificate("StarlikeOrderThm", True, [], params, cls, ["fabricated for the negative test"])
        result = cross_check(cls, params, fake, FAST)
        assert result.verdict == UNSOUND

    def test_json(self):
        params = HypergeomParams(1, 1, 3)
        cert = certify_starlike_order(params, 0.0)
        result = cross_check(StarlikeOrder(0.0), params, cert, FAST)
        data = result.to_json()
        assert data["verdict"] == SOUND
        assert data["certificate"]["passed"] is True
        assert data["report"]["status"] == "Consistent"
