"""Tests for the envelope family and its root isolation.

Closed-form derivatives are validated against central finite
differences, the envelope sandwich against the exact integer data, and
the bisection brackets against values recomputed with an independent
script; those appear here rounded to 12 places.
"""

import json
import math

import pytest

from ineqscan import analytic, sequences, verifier

INSTANCES = list(analytic.NAMED_INSTANCES.items())

# independently recomputed roots, one per instance
GOLDEN_ROOTS = {
    "x-lower": 560.498909203801,
    "x-upper": 384.187364675570,
    "y-lower": 379.631824493874,
    "y-upper": 324.379005479161,
}


class TestEvaluation:
    def test_anchor_values(self):
        assert analytic.F_eval(analytic.X_LOWER, 1.0) == pytest.approx(
            2.0 / 3.0 - 1.0 - 2.0 * math.sqrt(2.0), abs=1e-15
        )
        assert analytic.F_eval(analytic.X_UPPER, 1.0) == pytest.approx(
            2.0 / 3.0 + 1.0 - math.sqrt(2.0), abs=1e-15
        )
        # at x = 2 the sqrt(2x) factor is exactly 2
        assert analytic.F_eval(analytic.Y_LOWER, 2.0) == pytest.approx(
            4.0 / 3.0 + 2.0 - 2.0 + 1.0 - 2.0, abs=1e-15
        )

    def test_domain_errors(self):
        for _, coeffs in INSTANCES:
            for fn in (analytic.F_eval, analytic.F_prime, analytic.F_second):
                with pytest.raises(ValueError):
                    fn(coeffs, 0.0)
                with pytest.raises(ValueError):
                    fn(coeffs, -3.0)

    def test_grows_linearly_at_infinity(self):
        for _, coeffs in INSTANCES:
            assert analytic.F_eval(coeffs, 1e9) > 6e8  # (2/3) x dominates


class TestDerivatives:
    @staticmethod
    def _log_spaced(lo, hi, count):
        ratio = (hi / lo) ** (1.0 / (count - 1))
        return [lo * ratio**i for i in range(count)]

    def test_first_derivative_matches_finite_differences(self):
        for _, coeffs in INSTANCES:
            for t in self._log_spaced(5.0, 1e5, 20):
                h = 1e-4 * t
                fd = (
                    analytic.F_eval(coeffs, t + h) - analytic.F_eval(coeffs, t - h)
                ) / (2.0 * h)
                exact = analytic.F_prime(coeffs, t)
                assert abs(exact - fd) <= 1e-5 * max(1.0, abs(exact))

    def test_second_derivative_matches_finite_differences(self):
        for _, coeffs in INSTANCES:
            for t in self._log_spaced(5.0, 1e5, 20):
                h = 1e-4 * t
                fd = (
                    analytic.F_prime(coeffs, t + h) - analytic.F_prime(coeffs, t - h)
                ) / (2.0 * h)
                exact = analytic.F_second(coeffs, t)
                assert abs(exact - fd) <= 1e-4 * max(1.0, abs(exact))

    def test_slope_settles_at_two_thirds(self):
        for _, coeffs in INSTANCES:
            assert abs(analytic.F_prime(coeffs, 1e9) - 2.0 / 3.0) < 1e-3

    def test_convex_beyond_threshold(self):
        for _, coeffs in INSTANCES:
            threshold = max(2.0, math.exp(2.0 * coeffs.c) / 2**coeffs.b)
            t = threshold + 1e-9
            while t < 1e6:
                assert analytic.F_second(coeffs, t) > 0, (coeffs, t)
                t *= 3.7

    def test_concave_region_exists_when_constant_is_large(self):
        # y-upper has the largest c and a genuinely concave stretch
        assert analytic.F_second(analytic.Y_UPPER, 5.0) < 0
        assert analytic.F_second(analytic.Y_UPPER, 30.0) > 0


class TestRootIsolation:
    def test_bisection_shrinks_to_tolerance(self):
        for name, coeffs in INSTANCES:
            lo, hi = analytic.ROOT_BRACKETS[name]
            out = analytic.isolate_root(coeffs, float(lo), float(hi), 1e-9)
            assert out.width <= 1e-9
            assert out.lo < GOLDEN_ROOTS[name] < out.hi
            assert {out.lo_sign, out.hi_sign} == {-1, 1}

    def test_brackets_nest_as_tolerance_shrinks(self):
        for name, coeffs in INSTANCES:
            lo, hi = analytic.ROOT_BRACKETS[name]
            coarse = analytic.isolate_root(coeffs, float(lo), float(hi), 1e-3)
            fine = analytic.isolate_root(coeffs, float(lo), float(hi), 1e-9)
            assert coarse.lo <= fine.lo < fine.hi <= coarse.hi

    def test_endpoint_signs_honest(self):
        for name, coeffs in INSTANCES:
            lo, hi = analytic.ROOT_BRACKETS[name]
            out = analytic.isolate_root(coeffs, float(lo), float(hi))
            flo = analytic.F_eval(coeffs, out.lo)
            fhi = analytic.F_eval(coeffs, out.hi)
            assert (flo < 0) == (out.lo_sign == -1)
            assert (fhi < 0) == (out.hi_sign == -1)

    def test_rejects_bad_brackets(self):
        with pytest.raises(ValueError):
            analytic.isolate_root(analytic.X_LOWER, 10.0, 20.0)  # same sign
        with pytest.raises(ValueError):
            analytic.isolate_root(analytic.X_LOWER, 561.0, 560.0)
        with pytest.raises(ValueError):
            analytic.isolate_root(analytic.X_LOWER, 560.0, 561.0, tol=0.0)

    def test_check_roots_reports(self):
        reports = analytic.check_roots()
        assert [rep.claim_id for rep in reports] == [
            "roots/x-lower",
            "roots/x-upper",
            "roots/y-lower",
            "roots/y-upper",
        ]
        by_name = {rep.claim_id.split("/")[1]: rep for rep in reports}
        for name, rep in by_name.items():
            assert rep.counterexamples == []
            assert rep.data["bracket"] == list(analytic.ROOT_BRACKETS[name])
            assert rep.data["width"] <= 1e-9
            assert abs(rep.data["root_lo"] - GOLDEN_ROOTS[name]) < 1e-8
        assert by_name["y-lower"].status == verifier.KNOWN_ERRATUM
        assert by_name["y-lower"].errata[0].printed == (379, 389)
        for name in ("x-lower", "x-upper", "y-upper"):
            assert by_name[name].status == verifier.CONFIRMED


class TestSurrogates:
    def test_d_real_formula(self):
        for n in (1, 2, 5, 364, 5000):
            mm = sequences.m(n)
            assert analytic.d_real(n) == pytest.approx(
                -mm - (mm - 1) * math.log2(n), abs=1e-12
            )

    def test_known_decimal_values(self):
        assert analytic.d_real(364) == pytest.approx(-238.694866, abs=1e-6)
        assert analytic.Y_real(365) == pytest.approx(-2.305569, abs=1e-6)
        assert analytic.Y_real(337) == pytest.approx(1.481485, abs=1e-6)
        assert analytic.Y_real(338) == pytest.approx(-8.021986, abs=1e-6)

    def test_sign_consistency_report(self):
        rep = analytic.check_sign_consistency(5000)
        assert rep.status == verifier.CONFIRMED
        assert rep.data["min_abs_Y_at"] == 333
        assert rep.data["min_abs_Y"] == pytest.approx(0.105081, abs=1e-6)
        assert rep.data["min_abs_Y"] > 1e-6


class TestSandwich:
    def test_bounds_confirmed_at_ten_thousand(self):
        rep = analytic.check_bounds_x(10**4)
        assert rep.status == verifier.CONFIRMED
        assert rep.data["min_lower_margin"] > 0
        rep = analytic.check_bounds_Y(10**4)
        assert rep.status == verifier.CONFIRMED
        assert rep.data["min_upper_margin"] > 0

    def test_pointwise_spot_checks(self):
        for n in (1, 2, 16, 365, 546, 9999):
            xx = sequences.x(n)
            assert analytic.F_eval(analytic.X_LOWER, n) < xx
            assert xx < analytic.F_eval(analytic.X_UPPER, n)
            yy = analytic.Y_real(n)
            assert analytic.F_eval(analytic.Y_LOWER, n) < yy
            assert yy < analytic.F_eval(analytic.Y_UPPER, n)


class TestApproximations:
    def test_report_confirmed(self):
        rep = analytic.check_approximations()
        assert rep.status == verifier.CONFIRMED
        assert rep.counterexamples == []

    def test_each_entry_within_its_tolerance(self):
        for label, kind, n, printed, tol in analytic.APPROXIMATIONS:
            value = analytic._approx_value(kind, n)
            assert abs(value - printed) <= tol, label

    def test_one_decimal_entry_really_needs_loose_tolerance(self):
        # the -2.4 print is 0.094 away from the computed value, so the
        # two-decimal tolerance would be wrong for it; this pins the
        # distinction so nobody tightens it back by accident
        value = analytic.Y_real(365)
        assert abs(value - (-2.4)) > 0.02
        assert abs(value - (-2.4)) <= 0.1

    def test_increment_identity(self):
        for n in range(371, 389):
            step_y = analytic.Y_real(n + 3) - analytic.Y_real(n)
            step_d = analytic.d_real(n + 3) - analytic.d_real(n)
            assert abs(step_y - (2.0 + step_d)) <= 1e-12
        assert analytic.d_real(374) - analytic.d_real(371) == pytest.approx(
            26.0 * math.log2(371.0 / 374.0), abs=1e-12
        )


class TestClosedFormAnchors:
    def test_upper_instance_at_small_arguments(self):
        assert analytic.F_eval(analytic.X_UPPER, 4.0) == pytest.approx(
            8.0 / 3.0 + 3.0 - 6.0 * math.sqrt(2.0), abs=1e-12
        )
        assert analytic.F_eval(analytic.X_UPPER, 4.0) < 0.0
        expected = (
            11.0
            - math.sqrt(18.0)
            + 2.0 * math.log2(9.0)
            - math.sqrt(18.0) * math.log2(9.0)
        )
        assert analytic.F_eval(analytic.Y_UPPER, 9.0) == pytest.approx(
            expected, abs=1e-12
        )
        assert analytic.F_eval(analytic.Y_UPPER, 9.0) < 0.0

    def test_signs_flip_across_each_root(self):
        assert analytic.F_eval(analytic.X_LOWER, 561.0) > 0.0
        assert analytic.F_eval(analytic.X_UPPER, 384.0) < 0.0
        assert analytic.F_eval(analytic.Y_LOWER, 380.0) > 0.0
        assert analytic.F_eval(analytic.Y_UPPER, 324.0) < 0.0

    def test_wide_brackets_land_on_the_same_roots(self):
        # starting from a bracket thousands wide must converge into the
        # unit interval each root is known to occupy
        for coeffs, lo, unit in (
            (analytic.X_LOWER, 1.0, 560.0),
            (analytic.X_UPPER, 4.0, 384.0),
            (analytic.Y_LOWER, 4.0, 379.0),
            (analytic.Y_UPPER, 9.0, 324.0),
        ):
            br = analytic.isolate_root(coeffs, lo, 1.0e4)
            assert unit < br.lo <= br.hi < unit + 1.0

    def test_convex_beyond_scan_start(self):
        for t in (5.0, 10.0, 100.0, 5000.0):
            assert analytic.F_second(analytic.X_UPPER, t) > 0.0
        for t in (10.0, 15.0, 30.0, 100.0, 5000.0):
            assert analytic.F_second(analytic.Y_UPPER, t) > 0.0

    def test_d_surrogate_shape(self):
        assert analytic.d_real(1) == pytest.approx(-1.0, abs=1e-15)
        for n in range(1, 1000):
            assert analytic.d_real(n + 1) < analytic.d_real(n)

    def test_sign_consistency_degenerate_limit_serializes(self):
        # below n = 5 there is nothing to take a minimum over; the report
        # must still be valid JSON (no float infinities)
        rep = analytic.check_sign_consistency(1)
        blob = json.loads(json.dumps(rep.to_dict()))
        assert blob["data"]["min_abs_Y"] is None
        assert rep.status == verifier.CONFIRMED
