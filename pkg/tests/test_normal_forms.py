"""Numeric models: evaluation, Jacobians, detection, exact suprema, plots."""

import math
import random

import numpy as np
import pytest

from cuspcobord.errors import PreconditionError
from cuspcobord.normal_forms import (
    Cusp,
    Fold,
    GridSpec,
    LocalMap,
    PerturbedFold,
    PiecewisePoly,
    PlanarCurve,
    SwallowTail,
    check_perturbation_condition,
    detect_singular_set,
    evaluate,
    jacobian,
    perturbation_supremum,
    perturbed_fold_image,
    render_svg,
    samples_to_csv,
    smooth_bump,
    swallow_tail_singular_curve,
)


def bump(height=0.4, radius=1.0, center=0.0):
    return smooth_bump(center, radius, height)


class TestPiecewisePoly:
    def test_evaluates_per_piece_and_zero_outside(self):
        f = PiecewisePoly((0.0, 1.0, 2.0), ((0.0, 1.0), (2.0, -1.0)))
        assert f(0.5) == 0.5
        assert f(1.5) == 0.5
        assert f(-1.0) == 0.0
        assert f(3.0) == 0.0

    def test_derivative_matches_finite_differences(self):
        f = smooth_bump(0.25, 1.5, 2.0)
        g = f.derivative()
        for t in np.linspace(-1.2, 1.7, 37):
            h = 1e-6
            fd = (f(t + h) - f(t - h)) / (2 * h)
            assert abs(fd - g(t)) < 1e-7 * (1 + abs(g(t)))

    def test_max_abs_is_an_upper_bound_for_dense_sampling(self):
        f = smooth_bump(0.0, 2.0, -3.5)
        sup = f.max_abs()
        dense = max(abs(f(t)) for t in np.linspace(-2.5, 2.5, 20001))
        assert dense <= sup + 1e-12
        assert sup == pytest.approx(3.5, abs=1e-12)

    def test_knots_must_increase(self):
        with pytest.raises(ValueError):
            PiecewisePoly((0.0, 0.0), ((1.0,),))
        with pytest.raises(ValueError):
            PiecewisePoly((0.0, 1.0), ((1.0,), (2.0,)))


class TestSmoothBump:
    def test_peak_and_support(self):
        f = smooth_bump(1.0, 0.5, 3.0)
        assert f(1.0) == pytest.approx(3.0, abs=1e-12)
        assert f.support() == (0.5, 1.5)
        assert f(0.5) == pytest.approx(0.0, abs=1e-12)
        assert f(1.5) == pytest.approx(0.0, abs=1e-12)

    def test_continuity_of_value_and_slope_at_knots(self):
        f = smooth_bump(0.0, 1.0, 1.0)
        g = f.derivative()
        for knot in (-1.0, 0.0, 1.0):
            eps = 1e-9
            assert abs(f(knot - eps) - f(knot + eps)) < 1e-7
            assert abs(g(knot - eps) - g(knot + eps)) < 1e-6

    def test_steepest_slope_value(self):
        # the quintic step has maximal slope 15/8 at its midpoint
        f = smooth_bump(0.0, 2.0, 4.0)
        assert f.derivative().max_abs() == pytest.approx(
            1.875 * 4.0 / 2.0, rel=1e-12)

    def test_bad_radius_rejected(self):
        with pytest.raises(ValueError):
            smooth_bump(0.0, 0.0, 1.0)


class TestModelConstruction:
    def test_index_windows(self):
        LocalMap(3, Fold(2))
        with pytest.raises(ValueError):
            LocalMap(3, Fold(3))
        LocalMap(3, Cusp(1))
        with pytest.raises(ValueError):
            LocalMap(3, Cusp(2))
        with pytest.raises(ValueError):
            LocalMap(1, Fold(0))

    def test_degenerate_family_parameter_rejected(self):
        with pytest.raises(ValueError):
            LocalMap(3, SwallowTail(0.0))

    def test_perturbation_factors_must_have_compact_support(self):
        with pytest.raises(ValueError):
            LocalMap(2, PerturbedFold(0, lambda t: 0.0, bump()))
        with pytest.raises(PreconditionError):
            perturbation_supremum(math.sin, bump())


class TestEvaluate:
    # frozen oracle values, each a one-line hand computation
    def test_fold(self):
        m = LocalMap(3, Fold(0))
        assert evaluate(m, (0.5, 1.0, 2.0)) == (0.5, 5.0)
        m1 = LocalMap(3, Fold(1))
        assert evaluate(m1, (0.5, 1.0, 2.0)) == (0.5, 3.0)

    def test_cusp(self):
        m = LocalMap(3, Cusp(0))
        assert evaluate(m, (2.0, 1.0, 3.0)) == (2.0, 12.0)

    def test_quartic_family(self):
        m = LocalMap(3, SwallowTail(1.0))
        t, h = evaluate(m, (2.0 / 3.0, 1.0, 0.0))
        assert t == pytest.approx(2.0 / 3.0)
        assert h == pytest.approx(0.25, abs=1e-12)

    def test_perturbed_fold(self):
        m = LocalMap(2, PerturbedFold(0, bump(0.4), bump(1.0)))
        t, h = evaluate(m, (0.0, 0.0))
        assert t == 0.0
        assert h == pytest.approx(0.4, abs=1e-12)

    def test_wrong_arity_rejected(self):
        m = LocalMap(3, Fold(0))
        with pytest.raises(PreconditionError):
            evaluate(m, (0.0, 0.0))


class TestJacobian:
    def _fd(self, m, p, h=1e-7):
        p = np.asarray(p, dtype=float)
        out = np.zeros((2, len(p)))
        for j in range(len(p)):
            dp = np.zeros(len(p))
            dp[j] = h
            fp = np.asarray(evaluate(m, p + dp))
            fm = np.asarray(evaluate(m, p - dp))
            out[:, j] = (fp - fm) / (2 * h)
        return out

    def test_analytic_matches_finite_differences(self, rng):
        models = [
            LocalMap(3, Fold(1)),
            LocalMap(4, Fold(0)),
            LocalMap(3, Cusp(0)),
            LocalMap(4, Cusp(2)),
            LocalMap(3, SwallowTail(1.0)),
            LocalMap(3, SwallowTail(-0.25)),
            LocalMap(2, PerturbedFold(0, bump(0.4), bump(1.0))),
            LocalMap(3, PerturbedFold(1, bump(0.3), bump(1.0, 0.8))),
        ]
        for m in models:
            for _ in range(12):
                p = [rng.uniform(-0.9, 0.9) for _ in range(m.n)]
                J = jacobian(m, p)
                F = self._fd(m, p)
                rel = np.abs(F - J) / (1.0 + np.abs(J))
                assert float(rel.max()) < 1e-6, (m.kind, p)

    def test_wrong_arity_rejected(self):
        with pytest.raises(PreconditionError):
            jacobian(LocalMap(3, Fold(0)), (0.0, 0.0))


class TestGridSpec:
    def test_parse_round_trip(self):
        g = GridSpec.parse("-1:1:3,0:2:2")
        assert g.axes == ((-1.0, 1.0, 3), (0.0, 2.0, 2))
        assert len(list(g.points())) == 6

    def test_parse_rejects_malformed_axes(self):
        with pytest.raises(ValueError):
            GridSpec.parse("-1:1")
        with pytest.raises(ValueError):
            GridSpec(((0.0, -1.0, 5),))
        with pytest.raises(ValueError):
            GridSpec(((0.0, 1.0, 0),))

    def test_uniform(self):
        g = GridSpec.uniform(-1.0, 1.0, 5, 3)
        assert len(g.axes) == 3
        assert len(list(g.points())) == 125


FOLD_GRID = GridSpec(((-1.0, 1.0, 11), (-1.0, 1.0, 7), (-1.0, 1.0, 7)))
ST_GRID = GridSpec(((-1.5, 1.5, 31), (-2.0, 2.0, 21), (-0.5, 0.5, 3)))


class TestDetection:
    def test_fold_singular_set_is_the_axis(self):
        for index in (0, 1, 2):
            m = LocalMap(3, Fold(index))
            samples = detect_singular_set(m, FOLD_GRID, tol=1e-9)
            assert samples
            for s in samples:
                assert abs(s.point[1]) < 1e-9 and abs(s.point[2]) < 1e-9
                assert s.kind == "fold"
                assert s.negative_eigenvalues == index

    def test_cusp_model_finds_the_cusp_point(self):
        m = LocalMap(3, Cusp(0))
        grid = GridSpec(((-1.5, 0.5, 21), (-1.2, 1.2, 13), (-0.5, 0.5, 3)))
        samples = detect_singular_set(m, grid, tol=1e-9)
        cusps = [s for s in samples if s.kind == "cusp-candidate"]
        assert len(cusps) == 1
        assert abs(cusps[0].point[0]) < 1e-6
        assert abs(cusps[0].point[1]) < 1e-6
        folds = [s for s in samples if s.kind == "fold"]
        assert folds
        for s in folds:
            # the fold curve of the cubic model is t = -3 x^2
            t, x = s.point[0], s.point[1]
            assert abs(t + 3 * x * x) < 1e-6

    def test_quartic_family_positive_parameter(self):
        m = LocalMap(3, SwallowTail(1.0))
        curve = swallow_tail_singular_curve(1.0)
        samples = detect_singular_set(m, ST_GRID, tol=1e-9)
        assert len(samples) > 30
        cusps = [s for s in samples if s.kind == "cusp-candidate"]
        assert len(cusps) == 2
        got = sorted(s.point[1] for s in cusps)
        assert got[0] == pytest.approx(-1.0, abs=1e-6)
        assert got[1] == pytest.approx(1.0, abs=1e-6)
        for s in samples:
            assert curve.distance_bound(s.point) < 1e-8
        for s in samples:
            if s.kind == "fold":
                assert s.negative_eigenvalues == curve.fold_negatives(
                    s.point[1])

    def test_quartic_family_negative_parameter(self):
        m = LocalMap(3, SwallowTail(-1.0))
        curve = swallow_tail_singular_curve(-1.0)
        samples = detect_singular_set(m, ST_GRID, tol=1e-9)
        assert samples
        assert not [s for s in samples if s.kind == "cusp-candidate"]
        for s in samples:
            assert curve.distance_bound(s.point) < 1e-8

    def test_detection_is_deterministic(self):
        m = LocalMap(3, SwallowTail(0.25))
        a = detect_singular_set(m, ST_GRID, tol=1e-9)
        b = detect_singular_set(m, ST_GRID, tol=1e-9)
        assert a == b

    def test_grid_arity_checked(self):
        m = LocalMap(3, Fold(0))
        with pytest.raises(PreconditionError):
            detect_singular_set(m, GridSpec(((-1.0, 1.0, 5),)), tol=1e-9)
        with pytest.raises(PreconditionError):
            detect_singular_set(m, FOLD_GRID, tol=0.0)


class TestAnalyticCurve:
    def test_cusp_parameters(self):
        assert swallow_tail_singular_curve(4.0).cusp_parameters() == (-2.0, 2.0)
        assert swallow_tail_singular_curve(-4.0).cusp_parameters() == ()

    def test_point_and_image(self):
        c = swallow_tail_singular_curve(1.0, n=4)
        assert c.point(0.0) == (0.0, 0.0, 0.0, 0.0)
        p = c.point(1.0)
        assert p[0] == pytest.approx(2.0 / 3.0)
        assert c.image_point(1.0) == (pytest.approx(2.0 / 3.0),
                                      pytest.approx(0.25))

    def test_fold_negatives_and_absolute_index(self):
        c = swallow_tail_singular_curve(1.0, n=3)
        assert c.fold_negatives(0.0) == 1
        assert c.fold_negatives(2.0) == 0
        assert c.fold_absolute_index(2.0) == 2
        with pytest.raises(PreconditionError):
            c.fold_negatives(1.0)

    def test_degenerate_parameter_rejected(self):
        with pytest.raises(PreconditionError):
            swallow_tail_singular_curve(0.0)


class TestPerturbation:
    def test_supremum_is_exact_product(self):
        # max |alpha| = 0.4, max |beta'| = 1.875 for a unit bump
        assert perturbation_supremum(bump(0.4), bump(1.0)) == pytest.approx(
            0.75, rel=1e-12)

    def test_condition_threshold(self):
        assert check_perturbation_condition(bump(0.4), bump(1.0))
        assert not check_perturbation_condition(bump(0.6), bump(1.0))

    def test_optional_grid_cannot_relax_the_answer(self):
        grid = GridSpec(((-1.0, 1.0, 9), (0.0, 1.0, 9)))
        assert check_perturbation_condition(bump(0.4), bump(1.0), grid=grid)

    def test_report_verifies_axis_and_image(self):
        report = perturbed_fold_image(0, 2, bump(0.4), bump(1.0))
        assert report.ok
        assert report.sup_product == pytest.approx(0.75, rel=1e-12)
        assert report.samples > 0
        assert report.max_axis_distance < 1e-8
        assert report.max_image_error < 1e-8

    def test_failing_condition_raises(self):
        with pytest.raises(PreconditionError):
            perturbed_fold_image(0, 2, bump(0.6), bump(1.0))

    def test_higher_dimension_report(self):
        report = perturbed_fold_image(1, 3, bump(0.3), bump(1.0))
        assert report.ok


class TestRendering:
    def test_svg_is_deterministic(self):
        curve = PlanarCurve(((0.0, 0.0), (1.0, 1.0), (2.0, 0.5)),
                            cusps=((1.0, 1.0),))
        assert render_svg([curve]) == render_svg([curve])

    def test_svg_structure(self):
        curve = PlanarCurve(((0.0, 0.0), (1.0, 1.0)), cusps=((0.5, 0.5),))
        svg = render_svg([curve])
        assert svg.startswith("<svg ")
        assert svg.count("<path") == 1
        assert svg.count("<circle") == 1
        assert svg.endswith("</svg>\n")

    def test_svg_handles_empty_input(self):
        svg = render_svg([])
        assert svg.startswith("<svg ") and svg.endswith("</svg>\n")

    def test_csv_layout(self):
        m = LocalMap(2, Fold(0))
        samples = detect_singular_set(
            m, GridSpec(((-1.0, 1.0, 5), (-1.0, 1.0, 5))), tol=1e-9)
        text = samples_to_csv(samples)
        lines = text.strip().split("\n")
        assert lines[0] == "t,z1,residual,class"
        assert len(lines) == len(samples) + 1
        assert all(line.endswith("fold(0)") for line in lines[1:])

    def test_csv_of_nothing(self):
        assert samples_to_csv([]) == "t,residual,class\n"
