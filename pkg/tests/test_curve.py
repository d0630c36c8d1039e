import math

import numpy as np
import pytest

from causal_interfaces import (
    ConfusionDistribution,
    DegenerateGeometry,
    DiagonalTable,
    GeometryKind,
    InterfacePoint,
    NotCanonical,
    OffCurve,
    OutOfRange,
    RowStochasticTable,
    SigmaOutOfRange,
    decompose,
    eps1_of_eps0,
    geometry,
    margins,
    on_curve,
    point_from_sigma,
    row_normalize,
    sample_curve,
    sigma_from_point,
)
from causal_interfaces.curve import residual
from conftest import DIAGONAL, P1, P2, UNIFORM, random_canonical_tables, reweight

R_SYM = RowStochasticTable(0.8, 0.2, 0.2, 0.8)
R_SKEW = RowStochasticTable(0.8, 0.2, 0.5, 0.5)
R_P1 = row_normalize(P1)
P1_EPS = 0.0236 / 0.2496


def test_geometry_symmetric_arc():
    g = geometry(R_SYM)
    assert g.kind is GeometryKind.REGULAR_ARC
    assert g.x_intercept == pytest.approx(0.75, abs=1e-15)
    assert g.y_intercept == pytest.approx(0.75, abs=1e-15)


def test_geometry_p2_l_shaped():
    assert geometry(row_normalize(P2)).kind is GeometryKind.L_SHAPED


def test_geometry_uniform_single_point():
    g = geometry(RowStochasticTable(0.5, 0.5, 0.5, 0.5))
    assert (g.kind, g.x_intercept, g.y_intercept) == (GeometryKind.SINGLE_POINT, 0.0, 0.0)


def test_geometry_diagonal_single_point_at_one():
    g = geometry(RowStochasticTable(1, 0, 0, 1))
    assert (g.kind, g.x_intercept, g.y_intercept) == (GeometryKind.SINGLE_POINT, 1.0, 1.0)


def test_geometry_not_canonical():
    with pytest.raises(NotCanonical):
        geometry(RowStochasticTable(0.2, 0.8, 0.8, 0.2))


def test_determinant_numerator_simplification():
    for t in random_canonical_tables(1000, seed=21):
        r = row_normalize(t)
        assert abs(r.determinant - (r.r00 - r.r10)) <= 1e-12


def test_intercepts_p1():
    g = geometry(R_P1)
    assert g.x_intercept == pytest.approx(P1_EPS / (0.32 / 0.52), abs=1e-15)
    assert g.y_intercept == pytest.approx(P1_EPS / (0.23 / 0.48), abs=1e-15)
    assert round(g.x_intercept, 6) == 0.153646
    assert round(g.y_intercept, 6) == 0.197324


@pytest.mark.parametrize(
    "r, eps0, expected",
    [(R_SKEW, 0.3, 0.3), (R_SYM, 0.0, 0.75), (R_SYM, 0.75, 0.0)],
)
def test_eps1_of_eps0(r, eps0, expected):
    e1 = eps1_of_eps0(r, eps0)
    assert e1 == pytest.approx(expected, abs=1e-12)
    assert abs(residual(r, (eps0, e1))) <= 1e-12


def test_eps1_of_eps0_errors():
    with pytest.raises(OutOfRange):
        eps1_of_eps0(R_SYM, 0.8)
    with pytest.raises(DegenerateGeometry):
        eps1_of_eps0(row_normalize(P2), 0.0)
    with pytest.raises(DegenerateGeometry):
        eps1_of_eps0(RowStochasticTable(0.5, 0.5, 0.5, 0.5), 0.0)


def test_point_from_sigma_symmetric_arc():
    assert point_from_sigma(R_SYM, (0.5, 0.5)).as_tuple() == pytest.approx((0.6, 0.6), abs=1e-15)


def test_point_from_sigma_classification_case():
    pt = point_from_sigma(R_P1, (0.43, 0.57))
    # Cov / (p0* p*1) and Cov / (p1* p*0)
    assert pt.as_tuple() == pytest.approx((0.0236 / (0.48 * 0.57), 0.0236 / (0.52 * 0.43)), abs=1e-14)
    assert (round(pt.eps0, 6), round(pt.eps1, 6)) == (0.086257, 0.105546)


def test_point_from_sigma_lower_limit_hits_axis():
    pt = point_from_sigma(R_P1, ConfusionDistribution(1 - R_P1.r01, R_P1.r01))
    assert pt.eps0 == 0.0


def test_point_from_sigma_out_of_range():
    with pytest.raises(SigmaOutOfRange):
        point_from_sigma(R_P1, 0.52)


def test_sigma_from_point_symmetric_arc():
    assert sigma_from_point(R_SYM, (0.6, 0.6)).as_tuple() == pytest.approx((0.5, 0.5), abs=1e-15)


def test_sigma_from_point_symmetric_p1():
    s = sigma_from_point(R_P1, (P1_EPS, P1_EPS))
    w = R_P1.r01 + R_P1.r10
    assert s.as_tuple() == pytest.approx((R_P1.r10 / w, R_P1.r01 / w), abs=1e-14)
    assert (round(s.sigma0, 6), round(s.sigma1, 6)) == (0.424779, 0.575221)


def test_sigma_from_point_diagonal():
    with pytest.raises(DiagonalTable):
        sigma_from_point(RowStochasticTable(1, 0, 0, 1), (1, 1))


def test_sigma_from_point_off_curve():
    with pytest.raises(OffCurve):
        sigma_from_point(R_SYM, (0.6, 0.3))


def test_decompose_p1_symmetric():
    dec = decompose(P1, (P1_EPS, P1_EPS))
    c = dec.confusion_full.matrix
    rows, _ = margins(P1)
    np.testing.assert_allclose(c[0] / rows[0], c[1] / rows[1], atol=1e-15)
    np.testing.assert_allclose(c[0] / rows[0], (0.424779, 0.575221), atol=5e-7)
    assert np.abs(dec.reconstruct() - np.array(P1)).max() < 1e-12
    assert abs(np.linalg.det(c)) < 1e-12


def test_decompose_uniform_zero_interface():
    dec = decompose(UNIFORM, (0, 0))
    np.testing.assert_allclose(dec.confusion_full.matrix, UNIFORM, atol=1e-15)


def test_decompose_diagonal():
    dec = decompose(DIAGONAL, (1, 1))
    assert dec.sigma is None and dec.confusion_full is None
    np.testing.assert_array_equal(dec.reconstruct(), DIAGONAL)


def test_decompose_rejects_off_curve_point():
    with pytest.raises(OffCurve):
        decompose(P1, (0.5, 0.5))
    with pytest.raises(OffCurve):
        decompose(P1, (1, 1))


def test_sample_curve_symmetric_arc():
    pts = sample_curve(R_SYM, 3)
    # middle point: 0.8 - 0.04 / (0.8 - 0.375)
    expected = [(0, 0.75), (0.375, 0.8 - 0.04 / 0.425), (0.75, 0)]
    np.testing.assert_allclose([p.as_tuple() for p in pts], expected, atol=1e-15)
    assert round(pts[1].eps1, 6) == 0.705882
    for p in pts:
        assert abs(residual(R_SYM, p)) <= 1e-12


def test_sample_curve_single_point():
    assert sample_curve(RowStochasticTable(0.5, 0.5, 0.5, 0.5), 5) == [InterfacePoint(0, 0)] * 5


def test_sample_curve_p1_intercepts():
    pts = sample_curve(R_P1, 2)
    g = geometry(R_P1)
    assert [p.as_tuple() for p in pts] == [(0.0, g.y_intercept), (g.x_intercept, 0.0)]


def test_sample_curve_l_shape():
    r = row_normalize([[0.4, 0.0], [0.2, 0.4]])
    pts = sample_curve(r, 11)
    assert pts[0].as_tuple() == (0.0, pytest.approx(2 / 3))
    assert pts[-1].as_tuple() == (1.0, 0.0)
    assert all(on_curve(r, p) for p in pts)
    e0 = [p.eps0 for p in pts]
    assert e0 == sorted(e0)
    steps = [math.dist(a.as_tuple(), b.as_tuple()) for a, b in zip(pts, pts[1:])]
    # Even arc-length spacing except across the corner.
    assert max(steps) == pytest.approx((1 + 2 / 3) / 10)


def test_sample_curve_needs_two_points():
    with pytest.raises(ValueError):
        sample_curve(R_SYM, 1)


def test_on_curve_examples():
    assert on_curve(R_SYM, (0.6, 0.6))
    assert not on_curve(R_SYM, (0.6, 0.5))
    assert on_curve(RowStochasticTable(1, 0, 0, 1), (1, 1))
    # (1, 1) lies on the upper branch only.
    assert not on_curve(R_SYM, (1, 1))


def test_arc_residual_and_monotone_random():
    for t in random_canonical_tables(1000, seed=22, min_offdiag=1e-6):
        r = row_normalize(t)
        g = geometry(r)
        assert g.kind is GeometryKind.REGULAR_ARC
        pts = sample_curve(r, 100)
        e1 = [p.eps1 for p in pts]
        assert all(a > b for a, b in zip(e1, e1[1:]))
        assert max(abs(residual(r, p)) for p in pts) <= 1e-12


def test_intercepts_nonnegative_random():
    for t in random_canonical_tables(1000, seed=23):
        g = geometry(row_normalize(t))
        assert g.x_intercept >= 0 and g.y_intercept >= 0
        assert (g.x_intercept == 0) == (g.y_intercept == 0)


def test_point_sigma_inverse_and_range_random():
    rng = np.random.default_rng(24)
    for t in random_canonical_tables(1000, seed=24, min_offdiag=1e-6):
        r = row_normalize(t)
        s1 = rng.uniform(r.r01, r.r11)
        pt = point_from_sigma(r, s1)
        s = sigma_from_point(r, pt)
        assert abs(s.sigma1 - s1) <= 1e-12
        assert r.r10 - 1e-12 <= s.sigma0 <= r.r00 + 1e-12
        assert r.r01 - 1e-12 <= s.sigma1 <= r.r11 + 1e-12
        back = point_from_sigma(r, s)
        assert abs(back.eps0 - pt.eps0) <= 1e-12 and abs(back.eps1 - pt.eps1) <= 1e-12


def test_decompose_reconstruction_and_row_scaling_random():
    rng = np.random.default_rng(25)
    for t in random_canonical_tables(500, seed=25, min_offdiag=1e-6):
        r = row_normalize(t)
        for p in sample_curve(r, 7)[1:-1]:
            dec = decompose(t, p)
            assert np.abs(dec.reconstruct() - t.matrix).max() <= 1e-12
            assert abs(np.linalg.det(dec.confusion_full.matrix)) <= 1e-12
            other = decompose(reweight(t, rng.uniform(0.05, 0.95)), p)
            np.testing.assert_allclose(other.sigma.as_tuple(), dec.sigma.as_tuple(), atol=1e-12)
