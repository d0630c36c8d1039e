import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from causal_interfaces import (
    DegenerateInterface,
    FrequencyTable,
    NotCanonical,
    ZeroColumn,
    ZeroRow,
    effect_index,
    margins,
    measures,
    negative_effect_index,
    row_normalize,
    symmetric_confusion,
)
from conftest import DIAGONAL, SYM_ARC, P1, P2, UNIFORM, random_canonical_tables, reweight
from oracles import auc_by_pairs, confusion_by_subtraction, det2

# .0236 / .2496
P1_EPS = 0.0236 / 0.2496


def test_effect_index_p1():
    assert effect_index(P1) == pytest.approx(P1_EPS, abs=1e-15)
    assert round(effect_index(P1), 6) == 0.094551


def test_effect_index_p2():
    assert effect_index(P2) == pytest.approx(0.10, abs=1e-15)


def test_effect_index_uniform():
    assert effect_index(UNIFORM) == 0.0


def test_effect_index_zero_row():
    with pytest.raises(ZeroRow):
        effect_index([[0.5, 0.5], [0.0, 0.0]])


@pytest.mark.parametrize("table, expected", [(P1, P1_EPS), (DIAGONAL, 1.0), (UNIFORM, 0.0)])
def test_negative_effect_index(table, expected):
    assert negative_effect_index(table) == pytest.approx(expected, abs=1e-15)


def test_measures_p1():
    m = measures(P1)
    assert m.covariance == pytest.approx(0.0236, abs=1e-15)
    assert m.variance_a == pytest.approx(0.2496, abs=1e-15)
    assert m.variance_b == pytest.approx(0.2451, abs=1e-15)
    assert m.correlation == pytest.approx(0.0236 / math.sqrt(0.2496 * 0.2451), abs=1e-15)
    assert round(m.correlation, 6) == 0.095415
    assert m.auc == pytest.approx(0.5 + P1_EPS / 2, abs=1e-15)
    assert round(m.auc, 6) == 0.547276
    assert m.regression_slope_b_on_a == pytest.approx(P1_EPS, abs=1e-15)


def test_measures_perfect_interface():
    m = measures(DIAGONAL)
    assert (m.epsilon_hat, m.auc, m.correlation) == (1.0, 1.0, 1.0)


def test_measures_symmetric_arc_eigenvalues():
    m = measures(SYM_ARC)
    assert m.epsilon_hat == pytest.approx(0.6, abs=1e-15)
    assert m.trace_r == pytest.approx(1.6, abs=1e-15)
    np.testing.assert_allclose(m.eigenvalues_r, (1.0, 0.6), atol=1e-12)
    np.testing.assert_allclose(sorted(np.linalg.eigvals(row_normalize(SYM_ARC).matrix)), (0.6, 1.0), atol=1e-12)


def test_measures_zero_column():
    with pytest.raises(ZeroColumn):
        measures([[0.5, 0.0], [0.5, 0.0]])
    assert math.isnan(measures([[0.5, 0.0], [0.5, 0.0]], require_columns=False).correlation)


def test_symmetric_confusion_p1():
    dec = symmetric_confusion(P1)
    expected = confusion_by_subtraction(P1)
    np.testing.assert_allclose(dec.confusion.matrix, expected, atol=1e-15)
    np.testing.assert_allclose(
        dec.confusion.matrix, [[0.203894, 0.276106], [0.220885, 0.299115]], atol=5e-7
    )
    assert abs(det2(dec.confusion.as_lists())) < 1e-15
    rows, _ = margins(P1)
    np.testing.assert_allclose(dec.reconstruct(rows), P1, atol=1e-15)


def test_symmetric_confusion_uniform_is_identity():
    assert symmetric_confusion(UNIFORM).confusion == FrequencyTable.from_matrix(UNIFORM)


def test_symmetric_confusion_degenerate():
    with pytest.raises(DegenerateInterface):
        symmetric_confusion(DIAGONAL)


def test_symmetric_confusion_needs_canonical():
    with pytest.raises(NotCanonical):
        symmetric_confusion([[0.25, 0.23], [0.32, 0.20]])


def test_effect_index_equals_negative_index_random():
    for t in random_canonical_tables(500, seed=11):
        assert abs(effect_index(t) - negative_effect_index(t)) <= 1e-12


def test_effect_index_trace_and_det_of_r():
    for t in random_canonical_tables(500, seed=12):
        r = row_normalize(t)
        e = effect_index(r.as_frequency_table())
        assert abs(e - (r.trace - 1)) <= 1e-12
        assert abs(e - r.determinant) <= 1e-12


def test_auc_matches_rank_oracle():
    for t in random_canonical_tables(1000, seed=13):
        assert abs(auc_by_pairs(t.as_lists()) - measures(t, require_columns=False).auc) <= 1e-12


def test_confusion_is_outer_product_of_its_margins():
    for t in random_canonical_tables(500, seed=14):
        c = symmetric_confusion(t).confusion
        rows, cols = margins(c)
        np.testing.assert_allclose(c.matrix, np.outer(rows, cols), atol=1e-12)


@given(st.floats(min_value=0.01, max_value=0.99))
def test_row_scaling_leaves_effect_index(w):
    t = FrequencyTable.from_matrix(P1)
    assert abs(effect_index(reweight(t, w)) - effect_index(t)) <= 1e-12


def test_row_scaling_random():
    rng = np.random.default_rng(15)
    for t in random_canonical_tables(500, seed=15):
        w = rng.uniform(0.01, 0.99)
        assert abs(effect_index(reweight(t, w)) - effect_index(t)) <= 1e-12
