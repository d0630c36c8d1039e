"""One-dimensional effect index and the measures tied to it.

The effect index is the risk difference ``p11/p1* - p01/p0*``.  For a 2x2
table it coincides with several classical quantities (covariance over the
variance of A, determinant and trace of the row-normalized table, the AUC of
B used as a score for A), all of which are exposed here so they can be
checked against one another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateInterface, NotCanonical, ZeroColumn
from .tables import ZERO_TOL, FrequencyTable, as_frequency_table, margins, row_normalize


def effect_index(table) -> float:
    """Risk difference ``p11/p1* - p01/p0*``.

    >>> round(effect_index([[.05, .45], [0, .50]]), 12)
    0.1
    """
    r = row_normalize(table)
    return r.r11 - r.r01


def negative_effect_index(table) -> float:
    """Converse risk difference ``p00/p0* - p10/p1*``.

    Algebraically identical to :func:`effect_index`; computed by its own
    formula so the identity can be tested.
    """
    r = row_normalize(table)
    return r.r00 - r.r10


def characteristic_eigenvalues(trace: float, det: float) -> tuple[float, float]:
    """Roots of ``x**2 - trace*x + det``, larger first."""
    disc = trace * trace - 4.0 * det
    root = math.sqrt(max(disc, 0.0))
    hi = (trace + root) / 2.0
    # Vieta avoids cancellation in the smaller root.
    lo = det / hi if hi != 0.0 else (trace - root) / 2.0
    return hi, lo


@dataclass(frozen=True)
class EffectMeasures:
    epsilon_hat: float
    covariance: float
    variance_a: float
    variance_b: float
    correlation: float
    auc: float
    regression_slope_b_on_a: float
    trace_r: float
    det_r: float
    eigenvalues_r: tuple[float, float]


def measures(table, require_columns: bool = True) -> EffectMeasures:
    """Compute the effect index and its companion measures.

    Parameters
    ----------
    table : FrequencyTable or 2x2 array-like
    require_columns : bool
        When true (the default) a zero column raises :class:`ZeroColumn`
        because the correlation is undefined.  When false the correlation
        is reported as NaN instead.
    """
    t = as_frequency_table(table)
    r = row_normalize(t)
    (p0, p1), (q0, q1) = margins(t)
    cov = t.determinant
    var_a = p0 * p1
    var_b = q0 * q1
    if var_b <= ZERO_TOL * ZERO_TOL:
        if require_columns:
            raise ZeroColumn("a column of the table sums to zero; correlation undefined")
        corr = float("nan")
    else:
        corr = cov / math.sqrt(var_a * var_b)
    eps = r.r11 - r.r01
    return EffectMeasures(
        epsilon_hat=eps,
        covariance=cov,
        variance_a=var_a,
        variance_b=var_b,
        correlation=corr,
        auc=0.5 + eps / 2.0,
        regression_slope_b_on_a=cov / var_a,
        trace_r=r.trace,
        det_r=r.determinant,
        eigenvalues_r=characteristic_eigenvalues(r.trace, r.determinant),
    )


@dataclass(frozen=True)
class SymmetricDecomposition:
    """``P = (1 - eps) C + eps diag(p0*, p1*)`` with ``eps`` the effect index."""

    epsilon_hat: float
    confusion: FrequencyTable

    def reconstruct(self, row_sums: tuple[float, float]):
        e = self.epsilon_hat
        m = (1.0 - e) * self.confusion.matrix
        m[0, 0] += e * row_sums[0]
        m[1, 1] += e * row_sums[1]
        return m


def symmetric_confusion(table) -> SymmetricDecomposition:
    """Subtract the symmetric interface and return the leftover confusion.

    Uses the manifestly nonnegative form of the confusion matrix,
    ``C = outer((p0*, p1*), (r10, r01)) / (r01 + r10)``, where
    ``r01 + r10 = 1 - eps``.

    Raises
    ------
    DegenerateInterface
        When the effect index is 1 and the confusion weight vanishes.
    NotCanonical
        When the determinant is negative.
    """
    t = as_frequency_table(table)
    r = row_normalize(t)
    if r.determinant < -ZERO_TOL:
        raise NotCanonical("symmetric confusion needs a table with nonnegative determinant")
    weight = r.r01 + r.r10
    if weight <= ZERO_TOL:
        raise DegenerateInterface("effect index is 1; confusion matrix undefined")
    (p0, p1), _ = margins(t)
    s0, s1 = r.r10 / weight, r.r01 / weight
    c = FrequencyTable(p0 * s0, p0 * s1, p1 * s0, p1 * s1)
    return SymmetricDecomposition(epsilon_hat=r.r11 - r.r01, confusion=c)
