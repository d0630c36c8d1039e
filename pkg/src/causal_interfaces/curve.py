"""The set of admissible interface coefficients for a table.

For a row-normalized table ``R`` the coefficient pair ``(eps0, eps1)``
reconstructs ``R`` with an independent (rank one) confusion matrix exactly
when

    (r00 - eps0) * (r11 - eps1) == r01 * r10,

the lower branch of a hyperbola inside the unit square.  Each point on it is
indexed by a confusion distribution ``(sigma0, sigma1)`` via
``eps0 = 1 - r01/sigma1`` and ``eps1 = 1 - r10/sigma0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DegenerateGeometry,
    DiagonalTable,
    NotCanonical,
    OffCurve,
    OutOfRange,
    SigmaOutOfRange,
)
from .tables import (
    SUM_TOL,
    ZERO_TOL,
    FrequencyTable,
    RowStochasticTable,
    as_frequency_table,
    as_row_stochastic,
    margins,
    row_normalize,
)

ON_CURVE_TOL = 1e-9


class GeometryKind(str, Enum):
    REGULAR_ARC = "RegularArc"
    L_SHAPED = "LShaped"
    SINGLE_POINT = "SinglePoint"


def _clip01(v: float) -> float:
    # Absorb float noise at the unit-square boundary; callers range-check first.
    return min(1.0, max(0.0, v))


@dataclass(frozen=True)
class InterfacePoint:
    eps0: float
    eps1: float

    def __post_init__(self):
        for name in ("eps0", "eps1"):
            v = float(getattr(self, name))
            if not (-ZERO_TOL <= v <= 1.0 + ZERO_TOL):
                raise OutOfRange(f"{name}={v!r} outside [0, 1]")
            object.__setattr__(self, name, _clip01(v))

    @property
    def explanatory_sum(self) -> float:
        return self.eps0 + self.eps1

    def as_tuple(self) -> tuple[float, float]:
        return (self.eps0, self.eps1)


def _as_point(point) -> InterfacePoint:
    if isinstance(point, InterfacePoint):
        return point
    e0, e1 = point
    return InterfacePoint(e0, e1)


@dataclass(frozen=True)
class ConfusionDistribution:
    """Column distribution ``(sigma0, sigma1)`` of the confusion matrix."""

    sigma0: float
    sigma1: float

    def __post_init__(self):
        s0, s1 = float(self.sigma0), float(self.sigma1)
        if not (0.0 <= s0 <= 1.0 and 0.0 <= s1 <= 1.0):
            raise OutOfRange(f"sigma=({s0!r}, {s1!r}) is not a distribution")
        if abs(s0 + s1 - 1.0) > 1e-12:
            raise OutOfRange(f"sigma=({s0!r}, {s1!r}) does not sum to 1")
        object.__setattr__(self, "sigma0", s0)
        object.__setattr__(self, "sigma1", s1)

    @classmethod
    def from_sigma1(cls, sigma1: float) -> "ConfusionDistribution":
        return cls(1.0 - sigma1, sigma1)

    def as_tuple(self) -> tuple[float, float]:
        return (self.sigma0, self.sigma1)


def _as_sigma(sigma) -> ConfusionDistribution:
    if isinstance(sigma, ConfusionDistribution):
        return sigma
    if isinstance(sigma, (int, float)):
        return ConfusionDistribution.from_sigma1(float(sigma))
    s0, s1 = sigma
    return ConfusionDistribution(s0, s1)


@dataclass(frozen=True)
class CurveGeometry:
    """Shape of the admissible set, with its axis intercepts.

    For ``SinglePoint`` the location is ``(x_intercept, y_intercept)``:
    ``(0, 0)`` when the determinant vanishes, ``(1, 1)`` for a diagonal
    table.
    """

    kind: GeometryKind
    x_intercept: float
    y_intercept: float

    @property
    def is_diagonal(self) -> bool:
        return self.kind is GeometryKind.SINGLE_POINT and self.x_intercept == 1.0


def geometry(r) -> CurveGeometry:
    """Classify the admissible set of ``R`` and compute its intercepts.

    ``x0 = det(R)/r11`` and ``y0 = det(R)/r00``.
    """
    r = as_row_stochastic(r)
    det = r.determinant
    if det < -ZERO_TOL:
        raise NotCanonical(f"det(R)={det:.3g} < 0; swap the outcome columns first")
    if det <= ZERO_TOL:
        return CurveGeometry(GeometryKind.SINGLE_POINT, 0.0, 0.0)
    zero01, zero10 = r.r01 <= ZERO_TOL, r.r10 <= ZERO_TOL
    if zero01 and zero10:
        return CurveGeometry(GeometryKind.SINGLE_POINT, 1.0, 1.0)
    x0 = _clip01(det / r.r11)
    y0 = _clip01(det / r.r00)
    kind = GeometryKind.L_SHAPED if (zero01 or zero10) else GeometryKind.REGULAR_ARC
    return CurveGeometry(kind, x0, y0)


def _require_arc(r: RowStochasticTable) -> CurveGeometry:
    g = geometry(r)
    if g.kind is not GeometryKind.REGULAR_ARC:
        raise DegenerateGeometry(f"{g.kind.value} geometry has no functional arc")
    return g


def eps1_of_eps0(r, eps0: float) -> float:
    """Lower-branch coefficient ``eps1 = r11 - r10*r01/(r00 - eps0)``."""
    r = as_row_stochastic(r)
    g = _require_arc(r)
    if not (-ZERO_TOL <= eps0 <= g.x_intercept + ZERO_TOL):
        raise OutOfRange(f"eps0={eps0!r} outside [0, {g.x_intercept!r}]")
    eps0 = min(max(eps0, 0.0), g.x_intercept)
    e1 = r.r11 - r.off_diagonal_product / (r.r00 - eps0)
    return min(max(e1, 0.0), g.y_intercept)


def residual(r, point) -> float:
    """Determinant-zero residual ``(r00-eps0)(r11-eps1) - r01*r10``."""
    r = as_row_stochastic(r)
    e0, e1 = point.as_tuple() if isinstance(point, InterfacePoint) else point
    return (r.r00 - e0) * (r.r11 - e1) - r.off_diagonal_product


def on_curve(r, point) -> bool:
    """True when ``point`` is an admissible coefficient pair for ``R``.

    Besides the determinant-zero residual (tolerance 1e-9) and the unit
    square, the point must lie on the lower branch (``eps0 <= r00`` and
    ``eps1 <= r11``).  The upper branch always passes through (1, 1), which
    is admissible only for a diagonal table.
    """
    r = as_row_stochastic(r)
    e0, e1 = point.as_tuple() if isinstance(point, InterfacePoint) else point
    if not all(math.isfinite(v) for v in (e0, e1)):
        return False
    tol = ON_CURVE_TOL
    if not (-tol <= e0 <= 1 + tol and -tol <= e1 <= 1 + tol):
        return False
    if e0 > r.r00 + tol or e1 > r.r11 + tol:
        return False
    return abs(residual(r, (e0, e1))) <= tol


def sigma_bounds(r) -> tuple[tuple[float, float], tuple[float, float]]:
    """``([r10, r00], [r01, r11])``: admissible ranges of sigma0 and sigma1."""
    r = as_row_stochastic(r)
    return (r.r10, r.r00), (r.r01, r.r11)


def _one_minus_ratio(num: float, den: float) -> float:
    # 1 - num/den, reading 0/0 as num == den (coefficient 0).
    if den <= 0.0:
        if num <= ZERO_TOL:
            return 0.0
        return -math.inf
    return 1.0 - num / den


def raw_point_from_sigma(r, sigma) -> tuple[float, float]:
    """Unchecked ``(1 - r01/sigma1, 1 - r10/sigma0)``; may leave [0, 1]."""
    r = as_row_stochastic(r)
    s = _as_sigma(sigma)
    return _one_minus_ratio(r.r01, s.sigma1), _one_minus_ratio(r.r10, s.sigma0)


def point_from_sigma(r, sigma) -> InterfacePoint:
    """Coefficients selected by a confusion distribution.

    Raises :class:`SigmaOutOfRange` unless ``sigma1`` lies in
    ``[r01, r11]`` (equivalently ``sigma0`` in ``[r10, r00]``).
    """
    r = as_row_stochastic(r)
    s = _as_sigma(sigma)
    (lo0, hi0), (lo1, hi1) = sigma_bounds(r)
    if not (lo1 - ZERO_TOL <= s.sigma1 <= hi1 + ZERO_TOL and lo0 - ZERO_TOL <= s.sigma0 <= hi0 + ZERO_TOL):
        raise SigmaOutOfRange(
            f"sigma1={s.sigma1!r} outside [{lo1!r}, {hi1!r}]"
        )
    e0, e1 = raw_point_from_sigma(r, s)
    return InterfacePoint(_clip01(e0), _clip01(e1))


def sigma_from_point(r, point) -> ConfusionDistribution:
    """Inverse map ``sigma0 = r10/(1-eps1)``, ``sigma1 = r01/(1-eps0)``.

    Raises :class:`DiagonalTable` at (1, 1) and :class:`OffCurve` when the
    two recovered components do not sum to 1 within 1e-9.
    """
    r = as_row_stochastic(r)
    p = _as_point(point)
    free0, free1 = 1.0 - p.eps0, 1.0 - p.eps1
    if free0 <= ZERO_TOL and free1 <= ZERO_TOL:
        raise DiagonalTable("confusion distribution undefined at (1, 1)")
    if free0 <= ZERO_TOL:
        s0 = r.r10 / free1
        s1 = 1.0 - s0
    elif free1 <= ZERO_TOL:
        s1 = r.r01 / free0
        s0 = 1.0 - s1
    else:
        s0, s1 = r.r10 / free1, r.r01 / free0
    total = s0 + s1
    if abs(total - 1.0) > SUM_TOL or s0 < -ZERO_TOL or s1 < -ZERO_TOL:
        raise OffCurve(
            f"point ({p.eps0!r}, {p.eps1!r}) is not on the interface curve "
            f"(sigma sums to {total!r})"
        )
    return _normalized(max(s0, 0.0) / total, max(s1, 0.0) / total)


def _normalized(s0: float, s1: float) -> ConfusionDistribution:
    # Keep the smaller component as computed and derive the larger from it so
    # the pair sums to 1 to within one rounding.
    if s0 <= s1:
        return ConfusionDistribution(s0, 1.0 - s0)
    return ConfusionDistribution(1.0 - s1, s1)


@dataclass(frozen=True)
class InterfaceDecomposition:
    """``P = diag(1-eps) C + diag(eps) diag(p0*, p1*)`` with ``C`` rank one.

    ``sigma`` and ``confusion_full`` are ``None`` at (1, 1), where the
    confusion weight is zero.
    """

    point: InterfacePoint
    sigma: ConfusionDistribution | None
    confusion_full: FrequencyTable | None
    row_sums: tuple[float, float]

    def reconstruct(self) -> np.ndarray:
        e = np.array(self.point.as_tuple())
        w = np.array(self.row_sums)
        out = np.diag(e * w)
        if self.confusion_full is not None:
            out = out + (1.0 - e)[:, None] * self.confusion_full.matrix
        return out


def decompose(p, point) -> InterfaceDecomposition:
    """Split a canonical table into interface and independent confusion."""
    t = as_frequency_table(p)
    r = row_normalize(t)
    g = geometry(r)
    pt = _as_point(point)
    if not on_curve(r, pt):
        raise OffCurve(f"point {pt.as_tuple()} is not admissible for this table")
    (w0, w1), _ = margins(t)
    try:
        sigma = sigma_from_point(r, pt)
    except DiagonalTable:
        if not g.is_diagonal:
            raise
        return InterfaceDecomposition(pt, None, None, (w0, w1))
    c = FrequencyTable(w0 * sigma.sigma0, w0 * sigma.sigma1, w1 * sigma.sigma0, w1 * sigma.sigma1)
    return InterfaceDecomposition(pt, sigma, c, (w0, w1))


def sample_curve(r, n: int) -> list[InterfacePoint]:
    """``n`` admissible points, ordered by increasing ``eps0``.

    A regular arc is sampled at evenly spaced ``eps0`` in ``[0, x0]``; an
    L-shaped set is walked by arc length from ``(0, r11)`` through the
    corner ``(r00, r11)`` down to ``(r00, 0)``; a single point is repeated.
    """
    if n < 2:
        raise ValueError("need at least two sample points")
    r = as_row_stochastic(r)
    g = geometry(r)
    if g.kind is GeometryKind.SINGLE_POINT:
        return [InterfacePoint(g.x_intercept, g.y_intercept)] * n
    if g.kind is GeometryKind.L_SHAPED:
        h, v = r.r00, r.r11
        out = []
        for t in np.linspace(0.0, h + v, n):
            if t <= h:
                out.append(InterfacePoint(t, v))
            else:
                out.append(InterfacePoint(h, max((h + v) - t, 0.0)))
        return out
    xs = np.linspace(0.0, g.x_intercept, n)
    ys = r.r11 - r.off_diagonal_product / (r.r00 - xs)
    ys[0], ys[-1] = g.y_intercept, 0.0
    ys = np.clip(ys, 0.0, g.y_intercept)
    return [InterfacePoint(float(x), float(y)) for x, y in zip(xs, ys)]
