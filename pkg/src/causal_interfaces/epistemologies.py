"""Rules that pick a single interface point off the admissible curve.

Five named rules are provided, plus an arbitrary confusion distribution:

========== ============================================================
Symmetric  both coefficients equal the effect index
MaxCause   the point maximizing ``eps0 + eps1`` (tangent of slope -1)
Classify   confusion distributed like the observed outcome margin
Untreated  confusion taken from the untreated row (``eps0 = 0``)
Natural    ``eps0 = r00 - r01``, ``eps1 = r11 - r10`` (``sigma = 1/2``)
Custom     any ``sigma1`` inside ``[r01, r11]``
========== ============================================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

from .curve import (
    ConfusionDistribution,
    CurveGeometry,
    GeometryKind,
    InterfacePoint,
    decompose,
    eps1_of_eps0,
    geometry,
    on_curve,
    point_from_sigma,
    raw_point_from_sigma,
    sigma_bounds,
)
from .errors import NotCanonical, OutOfRange
from .tables import ZERO_TOL, FrequencyTable, as_frequency_table, margins, row_normalize


class Epistemology(str, Enum):
    SYMMETRIC = "Symmetric"
    MAXIMUM_CAUSE = "MaximumCause"
    CLASSIFICATION = "Classification"
    UNTREATED = "Untreated"
    NATURAL = "Natural"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    Epistemology.SYMMETRIC: "S",
    Epistemology.MAXIMUM_CAUSE: "M",
    Epistemology.CLASSIFICATION: "C",
    Epistemology.UNTREATED: "U",
    Epistemology.NATURAL: "N",
}

NAMED = tuple(Epistemology)


@dataclass(frozen=True)
class Custom:
    """User-chosen confusion chance ``sigma1`` of the outcome B=1."""

    sigma1: float

    def __post_init__(self):
        s = float(self.sigma1)
        if not (0.0 <= s <= 1.0):
            raise OutOfRange(f"sigma1={s!r} outside [0, 1]")
        object.__setattr__(self, "sigma1", s)

    @property
    def value(self) -> str:
        return "Custom"

    @property
    def label(self) -> str:
        return "X"


EpistemologyKind = Union[Epistemology, Custom]


class Status(str, Enum):
    FEASIBLE = "Feasible"
    CLAMPED = "Clamped"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class InterfaceSolution:
    """Outcome of applying one epistemology to a table.

    ``point`` is ``None`` only for infeasible solutions; ``raw_point`` always
    holds the unclamped closed-form coordinates.  ``sigma`` and
    ``confusion_full`` are ``None`` where undefined (at (1, 1), or when
    infeasible).
    """

    kind: EpistemologyKind
    point: InterfacePoint | None
    sigma: ConfusionDistribution | None
    confusion_full: FrequencyTable | None
    status: Status
    raw_point: tuple[float, float]
    notes: tuple[str, ...] = field(default=())

    @property
    def explanatory_sum(self) -> float:
        e0, e1 = self.point.as_tuple() if self.point is not None else self.raw_point
        return e0 + e1

    @property
    def feasible(self) -> bool:
        return self.status is not Status.INFEASIBLE


def _clip_tiny(v: float) -> float:
    if -ZERO_TOL < v < 0.0:
        return 0.0
    if 1.0 < v < 1.0 + ZERO_TOL:
        return 1.0
    return v


def _finish(kind, t, r, raw, sigma, status=Status.FEASIBLE, point=None, notes=()):
    raw = (_clip_tiny(raw[0]), _clip_tiny(raw[1]))
    if point is None:
        point = InterfacePoint(*raw)
    if not on_curve(r, point):
        raise AssertionError(f"{kind} produced an off-curve point {point.as_tuple()}")
    dec = decompose(t, point)
    if sigma is None:
        sigma = dec.sigma
    return InterfaceSolution(kind, point, sigma, dec.confusion_full, status, raw, tuple(notes))


def _infeasible(kind, raw, notes=()):
    return InterfaceSolution(kind, None, None, None, Status.INFEASIBLE, tuple(raw), tuple(notes))


def _symmetric(t, r, g):
    e = r.r11 - r.r01
    w = r.r01 + r.r10
    return _finish(Epistemology.SYMMETRIC, t, r, (e, e), ConfusionDistribution(r.r10 / w, 1.0 - r.r10 / w))


def _maximum_cause(t, r, g: CurveGeometry):
    kind = Epistemology.MAXIMUM_CAUSE
    s = math.sqrt(r.off_diagonal_product)
    raw = (r.r00 - s, r.r11 - s)
    if -ZERO_TOL <= raw[0] <= g.x_intercept + ZERO_TOL and raw[1] >= -ZERO_TOL:
        q01, q10 = math.sqrt(r.r01), math.sqrt(r.r10)
        s0 = q10 / (q01 + q10)
        return _finish(kind, t, r, raw, ConfusionDistribution(s0, 1.0 - s0))
    # Tangent falls outside the arc; eps0 + f(eps0) is concave, so the
    # constrained maximum sits at the nearest end of the admissible range.
    if g.kind is GeometryKind.SINGLE_POINT:
        pt = InterfacePoint(g.x_intercept, g.y_intercept)
    else:
        e0 = min(max(raw[0], 0.0), g.x_intercept)
        pt = InterfacePoint(e0, eps1_of_eps0(r, e0))
    return _finish(kind, t, r, raw, None, Status.CLAMPED, pt)


def _classification(t, r, g):
    kind = Epistemology.CLASSIFICATION
    (p0, p1), (q0, q1) = margins(t)
    cov = t.determinant
    if q0 <= ZERO_TOL or q1 <= ZERO_TOL:
        # A constant outcome: zero covariance, the curve collapses to (0, 0).
        sigma = ConfusionDistribution(1.0 if q1 <= ZERO_TOL else 0.0, 1.0 if q0 <= ZERO_TOL else 0.0)
        return _finish(kind, t, r, (0.0, 0.0), sigma, notes=("constant outcome column",))
    raw = (cov / (p0 * q1), cov / (p1 * q0))
    return _finish(kind, t, r, raw, ConfusionDistribution(q0, 1.0 - q0))


def _untreated(t, r, g):
    notes = ()
    if r.r01 <= ZERO_TOL:
        notes = ("r01 = 0: eps0 = 1 - r01/sigma1 read with sigma1 = r01, giving 0",)
    sigma = None if g.is_diagonal else ConfusionDistribution(r.r00, r.r01)
    return _finish(Epistemology.UNTREATED, t, r, (0.0, g.y_intercept), sigma, notes=notes)


def _natural(t, r, g):
    raw = (r.r00 - r.r01, r.r11 - r.r10)
    if raw[0] < -ZERO_TOL or raw[1] < -ZERO_TOL:
        return _infeasible(Epistemology.NATURAL, raw)
    return _finish(Epistemology.NATURAL, t, r, raw, ConfusionDistribution(0.5, 0.5))


def _custom(kind: Custom, t, r, g):
    sigma = ConfusionDistribution.from_sigma1(kind.sigma1)
    (lo0, hi0), (lo1, hi1) = sigma_bounds(r)
    if not (lo1 - ZERO_TOL <= sigma.sigma1 <= hi1 + ZERO_TOL):
        return _infeasible(kind, raw_point_from_sigma(r, sigma), (f"sigma1 outside [{lo1:.6g}, {hi1:.6g}]",))
    pt = point_from_sigma(r, sigma)
    return _finish(kind, t, r, pt.as_tuple(), sigma)


_SOLVERS = {
    Epistemology.SYMMETRIC: _symmetric,
    Epistemology.MAXIMUM_CAUSE: _maximum_cause,
    Epistemology.CLASSIFICATION: _classification,
    Epistemology.UNTREATED: _untreated,
    Epistemology.NATURAL: _natural,
}


def parse_kind(kind) -> EpistemologyKind:
    """Accept an enum member, its name/value/letter, or a :class:`Custom`."""
    if isinstance(kind, (Epistemology, Custom)):
        return kind
    key = str(kind).strip().lower().replace("_", "").replace("-", "")
    for e in Epistemology:
        if key in (e.value.lower(), e.name.lower().replace("_", ""), e.label.lower()):
            return e
    if key in ("maxcause", "max", "maximum"):
        return Epistemology.MAXIMUM_CAUSE
    raise ValueError(f"unknown epistemology {kind!r}")


def solve(kind, p) -> InterfaceSolution:
    """Apply one epistemology to a canonical table."""
    kind = parse_kind(kind)
    t = as_frequency_table(p)
    r = row_normalize(t)
    if r.determinant < -ZERO_TOL:
        raise NotCanonical("epistemologies need a table with nonnegative determinant")
    g = geometry(r)
    if g.is_diagonal:
        pt = InterfacePoint(1.0, 1.0)
        return _finish(kind, t, r, (1.0, 1.0), None, point=pt, notes=("diagonal table: sigma undefined",))
    if isinstance(kind, Custom):
        return _custom(kind, t, r, g)
    return _SOLVERS[kind](t, r, g)


def compare_all(p) -> list[InterfaceSolution]:
    """All named epistemologies in the order S, M, C, U, N."""
    t = as_frequency_table(p)
    return [solve(k, t) for k in NAMED]
