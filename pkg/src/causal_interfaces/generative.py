"""Forward model of an interface, used as a round-trip oracle.

Each trial assigns the cause A, then a uniform gate decides whether the
interface fires (probability ``eps_A``, outcome ``B = A``) or the outcome is
drawn from the confusion distribution (``B = 1`` with probability
``sigma1``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curve import GeometryKind, InterfacePoint, eps1_of_eps0, geometry
from .epistemologies import Custom, InterfaceSolution, solve
from .errors import DegenerateGeometry, DegenerateInterface, OutOfRange
from .tables import CountTable, FrequencyTable, as_row_stochastic, canonicalize

GENERATOR = "PCG64"
_CHUNK = 1 << 20


@dataclass(frozen=True)
class GenerativeSpec:
    row_weight: float
    eps0: float
    eps1: float
    sigma1: float

    def __post_init__(self):
        for name in ("row_weight", "eps0", "eps1", "sigma1"):
            v = float(getattr(self, name))
            if not (0.0 <= v <= 1.0) or math.isnan(v):
                raise OutOfRange(f"{name}={v!r} outside [0, 1]")
            object.__setattr__(self, name, v)
        if not (0.0 < self.row_weight < 1.0):
            raise OutOfRange(f"row_weight={self.row_weight!r} must be strictly between 0 and 1")

    @property
    def sigma0(self) -> float:
        return 1.0 - self.sigma1


@dataclass(frozen=True)
class SimulationResult:
    counts: CountTable
    seed: int
    samples: int
    generator: str = GENERATOR


def expected_table(spec: GenerativeSpec) -> FrequencyTable:
    """Exact joint frequencies implied by ``spec``.

    Row A=0 has weight ``1 - row_weight`` split as
    ``(eps0 + (1-eps0) sigma0, (1-eps0) sigma1)``; row A=1 has weight
    ``row_weight`` split as ``((1-eps1) sigma0, eps1 + (1-eps1) sigma1)``.
    """
    w1 = spec.row_weight
    w0 = 1.0 - w1
    s0, s1 = spec.sigma0, spec.sigma1
    e0, e1 = spec.eps0, spec.eps1
    return FrequencyTable(
        w0 * (e0 + (1.0 - e0) * s0),
        w0 * ((1.0 - e0) * s1),
        w1 * ((1.0 - e1) * s0),
        w1 * (e1 + (1.0 - e1) * s1),
    )


def _check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise OutOfRange(f"seed must be an integer, got {seed!r}")
    seed = int(seed)
    if not (0 <= seed < 1 << 64):
        raise OutOfRange("seed must fit in an unsigned 64-bit integer")
    return seed


def sample_counts(spec: GenerativeSpec, samples: int, seed: int) -> SimulationResult:
    """Monte Carlo counts from a seeded PCG64 stream.

    Three uniforms per trial in fixed order: cause, gate, confusion.  The
    stream is consumed in chunks, which leaves it identical to a single
    draw of shape ``(samples, 3)``.
    """
    if isinstance(samples, bool) or int(samples) != samples or samples < 1:
        raise OutOfRange(f"samples must be a positive integer, got {samples!r}")
    samples = int(samples)
    seed = _check_seed(seed)
    rng = np.random.Generator(np.random.PCG64(seed))
    totals = np.zeros(4, dtype=np.int64)
    left = samples
    while left:
        k = min(left, _CHUNK)
        u = rng.random((k, 3))
        a = u[:, 0] < spec.row_weight
        gate = u[:, 1] < np.where(a, spec.eps1, spec.eps0)
        b = np.where(gate, a, u[:, 2] < spec.sigma1)
        totals += np.bincount(2 * a.astype(np.int64) + b.astype(np.int64), minlength=4)
        left -= k
    return SimulationResult(CountTable(*(int(v) for v in totals)), seed, samples)


def round_trip(spec: GenerativeSpec) -> InterfaceSolution:
    """Build the exact table and recover the coefficients from ``sigma1``."""
    if spec.eps0 >= 1.0 and spec.eps1 >= 1.0:
        raise DegenerateInterface("eps = (1, 1): the confusion distribution is unrecoverable")
    table, _ = canonicalize(expected_table(spec))
    return solve(Custom(spec.sigma1), table)


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, lo: float, hi: float, tol: float = 1e-10) -> float:
    """Argmax of a unimodal ``f`` on ``[lo, hi]``."""
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    best = (a + b) / 2.0
    # The maximum may sit on an end point of the interval.
    return max((lo, best, hi), key=f)


def maxcause_numeric(r, tol: float = 1e-10) -> InterfacePoint:
    """Numerically maximize ``eps0 + eps1`` along a regular arc."""
    r = as_row_stochastic(r)
    g = geometry(r)
    if g.kind is not GeometryKind.REGULAR_ARC:
        raise DegenerateGeometry(f"{g.kind.value} geometry has no functional arc")
    e0 = golden_section_max(lambda e: e + eps1_of_eps0(r, e), 0.0, g.x_intercept, tol)
    return InterfacePoint(e0, eps1_of_eps0(r, e0))
