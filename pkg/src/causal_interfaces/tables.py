"""2x2 interaction tables: counts, frequencies and row-normalized forms.

Row index is the value of the manipulated variable A, column index the value
of the outcome B.  All table types are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import InvalidTable, ZeroRow, ZeroTotal

SUM_TOL = 1e-9
ZERO_TOL = 1e-12
_RESCALE_TOL = 4 * 2.220446049250313e-16

MatrixLike = Union[Sequence[Sequence[float]], np.ndarray]


def _flatten(m) -> tuple:
    arr = np.asarray(m, dtype=object)
    if arr.shape != (2, 2):
        raise InvalidTable(f"expected a 2x2 matrix, got shape {arr.shape}")
    return tuple(arr.ravel().tolist())


@dataclass(frozen=True)
class CountTable:
    """Raw observation counts ``n_ij``."""

    n00: int
    n01: int
    n10: int
    n11: int

    def __post_init__(self):
        for name in ("n00", "n01", "n10", "n11"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                if isinstance(v, float) and v.is_integer():
                    object.__setattr__(self, name, int(v))
                    v = int(v)
                else:
                    raise InvalidTable(f"count {name}={v!r} is not an integer")
            if v < 0:
                raise InvalidTable(f"count {name}={v} is negative")
            object.__setattr__(self, name, int(v))

    @classmethod
    def from_matrix(cls, m: MatrixLike) -> "CountTable":
        return cls(*_flatten(m))

    @property
    def total(self) -> int:
        return self.n00 + self.n01 + self.n10 + self.n11

    def as_matrix(self) -> list[list[int]]:
        return [[self.n00, self.n01], [self.n10, self.n11]]

    def swap_columns(self) -> "CountTable":
        return CountTable(self.n01, self.n00, self.n11, self.n10)


@dataclass(frozen=True)
class ValidationReport:
    """Result of :func:`validate`.  Severity is left to the caller."""

    entries: tuple[float, float, float, float]
    total: float
    sum_deviation: float
    negative_entries: tuple[tuple[int, int], ...]
    entries_above_one: tuple[tuple[int, int], ...]
    non_finite: bool
    zero_rows: tuple[int, ...]
    zero_columns: tuple[int, ...]

    @property
    def ok(self) -> bool:
        """True when the entries form a frequency matrix (zero rows allowed)."""
        return (
            not self.non_finite
            and not self.negative_entries
            and not self.entries_above_one
            and self.sum_deviation <= SUM_TOL
        )

    @property
    def usable(self) -> bool:
        """True when the table is valid and both rows are populated."""
        return self.ok and not self.zero_rows

    def problems(self) -> list[str]:
        out = []
        if self.non_finite:
            out.append("non-finite entry")
        for i, j in self.negative_entries:
            out.append(f"negative entry p{i}{j}")
        for i, j in self.entries_above_one:
            out.append(f"entry p{i}{j} exceeds 1")
        if self.sum_deviation > SUM_TOL:
            out.append(f"entries sum to {self.total:.12g} (deviation {self.sum_deviation:.3g})")
        for i in self.zero_rows:
            out.append(f"row {i} sums to zero")
        return out


def validate(table) -> ValidationReport:
    """Check a candidate frequency matrix without raising.

    Accepts a :class:`FrequencyTable` or any 2x2 array-like.
    """
    if isinstance(table, FrequencyTable):
        vals = table.entries
    else:
        vals = tuple(float(v) for v in _flatten(table))
    finite = all(math.isfinite(v) for v in vals)
    total = math.fsum(vals) if finite else float("nan")
    idx = ((0, 0), (0, 1), (1, 0), (1, 1))
    neg = tuple(ij for ij, v in zip(idx, vals) if v < 0)
    above = tuple(ij for ij, v in zip(idx, vals) if v > 1 + SUM_TOL)
    rows = (vals[0] + vals[1], vals[2] + vals[3])
    cols = (vals[0] + vals[2], vals[1] + vals[3])
    return ValidationReport(
        entries=vals,
        total=total,
        sum_deviation=abs(total - 1.0) if finite else float("inf"),
        negative_entries=neg,
        entries_above_one=above,
        non_finite=not finite,
        zero_rows=tuple(i for i, s in enumerate(rows) if abs(s) <= ZERO_TOL),
        zero_columns=tuple(j for j, s in enumerate(cols) if abs(s) <= ZERO_TOL),
    )


@dataclass(frozen=True)
class FrequencyTable:
    """A 2x2 joint frequency matrix summing to one.

    Entries within :data:`SUM_TOL` of a unit sum are rescaled by their sum on
    construction; anything further off raises :class:`InvalidTable`.  When the
    table was built from counts, the counts are kept so that margins and row
    normalization can be taken exactly from integers.
    """

    p00: float
    p01: float
    p10: float
    p11: float
    counts: CountTable | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for name in ("p00", "p01", "p10", "p11"):
            object.__setattr__(self, name, float(getattr(self, name)))
        report = validate((self.entries[:2], self.entries[2:]))
        if not report.ok:
            raise InvalidTable("invalid frequency table: " + "; ".join(report.problems()))
        # Rescale only beyond rounding noise, so column swaps keep entries bit-exact.
        if self.counts is None and abs(report.total - 1.0) > _RESCALE_TOL:
            s = report.total
            for name in ("p00", "p01", "p10", "p11"):
                object.__setattr__(self, name, getattr(self, name) / s)

    @classmethod
    def from_matrix(cls, m: MatrixLike) -> "FrequencyTable":
        return cls(*(float(v) for v in _flatten(m)))

    @property
    def entries(self) -> tuple[float, float, float, float]:
        return (self.p00, self.p01, self.p10, self.p11)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.p00, self.p01], [self.p10, self.p11]])

    @property
    def determinant(self) -> float:
        return self.p00 * self.p11 - self.p01 * self.p10

    def as_lists(self) -> list[list[float]]:
        return [[self.p00, self.p01], [self.p10, self.p11]]

    def swap_columns(self) -> "FrequencyTable":
        counts = self.counts.swap_columns() if self.counts is not None else None
        return FrequencyTable(self.p01, self.p00, self.p11, self.p10, counts=counts)


def as_frequency_table(table) -> FrequencyTable:
    """Coerce array-likes to :class:`FrequencyTable`; pass tables through."""
    if isinstance(table, FrequencyTable):
        return table
    if isinstance(table, CountTable):
        return from_counts(table)
    return FrequencyTable.from_matrix(table)


def from_counts(counts: CountTable | MatrixLike) -> FrequencyTable:
    """Convert observation counts to frequencies ``n_ij / total``."""
    if not isinstance(counts, CountTable):
        counts = CountTable.from_matrix(counts)
    total = counts.total
    if total == 0:
        raise ZeroTotal("all counts are zero")
    return FrequencyTable(
        counts.n00 / total,
        counts.n01 / total,
        counts.n10 / total,
        counts.n11 / total,
        counts=counts,
    )


def margins(table) -> tuple[tuple[float, float], tuple[float, float]]:
    """Return ``((p0*, p1*), (p*0, p*1))``."""
    t = as_frequency_table(table)
    if t.counts is not None:
        c, n = t.counts, t.counts.total
        return ((c.n00 + c.n01) / n, (c.n10 + c.n11) / n), ((c.n00 + c.n10) / n, (c.n01 + c.n11) / n)
    return (t.p00 + t.p01, t.p10 + t.p11), (t.p00 + t.p10, t.p01 + t.p11)


@dataclass(frozen=True)
class CanonicalizationRecord:
    columns_swapped: bool
    original_determinant: float


def _require_rows(t: FrequencyTable) -> None:
    rows, _ = margins(t)
    zero = [i for i, s in enumerate(rows) if s <= ZERO_TOL]
    if zero:
        raise ZeroRow(f"row {zero[0]} of the table sums to zero")


def canonicalize(table) -> tuple[FrequencyTable, CanonicalizationRecord]:
    """Swap the outcome labels when the determinant is negative.

    Ties (determinant exactly zero) are left alone.
    """
    t = as_frequency_table(table)
    _require_rows(t)
    det = t.determinant
    if det < 0:
        return t.swap_columns(), CanonicalizationRecord(True, det)
    return t, CanonicalizationRecord(False, det)


@dataclass(frozen=True)
class RowStochasticTable:
    """Row-normalized interaction matrix ``r_ij = p_ij / p_i*``."""

    r00: float
    r01: float
    r10: float
    r11: float

    def __post_init__(self):
        vals = [float(v) for v in (self.r00, self.r01, self.r10, self.r11)]
        for name, v in zip(("r00", "r01", "r10", "r11"), vals):
            if not math.isfinite(v) or v < 0 or v > 1 + SUM_TOL:
                raise InvalidTable(f"{name}={v!r} is not a probability")
            object.__setattr__(self, name, v)
        for i, s in enumerate((vals[0] + vals[1], vals[2] + vals[3])):
            if abs(s - 1.0) > SUM_TOL:
                raise InvalidTable(f"row {i} of R sums to {s!r}")

    @classmethod
    def from_matrix(cls, m: MatrixLike) -> "RowStochasticTable":
        return cls(*(float(v) for v in _flatten(m)))

    @property
    def entries(self) -> tuple[float, float, float, float]:
        return (self.r00, self.r01, self.r10, self.r11)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.r00, self.r01], [self.r10, self.r11]])

    @property
    def determinant(self) -> float:
        return self.r00 * self.r11 - self.r01 * self.r10

    @property
    def trace(self) -> float:
        return self.r00 + self.r11

    @property
    def off_diagonal_product(self) -> float:
        return self.r01 * self.r10

    def as_lists(self) -> list[list[float]]:
        return [[self.r00, self.r01], [self.r10, self.r11]]

    def as_frequency_table(self, row_weight: float = 0.5) -> FrequencyTable:
        """Joint table with ``P(A=1) = row_weight``."""
        w0, w1 = 1.0 - row_weight, row_weight
        return FrequencyTable(w0 * self.r00, w0 * self.r01, w1 * self.r10, w1 * self.r11)


def as_row_stochastic(r) -> RowStochasticTable:
    if isinstance(r, RowStochasticTable):
        return r
    if isinstance(r, (FrequencyTable, CountTable)):
        return row_normalize(r)
    return RowStochasticTable.from_matrix(r)


def row_normalize(table) -> RowStochasticTable:
    """Divide each row by its sum.  Raises :class:`ZeroRow` for an empty row."""
    t = as_frequency_table(table)
    _require_rows(t)
    if t.counts is not None:
        c = t.counts
        a, b = c.n00 + c.n01, c.n10 + c.n11
        return RowStochasticTable(c.n00 / a, c.n01 / a, c.n10 / b, c.n11 / b)
    a, b = t.p00 + t.p01, t.p10 + t.p11
    return RowStochasticTable(t.p00 / a, t.p01 / a, t.p10 / b, t.p11 / b)

