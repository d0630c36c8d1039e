"""Report assembly and deterministic text, JSON and CSV rendering.

Every number printed comes from a library value rounded to ``precision``
significant digits; nothing is recomputed here.

Stable field names
------------------
Solution rows (CSV columns, JSON ``solutions`` entries):
``source, epistemology, label, status, eps0, eps1, sigma0, sigma1,
explanatory_sum, raw_eps0, raw_eps1``.  Undefined values are empty in CSV
and ``null`` in JSON.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from .curve import CurveGeometry, InterfacePoint, geometry, on_curve, sample_curve
from .epistemologies import Custom, InterfaceSolution, Status, compare_all, solve
from .measures import EffectMeasures, measures
from .tables import CanonicalizationRecord, FrequencyTable, RowStochasticTable, canonicalize, row_normalize

DEFAULT_PRECISION = 6

SOLUTION_FIELDS = (
    "source",
    "epistemology",
    "label",
    "status",
    "eps0",
    "eps1",
    "sigma0",
    "sigma1",
    "explanatory_sum",
    "raw_eps0",
    "raw_eps1",
)


def fmt(x, precision: int = DEFAULT_PRECISION) -> str:
    """Fixed significant-digit formatting; ``None`` renders empty."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = f"{x:.{precision}g}"
    return "0" if s in ("-0", "0") else s


def _num(x, precision: int):
    # JSON value: rounded float, or a string for non-finite values.
    if x is None:
        return None
    if isinstance(x, (bool, int)):
        return x
    if not math.isfinite(x):
        return fmt(x)
    return float(fmt(x, precision))


@dataclass(frozen=True)
class AnalysisReport:
    source: str
    input_kind: str
    input_values: tuple
    table: FrequencyTable
    record: CanonicalizationRecord
    measures: EffectMeasures
    r: RowStochasticTable
    geometry: CurveGeometry | None
    solutions: list[InterfaceSolution]
    precision: int = DEFAULT_PRECISION
    notes: tuple[str, ...] = field(default=())

    @property
    def infeasible(self) -> list[InterfaceSolution]:
        return [s for s in self.solutions if s.status is Status.INFEASIBLE]


def build_report(
    table: FrequencyTable,
    source: str = "<table>",
    input_kind: str = "frequencies",
    input_values=None,
    canonical: bool = True,
    sigma1: float | None = None,
    precision: int = DEFAULT_PRECISION,
) -> AnalysisReport:
    """Run measures, geometry and every epistemology on one table."""
    if canonical:
        t, rec = canonicalize(table)
    else:
        t = table
        rec = CanonicalizationRecord(False, table.determinant)
    r = row_normalize(t)
    m = measures(t, require_columns=False)
    notes = []
    if r.determinant < 0 and not canonical:
        notes.append("negative determinant: curve and epistemologies skipped (run without --no-canonicalize)")
        g, sols = None, []
    else:
        g = geometry(r)
        sols = compare_all(t)
        if sigma1 is not None:
            sols.append(solve(Custom(sigma1), t))
    for s in sols:
        if s.point is not None and not on_curve(r, s.point):
            raise AssertionError(f"{s.kind} solution is off the curve")
    if input_values is None:
        input_values = tuple(tuple(row) for row in table.as_lists())
    return AnalysisReport(
        source, input_kind, input_values, t, rec, m, r, g, sols, precision, tuple(notes)
    )


def solution_row(source: str, s: InterfaceSolution, precision: int) -> dict:
    pt = s.point.as_tuple() if s.point is not None else (None, None)
    sg = s.sigma.as_tuple() if s.sigma is not None else (None, None)
    name = s.kind.value if not isinstance(s.kind, Custom) else f"Custom(sigma1={fmt(s.kind.sigma1, precision)})"
    return {
        "source": source,
        "epistemology": name,
        "label": s.kind.label,
        "status": s.status.value,
        "eps0": pt[0],
        "eps1": pt[1],
        "sigma0": sg[0],
        "sigma1": sg[1],
        "explanatory_sum": s.explanatory_sum,
        "raw_eps0": s.raw_point[0],
        "raw_eps1": s.raw_point[1],
    }


def _matrix_json(m, precision):
    return [[_num(v, precision) for v in row] for row in m]


def report_to_dict(rep: AnalysisReport) -> dict:
    p = rep.precision
    m = rep.measures
    rows = [solution_row(rep.source, s, p) for s in rep.solutions]
    return {
        "source": rep.source,
        "input": {"kind": rep.input_kind, "values": _matrix_json(rep.input_values, p)},
        "canonicalization": {
            "columns_swapped": rep.record.columns_swapped,
            "original_determinant": _num(rep.record.original_determinant, p),
        },
        "table": _matrix_json(rep.table.as_lists(), p),
        "row_normalized": _matrix_json(rep.r.as_lists(), p),
        "measures": {
            "epsilon_hat": _num(m.epsilon_hat, p),
            "covariance": _num(m.covariance, p),
            "variance_a": _num(m.variance_a, p),
            "variance_b": _num(m.variance_b, p),
            "correlation": _num(m.correlation, p),
            "auc": _num(m.auc, p),
            "regression_slope_b_on_a": _num(m.regression_slope_b_on_a, p),
            "trace_r": _num(m.trace_r, p),
            "det_r": _num(m.det_r, p),
            "eigenvalues_r": [_num(v, p) for v in m.eigenvalues_r],
        },
        "geometry": None
        if rep.geometry is None
        else {
            "kind": rep.geometry.kind.value,
            "x_intercept": _num(rep.geometry.x_intercept, p),
            "y_intercept": _num(rep.geometry.y_intercept, p),
        },
        "solutions": [
            {k: (_num(v, p) if isinstance(v, float) else v) for k, v in row.items() if k != "source"}
            | {"notes": list(s.notes)}
            for row, s in zip(rows, rep.solutions)
        ],
        "notes": list(rep.notes),
        "precision": p,
    }


def _mat_text(m, p) -> str:
    return "[[" + ", ".join(fmt(v, p) for v in m[0]) + "], [" + ", ".join(fmt(v, p) for v in m[1]) + "]]"


def report_to_text(rep: AnalysisReport) -> str:
    p = rep.precision
    m = rep.measures
    out = [
        f"source: {rep.source}",
        f"input ({rep.input_kind}): {_mat_text(rep.input_values, p)}",
        f"columns swapped: {fmt(rep.record.columns_swapped)}"
        f" (original determinant {fmt(rep.record.original_determinant, p)})",
        f"table P: {_mat_text(rep.table.as_lists(), p)}",
        f"row-normalized R: {_mat_text(rep.r.as_lists(), p)}",
        "",
        "effect measures",
        f"  epsilon_hat        {fmt(m.epsilon_hat, p)}",
        f"  covariance         {fmt(m.covariance, p)}",
        f"  variance A         {fmt(m.variance_a, p)}",
        f"  variance B         {fmt(m.variance_b, p)}",
        f"  correlation        {fmt(m.correlation, p)}",
        f"  AUC                {fmt(m.auc, p)}",
        f"  slope B on A       {fmt(m.regression_slope_b_on_a, p)}",
        f"  trace R            {fmt(m.trace_r, p)}",
        f"  det R              {fmt(m.det_r, p)}",
        f"  eigenvalues R      {fmt(m.eigenvalues_r[0], p)}, {fmt(m.eigenvalues_r[1], p)}",
    ]
    if rep.geometry is not None:
        g = rep.geometry
        out += [
            "",
            f"curve: {g.kind.value}, x-intercept {fmt(g.x_intercept, p)}, y-intercept {fmt(g.y_intercept, p)}",
            "",
            "epistemologies",
        ]
        out.append(_solutions_table([solution_row(rep.source, s, p) for s in rep.solutions], p, with_source=False))
    for n in rep.notes:
        out.append(f"note: {n}")
    return "\n".join(out).rstrip("\n") + "\n"


def _cell(v, p) -> str:
    if v is None:
        return "undefined"
    if isinstance(v, float):
        return fmt(v, p)
    return str(v)


def _solutions_table(rows: list[dict], p: int, with_source: bool = True) -> str:
    cols = [c for c in SOLUTION_FIELDS if with_source or c != "source"]
    cells = [cols] + [[_cell(r[c], p) for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def rows_to_csv(rows: list[dict], p: int, header_lines=()) -> str:
    buf = io.StringIO()
    for h in header_lines:
        buf.write(f"# {h}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SOLUTION_FIELDS)
    for r in rows:
        w.writerow([fmt(r[c], p) if not isinstance(r[c], str) else r[c] for c in SOLUTION_FIELDS])
    return buf.getvalue()


def report_to_csv(rep: AnalysisReport) -> str:
    p = rep.precision
    m = rep.measures
    head = [
        f"source: {rep.source}",
        f"columns_swapped: {fmt(rep.record.columns_swapped)}",
        f"epsilon_hat: {fmt(m.epsilon_hat, p)}",
        f"correlation: {fmt(m.correlation, p)}",
        f"auc: {fmt(m.auc, p)}",
    ]
    if rep.geometry is not None:
        head += [
            f"geometry: {rep.geometry.kind.value}",
            f"x_intercept: {fmt(rep.geometry.x_intercept, p)}",
            f"y_intercept: {fmt(rep.geometry.y_intercept, p)}",
        ]
    rows = [solution_row(rep.source, s, p) for s in rep.solutions]
    return rows_to_csv(rows, p, head)


def render_report(rep: AnalysisReport, fmt_name: str) -> str:
    if fmt_name == "json":
        return json.dumps(report_to_dict(rep), indent=2) + "\n"
    if fmt_name == "csv":
        return report_to_csv(rep)
    return report_to_text(rep)


def render_compare(reports: list[AnalysisReport], fmt_name: str, precision: int) -> str:
    rows = [solution_row(rep.source, s, precision) for rep in reports for s in rep.solutions]
    if fmt_name == "json":
        out = [{k: (_num(v, precision) if isinstance(v, float) else v) for k, v in r.items()} for r in rows]
        return json.dumps(out, indent=2) + "\n"
    if fmt_name == "csv":
        return rows_to_csv(rows, precision)
    return _solutions_table(rows, precision) + "\n"


@dataclass(frozen=True)
class CurveFile:
    """Curve samples plus labeled epistemology markers, ready for plotting."""

    metadata: tuple[tuple[str, str], ...]
    points: list[InterfacePoint]
    markers: list[tuple[str, InterfacePoint]]

    def to_csv(self, precision: int = DEFAULT_PRECISION) -> str:
        lines = [f"# {k}: {v}" for k, v in self.metadata]
        lines.append("eps0,eps1,label")
        for pt in self.points:
            lines.append(f"{fmt(pt.eps0, precision)},{fmt(pt.eps1, precision)},")
        for label, pt in self.markers:
            lines.append(f"{fmt(pt.eps0, precision)},{fmt(pt.eps1, precision)},{label}")
        return "\n".join(lines) + "\n"


def build_curve_file(rep: AnalysisReport, points: int) -> CurveFile:
    """Sample the curve of an analyzed (canonical) table and add markers."""
    if rep.geometry is None:
        raise ValueError("curve needs a table with nonnegative determinant")
    p = rep.precision
    g = rep.geometry
    pts = sample_curve(rep.r, points)
    meta = [
        ("source", rep.source),
        ("table", _mat_text(rep.table.as_lists(), p)),
        ("columns_swapped", fmt(rep.record.columns_swapped)),
        ("geometry", g.kind.value),
        ("x_intercept", fmt(g.x_intercept, p)),
        ("y_intercept", fmt(g.y_intercept, p)),
        ("points", str(points)),
    ]
    markers = []
    skipped = []
    for s in rep.solutions:
        if s.point is None:
            skipped.append(s.kind.label)
        else:
            markers.append((s.kind.label, s.point))
    if skipped:
        meta.append(("infeasible", " ".join(skipped)))
    return CurveFile(tuple(meta), pts, markers)
