"""Reading and writing table files.

Two input formats are accepted:

* JSON holding exactly one of the keys ``"counts"`` (2x2 integers) or
  ``"frequencies"`` (2x2 reals).  Other keys are ignored, so files written
  by ``simulate`` can be read back.
* Bare CSV with two data rows of two values.  Lines starting with ``#`` are
  skipped.  Values are frequencies unless the caller asks for counts.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import InterfaceError
from .tables import CountTable, FrequencyTable, from_counts


class ParseError(InterfaceError):
    """The input could not be read or does not describe a 2x2 table."""


@dataclass(frozen=True)
class TableInput:
    source: str
    kind: str  # "counts" or "frequencies"
    values: tuple[tuple[float, float], tuple[float, float]]
    table: FrequencyTable


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not a text file") from exc


def _matrix(obj, source: str, integer: bool) -> tuple:
    if not (isinstance(obj, list) and len(obj) == 2 and all(isinstance(r, list) and len(r) == 2 for r in obj)):
        raise ParseError(f"{source}: expected a 2x2 nested list")
    out = []
    for row in obj:
        vals = []
        for v in row:
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ParseError(f"{source}: non-numeric entry {v!r}")
            if integer and not float(v).is_integer():
                raise ParseError(f"{source}: count {v!r} is not an integer")
            vals.append(int(v) if integer else float(v))
        out.append(tuple(vals))
    return tuple(out)


def _parse_json(text: str, source: str) -> tuple[str, tuple]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: expected a JSON object")
    keys = [k for k in ("counts", "frequencies") if k in doc]
    if len(keys) != 1:
        raise ParseError(f"{source}: need exactly one of 'counts' or 'frequencies'")
    kind = keys[0]
    return kind, _matrix(doc[kind], source, integer=(kind == "counts"))


def _parse_csv(text: str, source: str, counts: bool) -> tuple[str, tuple]:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    rows = list(csv.reader(io.StringIO("\n".join(lines))))
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ParseError(f"{source}: expected 2 rows of 2 comma-separated values")
    try:
        vals = [[float(v) for v in r] for r in rows]
    except ValueError as exc:
        raise ParseError(f"{source}: {exc}") from exc
    if any(not math.isfinite(v) for r in vals for v in r):
        raise ParseError(f"{source}: non-finite value")
    kind = "counts" if counts else "frequencies"
    return kind, _matrix(vals, source, integer=counts)


def parse_table(text: str, source: str = "<string>", counts: bool = False) -> TableInput:
    """Parse file contents.  Raises :class:`ParseError` or ``InvalidTable``."""
    if text.lstrip().startswith("{"):
        kind, vals = _parse_json(text, source)
    else:
        kind, vals = _parse_csv(text, source, counts)
    if kind == "counts":
        table = from_counts(CountTable.from_matrix(vals))
    else:
        table = FrequencyTable.from_matrix(vals)
    return TableInput(source, kind, vals, table)


def read_table(path: str, counts: bool = False) -> TableInput:
    return parse_table(_read_text(path), path, counts)


def write_text(path: str | None, text: str) -> None:
    """Write to ``path``, or stdout when ``path`` is None or ``"-"``."""
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from exc
