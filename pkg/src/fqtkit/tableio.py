"""CSV/JSON reading and writing for the command-line tool."""

from __future__ import annotations

import io
import json
import sys
from typing import Optional, Sequence, TextIO

import numpy as np

JITTER_TOL = 1e-6


class ParseError(ValueError):
    """Input file could not be understood."""


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def _rows(text: str) -> list:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([f.strip() for f in line.split(",")])
    return rows


def _numeric_rows(text: str) -> list:
    rows = _rows(text)
    if rows and not all(_is_number(f) for f in rows[0]):
        rows = rows[1:]  # header
    if not rows:
        raise ParseError("no data rows")
    out = []
    for lineno, row in enumerate(rows, 1):
        try:
            out.append([float(f) for f in row])
        except ValueError:
            raise ParseError(f"non-numeric value in data row {lineno}: {','.join(row)}") from None
    return out


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def parse_series(text: str, fs: Optional[float] = None):
    """Parse a one- or two-column CSV into ``(samples, fs)``.

    One column needs `fs`. Two columns are ``time,value``; the sample rate is
    the inverse of the median step unless `fs` overrides it, and steps
    deviating from the median by more than ``1e-6`` relative are rejected.
    """
    rows = _numeric_rows(text)
    widths = {len(r) for r in rows}
    if widths == {1}:
        values = np.array([r[0] for r in rows])
        if fs is None:
            raise ParseError("single-column input needs --fs")
    elif widths == {2}:
        arr = np.array(rows)
        t, values = arr[:, 0], arr[:, 1]
        if values.size >= 2:
            dt = np.diff(t)
            step = np.median(dt)
            if not step > 0:
                raise ParseError("timestamps must increase")
            if np.max(np.abs(dt - step)) > JITTER_TOL * step:
                raise ParseError("timestamps are not uniformly spaced")
            if fs is None:
                fs = 1.0 / step
        elif fs is None:
            raise ParseError("cannot infer a sample rate from one row")
    else:
        raise ParseError("expected one column (value) or two columns (time,value) on every row")
    if not np.all(np.isfinite(values)):
        raise ParseError("non-finite sample value")
    return values, float(fs)


def parse_matrix(text: str) -> np.ndarray:
    rows = _numeric_rows(text)
    if len({len(r) for r in rows}) != 1:
        raise ParseError("matrix rows have different lengths")
    arr = np.array(rows)
    if not np.all(np.isfinite(arr)):
        raise ParseError("non-finite matrix entry")
    return arr


def _fmt(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return "%.17g" % v


def format_table(columns: Sequence[str], data: Sequence[np.ndarray], fmt: str = "csv") -> str:
    """Render equal-length columns as CSV (17 significant digits) or a JSON list of records."""
    n = len(data[0]) if data else 0
    if fmt == "json":
        records = []
        for i in range(n):
            records.append({c: _jsonable(col[i]) for c, col in zip(columns, data)})
        return json.dumps(records, indent=1) + "\n"
    buf = io.StringIO()
    buf.write(",".join(columns) + "\n")
    for i in range(n):
        buf.write(",".join(_fmt(col[i]) for col in data) + "\n")
    return buf.getvalue()


def format_matrix(mat: np.ndarray, fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps([[float(v) for v in row] for row in mat], indent=1) + "\n"
    return "".join(",".join(_fmt(v) for v in row) + "\n" for row in mat)


def _jsonable(v):
    if isinstance(v, (int, np.integer)):
        return int(v)
    return float(v)


def write_text(text: str, path: Optional[str], stdout: TextIO = None):
    if path is None or path == "-":
        (stdout or sys.stdout).write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
