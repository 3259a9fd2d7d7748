"""
Plain CSV files for signals, coefficients and point sets.

Signals are header-tagged:

    x,re,im     samples of a function on the real line
    n,re,im     coefficients against an orthonormal basis

Point sets use one of the headers `z_re,z_im,w_re,w_im`, `z_re,z_im,x` or `re,im`.
Lines starting with '#' are diagnostics and are skipped on input. Numbers use '.' as
decimal separator.
"""

# Standard library:
from __future__ import annotations
from pathlib import Path
from typing import IO, Callable, Iterable, NamedTuple, Sequence, TypeVar
import csv

# Third party:
import numpy as np

# Local:
from .errors import CsvFormatError


SIGNAL_HEADERS = {("x", "re", "im"): "samples", ("n", "re", "im"): "coefficients"}
T = TypeVar("T")

POINT_HEADERS = {
    ("z_re", "z_im", "w_re", "w_im"): "pairs",
    ("z_re", "z_im", "x"): "mixed",
    ("re", "im"): "points",
}


class SignalFile(NamedTuple):
    """A parsed signal file: `kind` is 'samples' (x) or 'coefficients' (n)."""
    kind: str
    abscissa: np.ndarray
    values: np.ndarray


class PointFile(NamedTuple):
    """A parsed point file. Columns not present in `kind` are None."""
    kind: str
    z: np.ndarray
    w: np.ndarray | None = None
    x: np.ndarray | None = None


def _rows(stream: IO[str]) -> Iterable[tuple[int, list[str]]]:

    for line_no, row in enumerate(csv.reader(stream), start=1):
        if not row or not "".join(row).strip():
            continue
        if row[0].lstrip().startswith("#"):
            continue
        yield line_no, [cell.strip() for cell in row]


def _parse_table(stream: IO[str], headers: dict[tuple[str, ...], str]) -> tuple[str, np.ndarray, list[int]]:

    rows = iter(_rows(stream))
    try:
        line_no, header = next(rows)
    except StopIteration:
        raise CsvFormatError(1, "empty file")

    key = tuple(h.lower() for h in header)
    if key not in headers:
        expected = " | ".join(",".join(h) for h in headers)
        raise CsvFormatError(line_no, f"unknown header {','.join(header)!r}, expected one of {expected}")

    data = []
    lines = []
    for line_no, row in rows:
        if tuple(c.lower() for c in row) in headers:
            raise CsvFormatError(line_no, "second header; mixed signal types in one file")
        if len(row) != len(key):
            raise CsvFormatError(line_no, f"expected {len(key)} fields, got {len(row)}")
        try:
            values = [float(cell) for cell in row]
        except ValueError:
            raise CsvFormatError(line_no, f"not a number in {','.join(row)!r}")
        if not all(np.isfinite(values)):
            raise CsvFormatError(line_no, "non-finite value")
        data.append(values)
        lines.append(line_no)

    table = np.array(data, dtype=np.float64).reshape(-1, len(key))
    return headers[key], table, lines


def read_signal(stream: IO[str]) -> SignalFile:
    """
    Raises:
        CsvFormatError: unknown or mixed header, malformed row, or a coefficient
            index that is not a non-negative integer
    """
    kind, table, lines = _parse_table(stream, SIGNAL_HEADERS)
    values = table[:, 1] + 1j * table[:, 2]
    if kind == "coefficients":
        index = table[:, 0]
        bad = (index < 0) | (index != np.round(index))
        if np.any(bad):
            raise CsvFormatError(lines[int(np.argmax(bad))], "coefficient index n must be a non-negative integer")
        coeffs = np.zeros(int(index.max()) + 1 if index.size else 0, dtype=np.complex128)
        coeffs[index.astype(int)] = values
        return SignalFile(kind, np.arange(coeffs.size), coeffs)
    return SignalFile(kind, table[:, 0], values)


def read_points(stream: IO[str]) -> PointFile:

    kind, table, _ = _parse_table(stream, POINT_HEADERS)
    z = table[:, 0] + 1j * table[:, 1]
    match kind:
        case "pairs":
            return PointFile(kind, z, w=table[:, 2] + 1j * table[:, 3])
        case "mixed":
            return PointFile(kind, z, x=table[:, 2])
    return PointFile(kind, z)


def read_path(path: Path, reader: Callable[[IO[str]], T]) -> T:
    with open(path, newline="", encoding="utf-8") as f:
        return reader(f)


def write_rows(stream: IO[str], header: Sequence[str], rows: Iterable[Sequence[object]], diagnostics: Iterable[str] = ()) -> None:
    """Header, data rows, then '#'-prefixed diagnostic lines."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(v)) if isinstance(v, (float, np.floating)) else v for v in row])
    for line in diagnostics:
        stream.write(f"# {line}\n")


def write_coefficients(stream: IO[str], coeffs: np.ndarray, diagnostics: Iterable[str] = ()) -> None:
    rows = ((n, float(c.real), float(c.imag)) for n, c in enumerate(coeffs))
    write_rows(stream, ("n", "re", "im"), rows, diagnostics)


def write_samples(stream: IO[str], x: np.ndarray, values: np.ndarray, diagnostics: Iterable[str] = ()) -> None:
    rows = ((float(xi), float(v.real), float(v.imag)) for xi, v in zip(x, values))
    write_rows(stream, ("x", "re", "im"), rows, diagnostics)
