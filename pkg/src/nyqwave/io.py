"""CSV and PGM readers/writers.

Layouts:

* signal CSV: header ``t,value`` (real) or ``t,re,im`` (complex), uniform ``t``;
* spectrum CSV: header ``w,value`` or ``w,re,im``; VSB input uses ``w,P``
  (any second-column name is accepted);
* scalogram CSV: header ``a,b,re,im,valid``, row-major by scale then shift;
* PGM: binary ``P5``, width = number of shifts, height = number of scales,
  maxval 255, first row = first scale, linear min-max mapping.

Floats are written with ``repr`` so files round-trip exactly and repeated
runs are byte-identical.
"""
from __future__ import annotations

import csv
import os
from pathlib import Path
from typing import Callable

import numpy as np

from .cwt import Scalogram, ScaleList
from .errors import SignalFormatError
from .wavelets import SampledSignal, WaveletTable

_UNIFORM_RTOL = 1e-6


def _fmt(x) -> str:
    return repr(float(x))


def _write_rows(path, header, rows):
    path = Path(path)
    with open(path, "w", newline="", encoding="ascii") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def write_signal_csv(path, signal: SampledSignal, time_label: str = "t"):
    t = signal.times
    if signal.is_complex:
        rows = ((_fmt(a), _fmt(z.real), _fmt(z.imag)) for a, z in zip(t, signal.samples))
        _write_rows(path, (time_label, "re", "im"), rows)
    else:
        rows = ((_fmt(a), _fmt(v)) for a, v in zip(t, signal.samples))
        _write_rows(path, (time_label, "value"), rows)


def write_table_csv(path, table: WaveletTable):
    write_signal_csv(path, table.grid)


def _read_numeric(path, expected_first: str | None = None):
    path = Path(path)
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise SignalFormatError(f"cannot open: {exc.strerror}", path=path) from exc
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SignalFormatError("file is empty", line=1, path=path) from None
        header = [h.strip() for h in header]
        if len(header) not in (2, 3):
            raise SignalFormatError(f"expected 2 or 3 columns, header is {header}",
                                    line=1, path=path)
        if expected_first is not None and header[0] != expected_first:
            raise SignalFormatError(f"first column must be {expected_first!r}",
                                    line=1, path=path)
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(header):
                raise SignalFormatError(
                    f"expected {len(header)} fields, found {len(row)}", line=lineno, path=path)
            try:
                values = [float(c) for c in row]
            except ValueError:
                raise SignalFormatError(f"non-numeric field in {row}",
                                        line=lineno, path=path) from None
            if not all(np.isfinite(values)):
                raise SignalFormatError("non-finite value", line=lineno, path=path)
            rows.append(values)
    if not rows:
        raise SignalFormatError("no data rows", line=2, path=path)
    return header, np.array(rows)


def _to_samples(header, data):
    if len(header) == 3:
        return data[:, 1] + 1j * data[:, 2]
    return data[:, 1]


def read_signal_csv(path) -> SampledSignal:
    """Read a uniformly sampled signal; raises :class:`SignalFormatError`."""
    header, data = _read_numeric(path, expected_first="t")
    t = data[:, 0]
    samples = _to_samples(header, data)
    if t.size == 1:
        return SampledSignal(float(t[0]), 1.0, samples)
    steps = np.diff(t)
    dt = (t[-1] - t[0]) / (t.size - 1)
    if dt <= 0:
        raise SignalFormatError("time column must increase", line=2, path=path)
    bad = np.flatnonzero(np.abs(steps - dt) > _UNIFORM_RTOL * dt)
    if bad.size:
        raise SignalFormatError("time column is not uniformly spaced",
                                line=int(bad[0]) + 3, path=path)
    return SampledSignal(float(t[0]), float(dt), samples)


def read_spectrum_csv(path) -> Callable:
    """Two-column spectrum as a callable, linear between samples, zero outside."""
    header, data = _read_numeric(path, expected_first="w")
    w = data[:, 0]
    if np.any(np.diff(w) <= 0):
        raise SignalFormatError("frequency column must increase", path=path)
    if len(header) == 3:
        raise SignalFormatError("expected a real spectrum (w, value)", line=1, path=path)
    values = data[:, 1]

    def spectrum(x):
        return np.interp(np.asarray(x, dtype=float), w, values, left=0.0, right=0.0)

    return spectrum


def write_scalogram_csv(path, s: Scalogram):
    b = s.b_values

    def rows():
        for i, a in enumerate(s.scales):
            for j, bj in enumerate(b):
                z = s.coeffs[i, j]
                yield (_fmt(a), _fmt(bj), _fmt(z.real), _fmt(z.imag),
                       "1" if s.valid[i, j] else "0")

    _write_rows(path, ("a", "b", "re", "im", "valid"), rows())


def read_scalogram_csv(path) -> Scalogram:
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if [h.strip() for h in header] != ["a", "b", "re", "im", "valid"]:
            raise SignalFormatError("unexpected scalogram header", line=1, path=path)
        data = np.array([[float(c) for c in row] for row in reader if row])
    scales = np.unique(data[:, 0])
    nb = data.shape[0] // scales.size
    coeffs = (data[:, 2] + 1j * data[:, 3]).reshape(scales.size, nb)
    valid = data[:, 4].reshape(scales.size, nb) > 0.5
    b = data[:nb, 1]
    db = float(b[1] - b[0]) if nb > 1 else 1.0
    return Scalogram(ScaleList(tuple(scales)), float(b[0]), db, coeffs, valid)


def to_gray(matrix) -> np.ndarray:
    """Linear min-max map to ``uint8``; a constant matrix maps to zeros."""
    m = np.asarray(matrix, dtype=float)
    lo, hi = float(m.min()), float(m.max())
    if hi == lo:
        return np.zeros(m.shape, dtype=np.uint8)
    return np.rint(255.0 * (m - lo) / (hi - lo)).astype(np.uint8)


def write_pgm(path, matrix):
    gray = to_gray(matrix)
    if gray.ndim != 2:
        raise ValueError("PGM export needs a 2-D matrix")
    height, width = gray.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        fh.write(gray.tobytes(order="C"))


def read_pgm(path) -> np.ndarray:
    raw = Path(path).read_bytes()
    parts = raw.split(b"\n", 3)
    if parts[0] != b"P5" or len(parts) < 4:
        raise SignalFormatError("not a binary PGM", line=1, path=path)
    width, height = map(int, parts[1].split())
    if int(parts[2]) != 255:
        raise SignalFormatError("only maxval 255 is supported", line=3, path=path)
    data = np.frombuffer(parts[3], dtype=np.uint8)
    if data.size != width * height:
        raise SignalFormatError("pixel count does not match header", path=path)
    return data.reshape(height, width)


def output_dir(env_var: str = "NYQWAVE_OUTDIR") -> Path:
    """Default directory for CLI outputs: ``$NYQWAVE_OUTDIR`` or the cwd."""
    return Path(os.environ.get(env_var) or ".")
