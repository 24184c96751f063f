"""Shared helpers: 17-significant-digit formatting and CSV emission."""

from __future__ import annotations

import io
from pathlib import Path


def fmt17(value) -> str:
    """Format a float with 17 significant digits (lossless for float64)."""
    return format(float(value), ".17g")


def format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fmt17(value)
    return str(value)


def write_csv(target, header, rows):
    """Write rows as CSV with a mandatory header.

    ``target`` may be a path or an open text file.  Floats are written with
    17 significant digits so output is byte-stable and round-trips exactly.
    """
    if isinstance(target, (str, Path)):
        with open(target, "w", newline="\n") as fh:
            _write_csv_stream(fh, header, rows)
    else:
        _write_csv_stream(target, header, rows)


def _write_csv_stream(fh: io.TextIOBase, header, rows):
    fh.write(",".join(header) + "\n")
    for row in rows:
        fh.write(",".join(format_cell(cell) for cell in row) + "\n")
