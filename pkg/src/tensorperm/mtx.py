"""Text formats: MTX-lite dense matrices and TPM coordinate lists.

MTX-lite::

    # optional comments
    <rows> <cols>
    <cols numbers>      (rows lines)

TPM COO::

    tpm <N> <N> <N>
    <row> <col>         (N lines, 0-based, sorted by row)
"""

from __future__ import annotations

from typing import TextIO

import numpy as np

from .errors import ParseError
from .kron import as_matrix
from .tpm import SparseTpm


def format_number(x) -> str:
    """Integral values without a decimal point, everything else with 17 significant digits."""
    x = float(x)
    if x.is_integer() and abs(x) <= 2**53:
        return str(int(x))
    return format(x, ".17g")


def _content_lines(text: str) -> list[str]:
    lines = text.splitlines()
    while lines and lines[0].startswith("#"):
        lines.pop(0)
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def parse_matrix(text: str) -> np.ndarray:
    """Parse MTX-lite text into a float array."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("missing header line '<rows> <cols>'")
    head = lines[0].split()
    try:
        rows, cols = (int(tok) for tok in head)
    except ValueError:
        raise ParseError(f"bad header {lines[0]!r}: expected '<rows> <cols>'") from None
    if rows < 1 or cols < 1:
        raise ParseError(f"bad header {lines[0]!r}: dimensions must be positive")
    body = lines[1:]
    if len(body) != rows:
        raise ParseError(f"header announces {rows} rows, found {len(body)}")
    out = np.empty((rows, cols))
    for i, line in enumerate(body):
        toks = line.split()
        if len(toks) != cols:
            raise ParseError(f"row {i + 1} has {len(toks)} entries, expected {cols}")
        try:
            out[i] = [float(t) for t in toks]
        except ValueError:
            raise ParseError(f"row {i + 1}: cannot parse {line!r}") from None
    return out


def format_matrix(m) -> str:
    m = as_matrix(m)
    lines = [f"{m.shape[0]} {m.shape[1]}"]
    lines.extend(" ".join(format_number(x) for x in row) for row in m.tolist())
    return "\n".join(lines) + "\n"


def read_matrix(path) -> np.ndarray:
    with open(path, encoding="ascii") as fh:
        return parse_matrix(fh.read())


def write_matrix(m, fh: TextIO) -> None:
    fh.write(format_matrix(m))


def parse_tpm_coo(text: str) -> SparseTpm:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("missing header line 'tpm <N> <N> <N>'")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "tpm":
        raise ParseError(f"bad header {lines[0]!r}: expected 'tpm <N> <N> <N>'")
    try:
        n, ncols, nnz = (int(t) for t in head[1:])
    except ValueError:
        raise ParseError(f"bad header {lines[0]!r}") from None
    if not (n == ncols == nnz) or n < 1:
        raise ParseError(f"bad header {lines[0]!r}: rows, cols and nnz must be equal and positive")
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"header announces {n} entries, found {len(body)}")
    try:
        coords = np.array([[int(t) for t in line.split()] for line in body], dtype=np.intp)
    except ValueError:
        raise ParseError("entries must be '<row> <col>' integer pairs") from None
    if coords.shape != (n, 2):
        raise ParseError("entries must be '<row> <col>' integer pairs")
    if np.any(np.diff(coords[:, 0]) < 0):
        raise ParseError("entries must be sorted by row")
    try:
        return SparseTpm(n, coords[:, 0].copy(), coords[:, 1].copy())
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_tpm_coo(u: SparseTpm) -> str:
    lines = [f"tpm {u.n} {u.n} {u.n}"]
    lines.extend(f"{r} {c}" for r, c in zip(u.rows.tolist(), u.cols.tolist()))
    return "\n".join(lines) + "\n"


def read_tpm_coo(path) -> SparseTpm:
    with open(path, encoding="ascii") as fh:
        return parse_tpm_coo(fh.read())
