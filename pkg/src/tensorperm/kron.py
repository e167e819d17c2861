"""Dense matrices, the Kronecker product, row-major vec and mixed-radix indexing.

Matrices are plain 2-D numpy arrays. Integer dtypes are preserved so that
identities on integer data can be checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import prod
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, SizeOverflowError

INDEX_MAX = np.iinfo(np.intp).max


def as_matrix(x, name: str = "matrix") -> np.ndarray:
    """Return `x` as a non-empty 2-D array (scalars become 1x1)."""
    a = np.asarray(x)
    if a.dtype == object:
        a = a.astype(float)
    if a.ndim == 0:
        a = a.reshape(1, 1)
    if a.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got {a.ndim}-D")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise DimensionError(f"{name} must have at least one row and column, got shape {a.shape}")
    return a


def checked_product(dims: Iterable[int], limit: int = INDEX_MAX) -> int:
    """Product of `dims`, raising SizeOverflowError if it exceeds `limit`."""
    total = 1
    for d in dims:
        total *= int(d)
        if total > limit:
            raise SizeOverflowError(f"dimension product exceeds {limit}")
    return total


def kron(a, b) -> np.ndarray:
    """Kronecker product of two rectangular matrices.

    Block ``(i, j)`` of the result is ``a[i, j] * b``, so
    ``out[i*p + s, j*r + t] == a[i, j] * b[s, t]`` for ``b`` of shape ``(p, r)``.
    """
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    m, n = a.shape
    p, r = b.shape
    checked_product((m, p, n, r))
    out = a[:, None, :, None] * b[None, :, None, :]
    return out.reshape(m * p, n * r)


def kron_many(ms: Sequence) -> np.ndarray:
    """Left fold of :func:`kron` over a non-empty sequence of matrices."""
    ms = list(ms)
    if not ms:
        raise DimensionError("kron_many needs at least one matrix")
    rows = checked_product(as_matrix(m).shape[0] for m in ms)
    cols = checked_product(as_matrix(m).shape[1] for m in ms)
    checked_product((rows, cols))
    return reduce(kron, ms[1:], as_matrix(ms[0]))


def vec_row(x) -> np.ndarray:
    """Stack the rows of `x` into a single column (row-major vectorization)."""
    x = as_matrix(x, "x")
    return x.reshape(-1, 1).copy()


def unvec_row(v, rows: int, cols: int) -> np.ndarray:
    """Inverse of :func:`vec_row`: fold a column of length rows*cols back into a matrix."""
    v = np.asarray(v)
    if v.ndim == 2 and v.shape[1] != 1:
        raise DimensionError(f"expected a column vector, got shape {v.shape}")
    if v.ndim not in (1, 2):
        raise DimensionError(f"expected a column vector, got {v.ndim}-D input")
    if rows < 1 or cols < 1:
        raise DimensionError(f"rows and cols must be positive, got {rows}x{cols}")
    if v.shape[0] != rows * cols:
        raise DimensionError(
            f"vector of length {v.shape[0]} cannot be unvec'd to {rows}x{cols}"
        )
    return v.reshape(rows, cols).copy()


@dataclass(frozen=True)
class MixedRadix:
    """Mixed-radix number system with the leftmost digit most significant.

    This is the ordering of the product basis ``e_1 (x) g_1, e_1 (x) g_2, ...``
    that makes the Kronecker block layout consistent.
    """

    dims: tuple[int, ...]

    def __init__(self, dims: Iterable[int]):
        dims = tuple(int(d) for d in dims)
        if not dims:
            raise DimensionError("MixedRadix needs at least one dimension")
        if any(d < 1 for d in dims):
            raise DimensionError(f"all dimensions must be >= 1, got {dims}")
        checked_product(dims)
        object.__setattr__(self, "dims", dims)

    @property
    def total(self) -> int:
        return prod(self.dims)

    def __len__(self) -> int:
        return len(self.dims)

    def permuted(self, order: Sequence[int]) -> "MixedRadix":
        """Radix whose j-th digit is digit ``order[j]`` (0-based) of this one."""
        return MixedRadix(self.dims[i] for i in order)


def linearize(idx: Sequence[int], radix: MixedRadix) -> int:
    """Flat index of the multi-index `idx`: ``(..(i1*n2 + i2)*n3 + ..)*nk + ik``."""
    if len(idx) != len(radix):
        raise DimensionError(f"multi-index has {len(idx)} digits, radix has {len(radix)}")
    flat = 0
    for pos, (i, n) in enumerate(zip(idx, radix.dims)):
        i = int(i)
        if not 0 <= i < n:
            raise DimensionError(f"digit {pos} = {i} out of range [0, {n})")
        flat = flat * n + i
    return flat


def delinearize(flat: int, radix: MixedRadix) -> tuple[int, ...]:
    """Multi-index of `flat`; exact inverse of :func:`linearize`."""
    flat = int(flat)
    if not 0 <= flat < radix.total:
        raise DimensionError(f"flat index {flat} out of range [0, {radix.total})")
    digits = []
    for n in reversed(radix.dims):
        flat, i = divmod(flat, n)
        digits.append(i)
    return tuple(reversed(digits))


def delinearize_all(radix: MixedRadix) -> np.ndarray:
    """All multi-indices in flat order as an ``(N, k)`` integer array."""
    flat = np.arange(radix.total, dtype=np.intp)
    digits = np.empty((radix.total, len(radix)), dtype=np.intp)
    for l in range(len(radix) - 1, -1, -1):
        flat, digits[:, l] = np.divmod(flat, radix.dims[l])
    return digits


def linearize_all(digits: np.ndarray, radix: MixedRadix) -> np.ndarray:
    """Vectorized :func:`linearize` over the rows of an ``(N, k)`` array."""
    digits = np.asarray(digits, dtype=np.intp)
    flat = np.zeros(digits.shape[0], dtype=np.intp)
    for l, n in enumerate(radix.dims):
        flat = flat * n + digits[:, l]
    return flat
