"""Tensor permutation matrices (TPMs).

A permutation ``sigma`` of ``{1, ..., k}`` together with factor dimensions
``(n_1, ..., n_k)`` determines the square 0/1 matrix ``U`` of size
``N = n_1 * ... * n_k`` that sends every basis product
``e_{i_1} (x) ... (x) e_{i_k}`` to ``e_{i_sigma(1)} (x) ... (x) e_{i_sigma(k)}``.
For ``k = 2`` and ``sigma = (2, 1)`` this is the tensor commutation matrix
(swap operator) ``U_{n(x)p}``.

Two representations are provided: :class:`ImplicitTpm`, an index map applied
in O(N), and :class:`SparseTpm`, the materialized coordinate list.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, SizeOverflowError, VerificationError
from .kron import (
    MixedRadix,
    as_matrix,
    delinearize_all,
    kron_many,
    linearize_all,
)

DEFAULT_MAX_N = 2**26


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1, ..., k}`` stored as its 1-based image list."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if not images:
            raise DimensionError("a permutation needs at least one element")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DimensionError(
                f"{list(images)} is not a permutation of 1..{len(images)}"
            )
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(1, k + 1))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse a comma-separated image list such as ``"2,3,1"``."""
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            if isinstance(exc, DimensionError):
                raise
            raise DimensionError(f"cannot parse permutation {text!r}") from exc

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, label: int) -> int:
        return self.images[label - 1]

    def __str__(self) -> str:
        return ",".join(map(str, self.images))

    @property
    def zero_based(self) -> tuple[int, ...]:
        return tuple(i - 1 for i in self.images)

    def is_identity(self) -> bool:
        return all(i == l for l, i in enumerate(self.images, 1))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for l, i in enumerate(self.images, 1):
            inv[i - 1] = l
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``, i.e. ``l -> self(other(l))``."""
        if len(other) != len(self):
            raise DimensionError("cannot compose permutations of different lengths")
        return Permutation(self(other(l)) for l in range(1, len(self) + 1))


@dataclass(frozen=True)
class TpmSpec:
    """Descriptor of the sigma-TPM on input factor dimensions ``dims``."""

    sigma: Permutation
    dims: MixedRadix

    def __init__(self, sigma, dims):
        if not isinstance(sigma, Permutation):
            sigma = Permutation(sigma)
        if not isinstance(dims, MixedRadix):
            dims = MixedRadix(dims)
        if len(sigma) != len(dims):
            raise DimensionError(
                f"permutation has length {len(sigma)} but {len(dims)} dimensions were given"
            )
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "dims", dims)

    @property
    def n(self) -> int:
        return self.dims.total

    @property
    def out_dims(self) -> MixedRadix:
        """Factor dimensions of the codomain, ``(n_sigma(1), ..., n_sigma(k))``."""
        return self.dims.permuted(self.sigma.zero_based)


@dataclass(frozen=True, eq=False)
class ImplicitTpm:
    """Compiled TPM: ``dest[c]`` is the row holding the single 1 of column ``c``."""

    spec: TpmSpec
    dest: np.ndarray

    @property
    def n(self) -> int:
        return self.spec.n

    def apply(self, v) -> np.ndarray:
        return apply_tpm(self, v)


@dataclass(frozen=True, eq=False)
class SparseTpm:
    """Materialized TPM as coordinates of its ones, sorted by row."""

    n: int
    rows: np.ndarray
    cols: np.ndarray

    def __post_init__(self):
        if self.rows.shape != (self.n,) or self.cols.shape != (self.n,):
            raise DimensionError(f"a TPM of size {self.n} needs exactly {self.n} entries")
        if not (_is_permutation(self.rows) and _is_permutation(self.cols)):
            raise DimensionError("TPM pattern needs exactly one entry per row and per column")
        order = np.argsort(self.rows, kind="stable")
        object.__setattr__(self, "rows", self.rows[order])
        object.__setattr__(self, "cols", self.cols[order])

    @property
    def coords(self) -> list[tuple[int, int]]:
        return list(zip(self.rows.tolist(), self.cols.tolist()))

    def toarray(self, dtype=np.int64) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=dtype)
        out[self.rows, self.cols] = 1
        return out

    def matvec(self, v) -> np.ndarray:
        """Generic COO product ``U @ v``: accumulate ``v[col]`` into ``row``."""
        v = np.asarray(v)
        if v.shape[0] != self.n:
            raise DimensionError(f"vector has length {v.shape[0]}, TPM has size {self.n}")
        out = np.zeros_like(v)
        np.add.at(out, self.rows, v[self.cols])
        return out


def _is_permutation(idx: np.ndarray) -> bool:
    n = idx.shape[0]
    if n == 0 or idx.min() < 0 or idx.max() >= n:
        return False
    return bool(np.all(np.bincount(idx, minlength=n) == 1))


def _source_map(spec: TpmSpec) -> np.ndarray:
    # src[r] = c: transposing the digit axes by sigma realizes j_l = i_sigma(l)
    src = np.arange(spec.n, dtype=np.intp).reshape(spec.dims.dims)
    return src.transpose(spec.sigma.zero_based).ravel()


def build_tpm_implicit(spec: TpmSpec) -> ImplicitTpm:
    """Compile `spec` into its column-to-row destination map."""
    src = _source_map(spec)
    dest = np.empty_like(src)
    dest[src] = np.arange(spec.n, dtype=np.intp)
    dest.setflags(write=False)
    return ImplicitTpm(spec, dest)


def build_tpm_explicit(spec: TpmSpec, max_n: int = DEFAULT_MAX_N) -> SparseTpm:
    """Materialize `spec` as a :class:`SparseTpm` of ``(row, col)`` coordinates.

    Raises SizeOverflowError when ``N`` exceeds `max_n`.
    """
    if spec.n > max_n:
        raise SizeOverflowError(f"TPM size {spec.n} exceeds materialization cap {max_n}")
    rows = np.arange(spec.n, dtype=np.intp)
    return SparseTpm(spec.n, rows, _source_map(spec))


def apply_tpm(u: ImplicitTpm, v) -> np.ndarray:
    """Compute ``U @ v`` in O(N) as ``out[dest[c]] = v[c]``.

    `v` may be 1-D, a column, or an ``(N, r)`` block of columns; the output
    has the same shape.
    """
    v = np.asarray(v)
    if v.ndim == 0 or v.shape[0] != u.n:
        raise DimensionError(f"input has leading length {v.shape[:1]}, TPM has size {u.n}")
    out = np.empty_like(v)
    out[u.dest] = v
    return out


def tcm(n: int, p: int) -> TpmSpec:
    """Tensor commutation matrix ``U_{n(x)p}``: swaps an n-factor and a p-factor."""
    return TpmSpec(Permutation((2, 1)), (n, p))


def tpm_transpose(spec: TpmSpec) -> TpmSpec:
    """Spec whose matrix is the transpose (and inverse) of the matrix of `spec`."""
    return TpmSpec(spec.sigma.inverse(), spec.out_dims)


def tpm_compose(outer: TpmSpec, inner: TpmSpec) -> TpmSpec:
    """Spec whose matrix is ``matrix(outer) @ matrix(inner)``.

    Requires ``outer.dims == inner.out_dims``. The permutation of the product
    is ``inner.sigma o outer.sigma``.
    """
    if outer.dims != inner.out_dims:
        raise DimensionError(
            f"cannot chain: outer acts on dims {outer.dims.dims}, "
            f"inner produces {inner.out_dims.dims}"
        )
    return TpmSpec(inner.sigma.compose(outer.sigma), inner.dims)


def expected_destinations(spec: TpmSpec) -> np.ndarray:
    """Row index of ``U @ e_c`` for every column ``c``, from the basis rule alone."""
    digits = delinearize_all(spec.dims)
    return linearize_all(digits[:, list(spec.sigma.zero_based)], spec.out_dims)


def verify_tpm(candidate, spec: TpmSpec) -> bool:
    """Check `candidate` against the basis-product rule of the sigma-TPM `spec`.

    Every basis product ``e_{i_1} (x) ... (x) e_{i_k}`` is checked, which by
    linearity decides whether `candidate` is that TPM.
    """
    expected = expected_destinations(spec)
    n = spec.n
    if isinstance(candidate, SparseTpm):
        if candidate.n != n:
            raise DimensionError(f"candidate has size {candidate.n}, spec needs {n}")
        order = np.argsort(candidate.cols, kind="stable")
        return bool(np.array_equal(candidate.rows[order], expected))
    m = np.asarray(candidate)
    if m.shape != (n, n):
        raise DimensionError(f"candidate has shape {m.shape}, spec needs {(n, n)}")
    target = np.zeros((n, n), dtype=m.dtype)
    target[expected, np.arange(n)] = 1
    return bool(np.array_equal(m, target))


def _permute_columns(u: ImplicitTpm, k: np.ndarray) -> np.ndarray:
    # k @ V.T == (V @ k.T).T
    return apply_tpm(u, k.T).T


def permute_kron_product(sigma, ms: Sequence) -> np.ndarray:
    """Return ``A_sigma(1) (x) ... (x) A_sigma(k)`` computed as ``U @ (A_1 (x) ... (x) A_k) @ V.T``.

    ``U`` is the sigma-TPM on the row dimensions of the factors and ``V`` the
    sigma-TPM on their column dimensions. The result is cross-checked against
    the directly formed permuted product; disagreement raises
    VerificationError.
    """
    if not isinstance(sigma, Permutation):
        sigma = Permutation(sigma)
    ms = [as_matrix(m, f"factor {i + 1}") for i, m in enumerate(ms)]
    if len(ms) != len(sigma):
        raise DimensionError(f"permutation has length {len(sigma)} but {len(ms)} matrices given")
    u = build_tpm_implicit(TpmSpec(sigma, [m.shape[0] for m in ms]))
    v = build_tpm_implicit(TpmSpec(sigma, [m.shape[1] for m in ms]))
    product = kron_many(ms)
    conjugated = _permute_columns(v, apply_tpm(u, product))

    direct = kron_many([ms[i] for i in sigma.zero_based])
    if not _same(conjugated, direct):
        raise VerificationError("conjugated and direct permuted Kronecker products differ")
    return conjugated


def _same(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    if np.issubdtype(a.dtype, np.integer) and np.issubdtype(b.dtype, np.integer):
        return bool(np.array_equal(a, b))
    # floating products are regrouped by the permutation, so allow rounding
    return bool(np.allclose(a, b, rtol=1e-12, atol=0.0, equal_nan=True))
