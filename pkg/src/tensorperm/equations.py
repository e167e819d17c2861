"""Vec-trick reduction of ``A X B = C`` and ``A X + X B = C`` to linear systems.

With the row-major vec ``L``, the two equations become

* ``(A (x) B^T) L(X) = L(C)``, equivalently ``(B^T (x) A) L(X^T) = L(C^T)``;
* ``(A (x) I_n + I_m (x) B^T) L(X) = L(C)``, equivalently
  ``(I_n (x) A + B^T (x) I_m) L(X^T) = L(C^T)``.

Each member of a pair is carried onto the other by conjugating with tensor
commutation matrices (:func:`tcm_transform`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, SingularSystemError
from .kron import as_matrix, kron, unvec_row, vec_row
from .tpm import TpmSpec, apply_tpm, build_tpm_implicit

PIVOT_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class AxbEquation:
    """``A X B = C`` with A (m x n), B (p x q), C (m x q); the unknown X is n x p."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        a, b, c = (as_matrix(x, name) for x, name in ((self.a, "A"), (self.b, "B"), (self.c, "C")))
        if a.shape[0] != c.shape[0] or b.shape[1] != c.shape[1]:
            raise DimensionError(
                f"A{a.shape} X B{b.shape} = C{c.shape}: C must be {a.shape[0]}x{b.shape[1]}"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def unknown_shape(self) -> tuple[int, int]:
        return (self.a.shape[1], self.b.shape[0])

    def residual(self, x) -> np.ndarray:
        return self.a @ x @ self.b - self.c


@dataclass(frozen=True, eq=False)
class SylvesterEquation:
    """``A X + X B = C`` with A (m x m), B (n x n), C and X (m x n)."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        a, b, c = (as_matrix(x, name) for x, name in ((self.a, "A"), (self.b, "B"), (self.c, "C")))
        if a.shape[0] != a.shape[1] or b.shape[0] != b.shape[1]:
            raise DimensionError(f"A{a.shape} and B{b.shape} must both be square")
        if c.shape != (a.shape[0], b.shape[0]):
            raise DimensionError(f"C must be {a.shape[0]}x{b.shape[0]}, got {c.shape}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def unknown_shape(self) -> tuple[int, int]:
        return self.c.shape

    def residual(self, x) -> np.ndarray:
        return self.a @ x + x @ self.b - self.c


@dataclass(frozen=True, eq=False)
class LinearSystem:
    """``coeff @ x = rhs`` where ``x`` unvecs (row-major) to ``unknown_shape``.

    Assembly allows a rectangular `coeff`; :func:`solve_dense` requires it square.
    """

    coeff: np.ndarray
    rhs: np.ndarray
    unknown_shape: tuple[int, int]

    def __post_init__(self):
        coeff = as_matrix(self.coeff, "coeff")
        rhs = as_matrix(self.rhs, "rhs")
        if rhs.shape != (coeff.shape[0], 1):
            raise DimensionError(f"rhs must be a {coeff.shape[0]}x1 column, got {rhs.shape}")
        rows, cols = (int(s) for s in self.unknown_shape)
        if rows * cols != coeff.shape[1]:
            raise DimensionError(
                f"unknown shape {rows}x{cols} does not match {coeff.shape[1]} coefficient columns"
            )
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "unknown_shape", (rows, cols))

    @property
    def is_square(self) -> bool:
        return self.coeff.shape[0] == self.coeff.shape[1]

    def unvec(self, x) -> np.ndarray:
        return unvec_row(x, *self.unknown_shape)


def assemble_axb(eq: AxbEquation) -> LinearSystem:
    """``(A (x) B^T) L(X) = L(C)``."""
    return LinearSystem(kron(eq.a, eq.b.T), vec_row(eq.c), eq.unknown_shape)


def assemble_axb_transposed(eq: AxbEquation) -> LinearSystem:
    """``(B^T (x) A) L(X^T) = L(C^T)``."""
    n, p = eq.unknown_shape
    return LinearSystem(kron(eq.b.T, eq.a), vec_row(eq.c.T), (p, n))


def assemble_sylvester(eq: SylvesterEquation) -> LinearSystem:
    """``(A (x) I_n + I_m (x) B^T) L(X) = L(C)``."""
    m, n = eq.unknown_shape
    coeff = kron(eq.a, np.eye(n, dtype=eq.a.dtype)) + kron(np.eye(m, dtype=eq.b.dtype), eq.b.T)
    return LinearSystem(coeff, vec_row(eq.c), (m, n))


def assemble_sylvester_transposed(eq: SylvesterEquation) -> LinearSystem:
    """``(I_n (x) A + B^T (x) I_m) L(X^T) = L(C^T)``."""
    m, n = eq.unknown_shape
    coeff = kron(np.eye(n, dtype=eq.a.dtype), eq.a) + kron(eq.b.T, np.eye(m, dtype=eq.b.dtype))
    return LinearSystem(coeff, vec_row(eq.c.T), (n, m))


def tcm_transform(sys: LinearSystem, left: TpmSpec, right: TpmSpec) -> LinearSystem:
    """Conjugate a system by TPMs: ``(U coeff V^T) (V x) = U rhs``.

    ``U`` and ``V`` are the matrices of `left` and `right`. When `right` has
    two factors matching ``sys.unknown_shape`` the new unknown is unvec'd to
    the permuted shape (a transpose for a commutation matrix); otherwise the
    new unknown is a plain column.
    """
    rows, cols = sys.coeff.shape
    if left.n != rows:
        raise DimensionError(f"left TPM has size {left.n}, system has {rows} rows")
    if right.n != cols:
        raise DimensionError(f"right TPM has size {right.n}, system has {cols} columns")
    u = build_tpm_implicit(left)
    v = build_tpm_implicit(right)
    coeff = apply_tpm(v, apply_tpm(u, sys.coeff).T).T
    rhs = apply_tpm(u, sys.rhs)
    if right.dims.dims == sys.unknown_shape:
        shape = right.out_dims.dims
    elif right.sigma.is_identity():
        shape = sys.unknown_shape
    else:
        shape = (cols, 1)
    return LinearSystem(coeff, rhs, shape)


def solve_dense(sys: LinearSystem) -> np.ndarray:
    """Solve a square system by Gaussian elimination with partial pivoting.

    The pivot is the entry of largest magnitude in the current column, ties
    going to the lowest row. Raises SingularSystemError when that magnitude is
    at most ``1e-12 * max|coeff|`` (the scale floored at 1e-300).

    Returns the solution as a column vector.
    """
    if not sys.is_square:
        raise DimensionError(
            f"coefficient matrix is {sys.coeff.shape[0]}x{sys.coeff.shape[1]}; only square systems are solved"
        )
    a = np.array(sys.coeff, dtype=float)
    b = np.array(sys.rhs, dtype=float).ravel()
    n = a.shape[0]
    scale = max(float(np.max(np.abs(a))), 1e-300)
    tol = PIVOT_RTOL * scale

    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if not abs(a[p, k]) > tol:
            raise SingularSystemError(
                f"singular system: no pivot above {tol:.3g} at elimination step {k + 1} of {n}",
                step=k,
            )
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        factors = a[k + 1:, k] / a[k, k]
        a[k + 1:, k:] -= np.outer(factors, a[k, k:])
        b[k + 1:] -= factors * b[k]

    x = np.empty(n)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - a[k, k + 1:] @ x[k + 1:]) / a[k, k]
    return x.reshape(-1, 1)


def solve_axb(eq: AxbEquation, via: int = 1) -> np.ndarray:
    """Solve ``A X B = C`` through the system in X (``via=1``) or in X^T (``via=2``)."""
    if via == 1:
        sys = assemble_axb(eq)
        return sys.unvec(solve_dense(sys))
    if via == 2:
        sys = assemble_axb_transposed(eq)
        return sys.unvec(solve_dense(sys)).T
    raise ValueError(f"route for A X B = C must be 1 or 2, got {via}")


def solve_sylvester(eq: SylvesterEquation, via: int = 3) -> np.ndarray:
    """Solve ``A X + X B = C`` through the system in X (``via=3``) or in X^T (``via=4``)."""
    if via == 3:
        sys = assemble_sylvester(eq)
        return sys.unvec(solve_dense(sys))
    if via == 4:
        sys = assemble_sylvester_transposed(eq)
        return sys.unvec(solve_dense(sys)).T
    raise ValueError(f"route for A X + X B = C must be 3 or 4, got {via}")
