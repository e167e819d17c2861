"""Tensor permutation matrices and Kronecker-product identities.

A sigma-tensor permutation matrix reorders the factors of a Kronecker
product: ``U @ (A_1 (x) ... (x) A_k) @ V.T == A_sigma(1) (x) ... (x) A_sigma(k)``
with ``U`` built on the row dimensions and ``V`` on the column dimensions.
"""

from .equations import (
    AxbEquation,
    LinearSystem,
    SylvesterEquation,
    assemble_axb,
    assemble_axb_transposed,
    assemble_sylvester,
    assemble_sylvester_transposed,
    solve_axb,
    solve_dense,
    solve_sylvester,
    tcm_transform,
)
from .errors import (
    DimensionError,
    ParseError,
    SingularSystemError,
    SizeOverflowError,
    TensorPermError,
    VerificationError,
)
from .kron import (
    MixedRadix,
    delinearize,
    kron,
    kron_many,
    linearize,
    unvec_row,
    vec_row,
)
from .tpm import (
    DEFAULT_MAX_N,
    ImplicitTpm,
    Permutation,
    SparseTpm,
    TpmSpec,
    apply_tpm,
    build_tpm_explicit,
    build_tpm_implicit,
    permute_kron_product,
    tcm,
    tpm_compose,
    tpm_transpose,
    verify_tpm,
)

__version__ = "0.1.0"
