# %% [markdown]
# # Commutation matrices
#
# The swap operator ``U_{n(x)p}`` exchanges the two factors of a Kronecker
# product of column vectors. Here we build the small ones, look at their
# sparsity pattern, and check that the inverse is the transpose.

# %%
import numpy as np

from tensorperm import apply_tpm, build_tpm_explicit, build_tpm_implicit, tcm, tpm_transpose

u22 = build_tpm_explicit(tcm(2, 2)).toarray()
print(u22)

# %%
u33 = build_tpm_explicit(tcm(3, 3)).toarray()
print(u33)

# %% [markdown]
# Acting on ``alpha (x) beta`` gives ``beta (x) alpha``.

# %%
alpha = np.array([[1.0], [2.0]])
beta = np.array([[5.0], [7.0], [11.0]])
u = build_tpm_implicit(tcm(2, 3))
print(apply_tpm(u, np.kron(alpha, beta)).ravel())
print(np.kron(beta, alpha).ravel())

# %% [markdown]
# The transpose of ``U_{n(x)p}`` is ``U_{p(x)n}``, and it is also the inverse.

# %%
u23 = build_tpm_explicit(tcm(2, 3)).toarray()
u32 = build_tpm_explicit(tpm_transpose(tcm(2, 3))).toarray()
print(np.array_equal(u32, u23.T), np.array_equal(u32 @ u23, np.eye(6)))
