# %% [markdown]
# # Reordering a Kronecker product of rectangular matrices
#
# For factors of different shapes the same permutation needs two matrices:
# ``U`` built on the row dimensions and ``V`` on the column dimensions.

# %%
import numpy as np

from tensorperm import TpmSpec, build_tpm_explicit, kron_many, permute_kron_product

rng = np.random.default_rng(0)
shapes = [(2, 1), (1, 3), (2, 2)]
ms = [rng.integers(-9, 10, size=s) for s in shapes]
sigma = (2, 3, 1)

u = build_tpm_explicit(TpmSpec(sigma, [s[0] for s in shapes])).toarray()
v = build_tpm_explicit(TpmSpec(sigma, [s[1] for s in shapes])).toarray()

lhs = u @ kron_many(ms) @ v.T
rhs = kron_many([ms[1], ms[2], ms[0]])
print(lhs.shape, np.array_equal(lhs, rhs))

# %% [markdown]
# ``permute_kron_product`` does the same with index maps and cross-checks the
# result against the directly formed product.

# %%
print(np.array_equal(permute_kron_product(sigma, ms), rhs))

# %% [markdown]
# With a single column vector factor only one side is permuted; for example
# ``V`` is the identity when every factor has one column.

# %%
cols = [rng.integers(-9, 10, size=(n, 1)) for n in (2, 3, 2)]
print(permute_kron_product((3, 1, 2), cols).ravel())
