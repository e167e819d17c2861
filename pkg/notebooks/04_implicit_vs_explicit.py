# %% [markdown]
# # Index maps versus stored matrices
#
# Applying a tensor permutation matrix only moves entries, so it never needs
# to be stored. Compare the index map with a coordinate-list product.

# %%
import time

import numpy as np

from tensorperm import TpmSpec, apply_tpm, build_tpm_explicit, build_tpm_implicit

rng = np.random.default_rng(0)
for dims in [(16, 16, 16), (32, 32, 32), (64, 64, 64)]:
    spec = TpmSpec((3, 1, 2), dims)
    v = rng.standard_normal(spec.n)
    implicit = build_tpm_implicit(spec)
    explicit = build_tpm_explicit(spec)

    t0 = time.perf_counter()
    a = apply_tpm(implicit, v)
    t1 = time.perf_counter()
    b = explicit.matvec(v)
    t2 = time.perf_counter()
    assert np.array_equal(a, b)
    print(f"N={spec.n:>7}  implicit {t1 - t0:.2e}s  explicit {t2 - t1:.2e}s")

# %% [markdown]
# The same comparison is available from the shell:
#
#     tensorperm bench --sigma 3,1,2 --dims 16,16,16 --trials 5
