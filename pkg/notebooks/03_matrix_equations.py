# %% [markdown]
# # Solving A X B = C and A X + X B = C by vectorization
#
# Both equations become ordinary linear systems on the row-major
# vectorization ``L(X)``. Each has a twin system in ``L(X^T)``, and the two
# are related by commutation matrices.

# %%
import numpy as np

from tensorperm import (
    AxbEquation,
    SingularSystemError,
    SylvesterEquation,
    assemble_axb,
    assemble_axb_transposed,
    solve_axb,
    solve_sylvester,
    tcm,
    tcm_transform,
)

rng = np.random.default_rng(3)
a = np.array([[2.0, 1.0], [1.0, 3.0]])
b = np.array([[1.0, -1.0, 0.0], [2.0, 1.0, 1.0], [0.0, 1.0, 4.0]])
x0 = rng.integers(-9, 10, size=(2, 3)).astype(float)
eq = AxbEquation(a, b, a @ x0 @ b)

s1 = assemble_axb(eq)
s2 = assemble_axb_transposed(eq)
m, q = eq.c.shape
n, p = eq.unknown_shape
t = tcm_transform(s1, tcm(m, q), tcm(n, p))
print(np.array_equal(t.coeff, s2.coeff), np.array_equal(t.rhs, s2.rhs))

# %%
for via in (1, 2):
    x = solve_axb(eq, via)
    print(via, np.max(np.abs(eq.residual(x))), np.max(np.abs(x - x0)))

# %% [markdown]
# Sylvester equations work the same way. If ``A`` and ``-B`` share an
# eigenvalue the system is singular and the solver says so.

# %%
syl = SylvesterEquation(a, b, a @ x0 + x0 @ b)
for via in (3, 4):
    print(via, np.max(np.abs(solve_sylvester(syl, via) - x0)))

try:
    solve_sylvester(SylvesterEquation(a, -a, np.eye(2)))
except SingularSystemError as exc:
    print(exc)
