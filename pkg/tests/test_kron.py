import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from tensorperm import (
    DimensionError,
    MixedRadix,
    SizeOverflowError,
    delinearize,
    kron,
    kron_many,
    linearize,
    unvec_row,
    vec_row,
)
from tensorperm.kron import delinearize_all, linearize_all

from oracles import brute_kron, random_int_matrix

small_shapes = st.tuples(st.integers(1, 4), st.integers(1, 4))
int_matrices = small_shapes.flatmap(
    lambda s: hnp.arrays(np.int64, s, elements=st.integers(-9, 9))
)


class TestKron:
    def test_identity(self):
        np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_scalar_factor(self):
        np.testing.assert_array_equal(kron([[2]], [[1, 2], [3, 4]]), [[2, 4], [6, 8]])

    def test_column_times_row(self):
        out = kron(np.array([[1], [2]]), np.array([[3, 4]]))
        np.testing.assert_array_equal(out, [[3, 4], [6, 8]])

    def test_shape(self):
        assert kron(np.ones((2, 3)), np.ones((4, 5))).shape == (8, 15)

    def test_integer_dtype_kept(self):
        assert kron(np.eye(2, dtype=int), np.eye(2, dtype=int)).dtype.kind == "i"

    @given(int_matrices, int_matrices)
    def test_block_law(self, a, b):
        out = kron(a, b)
        m, n = a.shape
        p, r = b.shape
        for i, j, s, t in itertools.product(range(m), range(n), range(p), range(r)):
            assert out[i * p + s, j * r + t] == a[i, j] * b[s, t]

    @given(int_matrices, int_matrices)
    def test_matches_block_assembly_and_numpy(self, a, b):
        out = kron(a, b)
        np.testing.assert_array_equal(out, brute_kron(a, b))
        np.testing.assert_array_equal(out, np.kron(a, b))

    def test_vector_factors_give_vector(self):
        out = kron(np.ones((3, 1)), np.ones((4, 1)))
        assert out.shape == (12, 1)

    def test_rejects_non_matrix(self):
        with pytest.raises(DimensionError):
            kron(np.ones((2, 2, 2)), np.ones((1, 1)))
        with pytest.raises(DimensionError):
            kron(np.ones((0, 2)), np.ones((1, 1)))

    def test_overflow(self):
        big = np.broadcast_to(np.ones(1), (2**40, 1))
        with pytest.raises(SizeOverflowError):
            kron(big, big)


class TestKronMany:
    def test_singleton(self):
        m = np.array([[1, 2, 3]])
        np.testing.assert_array_equal(kron_many([m]), m)

    def test_identities(self):
        np.testing.assert_array_equal(kron_many([np.eye(2)] * 3), np.eye(8))

    def test_empty(self):
        with pytest.raises(DimensionError):
            kron_many([])

    def test_associativity_random(self, rng):
        for _ in range(50):
            a, b, c = (random_int_matrix(rng, (2, 2)) for _ in range(3))
            left = kron(kron(a, b), c)
            right = kron(a, kron(b, c))
            np.testing.assert_array_equal(kron_many([a, b, c]), left)
            np.testing.assert_array_equal(left, right)

    @settings(max_examples=50)
    @given(int_matrices, int_matrices, int_matrices)
    def test_associativity_rectangular(self, a, b, c):
        np.testing.assert_array_equal(kron(kron(a, b), c), kron(a, kron(b, c)))

    def test_overflow(self):
        with pytest.raises(SizeOverflowError):
            kron_many([np.broadcast_to(np.ones(1), (2**16, 1))] * 4)


class TestVec:
    def test_row_major(self):
        np.testing.assert_array_equal(vec_row([[1, 2], [3, 4]]), [[1], [2], [3], [4]])

    def test_scalar(self):
        np.testing.assert_array_equal(vec_row([[7]]), [[7]])

    def test_zero(self):
        np.testing.assert_array_equal(vec_row(np.zeros((2, 3))), np.zeros((6, 1)))

    def test_unvec_examples(self):
        np.testing.assert_array_equal(unvec_row(np.array([[1], [2], [3], [4]]), 2, 2), [[1, 2], [3, 4]])
        np.testing.assert_array_equal(unvec_row(np.array([[5]]), 1, 1), [[5]])
        np.testing.assert_array_equal(
            unvec_row(np.arange(1, 7).reshape(6, 1), 2, 3), [[1, 2, 3], [4, 5, 6]]
        )

    def test_unvec_mismatch(self):
        with pytest.raises(DimensionError):
            unvec_row(np.ones((5, 1)), 2, 3)
        with pytest.raises(DimensionError):
            unvec_row(np.ones((6, 2)), 2, 3)

    @given(int_matrices)
    def test_round_trip(self, x):
        v = vec_row(x)
        assert v.shape == (x.size, 1)
        for i, j in itertools.product(*map(range, x.shape)):
            assert v[i * x.shape[1] + j, 0] == x[i, j]
        np.testing.assert_array_equal(unvec_row(v, *x.shape), x)

    def test_vec_is_copy(self):
        x = np.zeros((2, 2))
        vec_row(x)[0, 0] = 1
        assert x[0, 0] == 0


class TestMixedRadix:
    def test_examples(self):
        r = MixedRadix((2, 3))
        assert r.total == 6
        assert linearize((0, 0), r) == 0
        assert linearize((1, 2), r) == 5
        assert delinearize(0, r) == (0, 0)
        assert delinearize(5, r) == (1, 2)

    def test_exhaustive_round_trip(self):
        r = MixedRadix((2, 3, 4))
        all_idx = list(itertools.product(range(2), range(3), range(4)))
        flats = [linearize(idx, r) for idx in all_idx]
        # product() enumerates with the last digit fastest, i.e. flat order
        assert flats == list(range(24))
        assert [delinearize(f, r) for f in range(24)] == all_idx

    def test_vectorized_agree(self):
        r = MixedRadix((3, 1, 2, 4))
        digits = delinearize_all(r)
        np.testing.assert_array_equal(digits, [delinearize(f, r) for f in range(r.total)])
        np.testing.assert_array_equal(linearize_all(digits, r), np.arange(r.total))
        np.testing.assert_array_equal(
            linearize_all(digits, r), np.ravel_multi_index(digits.T, r.dims)
        )

    @pytest.mark.parametrize("dims", [(), (0,), (2, -1)])
    def test_invalid_dims(self, dims):
        with pytest.raises(DimensionError):
            MixedRadix(dims)

    def test_overflow(self):
        with pytest.raises(SizeOverflowError):
            MixedRadix((2**32, 2**32))

    def test_out_of_range(self):
        r = MixedRadix((2, 3))
        with pytest.raises(DimensionError):
            linearize((2, 0), r)
        with pytest.raises(DimensionError):
            linearize((0,), r)
        with pytest.raises(DimensionError):
            delinearize(6, r)
        with pytest.raises(DimensionError):
            delinearize(-1, r)
