import numpy as np
import pytest

from fracopt.errors import DimensionError, InvalidMatrix, InvalidParameter, NoConvergence
from fracopt.linalg import as_vector, axpy, dominant_eigenvalue, dot, matvec, norm2


def random_psd(rng, n):
    m = rng.normal(size=(n, n))
    return m @ m.T


class TestDominantEigenvalue:
    def test_diagonal(self):
        assert dominant_eigenvalue(np.diag([3.0, 1.0])) == pytest.approx(3.0, rel=1e-10)

    def test_two_by_two_offdiagonal(self):
        # characteristic polynomial (2-lam)^2 - 1 = 0 -> lam = 3
        assert dominant_eigenvalue([[2.0, 1.0], [1.0, 2.0]], tol=1e-12) == pytest.approx(
            3.0, rel=1e-10
        )

    def test_scaled_identity(self):
        assert dominant_eigenvalue(1e-4 * np.eye(5)) == pytest.approx(1e-4, rel=1e-12)

    def test_zero_matrix(self):
        assert dominant_eigenvalue(np.zeros((4, 4))) == 0.0

    def test_demeaned_gram_regression(self):
        # dominant eigenvector (1,-1)/sqrt(2) is orthogonal to the all-ones
        # direction; the ramp start must still find 0.05, not stall at 0.01
        m = [[0.03, -0.02], [-0.02, 0.03]]
        assert dominant_eigenvalue(m, tol=1e-12) == pytest.approx(0.05, rel=1e-8)

    def test_non_square_rejected(self):
        with pytest.raises(InvalidMatrix):
            dominant_eigenvalue([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]])

    def test_asymmetric_rejected(self):
        with pytest.raises(InvalidMatrix):
            dominant_eigenvalue([[1.0, 2.0], [2.1, 1.0]])

    def test_tiny_asymmetry_tolerated(self):
        m = np.array([[2.0, 1.0], [1.0 + 1e-12, 2.0]])
        assert dominant_eigenvalue(m, tol=1e-10) == pytest.approx(3.0, rel=1e-6)

    def test_no_convergence(self):
        with pytest.raises(NoConvergence):
            dominant_eigenvalue([[2.0, 1.0], [1.0, 2.0]], tol=1e-14, max_iter=1)

    def test_bad_tol(self):
        with pytest.raises(InvalidParameter):
            dominant_eigenvalue(np.eye(2), tol=0.0)

    def test_matches_full_decomposition_oracle(self):
        rng = np.random.default_rng(7)
        for _ in range(30):
            n = int(rng.integers(1, 21))
            m = random_psd(rng, n)
            expected = float(np.linalg.eigvalsh(m)[-1])
            got = dominant_eigenvalue(m, tol=1e-13, max_iter=200_000)
            assert got == pytest.approx(expected, rel=1e-8)

    def test_rayleigh_lower_bound(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            n = int(rng.integers(2, 21))
            m = random_psd(rng, n)
            lam = dominant_eigenvalue(m, tol=1e-13, max_iter=200_000)
            for _ in range(5):
                v = rng.normal(size=n)
                rq = (v @ m @ v) / (v @ v)
                assert lam >= rq - 1e-8 * max(1.0, abs(rq))


class TestDenseOps:
    def test_matvec_identity(self):
        assert np.array_equal(matvec(np.eye(2), [3.0, 4.0]), [3.0, 4.0])

    def test_matvec_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            matvec(np.eye(3), [1.0, 2.0])

    def test_norm2_345(self):
        assert norm2([3.0, 4.0]) == 5.0

    def test_dot(self):
        assert dot([2.0, -1.0], [0.5, 0.5]) == 0.5

    def test_dot_length_mismatch(self):
        with pytest.raises(DimensionError):
            dot([1.0], [1.0, 2.0])

    def test_axpy(self):
        assert np.allclose(axpy(2.0, [1.0, 2.0], [10.0, 20.0]), [12.0, 24.0])

    def test_axpy_length_mismatch(self):
        with pytest.raises(DimensionError):
            axpy(1.0, [1.0, 2.0], [1.0])

    def test_norm_squared_equals_self_dot(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            v = rng.normal(size=int(rng.integers(1, 30)))
            n2 = norm2(v) ** 2
            d = dot(v, v)
            assert abs(n2 - d) <= 1e-12 * max(1.0, abs(d))

    def test_nan_rejected_on_construction(self):
        with pytest.raises(InvalidParameter):
            as_vector([1.0, np.nan])
        with pytest.raises(InvalidParameter):
            matvec([[np.inf, 0.0], [0.0, 1.0]], [1.0, 1.0])
