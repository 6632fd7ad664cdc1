"""Dense vector/matrix helpers and dominant-eigenvalue estimation.

All arithmetic is 64-bit floating point on numpy arrays. Vectors and
matrices are validated on entry (finite, dimensionally consistent) and the
routines never mutate their inputs.
"""

import numpy as np

from .errors import DimensionError, InvalidMatrix, InvalidParameter, NoConvergence

_SYMMETRY_RTOL = 1e-10


def as_vector(x):
    """Coerce to a finite 1-d float64 array, copying the input."""
    v = np.array(x, dtype=float)
    if v.ndim != 1:
        raise DimensionError(f"expected a 1-d vector, got ndim={v.ndim}")
    if not np.all(np.isfinite(v)):
        raise InvalidParameter("vector entries must be finite (no NaN/Inf)")
    return v


def as_matrix(m):
    """Coerce to a finite 2-d float64 array, copying the input."""
    a = np.array(m, dtype=float)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-d matrix, got ndim={a.ndim}")
    if not np.all(np.isfinite(a)):
        raise InvalidParameter("matrix entries must be finite (no NaN/Inf)")
    return a


def matvec(m, v):
    """Matrix-vector product with explicit dimension checking."""
    m = as_matrix(m)
    v = as_vector(v)
    if m.shape[1] != v.shape[0]:
        raise DimensionError(f"matvec: {m.shape} incompatible with length {v.shape[0]}")
    return m @ v


def dot(u, v):
    """Euclidean inner product of two equal-length vectors."""
    u = as_vector(u)
    v = as_vector(v)
    if u.shape != v.shape:
        raise DimensionError(f"dot: lengths {u.shape[0]} and {v.shape[0]} differ")
    return float(u @ v)


def norm2(v):
    """Euclidean norm of a vector."""
    return float(np.linalg.norm(as_vector(v)))


def axpy(a, x, y):
    """Return a*x + y for scalar a and equal-length vectors x, y."""
    x = as_vector(x)
    y = as_vector(y)
    if x.shape != y.shape:
        raise DimensionError(f"axpy: lengths {x.shape[0]} and {y.shape[0]} differ")
    return float(a) * x + y


def dominant_eigenvalue(m, tol=1e-10, max_iter=10_000):
    """Largest eigenvalue of a symmetric PSD matrix by power iteration.

    Starts from a fixed deterministic ramp vector (1, 2, ..., n normalized;
    the all-ones vector can be exactly orthogonal to the dominant
    eigenvector of a demeaned Gram matrix, which locks the iteration onto a
    smaller eigenvalue) and stops when the Rayleigh quotient changes by at
    most ``tol`` relative between sweeps.

    Raises InvalidMatrix for non-square or asymmetric input (beyond 1e-10
    relative asymmetry) and NoConvergence if ``max_iter`` sweeps do not
    settle the Rayleigh quotient.
    """
    a = as_matrix(m)
    n, ncols = a.shape
    if n != ncols:
        raise InvalidMatrix(f"matrix is {n}x{ncols}, not square")
    if tol <= 0:
        raise InvalidParameter("tol must be positive")
    scale = float(np.max(np.abs(a)))
    if scale == 0.0:
        return 0.0  # zero matrix: valid PSD edge case
    if float(np.max(np.abs(a - a.T))) > _SYMMETRY_RTOL * scale:
        raise InvalidMatrix("matrix asymmetry exceeds 1e-10 relative")

    v = np.arange(1.0, n + 1.0)
    v /= np.linalg.norm(v)
    lam = float(v @ a @ v)
    restarts = 0
    for _ in range(int(max_iter)):
        w = a @ v
        wn = np.linalg.norm(w)
        if wn == 0.0:
            # v fell in the nullspace; restart from the next basis vector
            if restarts >= n:
                return 0.0
            v = np.zeros(n)
            v[restarts] = 1.0
            restarts += 1
            continue
        v = w / wn
        lam_new = float(v @ a @ v)
        if abs(lam_new - lam) <= tol * max(abs(lam_new), np.finfo(float).tiny):
            return lam_new
        lam = lam_new
    raise NoConvergence(f"power iteration did not converge in {max_iter} sweeps")
