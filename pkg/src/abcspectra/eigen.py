"""Deterministic dense symmetric eigensolvers.

Two independent routes are kept on purpose: power iteration (with the
Rayleigh quotient as the eigenvalue estimate) delivers the spectral radius
and its nonnegative eigenvector, while cyclic Jacobi rotations deliver the
full spectrum for cross-checks.  Agreement between the two is part of the
test contract, so a defect has to show up in both to slip through.
"""

import math
from dataclasses import dataclass

import numpy as np

MAX_POWER_ITERATIONS = 100_000
RAYLEIGH_TOL = 1e-13
RESIDUAL_TOL = 1e-10
# keep iterating below the contractual residual while progress is cheap;
# tight eigenvectors are needed downstream (orbit-equality checks at 1e-9)
RESIDUAL_POLISH = 1e-12
JACOBI_OFF_FACTOR = 1e-13
MAX_JACOBI_SWEEPS = 60
SPECTRUM_DIM_CAP = 2000


class ConvergenceError(RuntimeError):
    """Raised when the iteration cap is hit; carries the best iterate."""

    def __init__(self, message, radius, vector, residual, iterations):
        super().__init__(message)
        self.radius = radius
        self.vector = vector
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class SpectralResult:
    radius: float
    perron: np.ndarray
    iterations: int
    residual: float


def _check_symmetric(mat):
    arr = np.asarray(mat, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise ValueError("matrix is not symmetric")
    return arr


def spectral_radius(mat):
    """Largest eigenvalue and nonnegative unit eigenvector of a symmetric
    entrywise-nonnegative matrix.

    Iterates on the diagonally shifted matrix (shift = max row sum) so the
    dominant eigenvalue is the largest by magnitude even for near-bipartite
    inputs, starting from the all-ones vector.  Deterministic: identical
    input yields identical output bytes.
    """
    arr = _check_symmetric(mat)
    if np.any(arr < 0):
        raise ValueError("matrix has negative entries")
    n = arr.shape[0]
    shift = float(arr.sum(axis=1).max())
    if shift == 0.0:  # nonnegative with all row sums zero: the zero matrix
        vec = np.full(n, 1.0 / np.sqrt(n))
        return SpectralResult(0.0, vec, 0, 0.0)

    shifted = arr + shift * np.eye(n)
    x = np.full(n, 1.0 / np.sqrt(n))
    mu_prev = np.inf
    res_prev = np.inf
    stalled = 0
    for it in range(1, MAX_POWER_ITERATIONS + 1):
        y = shifted @ x
        mu = float(x @ y)
        residual = float(np.linalg.norm(y - mu * x))
        settled = abs(mu - mu_prev) < RAYLEIGH_TOL and residual < RESIDUAL_TOL
        if settled:
            stalled = stalled + 1 if residual >= 0.9999 * res_prev else 0
            if residual <= RESIDUAL_POLISH or stalled >= 4:
                # sign convention: largest-magnitude entry positive
                if x[int(np.argmax(np.abs(x)))] < 0:
                    x = -x
                return SpectralResult(mu - shift, x, it - 1, residual)
        x = y / float(np.linalg.norm(y))
        mu_prev = mu
        res_prev = residual
    raise ConvergenceError(
        f"power iteration did not converge in {MAX_POWER_ITERATIONS} iterations "
        f"(last residual {res_prev:.3e})",
        radius=mu_prev - shift, vector=x, residual=res_prev,
        iterations=MAX_POWER_ITERATIONS)


def _off_norm_sq(arr):
    # summed directly: subtracting the diagonal from the full norm would
    # leave cancellation noise around eps * ||A||^2, far above the target
    off = arr.copy()
    np.fill_diagonal(off, 0.0)
    return float((off * off).sum())


def full_spectrum(mat):
    """All eigenvalues of a symmetric matrix, descending, via cyclic Jacobi
    rotations run until the off-diagonal Frobenius norm falls below
    1e-13 times the Frobenius norm of the input."""
    arr = _check_symmetric(mat).copy()
    n = arr.shape[0]
    if n > SPECTRUM_DIM_CAP:
        raise ValueError(f"full_spectrum supports n <= {SPECTRUM_DIM_CAP}, got {n}")
    norm = float(np.linalg.norm(arr))
    threshold_sq = (JACOBI_OFF_FACTOR * norm) ** 2
    for _ in range(MAX_JACOBI_SWEEPS):
        if _off_norm_sq(arr) <= threshold_sq:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = arr[p, q]
                if apq == 0.0:
                    continue
                app = arr[p, p]
                aqq = arr[q, q]
                tau = (aqq - app) / (2.0 * apq)
                # hypot keeps huge tau (tiny pivots) from overflowing
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                row_p = arr[p, :].copy()
                row_q = arr[q, :].copy()
                arr[p, :] = c * row_p - s * row_q
                arr[q, :] = s * row_p + c * row_q
                col_p = arr[:, p].copy()
                col_q = arr[:, q].copy()
                arr[:, p] = c * col_p - s * col_q
                arr[:, q] = s * col_p + c * col_q
                arr[p, q] = arr[q, p] = 0.0
    else:
        raise ConvergenceError(
            f"Jacobi sweeps did not converge in {MAX_JACOBI_SWEEPS} sweeps",
            radius=float(np.diagonal(arr).max()), vector=None,
            residual=np.sqrt(_off_norm_sq(arr)), iterations=MAX_JACOBI_SWEEPS)
    values = np.sort(np.diagonal(arr).copy())[::-1]
    return [float(v) for v in values]
