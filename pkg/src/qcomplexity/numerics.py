"""Dense linear-algebra kernel: Hermitian eigenvalues, entropies, tensors.

Matrices and vectors are plain numpy arrays.  Probability vectors are
1-D float arrays with nonnegative entries summing to 1; density-matrix
spectra are the eigenvalue lists returned by ``hermitian_eigenvalues``.

Eigenvalues are computed with a cyclic Jacobi sweep specialised to
complex Hermitian input.  The matrices handled here are small (at most
a few dozen rows), where Jacobi is simple, accurate to machine
precision, and has no failure modes worth handling.
"""

from __future__ import annotations

import numpy as np

from .errors import ContractViolationError

HERMITIAN_ATOL = 1e-10
JACOBI_OFFDIAG_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
PROBABILITY_SUM_ATOL = 1e-8
SPECTRUM_CLAMP_FLOOR = -1e-10


def _as_square_complex(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolationError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(float))):
        raise ContractViolationError("matrix contains non-finite entries")
    return a


def hermitian_eigenvalues(matrix, *, atol: float = HERMITIAN_ATOL,
                          offdiag_tol: float = JACOBI_OFFDIAG_TOL,
                          max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a complex Hermitian matrix, descending.

    Cyclic Jacobi: each off-diagonal entry is annihilated in turn by a
    phase-stripped 2x2 rotation; sweeps repeat until the off-diagonal
    Frobenius mass falls below ``offdiag_tol`` relative to the input
    scale.  Convergence is quadratic once entries are small, so the
    sweep cap is generous rather than tight.
    """
    a = _as_square_complex(matrix)
    deviation = np.abs(a - a.conj().T)
    worst = np.unravel_index(np.argmax(deviation), deviation.shape)
    if deviation[worst] > atol:
        i, j = worst
        raise ContractViolationError(
            f"matrix is not Hermitian: entry ({i}, {j}) differs from its "
            f"conjugate transpose by {deviation[worst]:.3e}")
    a = (a + a.conj().T) / 2.0

    n = a.shape[0]
    if n == 1:
        return a.real.diagonal().copy()
    scale = max(1.0, float(np.linalg.norm(a)))
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        # Norm of the off-diagonal part taken entrywise; subtracting the
        # diagonal mass from the total cancels catastrophically here.
        off = float(np.linalg.norm(a[off_mask]))
        if off <= offdiag_tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                m = abs(apq)
                if m == 0.0:
                    continue
                phi = np.angle(apq)
                tau = (a[q, q].real - a[p, p].real) / (2.0 * m)
                if tau == 0.0:
                    t = 1.0
                else:
                    t = np.sign(tau) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # 2x2 unitary: a real rotation after stripping the phase of a_pq.
                u = np.array([[c, s], [-s * np.exp(-1j * phi), c * np.exp(-1j * phi)]])
                a[:, [p, q]] = a[:, [p, q]] @ u
                a[[p, q], :] = u.conj().T @ a[[p, q], :]
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    values = np.sort(a.diagonal().real)[::-1]
    return np.ascontiguousarray(values)


def _as_probability_vector(weights, *, sum_atol: float) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1:
        raise ContractViolationError(f"expected a 1-D weight vector, got shape {w.shape}")
    if not np.all(np.isfinite(w)):
        raise ContractViolationError("weights contain non-finite entries")
    if np.any(w < 0.0):
        raise ContractViolationError(f"negative weight {w.min():.3e}")
    total = float(w.sum())
    if abs(total - 1.0) > sum_atol:
        raise ContractViolationError(f"weights sum to {total!r}, expected 1")
    return w


def shannon_entropy(weights, *, sum_atol: float = PROBABILITY_SUM_ATOL) -> float:
    """Base-2 entropy of a probability vector.  Zero weights contribute zero."""
    w = _as_probability_vector(weights, sum_atol=sum_atol)
    positive = w[w > 0.0]
    # + 0.0 turns the signed zero of an empty or point-mass sum into 0.0.
    return float(-np.sum(positive * np.log2(positive))) + 0.0


def von_neumann_entropy(spectrum, *, sum_atol: float = PROBABILITY_SUM_ATOL,
                        clamp_floor: float = SPECTRUM_CLAMP_FLOOR) -> float:
    """Base-2 entropy of a density-matrix spectrum.

    Eigenvalues in [clamp_floor, 0) are rounding debris from the
    eigensolver and are clamped to zero; anything more negative is a
    genuine contract violation.
    """
    s = np.asarray(spectrum, dtype=float)
    if s.ndim != 1:
        raise ContractViolationError(f"expected a 1-D spectrum, got shape {s.shape}")
    if np.any(s < clamp_floor):
        raise ContractViolationError(f"spectrum has negative eigenvalue {s.min():.3e}")
    s = np.where(s < 0.0, 0.0, s)
    return shannon_entropy(s, sum_atol=sum_atol)


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product of two vectors or two operators."""
    x = np.asarray(a)
    y = np.asarray(b)
    if x.ndim != y.ndim or x.ndim not in (1, 2):
        raise ContractViolationError(
            f"tensor_product expects two vectors or two matrices, "
            f"got shapes {x.shape} and {y.shape}")
    return np.kron(x, y)
