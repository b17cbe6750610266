"""Matrix Mittag-Leffler evaluation through spectral decomposition.

For a diagonalizable A = P diag(l_j) P^-1 the matrix function acts on the
eigenvalues: E_alpha(A t^alpha) = P diag(E_alpha(l_j t^alpha)) P^-1.  The
built-in eigensolver handles the symmetric case with cyclic Jacobi
rotations; general diagonalizable matrices can be supplied as a ready
:class:`Spectrum`.
"""

import math
from dataclasses import dataclass

import numpy as np

from mlsemigroup.core import SeriesConfig, ml_e
from mlsemigroup.errors import ConvergenceError, DomainError

__all__ = ["Spectrum", "eig_symmetric", "ml_matrix", "matrix_defect"]

_SYMMETRY_TOL = 1e-12
_OFFDIAG_TOL = 1e-12
_MAX_SWEEPS = 100
_BASIS_TOL = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with the diagonalizing basis and its inverse."""

    order: int
    eigenvalues: np.ndarray
    basis: np.ndarray
    basis_inverse: np.ndarray

    def __post_init__(self):
        n = self.order
        if self.eigenvalues.shape != (n,):
            raise DomainError("eigenvalues must have shape (order,)")
        if self.basis.shape != (n, n) or self.basis_inverse.shape != (n, n):
            raise DomainError("basis matrices must be square of size order")
        residual = np.max(np.abs(self.basis @ self.basis_inverse - np.eye(n)))
        if residual > _BASIS_TOL:
            raise DomainError(
                f"basis * basis_inverse deviates from identity by {residual}"
            )


def eig_symmetric(a) -> Spectrum:
    """Diagonalize a real symmetric matrix with cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius mass is at most 1e-12
    (ConvergenceError after 100 sweeps).  The returned basis is orthogonal,
    so basis_inverse is its transpose; eigenvalues come back ascending.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"matrix must be square, got shape {a.shape}")
    if np.max(np.abs(a - a.T)) > _SYMMETRY_TOL:
        raise DomainError("matrix is not symmetric within 1e-12")
    n = a.shape[0]
    v = np.eye(n)

    def offdiag(m):
        return math.sqrt(np.sum(np.tril(m, -1) ** 2) + np.sum(np.triu(m, 1) ** 2))

    sweeps = 0
    while offdiag(a) > _OFFDIAG_TOL:
        if sweeps >= _MAX_SWEEPS:
            raise ConvergenceError(
                f"Jacobi sweeps exceeded {_MAX_SWEEPS} with off-diagonal mass {offdiag(a)}"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(theta * theta + 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
                v = v @ rot
        sweeps += 1
    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return Spectrum(
        order=n,
        eigenvalues=eigenvalues[order],
        basis=v[:, order].copy(),
        basis_inverse=v[:, order].T.copy(),
    )


def ml_matrix(
    alpha: float, spec: Spectrum, t: float, cfg: SeriesConfig | None = None
) -> np.ndarray:
    """E_alpha(A t^alpha) from the spectrum of A; identity at t = 0."""
    if t < 0.0:
        raise DomainError(f"t must be nonnegative, got {t}")
    n = spec.order
    if t == 0.0:
        return np.eye(n)
    diag = np.empty(n)
    for j, lam in enumerate(spec.eigenvalues):
        try:
            diag[j] = ml_e(alpha, float(lam) * t**alpha, cfg).value
        except DomainError as exc:
            raise DomainError(
                f"eigenvalue index {j} (lambda_{j} = {lam}): {exc}"
            ) from exc
    return spec.basis @ np.diag(diag) @ spec.basis_inverse


def matrix_defect(
    alpha: float, spec: Spectrum, t: float, s: float, cfg: SeriesConfig | None = None
) -> float:
    """Max-entry norm of E_alpha(A(t+s)^alpha) - E_alpha(At^alpha) E_alpha(As^alpha)."""
    if t < 0.0 or s < 0.0:
        raise DomainError(f"t and s must be nonnegative, got t={t}, s={s}")
    m_sum = ml_matrix(alpha, spec, t + s, cfg)
    m_prod = ml_matrix(alpha, spec, t, cfg) @ ml_matrix(alpha, spec, s, cfg)
    return float(np.max(np.abs(m_sum - m_prod)))
