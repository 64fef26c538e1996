"""Dense linear algebra for small matrices.

Everything here is sized for the 3x3 / 6x6 / 9x9 / 18x18 matrices the
pipeline produces, favours reproducibility over speed, and raises
typed errors instead of returning garbage.  Eigenvalues of Hermitian
matrices come from a cyclic Jacobi iteration on a real symmetric
embedding, so results are deterministic across platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonConvergence, NotSelfAdjoint, SingularMatrix

_ALLOWED_SIZES = (3, 6, 9, 18)

# relative thresholds, all against the Frobenius norm of the input
_HERMITIAN_DEFECT_TOL = 1e-9
_JACOBI_OFF_TOL = 1e-13
_JACOBI_MAX_SWEEPS = 60
_PIVOT_TOL = 1e-14
_RESIDUAL_TOL = 1e-10
_PAIR_GAP_TOL = 1e-9


def _as_square(m, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {a.shape}")
    return a


def frobenius(m) -> float:
    return float(np.linalg.norm(np.asarray(m)))


def mat_mul(a, b) -> np.ndarray:
    """Product of two matrices with an explicit shape check."""
    aa, bb = np.asarray(a), np.asarray(b)
    if aa.ndim != 2 or bb.ndim != 2 or aa.shape[1] != bb.shape[0]:
        raise DimensionMismatch(f"cannot multiply shapes {aa.shape} and {bb.shape}")
    return aa @ bb


def solve(a, b) -> np.ndarray:
    """Solve a X = b by Gaussian elimination with partial pivoting.

    Refuses near-singular systems (tiny pivot) and verifies the
    residual of the computed solution.
    """
    aa = _as_square(a, "coefficient matrix")
    bb = np.asarray(b)
    rhs_was_vector = bb.ndim == 1
    if rhs_was_vector:
        bb = bb[:, None]
    if bb.ndim != 2 or bb.shape[0] != aa.shape[0]:
        raise DimensionMismatch(f"rhs shape {np.asarray(b).shape} does not match {aa.shape}")

    n = aa.shape[0]
    dtype = np.result_type(aa.dtype, bb.dtype, float)
    aug = np.hstack([aa.astype(dtype), bb.astype(dtype)])
    scale = frobenius(aa)
    if scale == 0.0:
        raise SingularMatrix("zero coefficient matrix")

    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(aug[col:, col])))
        pivot = aug[pivot_row, col]
        if abs(pivot) < _PIVOT_TOL * scale:
            raise SingularMatrix(f"pivot {abs(pivot):.3e} below {_PIVOT_TOL:.0e} * norm")
        if pivot_row != col:
            aug[[col, pivot_row]] = aug[[pivot_row, col]]
        factors = aug[col + 1:, col] / aug[col, col]
        aug[col + 1:, col:] -= factors[:, None] * aug[col, col:]

    x = np.zeros((n, bb.shape[1]), dtype=dtype)
    for row in range(n - 1, -1, -1):
        x[row] = (aug[row, n:] - aug[row, row + 1:n] @ x[row + 1:]) / aug[row, row]

    resid = frobenius(aa @ x - bb)
    rhs_norm = frobenius(bb)
    if rhs_norm > 0.0 and resid > _RESIDUAL_TOL * rhs_norm:
        raise SingularMatrix(f"solution residual {resid:.3e} exceeds {_RESIDUAL_TOL:.0e} * |b|")
    return x[:, 0] if rhs_was_vector else x


def _jacobi_eigenvalues(sym: np.ndarray, scale: float) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations."""
    a = sym.astype(float).copy()
    n = a.shape[0]
    if scale == 0.0:
        return np.zeros(n)
    stop = _JACOBI_OFF_TOL * scale
    for _ in range(_JACOBI_MAX_SWEEPS):
        # measure the off-diagonal mass directly; the subtraction
        # norm(a)^2 - norm(diag)^2 cannot see below sqrt(ulp)
        hollow = a.copy()
        np.fill_diagonal(hollow, 0.0)
        off = float(np.linalg.norm(hollow))
        if off <= stop:
            return np.diag(a).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                if apq == 0.0:
                    continue
                gap = float(a[q, q]) - float(a[p, p])
                if abs(apq) < 1e-300 * max(1.0, abs(gap)):
                    # a denormal pivot cannot be rotated away stably
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = gap / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    raise NonConvergence(f"Jacobi sweeps exhausted with off-norm {off:.3e}")


@dataclass(frozen=True)
class EigenResult:
    """Eigenvalues of a self-adjoint matrix, sorted descending."""

    eigenvalues: tuple[float, ...]
    zero_tol_used: float
    n_positive: int
    n_negative: int
    n_zero: int

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.n_positive, self.n_negative, self.n_zero)


def count_signs(eigenvalues, zero_tol: float) -> tuple[int, int, int]:
    vals = np.asarray(eigenvalues, dtype=float)
    pos = int(np.sum(vals > zero_tol))
    neg = int(np.sum(vals < -zero_tol))
    return pos, neg, len(vals) - pos - neg


def eig_selfadjoint(m, zero_tol: float) -> EigenResult:
    """All eigenvalues of a self-adjoint matrix.

    A complex Hermitian H is diagonalized through the real symmetric
    embedding [[Re H, -Im H], [Im H, Re H]], whose spectrum is that of
    H with every eigenvalue doubled; the doubled pairs are collapsed by
    pairing adjacent sorted values.  Raises NotSelfAdjoint when the
    input is too far from its own conjugate transpose, NonConvergence
    if rotation sweeps run out.
    """
    a = _as_square(m)
    if a.shape[0] not in _ALLOWED_SIZES:
        raise DimensionMismatch(f"unsupported size {a.shape[0]}, expected one of {_ALLOWED_SIZES}")
    scale = frobenius(a)
    defect = frobenius(a - a.conj().T)
    if defect > _HERMITIAN_DEFECT_TOL * max(scale, 1e-300):
        raise NotSelfAdjoint(f"defect {defect:.3e} vs norm {scale:.3e}")
    sym = 0.5 * (a + a.conj().T)

    if np.iscomplexobj(sym) and np.any(sym.imag != 0.0):
        re, im = sym.real, sym.imag
        embedded = np.block([[re, -im], [im, re]])
        doubled = np.sort(_jacobi_eigenvalues(embedded, frobenius(embedded)))[::-1]
        gaps = np.abs(doubled[0::2] - doubled[1::2])
        if gaps.size and float(gaps.max()) > _PAIR_GAP_TOL * max(scale, 1e-300):
            raise NonConvergence(f"embedding pair gap {float(gaps.max()):.3e} too large")
        values = 0.5 * (doubled[0::2] + doubled[1::2])
    else:
        values = np.sort(_jacobi_eigenvalues(np.real(sym), scale))[::-1]

    pos, neg, zero = count_signs(values, zero_tol)
    return EigenResult(
        eigenvalues=tuple(float(v) for v in values),
        zero_tol_used=float(zero_tol),
        n_positive=pos,
        n_negative=neg,
        n_zero=zero,
    )
