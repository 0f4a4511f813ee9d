"""Dense linear-algebra kernels shared by every index computation.

All rank, signature and symmetry decisions route through a single
``Tolerances`` object so the numerical hair-trigger points of the
package are controlled in one place.  Matrices are plain numpy arrays;
constructors validate shape and finiteness at the operation boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import AsymmetricInput, InputError, NonHermitianInput


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds.

    eps_rank : singular values below ``eps_rank * sigma_max`` count as zero
    eps_sym  : admissible relative symmetry defect
    eps_sign : relative degeneracy band when counting eigenvalue signs
    eps_exp  : accuracy requested from the matrix exponential
    """

    eps_rank: float = 1e-9
    eps_sym: float = 1e-8
    eps_sign: float = 1e-8
    eps_exp: float = 1e-12

    def __post_init__(self):
        for name in ("eps_rank", "eps_sym", "eps_sign", "eps_exp"):
            value = getattr(self, name)
            if not (isinstance(value, float) and value > 0.0):
                raise ValueError("%s must be a positive float" % name)


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, negative and numerically-zero eigenvalues."""

    n_pos: int
    n_neg: int
    n_zero: int

    @property
    def dim(self) -> int:
        return self.n_pos + self.n_neg + self.n_zero

    @property
    def signature(self) -> int:
        return self.n_pos - self.n_neg

    @property
    def pair(self) -> tuple:
        return (self.n_pos, self.n_neg)

    def __str__(self):
        return "(p=%d, q=%d, z=%d)" % (self.n_pos, self.n_neg, self.n_zero)


def as_matrix(a, name="matrix", dtype=float):
    """Coerce to a 2-d finite ndarray, rejecting NaN/Inf."""
    m = np.asarray(a, dtype=dtype)
    if m.ndim != 2:
        raise InputError("%s must be 2-dimensional, got ndim=%d" % (name, m.ndim))
    if not np.all(np.isfinite(m)):
        raise InputError("%s contains non-finite entries" % name)
    return m


def as_square(a, name="matrix", dtype=float):
    m = as_matrix(a, name, dtype)
    if m.shape[0] != m.shape[1]:
        raise InputError("%s must be square, got shape %s" % (name, m.shape))
    return m


def spectral_norm(m) -> float:
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def _count_bands(eigs, band):
    n_pos = int(np.sum(eigs > band))
    n_neg = int(np.sum(eigs < -band))
    n_zero = int(eigs.size - n_pos - n_neg)
    return Inertia(n_pos, n_neg, n_zero)


def sym_signature(s, tol: Tolerances = DEFAULT_TOL, scale=None) -> Inertia:
    """Inertia of a real symmetric matrix.

    The input is symmetrized after checking that the symmetry defect is
    below ``eps_sym`` relative to the matrix norm.  Eigenvalues within
    ``eps_sign * scale`` of zero are counted as zero; ``scale``
    defaults to the spectral radius of the symmetrized input, and may
    be overridden when an absolute floor is appropriate (for example
    when classifying crossing forms that are identically zero).
    """
    s = as_square(s, "symmetric matrix")
    defect = np.linalg.norm(s - s.T)
    if defect > tol.eps_sym * (1.0 + np.linalg.norm(s)):
        raise AsymmetricInput("symmetry defect %.3e too large" % defect)
    sym = 0.5 * (s + s.T)
    eigs = np.linalg.eigvalsh(sym) if sym.size else np.empty(0)
    if scale is None:
        scale = float(np.max(np.abs(eigs))) if eigs.size else 0.0
    return _count_bands(eigs, tol.eps_sign * scale)


def herm_signature(s, tol: Tolerances = DEFAULT_TOL, scale=None) -> Inertia:
    """Inertia of a complex Hermitian matrix; see ``sym_signature``."""
    s = as_square(s, "hermitian matrix", dtype=complex)
    defect = np.linalg.norm(s - s.conj().T)
    if defect > tol.eps_sym * (1.0 + np.linalg.norm(s)):
        raise NonHermitianInput("hermitian defect %.3e too large" % defect)
    herm = 0.5 * (s + s.conj().T)
    eigs = np.linalg.eigvalsh(herm) if herm.size else np.empty(0)
    if scale is None:
        scale = float(np.max(np.abs(eigs))) if eigs.size else 0.0
    return _count_bands(eigs, tol.eps_sign * scale)


def matrix_exp(m, tol: Tolerances = DEFAULT_TOL):
    """Matrix exponential (Pade with scaling and squaring)."""
    m = as_square(m, "exponent")
    return scipy.linalg.expm(m)


def singular_values(m):
    m = np.asarray(m)
    if m.size == 0:
        return np.empty(0)
    return np.linalg.svd(m, compute_uv=False)


def smallest_singular_value(m) -> float:
    s = singular_values(m)
    return float(s[-1]) if s.size else 0.0


def numerical_rank(m, tol: Tolerances = DEFAULT_TOL) -> int:
    s = singular_values(m)
    if s.size == 0:
        return 0
    return int(np.sum(s > tol.eps_rank * s[0]))


def kernel_basis(m, tol: Tolerances = DEFAULT_TOL):
    """Orthonormal basis of the (right) null space, columns of the result.

    Works for real and complex input.  Rank is decided relative to the
    largest singular value; a zero matrix therefore has a full kernel.
    """
    m = np.asarray(m)
    if m.ndim != 2:
        raise InputError("kernel_basis expects a 2-d array")
    rows, cols = m.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=m.dtype)
    if rows == 0:
        return np.eye(cols, dtype=m.dtype)
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(np.imag(m))):
        raise InputError("kernel_basis input contains non-finite entries")
    _, s, vh = np.linalg.svd(m, full_matrices=True)
    rank = int(np.sum(s > tol.eps_rank * s[0])) if s.size else 0
    return vh[rank:].conj().T


def orthonormal_columns(f, tol: Tolerances = DEFAULT_TOL, rank=None):
    """Orthonormal basis of the column span (SVD based, rank-revealing)."""
    f = np.asarray(f, dtype=float)
    if f.ndim != 2:
        raise InputError("orthonormal_columns expects a 2-d array")
    if f.shape[1] == 0 or f.size == 0:
        return np.zeros((f.shape[0], 0))
    u, s, _ = np.linalg.svd(f, full_matrices=False)
    if rank is None:
        rank = int(np.sum(s > tol.eps_rank * s[0])) if s.size else 0
    return u[:, :rank]
