"""Dense real/complex matrix plumbing: predicates, norms, seeded generation.

State vectors and matrices are plain ``numpy.ndarray`` objects
(``float64`` or ``complex128``).  Everything here is a pure function, so
all of it is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

__all__ = [
    "Tolerances",
    "DEFAULT_TOL",
    "inner_product",
    "norm",
    "is_skew_symmetric",
    "is_special_orthogonal",
    "random_skew",
]


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds used by predicates and decompositions.

    ``zero_freq_tol`` is relative: an oscillation frequency counts as a
    zero mode when it does not exceed ``zero_freq_tol`` times the
    Frobenius norm of the generator.  The remaining fields are absolute
    (``skew_tol`` and ``orth_tol`` enter scale-invariant tests, see the
    predicates below).
    """

    skew_tol: float = 1e-10
    orth_tol: float = 1e-10
    norm_tol: float = 1e-12
    zero_freq_tol: float = 1e-10
    recon_tol: float = 1e-10

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not 0.0 < value < 1.0:
                raise ValueError(f"{f.name} must lie in (0, 1), got {value}")


DEFAULT_TOL = Tolerances()


def _as_vector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=float)
    if psi.ndim != 1 or psi.shape[0] < 1:
        raise ValueError(f"expected a 1-d vector, got shape {psi.shape}")
    return psi


def _as_square(A, dtype=float) -> np.ndarray:
    A = np.asarray(A, dtype=dtype)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    return A


def inner_product(psi, phi) -> float:
    """Euclidean scalar product ``sum_k psi_k * phi_k`` of two real vectors."""
    psi = _as_vector(psi)
    phi = _as_vector(phi)
    if psi.shape != phi.shape:
        raise ValueError(f"dimension mismatch: {psi.shape[0]} vs {phi.shape[0]}")
    return float(np.dot(psi, phi))


def norm(psi) -> float:
    """Euclidean length of a real vector."""
    return float(np.linalg.norm(_as_vector(psi)))


def is_skew_symmetric(A, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True when ``A^T == -A`` up to ``skew_tol`` relative to max|A|."""
    A = _as_square(A)
    defect = np.max(np.abs(A + A.T)) if A.size else 0.0
    scale = 1.0 + (np.max(np.abs(A)) if A.size else 0.0)
    return bool(defect <= tol.skew_tol * scale)


def is_special_orthogonal(R, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True when ``R^T R == I`` and ``det R == 1`` up to ``orth_tol``.

    The orthogonality residual is measured in the Frobenius norm and
    allowed to grow linearly with the dimension.  The determinant is
    computed by LU factorization with partial pivoting.
    """
    R = _as_square(R)
    n = R.shape[0]
    defect = np.linalg.norm(R.T @ R - np.eye(n))
    if defect > tol.orth_tol * n:
        return False
    return bool(abs(np.linalg.det(R) - 1.0) <= tol.orth_tol)


def random_skew(n: int, seed: int) -> np.ndarray:
    """Seeded random skew-symmetric matrix, ``(M - M^T)/2`` for Gaussian M.

    The generator is PCG64 with numpy's ziggurat normal sampler, so a
    given ``(n, seed)`` reproduces the same matrix bit-exactly across
    platforms.  The skew symmetry is exact by construction: the diagonal
    is identically zero and opposite entries are exact negations.

    Parameters
    ----------
    n : int
        Dimension, at least 1.
    seed : int
        Seed for the PCG64 bit generator.

    Returns
    -------
    numpy.ndarray
        Skew-symmetric ``(n, n)`` matrix.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    M = rng.standard_normal((n, n))
    return (M - M.T) / 2.0
