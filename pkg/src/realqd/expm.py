"""Generic dense matrix exponential by scaling and squaring.

Kept deliberately independent of the block-diagonal propagator so the two
can cross-validate each other: this routine never looks at the spectral
structure of its argument.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["expm_taylor"]

_ORDER = 18


def expm_taylor(M: np.ndarray) -> np.ndarray:
    """Matrix exponential via a fixed-order Taylor core.

    The argument is scaled by ``2**-s`` until its 1-norm is at most 1/2,
    the order-18 Taylor polynomial is evaluated by Horner's scheme, and
    the result is squared ``s`` times.

    Parameters
    ----------
    M : numpy.ndarray
        Square real or complex matrix.

    Returns
    -------
    numpy.ndarray
        ``exp(M)`` to near machine precision for moderate norms.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    n = M.shape[0]
    eye = np.eye(n, dtype=M.dtype if np.iscomplexobj(M) else float)

    nrm = np.linalg.norm(M, 1)
    s = max(0, int(math.ceil(math.log2(nrm / 0.5)))) if nrm > 0.5 else 0
    X = M / (2.0**s)

    E = eye / math.factorial(_ORDER)
    for k in range(_ORDER - 1, -1, -1):
        E = X @ E + eye / math.factorial(k)
    for _ in range(s):
        E = E @ E
    return E
