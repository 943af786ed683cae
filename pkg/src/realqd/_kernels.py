"""Hot evolution kernels: numba-jitted with a pure-numpy fallback.

Backend selection is done once at import time via the ``REALQD_BACKEND``
environment variable:

* unset or ``"numba"``: use ``numba.njit`` kernels (``"numba"`` makes a
  missing numba installation a hard error, unset falls back silently);
* ``"numpy"``: force the pure-numpy implementations.

All kernels are pure functions of ndarrays and scalars.  State layout in
block coordinates: ``2*r`` oscillating components (pair ``j`` occupies
slots ``2j`` and ``2j+1``) followed by the static components.  Frequencies
are signed; a negative entry reverses that pair's sense of rotation.
"""

from __future__ import annotations

import os

import numpy as np

_REQUESTED = os.environ.get("REALQD_BACKEND", "").strip().lower()
if _REQUESTED not in ("", "numpy", "numba"):
    raise RuntimeError(
        f"REALQD_BACKEND={_REQUESTED!r} not recognized (use 'numpy' or 'numba')"
    )


def rotate_pairs_numpy(coords, freqs, tau):
    """Rotate each oscillator pair of `coords` by its angle ``freq*tau``."""
    out = coords.copy()
    r = freqs.shape[0]
    if r:
        ang = freqs * tau
        c = np.cos(ang)
        s = np.sin(ang)
        a = coords[0 : 2 * r : 2]
        b = coords[1 : 2 * r : 2]
        out[0 : 2 * r : 2] = c * a + s * b
        out[1 : 2 * r : 2] = -s * a + c * b
    return out


def rotate_pairs_grid_numpy(coords, freqs, taus):
    """Vectorized `rotate_pairs` over a whole grid of times, one row each."""
    m = taus.shape[0]
    out = np.broadcast_to(coords, (m, coords.shape[0])).copy()
    r = freqs.shape[0]
    if r:
        ang = np.outer(taus, freqs)
        c = np.cos(ang)
        s = np.sin(ang)
        a = coords[0 : 2 * r : 2]
        b = coords[1 : 2 * r : 2]
        out[:, 0 : 2 * r : 2] = c * a + s * b
        out[:, 1 : 2 * r : 2] = -s * a + c * b
    return out


def phase_evolve_numpy(amps, freqs, tau):
    """Multiply complex amplitudes by their stationary phases exp(-i*freq*tau)."""
    return amps * np.exp(-1j * freqs * tau)


def block_exp_numpy(freqs, zero_modes, tau):
    """Dense block-diagonal propagator: 2x2 rotations plus an identity tail."""
    r = freqs.shape[0]
    n = 2 * r + zero_modes
    out = np.eye(n)
    if r:
        ang = freqs * tau
        c = np.cos(ang)
        s = np.sin(ang)
        i = 2 * np.arange(r)
        out[i, i] = c
        out[i, i + 1] = s
        out[i + 1, i] = -s
        out[i + 1, i + 1] = c
    return out


_HAVE_NUMBA = False
if _REQUESTED != "numpy":
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:
        if _REQUESTED == "numba":
            raise


if _HAVE_NUMBA:

    @njit(cache=True)
    def rotate_pairs_jit(coords, freqs, tau):
        n = coords.shape[0]
        r = freqs.shape[0]
        out = np.empty(n)
        for j in range(r):
            c = np.cos(freqs[j] * tau)
            s = np.sin(freqs[j] * tau)
            a = coords[2 * j]
            b = coords[2 * j + 1]
            out[2 * j] = c * a + s * b
            out[2 * j + 1] = -s * a + c * b
        for k in range(2 * r, n):
            out[k] = coords[k]
        return out

    @njit(cache=True)
    def rotate_pairs_grid_jit(coords, freqs, taus):
        n = coords.shape[0]
        r = freqs.shape[0]
        m = taus.shape[0]
        out = np.empty((m, n))
        for t in range(m):
            for j in range(r):
                c = np.cos(freqs[j] * taus[t])
                s = np.sin(freqs[j] * taus[t])
                a = coords[2 * j]
                b = coords[2 * j + 1]
                out[t, 2 * j] = c * a + s * b
                out[t, 2 * j + 1] = -s * a + c * b
            for k in range(2 * r, n):
                out[t, k] = coords[k]
        return out

    @njit(cache=True)
    def phase_evolve_jit(amps, freqs, tau):
        r = amps.shape[0]
        out = np.empty(r, dtype=np.complex128)
        for j in range(r):
            out[j] = amps[j] * np.exp(-1j * freqs[j] * tau)
        return out

    @njit(cache=True)
    def block_exp_jit(freqs, zero_modes, tau):
        r = freqs.shape[0]
        n = 2 * r + zero_modes
        out = np.zeros((n, n))
        for j in range(r):
            c = np.cos(freqs[j] * tau)
            s = np.sin(freqs[j] * tau)
            out[2 * j, 2 * j] = c
            out[2 * j, 2 * j + 1] = s
            out[2 * j + 1, 2 * j] = -s
            out[2 * j + 1, 2 * j + 1] = c
        for k in range(2 * r, n):
            out[k, k] = 1.0
        return out

    BACKEND = "numba"
    rotate_pairs = rotate_pairs_jit
    rotate_pairs_grid = rotate_pairs_grid_jit
    phase_evolve = phase_evolve_jit
    block_exp = block_exp_jit
else:
    BACKEND = "numpy"
    rotate_pairs = rotate_pairs_numpy
    rotate_pairs_grid = rotate_pairs_grid_numpy
    phase_evolve = phase_evolve_numpy
    block_exp = block_exp_numpy
