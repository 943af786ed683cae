"""File formats: matrix/vector JSON, canonical-form JSON, trajectory CSV.

Real matrices are stored as ``{"rows": r, "cols": c, "data": [...]}`` with
row-major data; complex matrices replace ``data`` with parallel ``re`` and
``im`` arrays.  Vectors are single-column matrices.  All writers are
deterministic: identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
from typing import TextIO

import numpy as np

__all__ = [
    "FormatError",
    "save_matrix",
    "load_matrix",
    "save_vector",
    "load_vector",
    "canonical_form_to_dict",
    "canonical_form_from_dict",
    "save_canonical_form",
    "load_canonical_form",
    "unitary_system_to_dict",
    "unitary_system_from_dict",
    "write_trajectory_csv",
]


class FormatError(ValueError):
    """A file failed to parse against the expected schema."""


def _matrix_dict(M: np.ndarray) -> dict:
    M = np.atleast_2d(np.asarray(M))
    rows, cols = M.shape
    if np.iscomplexobj(M):
        return {
            "rows": rows,
            "cols": cols,
            "re": M.real.ravel().tolist(),
            "im": M.imag.ravel().tolist(),
        }
    return {"rows": rows, "cols": cols, "data": M.astype(float).ravel().tolist()}


def _matrix_from_dict(obj: dict) -> np.ndarray:
    try:
        rows = int(obj["rows"])
        cols = int(obj["cols"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"matrix object missing valid rows/cols: {exc}") from exc
    if rows < 1 or cols < 1:
        raise FormatError(f"matrix dimensions must be positive, got {rows}x{cols}")
    if "data" in obj:
        data = np.asarray(obj["data"], dtype=float)
    elif "re" in obj and "im" in obj:
        data = np.asarray(obj["re"], dtype=float) + 1j * np.asarray(obj["im"], dtype=float)
    else:
        raise FormatError("matrix object needs 'data' or 're'/'im' arrays")
    if data.ndim != 1 or data.shape[0] != rows * cols:
        raise FormatError(
            f"matrix data length {data.shape[0]} does not match {rows}x{cols}"
        )
    if not np.all(np.isfinite(data)):
        raise FormatError("matrix data contains non-finite entries")
    return data.reshape(rows, cols)


def save_matrix(path, M: np.ndarray) -> None:
    with open(path, "w") as fh:
        json.dump(_matrix_dict(M), fh)
        fh.write("\n")


def load_matrix(path) -> np.ndarray:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: expected a JSON object")
    return _matrix_from_dict(obj)


def save_vector(path, psi: np.ndarray) -> None:
    psi = np.asarray(psi)
    save_matrix(path, psi.reshape(-1, 1))


def load_vector(path) -> np.ndarray:
    M = load_matrix(path)
    if 1 not in M.shape:
        raise FormatError(f"{path}: expected a single-row or single-column matrix")
    return M.ravel()


def canonical_form_to_dict(cf) -> dict:
    return {
        "n": cf.dim,
        "frequencies": np.asarray(cf.frequencies, dtype=float).tolist(),
        "zero_modes": cf.zero_modes,
        "rotation": _matrix_dict(cf.rotation),
        "orientation_flip": bool(cf.orientation_flip),
    }


def canonical_form_from_dict(obj: dict):
    from .canonical import CanonicalForm

    try:
        return CanonicalForm(
            dim=int(obj["n"]),
            rotation=_matrix_from_dict(obj["rotation"]),
            frequencies=np.asarray(obj["frequencies"], dtype=float),
            zero_modes=int(obj["zero_modes"]),
            orientation_flip=bool(obj["orientation_flip"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"invalid canonical form object: {exc}") from exc


def save_canonical_form(path, cf) -> None:
    with open(path, "w") as fh:
        json.dump(canonical_form_to_dict(cf), fh)
        fh.write("\n")


def load_canonical_form(path):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON: {exc}") from exc
    return canonical_form_from_dict(obj)


def unitary_system_to_dict(u) -> dict:
    return {
        "frequencies": np.asarray(u.frequencies, dtype=float).tolist(),
        "amplitudes": [
            {"re": float(z.real), "im": float(z.imag)} for z in np.asarray(u.amplitudes)
        ],
    }


def unitary_system_from_dict(obj: dict):
    from .bridge import UnitarySystem

    try:
        freqs = np.asarray(obj["frequencies"], dtype=float)
        amps = np.asarray(
            [complex(a["re"], a["im"]) for a in obj["amplitudes"]], dtype=complex
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid unitary system object: {exc}") from exc
    return UnitarySystem(frequencies=freqs, amplitudes=amps)


def write_trajectory_csv(fh: TextIO, traj) -> None:
    """Write `tau,psi_1,...,psi_n` rows with 17-significant-digit floats."""
    n = traj.states[0].shape[0]
    fh.write("tau," + ",".join(f"psi_{k}" for k in range(1, n + 1)) + "\n")
    for tau, state in zip(traj.times, traj.states):
        row = [f"{tau:.17g}"] + [f"{x:.17g}" for x in state]
        fh.write(",".join(row) + "\n")
