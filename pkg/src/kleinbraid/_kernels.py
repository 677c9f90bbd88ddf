"""Batch kernels for the closed Nielsen formula over parameter arrays and grids.

Two backends compute identical integers:

* ``"numba"``: ``@njit`` loops, the default when numba imports.
* ``"numpy"``: broadcasting, selected when ``KLEINBRAID_DISABLE_NUMBA`` is set
  to a non-empty value other than ``0`` or when numba is missing.

Column layout of a parameter array (int64, shape ``(N, 7)``) is
``PARAM_COLUMNS``.  Branch codes: 0 = B0, 1 = B1, 2 = A with the |r1| factor,
3 = A otherwise, -1 = split (no value).
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]):
            return args[0]
        return lambda f: f


def _env_disabled() -> bool:
    return os.environ.get("KLEINBRAID_DISABLE_NUMBA", "") not in ("", "0")


DEFAULT_BACKEND = "numba" if HAVE_NUMBA and not _env_disabled() else "numpy"

PARAM_COLUMNS = ("k1", "k2", "r1", "s1", "s2", "m1", "n2")
BRANCH_NAMES = {0: "B0", 1: "B1", 2: "A_r1", 3: "A"}

# (k1, k2) classes swept by the zero-locus check
NONSPLIT_FLAGS = ((0, 1), (1, 0), (1, 1))


def resolve_backend(backend: str | None) -> str:
    if backend is None:
        return DEFAULT_BACKEND
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not importable")
    return backend


# ---------------------------------------------------------------- numba path


@njit(cache=True)
def _nielsen_scalar(k1, k2, r1, s1, s2, m1, n2):
    if k1 == 1:
        sg = -1 if s1 % 2 != 0 else 1
        t = abs((1 + sg) * r1 + m1)
        if t < 2:
            t = 2
        if k2 == 0:
            return abs(1 - s2) * t, 0
        return abs(1 - s2 + s1) * t, 1
    if k2 == 0:
        return -1, -1
    base = abs(2 * s2 + n2 - 2)
    if s1 % 2 == 0 and n2 % 2 == 0 and r1 != 0:
        return abs(r1) * base, 2
    return base, 3


@njit(cache=True)
def _zero_scalar(k1, k2, s1, s2, n2):
    if k1 == 1 and k2 == 0:
        return s2 == 1
    if k1 == 1 and k2 == 1:
        return s2 - s1 == 1
    return n2 == 2 * (1 - s2)


@njit(cache=True)
def _nielsen_rows_numba(params):
    n = params.shape[0]
    values = np.empty(n, dtype=np.int64)
    branches = np.empty(n, dtype=np.int64)
    for i in range(n):
        v, b = _nielsen_scalar(params[i, 0], params[i, 1], params[i, 2], params[i, 3],
                               params[i, 4], params[i, 5], params[i, 6])
        values[i] = v
        branches[i] = b
    return values, branches


@njit(cache=True)
def _zero_locus_numba(k1, k2, bound, nbound):
    # full 8-parameter grid; r2, n1, m2 do not enter either side but are
    # swept so every grid cell is visited
    cells = 0
    zeros = 0
    mismatches = 0
    for r1 in range(-bound, bound + 1):
        for s1 in range(-bound, bound + 1):
            for r2 in range(-bound, bound + 1):
                for s2 in range(-bound, bound + 1):
                    for m1 in range(-bound, bound + 1):
                        for n1 in range(-nbound, nbound + 1):
                            for m2 in range(-bound, bound + 1):
                                for n2 in range(-nbound, nbound + 1):
                                    v, b = _nielsen_scalar(k1, k2, r1, s1, s2, m1, n2)
                                    z = _zero_scalar(k1, k2, s1, s2, n2)
                                    cells += 1
                                    if v == 0:
                                        zeros += 1
                                    if z != (v == 0):
                                        mismatches += 1
    return cells, zeros, mismatches


# ---------------------------------------------------------------- numpy path


def _nielsen_rows_numpy(params: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    k1, k2, r1, s1, s2, m1, n2 = (params[:, i] for i in range(7))
    return _nielsen_broadcast(k1, k2, r1, s1, s2, m1, n2)


def _nielsen_broadcast(k1, k2, r1, s1, s2, m1, n2):
    sg = np.where(s1 % 2 != 0, -1, 1)
    t = np.maximum(np.abs((1 + sg) * r1 + m1), 2)
    base = np.abs(2 * s2 + n2 - 2)
    scaled = (s1 % 2 == 0) & (n2 % 2 == 0) & (r1 != 0)
    b_type = k1 == 1
    values = np.where(
        b_type,
        np.where(k2 == 0, np.abs(1 - s2), np.abs(1 - s2 + s1)) * t,
        np.where(scaled, np.abs(r1) * base, base),
    )
    branches = np.where(b_type, np.where(k2 == 0, 0, 1), np.where(scaled, 2, 3))
    split = (k1 == 0) & (k2 == 0)
    values = np.where(split, -1, values).astype(np.int64)
    branches = np.where(split, -1, branches).astype(np.int64)
    return values, branches


def _zero_broadcast(k1, k2, s1, s2, n2):
    if k1 == 1 and k2 == 0:
        return s2 == 1
    if k1 == 1 and k2 == 1:
        return s2 - s1 == 1
    return n2 == 2 * (1 - s2)


def _zero_locus_numpy(k1: int, k2: int, bound: int, nbound: int) -> tuple[int, int, int]:
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    nrng = np.arange(-nbound, nbound + 1, dtype=np.int64)
    # broadcast over (r2, s2, m1, n1, m2, n2); loop over (r1, s1)
    shape6 = (len(rng), len(rng), len(rng), len(nrng), len(rng), len(nrng))

    def axis(values, pos):
        shape = [1] * 6
        shape[pos] = len(values)
        return values.reshape(shape)

    s2 = axis(rng, 1)
    m1 = axis(rng, 2)
    n2 = axis(nrng, 5)
    per_chunk = int(np.prod(shape6))
    cells = zeros = mismatches = 0
    for r1 in rng:
        for s1 in rng:
            v, _ = _nielsen_broadcast(k1, k2, r1, s1, s2, m1, n2)
            z = _zero_broadcast(k1, k2, s1, s2, n2)
            v = np.broadcast_to(v, shape6)
            z = np.broadcast_to(z, shape6)
            is_zero = v == 0
            cells += per_chunk
            zeros += int(is_zero.sum())
            mismatches += int((z != is_zero).sum())
    return cells, zeros, mismatches


# ---------------------------------------------------------------- public


def nielsen_rows(params: np.ndarray, backend: str | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Nielsen values and branch codes for each row of an ``(N, 7)`` array."""
    params = np.ascontiguousarray(params, dtype=np.int64)
    if params.ndim != 2 or params.shape[1] != 7:
        raise ValueError(f"expected shape (N, 7), got {params.shape}")
    if resolve_backend(backend) == "numba":
        return _nielsen_rows_numba(params)
    return _nielsen_rows_numpy(params)


def zero_locus_sweep(bound: int = 4, nbound: int = 4, backend: str | None = None) -> dict:
    """Compare the zero predicate with ``N == 0`` on the full parameter grid.

    Every ``r_i, s_i, m_i`` ranges over ``[-bound, bound]`` and ``n_i`` over
    ``[-nbound, nbound]``, for each non-split ``(k1, k2)``.
    """
    fn = _zero_locus_numba if resolve_backend(backend) == "numba" else _zero_locus_numpy
    out = {"cells": 0, "zeros": 0, "mismatches": 0, "by_class": {}}
    for k1, k2 in NONSPLIT_FLAGS:
        cells, zeros, mismatches = fn(k1, k2, bound, nbound)
        out["by_class"][(k1, k2)] = (int(cells), int(zeros), int(mismatches))
        out["cells"] += int(cells)
        out["zeros"] += int(zeros)
        out["mismatches"] += int(mismatches)
    return out
