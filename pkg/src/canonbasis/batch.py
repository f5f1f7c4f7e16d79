"""
Compiled crystal kernels for sweeps over many triangles at once.

Each function takes a 2-d integer array whose rows are triangles (columns in
:func:`canonbasis.typea.all_intervals` order) or strings, and agrees row by row
with the scalar versions in :mod:`canonbasis.crystal`.

>>> import numpy as np
>>> strings_batch((1, 2, 1), np.array([[1, 0, 1], [0, 0, 0]])).tolist()
[[1, 1, 0], [0, 0, 0]]
"""
from __future__ import annotations

from typing import Sequence

import numba
import numpy as np


@numba.njit(cache=True)
def _e_step(c, j):
    base = j * (j - 1) // 2
    prev = (j - 1) * (j - 2) // 2
    f = c[base]
    best = f
    i0 = 0
    for i in range(1, j):
        f += c[base + i] - c[prev + i - 1]
        if f > best:
            best = f
            i0 = i
    if c[base + i0] == 0:
        return False
    c[base + i0] -= 1
    if i0 < j - 1:
        c[prev + i0] += 1
    return True


@numba.njit(cache=True)
def _e_kills(c, j):
    base = j * (j - 1) // 2
    prev = (j - 1) * (j - 2) // 2
    f = c[base]
    best = f
    i0 = 0
    for i in range(1, j):
        f += c[base + i] - c[prev + i - 1]
        if f > best:
            best = f
            i0 = i
    return c[base + i0] == 0


@numba.njit(cache=True)
def _f_step(c, j):
    base = j * (j - 1) // 2
    prev = (j - 1) * (j - 2) // 2
    f = c[base]
    best = f
    i0 = 0
    for i in range(1, j):
        f += c[base + i] - c[prev + i - 1]
        if f >= best:
            best = f
            i0 = i
    c[base + i0] += 1
    if i0 < j - 1:
        c[prev + i0] -= 1
        return c[prev + i0] >= 0
    return True


@numba.njit(cache=True)
def _strings(letters, tri, out):
    c = np.empty(tri.shape[1], dtype=np.int64)
    for r in range(tri.shape[0]):
        c[:] = tri[r]
        for p in range(len(letters)):
            k = 0
            while _e_step(c, letters[p]):
                k += 1
            out[r, p] = k
        for x in c:
            if x != 0:
                return r
    return -1


@numba.njit(cache=True)
def _monomials(letters, a, out):
    for r in range(a.shape[0]):
        for p in range(len(letters) - 1, -1, -1):
            for _ in range(a[r, p]):
                if not _f_step(out[r], letters[p]):
                    return r
    return -1


@numba.njit(cache=True)
def _condition(letters, a, size, good):
    c = np.empty(size, dtype=np.int64)
    for r in range(a.shape[0]):
        c[:] = 0
        ok = True
        for p in range(len(letters) - 1, -1, -1):
            if not _e_kills(c, letters[p]):
                ok = False
                break
            for _ in range(a[r, p]):
                _f_step(c, letters[p])
        good[r] = ok


def _letters(letters: Sequence[int]) -> np.ndarray:
    return np.asarray(tuple(letters), dtype=np.int64)


def strings_batch(letters: Sequence[int], triangles: np.ndarray) -> np.ndarray:
    """Greedy strings of many triangles; raises if some residual is nonzero."""
    tri = np.ascontiguousarray(triangles, dtype=np.int64)
    out = np.zeros((len(tri), len(letters)), dtype=np.int64)
    bad = _strings(_letters(letters), tri, out)
    if bad >= 0:
        raise AssertionError(f"nonzero residual after string extraction of row {bad}")
    return out


def monomials_batch(letters: Sequence[int], strings: np.ndarray, size: int) -> np.ndarray:
    """``F_{i_1}^{a_1} ... F_{i_N}^{a_N} . 1`` for every row ``a``."""
    a = np.ascontiguousarray(strings, dtype=np.int64)
    if np.any(a < 0):
        raise ValueError("string entries must be nonnegative")
    out = np.zeros((len(a), size), dtype=np.int64)
    bad = _monomials(_letters(letters), a, out)
    if bad >= 0:
        raise AssertionError(f"an F step made an entry negative in row {bad}")
    return out


def string_condition_batch(letters: Sequence[int], strings: np.ndarray, size: int) -> np.ndarray:
    """Row-wise :func:`canonbasis.crystal.satisfies_string_condition`."""
    a = np.ascontiguousarray(strings, dtype=np.int64)
    good = np.zeros(len(a), dtype=np.bool_)
    _condition(_letters(letters), a, size, good)
    return good
