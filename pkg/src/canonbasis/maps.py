"""
The additive map D from PBW exponents to monomial exponents and its inverse E.

For a quiver Q the slices of A(Q_k) give a directed partition ``I_1, ..., I_n``
of the positive roots and a reduced word ``i(Q)`` whose p-th factor lists the
vertices met by ``I_p``. Position ``j`` of ``i(Q)`` (letter ``i_j``, factor ``p``) gets

    a_j = sum of c_alpha over alpha in I_p with i_j in alpha.

Triangles ``c`` are indexed by :func:`canonbasis.typea.all_intervals` throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .arquiver import slices_for
from .typea import QuiverA, RootInterval, all_intervals, word_for_quiver


class NotUnimodularError(ArithmeticError):
    pass


@dataclass(frozen=True, eq=False)
class IntLinearMap:
    """An integer matrix with named rows and columns; ``apply`` computes ``coeffs @ v``."""

    coeffs: np.ndarray
    row_names: tuple[str, ...]
    col_names: tuple[str, ...]
    n: int = 0

    def __post_init__(self):
        m = np.asarray(self.coeffs, dtype=np.int64)
        m.setflags(write=False)
        object.__setattr__(self, "coeffs", m)
        if m.shape != (len(self.row_names), len(self.col_names)):
            raise ValueError(f"shape {m.shape} does not match labels")

    @property
    def shape(self) -> tuple[int, int]:
        return self.coeffs.shape

    def __eq__(self, other):
        if not isinstance(other, IntLinearMap):
            return NotImplemented
        return (
            self.row_names == other.row_names
            and self.col_names == other.col_names
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def row(self, name: str) -> dict[str, int]:
        """Nonzero coefficients of one row, keyed by column name."""
        r = self.coeffs[self.row_names.index(name)]
        return {c: int(x) for c, x in zip(self.col_names, r) if x}

    def to_json(self) -> dict[str, dict[str, int]]:
        return {name: self.row(name) for name in self.row_names}

    @classmethod
    def from_json(cls, data: dict[str, dict[str, int]], col_names: Sequence[str], n: int = 0):
        rows = tuple(data)
        cols = tuple(col_names)
        m = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for r, name in enumerate(rows):
            for c, v in data[name].items():
                m[r, cols.index(c)] = v
        return cls(m, rows, cols, n)

    def expression(self, name: str) -> str:
        """Human-readable right-hand side, e.g. ``a_2 - a_1``."""
        terms = self.row(name)
        if not terms:
            return "0"
        out = []
        for c, v in terms.items():
            sign = "-" if v < 0 else "+"
            mag = "" if abs(v) == 1 else f"{abs(v)}*"
            out.append(f" {sign} {mag}{c}")
        text = "".join(out).strip()
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def compose(self, other: IntLinearMap) -> IntLinearMap:
        """``self @ other``."""
        if self.col_names != other.row_names:
            raise ValueError("label mismatch in composition")
        return IntLinearMap(self.coeffs @ other.coeffs, self.row_names, other.col_names, self.n)

    def determinant(self) -> int:
        return bareiss_determinant(self.coeffs.tolist())


def apply(linear_map: IntLinearMap, v: Sequence[int]) -> tuple[int, ...]:
    """
    Exact integer product ``linear_map @ v``.

    >>> apply(IntLinearMap(np.eye(2, dtype=int), ("x", "y"), ("x", "y")), (3, -1))
    (3, -1)
    """
    if len(v) != linear_map.shape[1]:
        raise ValueError(f"vector of length {len(v)} for a map with {linear_map.shape[1]} columns")
    rows = linear_map.coeffs.tolist()
    return tuple(sum(a * b for a, b in zip(row, v) if a) for row in rows)


def bareiss_determinant(m: list[list[int]]) -> int:
    """Fraction-free determinant."""
    a = [list(r) for r in m]
    size = len(a)
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if size else 1


def integer_inverse(m: list[list[int]]) -> list[list[int]]:
    """
    Inverse of a unimodular integer matrix using only integer row operations.

    Each column is cleared by Euclid's algorithm on the rows below the pivot, so
    no fractions appear; a final pivot other than +-1 means the matrix is not
    invertible over the integers.
    """
    size = len(m)
    a = [list(map(int, r)) + [int(i == j) for j in range(size)] for i, r in enumerate(m)]
    for col in range(size):
        while True:
            nz = [r for r in range(col, size) if a[r][col] != 0]
            if not nz:
                raise NotUnimodularError(f"singular matrix (column {col})")
            piv = min(nz, key=lambda r: abs(a[r][col]))
            a[col], a[piv] = a[piv], a[col]
            done = True
            for r in range(col + 1, size):
                if a[r][col]:
                    q = a[r][col] // a[col][col]
                    a[r] = [x - q * y for x, y in zip(a[r], a[col])]
                    if a[r][col]:
                        done = False
            if done:
                break
        if abs(a[col][col]) != 1:
            raise NotUnimodularError(f"pivot {a[col][col]} in column {col} is not a unit")
        if a[col][col] == -1:
            a[col] = [-x for x in a[col]]
    for col in reversed(range(size)):
        for r in range(col):
            if a[r][col]:
                q = a[r][col]
                a[r] = [x - q * y for x, y in zip(a[r], a[col])]
    return [row[size:] for row in a]


def pbw_names(n: int) -> tuple[str, ...]:
    return tuple(r.label() for r in all_intervals(n))


def string_names(n: int) -> tuple[str, ...]:
    return tuple(f"a_{j}" for j in range(1, n * (n + 1) // 2 + 1))


@lru_cache(maxsize=None)
def _d_map(edges: str) -> IntLinearMap:
    quiver = QuiverA(edges)
    n = quiver.n
    partition = slices_for(quiver)
    roots = all_intervals(n)
    col = {r: p for p, r in enumerate(roots)}
    rows = []
    letters = []
    for z in range(1, partition.num_slices + 1):
        part = partition.slice(z)
        for s in partition.letters(z):
            row = [0] * len(roots)
            for alpha in part:
                if s in alpha:
                    row[col[alpha]] = 1
            rows.append(row)
            letters.append(s)
    if tuple(letters) != word_for_quiver(quiver).letters:
        raise AssertionError("slice letters do not reproduce i(Q)")
    return IntLinearMap(np.array(rows, dtype=np.int64), string_names(n), pbw_names(n), n)


def d_map(quiver: QuiverA) -> IntLinearMap:
    """
    The matrix of D: rows follow ``word_for_quiver(quiver)``, columns follow ``all_intervals``.

    >>> D = d_map(QuiverA("L"))
    >>> [D.expression(a) for a in D.row_names]
    ['c_1_1', 'c_1_2 + c_2_2', 'c_1_2']
    """
    return _d_map(quiver.edges)


@lru_cache(maxsize=None)
def _e_map(edges: str) -> IntLinearMap:
    d = _d_map(edges)
    inv = integer_inverse(d.coeffs.tolist())
    e = IntLinearMap(np.array(inv, dtype=np.int64), d.col_names, d.row_names, d.n)
    if not np.array_equal(d.coeffs @ e.coeffs, np.eye(d.shape[0], dtype=np.int64)):
        raise NotUnimodularError("D @ E is not the identity")
    return e


def e_map(quiver: QuiverA) -> IntLinearMap:
    """
    The inverse E of D; rows are ``c_i_j``, columns ``a_1..a_N``.

    >>> E = e_map(QuiverA("L"))
    >>> [E.expression(c) for c in E.row_names]
    ['a_1', 'a_3', 'a_2 - a_3']
    """
    return _e_map(quiver.edges)


def is_difference_row(row: Sequence[int]) -> bool:
    """True for ``e_k`` or ``e_k - e_l``: the shape every row of E must have."""
    nz = sorted(x for x in row if x)
    return nz == [1] or nz == [-1, 1]


def root_of_column(n: int, name: str) -> RootInterval:
    _, i, j = name.split("_")
    return RootInterval(int(i), int(j))
