"""
Polyhedral cones in string and PBW coordinates, stored as inequality systems.

A :class:`ConeSpec` is a list of integer rows ``r`` meaning ``r . x >= 0`` plus
the implicit constraints ``x >= 0``. Three families are built here:

- the Lusztig cone of a reduced word, in string coordinates;
- the cone C_PBW(Q) whose image under D is the degeneration cone;
- the cone L_PBW(Q), the PBW-side image of the Lusztig cone of ``i(Q)``.

The PBW-side cones are read off the slices of A(Q_k): for a component ``X`` of
``Q`` and consecutive slices ``z, z+1``, ``x_1..x_k`` are the roots of ``T_z(X)``
and ``y_1..y_l`` those of ``T_{z+1}(X)``, both ordered by row; ``y_t`` is ``x_t``
shifted by one (``[i+1, j+1]``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .arquiver import Component, components_of, slice_restriction, slices_for
from .maps import IntLinearMap, NotUnimodularError, integer_inverse, pbw_names, string_names
from .typea import QuiverA, ReducedWord, RootInterval, all_intervals


@dataclass(frozen=True)
class Inequality:
    coeffs: tuple[int, ...]
    label: str = ""

    def value(self, x: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.coeffs, x) if a)

    def normalized(self) -> Inequality:
        g = math.gcd(*self.coeffs)
        if g == 0:
            return self
        return Inequality(tuple(a // g for a in self.coeffs), self.label)

    def is_trivial(self) -> bool:
        return all(a >= 0 for a in self.coeffs)


@dataclass(frozen=True)
class ConeSpec:
    dim: int
    rows: tuple[Inequality, ...]
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        for r in self.rows:
            if len(r.coeffs) != self.dim:
                raise ValueError(f"row {r.label!r} has {len(r.coeffs)} coefficients, expected {self.dim}")

    def normalized(self) -> ConeSpec:
        """Rows divided by their gcd, zero rows dropped, deduplicated and sorted."""
        seen: dict[tuple[int, ...], Inequality] = {}
        for r in self.rows:
            r = r.normalized()
            if any(r.coeffs) and r.coeffs not in seen:
                seen[r.coeffs] = r
        rows = tuple(seen[k] for k in sorted(seen))
        return ConeSpec(self.dim, rows, self.names)

    def row_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(r.coeffs for r in self.normalized().rows)

    def violated(self, x: Sequence[int]) -> list[str]:
        """Labels of violated rows; a negative coordinate is reported as ``x_k >= 0``."""
        if len(x) != self.dim:
            raise ValueError(f"point of length {len(x)} for a cone of dimension {self.dim}")
        out = [f"{self._name(k)} >= 0" for k, v in enumerate(x) if v < 0]
        out += [r.label or self.format_row(r) for r in self.rows if r.value(x) < 0]
        return out

    def _name(self, k: int) -> str:
        return self.names[k] if self.names else f"x_{k + 1}"

    def format_row(self, row: Inequality) -> str:
        lhs = " + ".join(self._name(k) if a == 1 else f"{a}*{self._name(k)}" for k, a in enumerate(row.coeffs) if a > 0)
        rhs = " + ".join(self._name(k) if a == -1 else f"{-a}*{self._name(k)}" for k, a in enumerate(row.coeffs) if a < 0)
        return f"{lhs or '0'} >= {rhs or '0'}"

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "rows": [
                {"coeffs": {self._name(k): a for k, a in enumerate(r.coeffs) if a}, "label": r.label}
                for r in self.rows
            ],
        }

    @classmethod
    def from_json(cls, data: dict, names: Sequence[str]) -> ConeSpec:
        names = tuple(names)
        rows = []
        for entry in data["rows"]:
            coeffs = [0] * data["dim"]
            for key, a in entry["coeffs"].items():
                coeffs[names.index(key)] = a
            rows.append(Inequality(tuple(coeffs), entry.get("label", "")))
        return cls(data["dim"], tuple(rows), names)


def membership(cone: ConeSpec, x: Sequence[int]) -> bool:
    """
    ``x >= 0`` and every row holds.

    >>> membership(lusztig_cone((1, 2, 1)), (1, 3, 2))
    True
    """
    return not cone.violated(x)


def _coeff_matrix(cone: ConeSpec) -> np.ndarray:
    if not cone.rows:
        return np.zeros((0, cone.dim), dtype=np.int64)
    return np.array([r.coeffs for r in cone.rows], dtype=np.int64)


def enumerate_points(cone: ConeSpec, bound: int, chunk: int = 1 << 18) -> Iterator[tuple[int, ...]]:
    """
    All lattice points of ``cone`` with coordinates in ``[0, bound]``, in lexicographic order.

    Coordinates are fixed one at a time; a partial point is dropped as soon as
    some row cannot be rescued by the remaining coordinates.

    >>> len(list(enumerate_points(ConeSpec(3, ()), 1)))
    8
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    for block in enumerate_array(cone, bound, chunk):
        for row in block.tolist():
            yield tuple(row)


def enumerate_array(cone: ConeSpec, bound: int, chunk: int = 1 << 18) -> Iterator[np.ndarray]:
    """Like :func:`enumerate_points` but yields blocks of points as integer arrays."""
    dim = cone.dim
    A = _coeff_matrix(cone)
    # best case contribution of coordinates d.. for each row
    pos = np.clip(A, 0, None) * bound
    rescue = np.zeros((dim + 1, A.shape[0]), dtype=np.int64)
    for d in range(dim - 1, -1, -1):
        rescue[d] = rescue[d + 1] + pos[:, d]
    values = np.arange(bound + 1, dtype=np.int64)

    def extend(points: np.ndarray, sums: np.ndarray, d: int) -> Iterator[np.ndarray]:
        if d == dim:
            yield points
            return
        # lexicographic: each existing prefix followed by every value
        reps = len(values)
        new_pts = np.repeat(points, reps, axis=0)
        col = np.tile(values, len(points))
        new_pts = np.concatenate([new_pts, col[:, None]], axis=1)
        new_sums = np.repeat(sums, reps, axis=0) + col[:, None] * A[:, d][None, :]
        touched = A[:, d] != 0
        if touched.any():
            ok = np.all(new_sums[:, touched] + rescue[d + 1][touched] >= 0, axis=1)
            new_pts, new_sums = new_pts[ok], new_sums[ok]
        if len(new_pts) > chunk:
            for start in range(0, len(new_pts), chunk):
                yield from extend(new_pts[start:start + chunk], new_sums[start:start + chunk], d + 1)
        else:
            yield from extend(new_pts, new_sums, d + 1)

    start = np.zeros((1, 0), dtype=np.int64)
    sums = np.zeros((1, A.shape[0]), dtype=np.int64)
    ok = np.all(rescue[0] >= 0) if A.shape[0] else True
    if ok:
        yield from extend(start, sums, 0)


def count_points(cone: ConeSpec, bound: int) -> int:
    return sum(len(b) for b in enumerate_array(cone, bound))


# -- the Lusztig cone --------------------------------------------------------


def lusztig_cone(word: ReducedWord | Sequence[int]) -> ConeSpec:
    """
    One row ``sum_p a_p - a_s - a_s' >= 0`` for every pair of consecutive equal letters,
    summing over the positions strictly between them that carry an adjacent letter.

    >>> lusztig_cone((1, 2, 1)).rows[0].coeffs
    (-1, 1, -1)
    """
    letters = tuple(word)
    size = len(letters)
    rows = []
    for s in range(size):
        nxt = next((t for t in range(s + 1, size) if letters[t] == letters[s]), None)
        if nxt is None:
            continue
        coeffs = [0] * size
        coeffs[s] -= 1
        coeffs[nxt] -= 1
        for p in range(s + 1, nxt):
            if abs(letters[p] - letters[s]) == 1:
                coeffs[p] += 1
        rows.append(Inequality(tuple(coeffs), f"pair a_{s + 1},a_{nxt + 1} (letter {letters[s]})"))
    return ConeSpec(size, tuple(rows), string_names_for(size))


def string_names_for(size: int) -> tuple[str, ...]:
    return tuple(f"a_{j}" for j in range(1, size + 1))


# -- PBW-side cones -------------------------------------------------------------


@dataclass(frozen=True)
class SlicePair:
    """Consecutive slice restrictions ``T_z(X)``, ``T_{z+1}(X)`` of one component."""

    component: Component
    z: int
    xs: tuple[RootInterval, ...]
    ys: tuple[RootInterval, ...]
    full: bool

    @property
    def k(self) -> int:
        return len(self.xs)

    @property
    def l(self) -> int:
        return len(self.ys)

    def tag(self) -> str:
        return f"component {self.component.index} ({self.component.direction}), slices {self.z},{self.z + 1}"


def slice_pairs(quiver: QuiverA) -> list[SlicePair]:
    """Every consecutive pair of slices, per component, whose rows line up by shifting."""
    partition = slices_for(quiver)
    out = []
    for comp in components_of(quiver):
        for z in range(1, partition.num_slices):
            xs, fx = slice_restriction(partition, comp, z)
            ys, fy = slice_restriction(partition, comp, z + 1)
            m = min(len(xs), len(ys))
            if m == 0:
                continue
            # left components gain rows going right, right components lose them
            if comp.is_left and len(xs) > len(ys) or not comp.is_left and len(xs) < len(ys):
                continue
            if any(y != x.shift() for x, y in zip(xs[:m], ys[:m])):
                raise AssertionError(f"slice rows do not line up: {xs} {ys}")
            out.append(SlicePair(comp, z, tuple(xs), tuple(ys), fx and fy))
    return out


class _RowBuilder:
    def __init__(self, n: int):
        self.n = n
        self.index = {r: p for p, r in enumerate(all_intervals(n))}
        self.rows: list[Inequality] = []

    def add(self, plus: Sequence[RootInterval], minus: Sequence[RootInterval], label: str):
        coeffs = [0] * len(self.index)
        for r in plus:
            coeffs[self.index[r]] += 1
        for r in minus:
            coeffs[self.index[r]] -= 1
        self.rows.append(Inequality(tuple(coeffs), label))

    def cone(self) -> ConeSpec:
        return ConeSpec(len(self.index), tuple(self.rows), pbw_names(self.n))


def c_pbw_cone(quiver: QuiverA) -> ConeSpec:
    """
    The cone C_PBW(Q).

    Left component, both slices fully inside A(Q_k): tail sums
    ``sum_{r>=a} c_{x_r} >= sum_{r>=a} c_{y_r}`` for ``a = 1..k``.
    Right component: ``c_{x_r} >= c_{y_r}`` for ``r = 1..min(l, k-1)``.
    """
    b = _RowBuilder(quiver.n)
    for pair in slice_pairs(quiver):
        if pair.component.is_left:
            if pair.full and pair.k == pair.l:
                for a in range(pair.k):
                    b.add(pair.xs[a:], pair.ys[a:], f"C1 {pair.tag()}, a={a + 1}")
        else:
            for r in range(min(pair.l, pair.k - 1)):
                b.add([pair.xs[r]], [pair.ys[r]], f"C2 {pair.tag()}, r={r + 1}")
    return b.cone()


def l_pbw_cone(quiver: QuiverA) -> ConeSpec:
    """
    The cone L_PBW(Q).

    Left component: full sum ``sum c_x >= sum c_y`` over ``r = 1..k`` when both
    slices lie inside A(Q_k), and ``c_{x_r} <= c_{y_r}`` for ``r = 2..k-1``.
    Right component: ``sum c_x <= sum c_y`` when full, ``c_{x_r} >= c_{y_r}`` for
    ``r = 2..l-1``. On a pair that is not full there is no sum row, and the
    entrywise range runs up to ``k`` (left) or ``l`` (right) instead.
    The leftmost component also gets ``c_{x_1} <= c_{y_1}`` (left) or
    ``c_{x_1} >= c_{y_1}`` (right).
    """
    b = _RowBuilder(quiver.n)
    for pair in slice_pairs(quiver):
        k, l = pair.k, pair.l
        xs, ys = pair.xs, pair.ys
        if pair.component.is_left:
            if pair.full:
                b.add(xs[:k], ys[:k], f"L1 {pair.tag()}")
            top = k - 1 if pair.full else k
            for r in range(1, top):
                b.add([ys[r]], [xs[r]], f"L2 {pair.tag()}, r={r + 1}")
            if pair.component.index == 1:
                b.add([ys[0]], [xs[0]], f"L5 {pair.tag()}")
        else:
            if pair.full:
                b.add(ys[:k], xs[:k], f"L3 {pair.tag()}")
            top = l - 1 if pair.full else l
            for r in range(1, top):
                b.add([xs[r]], [ys[r]], f"L4 {pair.tag()}, r={r + 1}")
            if pair.component.index == 1:
                b.add([xs[0]], [ys[0]], f"L6 {pair.tag()}")
    return b.cone()


def outer_rows(quiver: QuiverA) -> ConeSpec:
    """
    Consequences of the L_PBW inequalities on the outer rows of each slice pair:
    left components ``c_{x_1} <= c_{y_1}`` and, on full pairs, ``c_{x_k} >= c_{y_k}``;
    right components ``c_{x_1} >= c_{y_1}`` and, on full pairs, ``c_{x_k} <= c_{y_k}``.
    """
    b = _RowBuilder(quiver.n)
    for pair in slice_pairs(quiver):
        k = pair.k
        xs, ys = pair.xs, pair.ys
        if pair.component.is_left:
            b.add([ys[0]], [xs[0]], f"I {pair.tag()}")
            if pair.full and pair.k == pair.l:
                b.add([xs[k - 1]], [ys[k - 1]], f"II {pair.tag()}")
        else:
            b.add([xs[0]], [ys[0]], f"III {pair.tag()}")
            if pair.full and pair.k == pair.l:
                b.add([ys[k - 1]], [xs[k - 1]], f"IV {pair.tag()}")
    return b.cone()


def nonnegativity(dim: int, names: Sequence[str] = ()) -> ConeSpec:
    rows = tuple(
        Inequality(tuple(int(k == p) for k in range(dim)), f"{names[p] if names else p + 1} >= 0")
        for p in range(dim)
    )
    return ConeSpec(dim, rows, tuple(names))


def cone_image_under(linear_map: IntLinearMap, cone: ConeSpec, with_nonnegativity: bool = False) -> ConeSpec:
    """
    The image ``{M x : x in cone}`` for an invertible integer map ``M``.

    A row ``r . x >= 0`` becomes ``(r M^{-1}) . y >= 0``. With
    ``with_nonnegativity`` the implicit ``x >= 0`` rows are carried over too.
    """
    if linear_map.shape != (cone.dim, cone.dim):
        raise ValueError("map and cone dimensions differ")
    try:
        inv = np.array(integer_inverse(linear_map.coeffs.tolist()), dtype=np.int64)
    except NotUnimodularError as exc:
        raise NotUnimodularError(f"map is not invertible over the integers: {exc}") from None
    rows = list(cone.rows)
    if with_nonnegativity:
        rows += nonnegativity(cone.dim, cone.names).rows
    out = []
    for r in rows:
        coeffs = tuple(int(v) for v in np.array(r.coeffs, dtype=np.int64) @ inv)
        out.append(Inequality(coeffs, r.label))
    return ConeSpec(cone.dim, tuple(out), linear_map.row_names).normalized()


def in_degeneration_cone(quiver: QuiverA, a: Sequence[int]) -> bool:
    """Membership of a string in C_st(Q) = D(C_PBW(Q)), tested through E."""
    from .maps import apply, e_map

    return membership(c_pbw_cone(quiver), apply(e_map(quiver), a))
