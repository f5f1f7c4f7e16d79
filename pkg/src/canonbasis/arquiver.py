"""
The Auslander-Reiten quiver of the linearly oriented quiver Q_k and its slices.

Q_k has arrows ``i <- i+1``. Its indecomposable representations are the interval
modules ``[i, j]``; an AR vertex ``(z, a)`` sits in row ``a`` (the interval length)
at position ``z`` and carries the interval ``[z, z+a-1]``. Arrows of the
translation quiver are ``(z, a) -> (z, a+1)`` (inclusions) and
``(z, a+1) -> (z+1, a)`` (quotients), so every arrow is an irreducible map.

A second quiver ``Q`` cuts the translation quiver into slices; slices restricted
to the AR quiver partition the positive roots and that partition is directed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .typea import QuiverA, RootInterval, all_intervals


@dataclass(frozen=True)
class ArVertex:
    z: int
    a: int
    interval: RootInterval


def ar_row_bound(n: int, a: int) -> int:
    """
    Number of AR vertices in row ``a``: ``(h + a_i - b_i) / 2`` for Q_k.

    ``sigma(a) = n+1-a`` and every arrow of Q_k points towards the smaller
    label, so the arrows on the path from ``a`` to ``sigma(a)`` all point
    towards whichever endpoint is smaller.
    """
    h = n + 1
    other = n + 1 - a
    towards_a = abs(other - a) if a < other else 0
    towards_other = abs(other - a) if a > other else 0
    return (h + towards_a - towards_other) // 2


@lru_cache(maxsize=None)
def _ar_vertices(n: int) -> tuple[ArVertex, ...]:
    return tuple(
        ArVertex(z, a, RootInterval(z, z + a - 1))
        for a in range(1, n + 1)
        for z in range(1, ar_row_bound(n, a) + 1)
    )


def in_ar_quiver(n: int, z: int, a: int) -> bool:
    return 1 <= a <= n and 1 <= z <= ar_row_bound(n, a)


def vertex_interval(z: int, a: int) -> RootInterval:
    return RootInterval(z, z + a - 1)


def translation_arrows_out(z: int, a: int) -> list[tuple[int, int]]:
    """Heads of the arrows of the translation quiver leaving ``(z, a)``."""
    return [(z, a + 1), (z + 1, a - 1)]


def translation_arrows_in(z: int, a: int) -> list[tuple[int, int]]:
    """Tails of the arrows of the translation quiver entering ``(z, a)``."""
    return [(z, a - 1), (z - 1, a + 1)]


def build_ar_quiver(n: int) -> tuple[list[ArVertex], list[tuple[ArVertex, ArVertex]]]:
    """
    Vertices and arrows of the AR quiver of Q_k.

    >>> verts, arrows = build_ar_quiver(2)
    >>> [str(v.interval) for v in verts]
    ['[1,1]', '[2,2]', '[1,2]']
    >>> [(str(s.interval), str(t.interval)) for s, t in arrows]
    [('[1,1]', '[1,2]'), ('[1,2]', '[2,2]')]
    """
    if n < 1:
        raise ValueError("rank must be positive")
    verts = list(_ar_vertices(n))
    index = {(v.z, v.a): v for v in verts}
    arrows = []
    for v in verts:
        for head in translation_arrows_out(v.z, v.a):
            if head in index:
                arrows.append((v, index[head]))
    return verts, arrows


@dataclass(frozen=True)
class Component:
    """A maximal run of equally oriented edges, ``edges[0]..edges[1]`` inclusive."""

    direction: str
    first_edge: int
    last_edge: int
    index: int = 0

    @property
    def edges(self) -> range:
        return range(self.first_edge, self.last_edge + 1)

    @property
    def vertices(self) -> range:
        return range(self.first_edge, self.last_edge + 2)

    @property
    def is_left(self) -> bool:
        return self.direction == "L"


def components_of(quiver: QuiverA) -> list[Component]:
    """
    Maximal equally-oriented runs of edges, from the left.

    >>> [(c.direction, c.first_edge, c.last_edge) for c in components_of(QuiverA("RRL"))]
    [('R', 1, 2), ('L', 3, 3)]
    """
    out: list[Component] = []
    start = 1
    edges = quiver.edges
    for m in range(2, len(edges) + 2):
        if m > len(edges) or edges[m - 1] != edges[start - 1]:
            out.append(Component(edges[start - 1], start, m - 1, len(out) + 1))
            start = m
    return out


@dataclass
class SlicePartition:
    """Slices of A(Q_k) cut out by ``quiver``; ``slice_of`` maps every root to its slice."""

    quiver: QuiverA
    slice_of: dict[RootInterval, int]
    # slice number -> the translation-quiver vertex (z_a, a) for every row a
    spine: dict[int, tuple[tuple[int, int], ...]] = field(repr=False)

    @property
    def n(self) -> int:
        return self.quiver.n

    @property
    def num_slices(self) -> int:
        return max(self.slice_of.values())

    def slice(self, z: int) -> list[RootInterval]:
        """T_z ordered by row (interval length)."""
        return sorted((r for r, s in self.slice_of.items() if s == z), key=lambda r: r.length)

    def parts(self) -> list[list[RootInterval]]:
        return [self.slice(z) for z in range(1, self.num_slices + 1)]

    def letters(self, z: int) -> tuple[int, ...]:
        """Vertices met by the roots of slice ``z``, largest first (Q_k's vertex order)."""
        support = {s for r in self.slice(z) for s in range(r.i, r.j + 1)}
        return tuple(sorted(support, reverse=True))

    def to_json(self) -> dict[str, int]:
        return {f"{r.i},{r.j}": z for r, z in sorted(self.slice_of.items())}

    @classmethod
    def from_json(cls, quiver: QuiverA, data: dict[str, int]) -> SlicePartition:
        fresh = slices_for(quiver)
        slice_of = {}
        for key, z in data.items():
            i, j = (int(x) for x in key.split(","))
            slice_of[RootInterval(i, j)] = int(z)
        if slice_of != fresh.slice_of:
            raise ValueError("slice data does not match the construction for this quiver")
        return fresh


def _slice_spine(quiver: QuiverA, z: int) -> tuple[tuple[int, int], ...]:
    """Vertices ``v_1..v_n`` of the slice S_z of the translation quiver."""
    spine = [(z, 1)]
    for a in range(2, quiver.n + 1):
        prev = spine[-1]
        if quiver.edges[a - 2] == "R":
            # v_a is the head of the arrow leaving v_{a-1} into row a
            (nxt,) = [h for h in translation_arrows_out(*prev) if h[1] == a]
        else:
            # v_a is the tail of the arrow into v_{a-1} from row a
            (nxt,) = [t for t in translation_arrows_in(*prev) if t[1] == a]
        spine.append(nxt)
    return tuple(spine)


@lru_cache(maxsize=None)
def _slices_cached(edges: str) -> SlicePartition:
    quiver = QuiverA(edges)
    n = quiver.n
    raw: dict[int, tuple[tuple[int, int], ...]] = {}
    slice_of: dict[RootInterval, int] = {}
    # every spine has z_a in [z-n, z], so this window covers all of A(Q_k)
    for z in range(1 - n, 2 * n + 1):
        spine = _slice_spine(quiver, z)
        members = [vertex_interval(*v) for v in spine if in_ar_quiver(n, *v)]
        if members:
            raw[z] = spine
            for r in members:
                slice_of[r] = z
    offset = min(raw) - 1
    return SlicePartition(
        quiver,
        {r: z - offset for r, z in slice_of.items()},
        {z - offset: spine for z, spine in raw.items()},
    )


def slices_for(quiver: QuiverA) -> SlicePartition:
    """
    The slice partition of A(Q_k) induced by ``quiver``, slices numbered from 1.

    >>> p = slices_for(QuiverA("RLRL"))
    >>> [str(r) for r in p.slice(2)]
    ['[2,2]', '[2,3]', '[1,3]', '[1,4]']
    >>> p.letters(2)
    (4, 3, 2, 1)
    """
    return _slices_cached(quiver.edges)


def slice_restriction(
    partition: SlicePartition, component: Component, z: int
) -> tuple[list[RootInterval], bool]:
    """
    ``T_z(X)`` ordered by row, and whether it equals ``S_z(X)`` (no vertex falls outside A(Q_k)).
    """
    spine = partition.spine.get(z)
    if spine is None:
        return [], False
    n = partition.n
    rows = [spine[a - 1] for a in component.vertices]
    inside = [vertex_interval(*v) for v in rows if in_ar_quiver(n, *v)]
    return inside, len(inside) == len(rows)


# -- homological oracle -------------------------------------------------------


def _rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / p
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _qk_arrows(n: int) -> list[tuple[int, int]]:
    """Arrows ``(source, target)`` of Q_k."""
    return [(i + 1, i) for i in range(1, n)]


@lru_cache(maxsize=None)
def hom_dim(n: int, m: RootInterval, x: RootInterval) -> int:
    """
    dim Hom(M, X) for interval representations of Q_k, by solving the intertwiner equations.

    A morphism is a family of scalars ``f_v: M_v -> X_v``; every arrow ``s -> t``
    imposes ``X_arrow * f_s = f_t * M_arrow`` as maps ``M_s -> X_t``.

    >>> hom_dim(2, RootInterval(1, 1), RootInterval(1, 2)), hom_dim(2, RootInterval(1, 2), RootInterval(1, 1))
    (1, 0)
    """
    common = [v for v in range(1, n + 1) if v in m and v in x]
    if not common:
        return 0
    col = {v: p for p, v in enumerate(common)}
    rows = []
    for s, t in _qk_arrows(n):
        if s not in m or t not in x:
            continue
        row = [Fraction(0)] * len(common)
        # X_arrow is the identity when both ends lie in X; same for M
        if s in col and t in x:
            row[col[s]] += 1
        if t in col and s in m and t in m:
            row[col[t]] -= 1
        if any(row):
            rows.append(row)
    return len(common) - (_rank(rows) if rows else 0)


def euler_form(n: int, m: RootInterval, x: RootInterval) -> int:
    d = [1 if v in m else 0 for v in range(n + 2)]
    e = [1 if v in x else 0 for v in range(n + 2)]
    return sum(d[v] * e[v] for v in range(1, n + 1)) - sum(d[s] * e[t] for s, t in _qk_arrows(n))


def ext_dim(n: int, m: RootInterval, x: RootInterval) -> int:
    """dim Ext^1(M, X) = dim Hom(M, X) - <dim M, dim X>."""
    out = hom_dim(n, m, x) - euler_form(n, m, x)
    if out < 0:
        raise ArithmeticError(f"negative Ext dimension for {m}, {x}")
    return out


def is_directed_partition(
    partition: SlicePartition | Sequence[Iterable[RootInterval]], n: int | None = None
) -> bool:
    """
    Check the directedness conditions: no Ext^1 inside a part, and for parts
    ``I_k`` before ``I_l`` neither Ext^1(I_k, I_l) nor Hom(I_l, I_k).
    """
    if isinstance(partition, SlicePartition):
        parts = partition.parts()
        n = partition.n
    else:
        parts = [list(p) for p in partition]
        if n is None:
            n = max(r.j for p in parts for r in p)
    flat = [r for p in parts for r in p]
    if sorted(flat) != sorted(all_intervals(n)):
        return False
    for k, part in enumerate(parts):
        for a in part:
            for b in part:
                if ext_dim(n, a, b):
                    return False
        for later in parts[k + 1:]:
            for a in part:
                for b in later:
                    if ext_dim(n, a, b) or hom_dim(n, b, a):
                        return False
    return True


def ar_order(n: int) -> list[RootInterval]:
    """Roots listed along a topological order of the AR quiver (projectives first)."""
    verts, arrows = build_ar_quiver(n)
    indeg = {v: 0 for v in verts}
    for _, t in arrows:
        indeg[t] += 1
    out = []
    ready = sorted((v for v in verts if indeg[v] == 0), key=lambda v: (v.z + v.a, v.a))
    while ready:
        v = ready.pop(0)
        out.append(v.interval)
        for s, t in arrows:
            if s == v:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
        ready.sort(key=lambda v: (v.z + v.a, v.a))
    return out
