"""
Kashiwara operators on PBW exponent triangles and the string parametrization.

A canonical basis element is modelled by its PBW coordinates ``c = (c_ij)`` for
the word ``k = (1, 2,1, 3,2,1, ...)``. The lowering operator ``F_j`` acts by the
rule: with

    f_ij = sum_{k<=i} c_kj - sum_{k<i} c_{k,j-1},

take the *largest* ``i0`` maximising ``f_i0j``, add one to ``c_{i0,j}`` and remove
one from ``c_{i0,j-1}`` (nothing is removed when ``i0 == j``). ``E_j`` uses the
*smallest* maximiser, reverses the move and is zero when ``c_{i0,j} == 0``.

Values are stored as flat tuples in the order ``c_11, c_12, c_22, c_13, ...``
(see :func:`canonbasis.typea.all_intervals`), which is also the order of the
roots induced by ``k``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .typea import (
    QuiverA,
    ReducedWord,
    RootInterval,
    all_intervals,
    braid_neighbours,
    num_roots,
    word_for_quiver,
)


def _offset(i: int, j: int) -> int:
    return j * (j - 1) // 2 + i - 1


@dataclass(frozen=True)
class Triangle:
    """PBW exponents ``c_ij`` for ``1 <= i <= j <= n``."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != num_roots(self.n):
            raise ValueError(f"expected {num_roots(self.n)} entries, got {len(self.values)}")
        if any(v < 0 for v in self.values):
            raise ValueError("triangle entries must be nonnegative")

    @classmethod
    def zero(cls, n: int) -> Triangle:
        return cls(n, (0,) * num_roots(n))

    @classmethod
    def from_entries(cls, n: int, entries: Mapping[tuple[int, int] | RootInterval, int]) -> Triangle:
        vals = [0] * num_roots(n)
        for key, v in entries.items():
            i, j = (key.i, key.j) if isinstance(key, RootInterval) else key
            vals[_offset(i, j)] = v
        return cls(n, tuple(vals))

    def __getitem__(self, key: tuple[int, int] | RootInterval) -> int:
        i, j = (key.i, key.j) if isinstance(key, RootInterval) else key
        if not 1 <= i <= j <= self.n:
            raise KeyError(key)
        return self.values[_offset(i, j)]

    def entries(self) -> dict[RootInterval, int]:
        return dict(zip(all_intervals(self.n), self.values))

    def weight(self) -> tuple[int, ...]:
        """``sum c_ij (alpha_i + ... + alpha_j)`` in simple-root coordinates."""
        w = [0] * self.n
        for r, v in self.entries().items():
            for s in range(r.i, r.j + 1):
                w[s - 1] += v
        return tuple(w)

    def is_zero(self) -> bool:
        return not any(self.values)

    def to_json(self) -> dict[str, int]:
        return {r.label(): v for r, v in self.entries().items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> Triangle:
        entries = {}
        for key, v in data.items():
            _, i, j = key.split("_")
            entries[(int(i), int(j))] = int(v)
        n = max(j for _, j in entries)
        return cls.from_entries(n, entries)

    def __str__(self):
        rows = []
        for length in range(1, self.n + 1):
            rows.append(" ".join(str(self[i, i + length - 1]) for i in range(1, self.n - length + 2)))
        return "\n".join(rows)


@dataclass(frozen=True)
class StringVector:
    word: ReducedWord
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) != len(self.word):
            raise ValueError("string length does not match the word")
        if any(x < 0 for x in self.a):
            raise ValueError("string entries must be nonnegative")

    def to_json(self) -> dict:
        return {"word": list(self.word.letters), "a": list(self.a)}

    @classmethod
    def from_json(cls, data: Mapping) -> StringVector:
        letters = tuple(data["word"])
        return cls(ReducedWord(max(letters), letters), tuple(data["a"]))


# -- single steps on flat lists ----------------------------------------------
# These mutate ``c`` in place; the public wrappers copy.


def _f_step(c: list[int], j: int) -> None:
    base, prev = _offset(1, j), _offset(1, j - 1) if j > 1 else 0
    f = best = c[base]
    i0 = 1
    for i in range(2, j + 1):
        f += c[base + i - 1] - c[prev + i - 2]
        if f >= best:
            best, i0 = f, i
    c[base + i0 - 1] += 1
    if i0 < j:
        if c[prev + i0 - 1] < 1:
            raise AssertionError(f"F_{j} would make c_{i0},{j - 1} negative")
        c[prev + i0 - 1] -= 1


def _e_step(c: list[int], j: int) -> bool:
    base, prev = _offset(1, j), _offset(1, j - 1) if j > 1 else 0
    f = best = c[base]
    i0 = 1
    for i in range(2, j + 1):
        f += c[base + i - 1] - c[prev + i - 2]
        if f > best:
            best, i0 = f, i
    if c[base + i0 - 1] == 0:
        return False
    c[base + i0 - 1] -= 1
    if i0 < j:
        c[prev + i0 - 1] += 1
    return True


def _check_j(n: int, j: int) -> None:
    if not 1 <= j <= n:
        raise ValueError(f"operator index {j} outside [1, {n}]")


def f_tilde(j: int, t: Triangle) -> Triangle:
    """
    Apply the lowering operator ``F_j``.

    >>> f_tilde(2, Triangle(2, (1, 0, 0))).values
    (0, 1, 0)
    >>> f_tilde(2, Triangle(2, (0, 1, 0))).values
    (0, 1, 1)
    """
    _check_j(t.n, j)
    c = list(t.values)
    _f_step(c, j)
    return Triangle(t.n, tuple(c))


def e_tilde(j: int, t: Triangle) -> Triangle | None:
    """
    Apply the raising operator ``E_j``; ``None`` stands for zero.

    >>> e_tilde(2, Triangle(2, (0, 0, 1))).values
    (0, 0, 0)
    >>> e_tilde(1, Triangle.zero(3)) is None
    True
    """
    _check_j(t.n, j)
    c = list(t.values)
    if not _e_step(c, j):
        return None
    return Triangle(t.n, tuple(c))


def epsilon(j: int, t: Triangle) -> int:
    """How many times ``E_j`` acts before giving zero."""
    _check_j(t.n, j)
    c = list(t.values)
    count = 0
    while _e_step(c, j):
        count += 1
    return count


def _monomial(letters: Sequence[int], a: Sequence[int], c: list[int]) -> None:
    for s, power in zip(reversed(letters), reversed(a)):
        for _ in range(power):
            _f_step(c, s)


def _string(letters: Sequence[int], c: list[int]) -> list[int]:
    out = []
    for s in letters:
        count = 0
        while _e_step(c, s):
            count += 1
        out.append(count)
    return out


def _coerce_word(word: ReducedWord | Sequence[int], n: int | None = None) -> ReducedWord:
    if isinstance(word, ReducedWord):
        return word
    letters = tuple(word)
    return ReducedWord(n or max(letters), letters)


def apply_monomial(word: ReducedWord | Sequence[int], a: Sequence[int] | StringVector) -> Triangle:
    """
    ``F_{i_1}^{a_1} ... F_{i_N}^{a_N} . 1``; the rightmost factor acts first.

    >>> apply_monomial((1, 2, 1), (1, 1, 0)).values
    (1, 0, 1)
    """
    w = _coerce_word(word)
    vec = a.a if isinstance(a, StringVector) else tuple(a)
    if len(vec) != len(w):
        raise ValueError("string length does not match the word")
    if any(x < 0 for x in vec):
        raise ValueError("string entries must be nonnegative")
    c = [0] * num_roots(w.n)
    _monomial(w.letters, vec, c)
    return Triangle(w.n, tuple(c))


def string_of(word: ReducedWord | Sequence[int], t: Triangle) -> StringVector:
    """
    Greedy string of ``t`` in direction ``word``: exhaust ``E_{i_1}``, then ``E_{i_2}``, ...

    >>> string_of((1, 2, 1), Triangle(2, (1, 0, 1))).a
    (1, 1, 0)
    """
    w = _coerce_word(word, t.n)
    if w.n != t.n:
        raise ValueError("rank of word and triangle differ")
    c = list(t.values)
    out = _string(w.letters, c)
    if any(c):
        raise AssertionError(f"nonzero residual {c} after string extraction")
    return StringVector(w, tuple(out))


def satisfies_string_condition(word: ReducedWord | Sequence[int], a: Sequence[int] | StringVector) -> bool:
    """
    True iff ``E_{i_u}`` kills ``F_{i_{u+1}}^{a_{u+1}} ... F_{i_N}^{a_N} . 1`` for every ``u``.

    >>> satisfies_string_condition((1, 2, 1), (1, 1, 0)), satisfies_string_condition((1, 2, 1), (5, 0, 1))
    (True, False)
    """
    w = _coerce_word(word)
    vec = a.a if isinstance(a, StringVector) else tuple(a)
    if len(vec) != len(w):
        raise ValueError("string length does not match the word")
    return _string_condition(w.letters, vec, num_roots(w.n))


def _string_condition(letters: Sequence[int], a: Sequence[int], size: int) -> bool:
    c = [0] * size
    for s, power in zip(reversed(letters), reversed(a)):
        probe = list(c)
        if _e_step(probe, s):
            return False
        for _ in range(power):
            _f_step(c, s)
    return True


def in_string_cone(word: ReducedWord | Sequence[int], a: Sequence[int] | StringVector) -> bool:
    """Membership in the image of the string parametrization, tested by a round trip."""
    w = _coerce_word(word)
    vec = a.a if isinstance(a, StringVector) else tuple(a)
    if len(vec) != len(w) or any(x < 0 for x in vec):
        return False
    c = [0] * num_roots(w.n)
    _monomial(w.letters, vec, c)
    return _string(w.letters, c) == list(vec)


class NotAStringError(ValueError):
    def __init__(self, a, round_trip):
        super().__init__(f"{tuple(a)} is not a string: the round trip gives {tuple(round_trip)}")
        self.a = tuple(a)
        self.round_trip = tuple(round_trip)


def s_map(quiver: QuiverA, a: Sequence[int] | StringVector) -> Triangle:
    """
    Reparametrization from strings in direction ``i(Q)`` to PBW coordinates for ``k``.
    """
    word = word_for_quiver(quiver)
    vec = a.a if isinstance(a, StringVector) else tuple(a)
    t = apply_monomial(word, vec)
    back = _string(word.letters, list(t.values))
    if back != list(vec):
        raise NotAStringError(vec, back)
    return t


def s_inverse(quiver: QuiverA, t: Triangle) -> StringVector:
    """The string of ``t`` in direction ``i(Q)``."""
    return string_of(word_for_quiver(quiver), t)


# -- PBW coordinate changes between reduced words ------------------------------


def braid_transform(x: int, y: int, z: int) -> tuple[int, int, int]:
    """Piecewise-linear change of PBW coordinates for a braid move ``(i, j, i) -> (j, i, j)``."""
    m = min(x, z)
    return y + z - m, m, x + y - m


def apply_moves(path: Sequence[tuple[int, ...]], coords: Sequence[int]) -> tuple[int, ...]:
    """Transport PBW coordinates along a sequence of words differing by single moves."""
    c = list(coords)
    for w, v in zip(path, path[1:]):
        p = next(q for q in range(len(w)) if w[q] != v[q])
        if abs(w[p] - w[p + 1]) > 1 and w[p] == v[p + 1] and w[p + 1] == v[p] and w[p + 2:] == v[p + 2:]:
            c[p], c[p + 1] = c[p + 1], c[p]
        elif p + 2 < len(w) and abs(w[p] - w[p + 1]) == 1 and w[p] == w[p + 2] and v[p:p + 3] == (w[p + 1], w[p], w[p + 1]):
            c[p:p + 3] = braid_transform(*c[p:p + 3])
        else:
            raise ValueError(f"{w} -> {v} is not a single move")
    return tuple(c)


def move_path(w1: Sequence[int], w2: Sequence[int], reverse: bool = False) -> list[tuple[int, ...]]:
    """A shortest path of commutation/braid moves from ``w1`` to ``w2`` (breadth first)."""
    start, goal = tuple(w1), tuple(w2)
    parent: dict[tuple[int, ...], tuple[int, ...] | None] = {start: None}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        if w == goal:
            break
        nbrs = [v for _, _, v in braid_neighbours(w)]
        for v in reversed(nbrs) if reverse else nbrs:
            if v not in parent:
                parent[v] = w
                queue.append(v)
    if goal not in parent:
        raise ValueError(f"no move path from {start} to {goal}")
    path = [goal]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def pbw_transition(
    w1: ReducedWord | Sequence[int], w2: ReducedWord | Sequence[int], coords: Sequence[int] | Triangle
) -> tuple[int, ...]:
    """
    Lusztig's transition ``R_{w1}^{w2}`` on PBW coordinates listed in the root order of ``w1``.

    >>> pbw_transition((1, 2, 1), (2, 1, 2), (1, 0, 1))
    (0, 1, 0)
    """
    vec = coords.values if isinstance(coords, Triangle) else tuple(coords)
    return apply_moves(move_path(tuple(w1), tuple(w2)), vec)


def all_triangles(n: int, max_total: int) -> Iterable[Triangle]:
    """Every triangle of rank ``n`` with entry sum at most ``max_total``."""
    size = num_roots(n)

    def rec(prefix, left):
        if len(prefix) == size:
            yield Triangle(n, tuple(prefix))
            return
        for v in range(left + 1):
            yield from rec(prefix + [v], left - v)

    yield from rec([], max_total)


@lru_cache(maxsize=None)
def _k_letters(n: int) -> tuple[int, ...]:
    return tuple(s for m in range(1, n + 1) for s in range(m, 0, -1))
