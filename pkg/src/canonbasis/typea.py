"""
Type A_n quivers, reduced words for the longest element and positive roots.

Conventions used throughout the package:

- Vertices of the Dynkin diagram are ``1..n``; edge ``m`` joins ``m`` and ``m+1``.
- A quiver is a string over ``{"L", "R"}`` of length ``n-1``. ``R`` at edge ``m``
  is the arrow ``m -> m+1``, ``L`` is ``m <- m+1``.
- Reduced words are tuples of 1-based letters; a positive root
  ``alpha_i + ... + alpha_j`` is the interval ``(i, j)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class InvalidWordError(ValueError):
    """A letter sequence is not a reduced word for w0."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True, order=True)
class RootInterval:
    """The positive root ``alpha_i + alpha_{i+1} + ... + alpha_j``."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j:
            raise ValueError(f"bad interval [{self.i},{self.j}]")

    @property
    def length(self) -> int:
        return self.j - self.i + 1

    def __contains__(self, letter: int) -> bool:
        return self.i <= letter <= self.j

    def shift(self, k: int = 1) -> RootInterval:
        return RootInterval(self.i + k, self.j + k)

    def label(self) -> str:
        return f"c_{self.i}_{self.j}"

    def __str__(self):
        return f"[{self.i},{self.j}]"


def num_roots(n: int) -> int:
    return n * (n + 1) // 2


def all_intervals(n: int) -> list[RootInterval]:
    """
    All positive roots of A_n in the PBW order of the word ``k``.

    >>> [str(r) for r in all_intervals(2)]
    ['[1,1]', '[1,2]', '[2,2]']
    """
    return [RootInterval(i, j) for j in range(1, n + 1) for i in range(1, j + 1)]


@dataclass(frozen=True)
class QuiverA:
    """An orientation of the A_n Dynkin diagram."""

    edges: str

    def __post_init__(self):
        if any(e not in "LR" for e in self.edges):
            raise ValueError(f"quiver must be a word over L/R, got {self.edges!r}")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> QuiverA:
        text = text.strip().upper()
        if n is not None and len(text) != n - 1:
            raise ValueError(f"quiver {text!r} has {len(text)} edges, expected {n - 1}")
        return cls(text)

    @classmethod
    def all_left(cls, n: int) -> QuiverA:
        """The quiver with arrows ``i <- i+1``, compatible with ``k``."""
        return cls("L" * (n - 1))

    @classmethod
    def all_right(cls, n: int) -> QuiverA:
        return cls("R" * (n - 1))

    @classmethod
    def all_quivers(cls, n: int) -> list[QuiverA]:
        """All ``2**(n-1)`` orientations, in lexicographic order of their edge words."""
        out = [""]
        for _ in range(n - 1):
            out = [w + c for w in out for c in "LR"]
        return [cls(w) for w in out]

    @property
    def n(self) -> int:
        return len(self.edges) + 1

    def is_sink(self, i: int) -> bool:
        # edge i-1 must point right into i, edge i must point left into i
        if i > 1 and self.edges[i - 2] != "R":
            return False
        if i < self.n and self.edges[i - 1] != "L":
            return False
        return True

    def reflect(self, i: int) -> QuiverA:
        """Reverse every arrow incident with ``i``."""
        flip = {"L": "R", "R": "L"}
        edges = list(self.edges)
        for m in (i - 1, i):
            if 1 <= m <= self.n - 1:
                edges[m - 1] = flip[edges[m - 1]]
        return QuiverA("".join(edges))

    def left_edges(self) -> list[int]:
        return [m for m, e in enumerate(self.edges, 1) if e == "L"]

    def right_edges(self) -> list[int]:
        return [m for m, e in enumerate(self.edges, 1) if e == "R"]

    def __str__(self):
        return self.edges


@dataclass(frozen=True)
class ReducedWord:
    """A validated reduced word for w0 in type A_n."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        check_reduced_w0(self.letters, self.n)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, idx):
        return self.letters[idx]


def _apply_transpositions(letters: Iterable[int], n: int) -> Iterator[tuple[list[int], int]]:
    perm = list(range(n + 1))
    for s in letters:
        # right multiplication by s: swap positions s-1 and s
        perm[s - 1], perm[s] = perm[s], perm[s - 1]
        yield perm, s


def _inversions(perm: Sequence[int]) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def check_reduced_w0(letters: Sequence[int], n: int) -> None:
    """Raise ``InvalidWordError`` naming the first bad prefix if ``letters`` is not a reduced word for w0."""
    if n < 1:
        raise InvalidWordError(f"rank must be positive, got {n}")
    for idx, s in enumerate(letters):
        if not 1 <= s <= n:
            raise InvalidWordError(f"letter {s} at position {idx + 1} outside [1, {n}]", idx + 1)
    length = 0
    for idx, (perm, _) in enumerate(_apply_transpositions(letters, n)):
        length = _inversions(perm)
        if length != idx + 1:
            raise InvalidWordError(f"prefix of length {idx + 1} is not reduced", idx + 1)
    if len(letters) != num_roots(n):
        raise InvalidWordError(
            f"word has length {len(letters)}, expected {num_roots(n)}", len(letters)
        )


def is_reduced_w0(letters: Sequence[int], n: int) -> bool:
    """
    True iff ``letters`` is a reduced expression for the longest element of S_{n+1}.

    >>> is_reduced_w0((1, 2, 1), 2), is_reduced_w0((2, 1, 2), 2), is_reduced_w0((1, 1, 2), 2)
    (True, True, False)
    """
    if len(letters) != num_roots(n) or any(not 1 <= s <= n for s in letters):
        return False
    perm = list(range(n + 1))
    for s in letters:
        perm[s - 1], perm[s] = perm[s], perm[s - 1]
    return perm == list(range(n, -1, -1))


def _as_word(word: ReducedWord | Sequence[int], n: int | None = None) -> ReducedWord:
    if isinstance(word, ReducedWord):
        return word
    if n is None:
        n = max(word)
    return ReducedWord(n, tuple(word))


def reflect_root(root: list[int], i: int) -> list[int]:
    """Apply the simple reflection s_i to a root given by simple-root coordinates (0-based list)."""
    n = len(root)
    # <alpha, alpha_i^vee> from the Cartan matrix of A_n
    pairing = 2 * root[i - 1]
    if i > 1:
        pairing -= root[i - 2]
    if i < n:
        pairing -= root[i]
    out = list(root)
    out[i - 1] -= pairing
    return out


def _root_to_interval(root: Sequence[int]) -> RootInterval:
    support = [p + 1 for p, x in enumerate(root) if x]
    if not support or any(x != 1 for x in root if x):
        raise ValueError(f"{root} is not a positive root of type A")
    i, j = support[0], support[-1]
    if support != list(range(i, j + 1)):
        raise ValueError(f"{root} is not a positive root of type A")
    return RootInterval(i, j)


def roots_order(word: ReducedWord | Sequence[int], n: int | None = None) -> list[RootInterval]:
    """
    The convex order ``alpha^j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})`` induced by a reduced word.

    >>> [str(r) for r in roots_order((1, 2, 1))]
    ['[1,1]', '[1,2]', '[2,2]']
    """
    w = _as_word(word, n)
    out = []
    for idx, s in enumerate(w.letters):
        root = [0] * w.n
        root[s - 1] = 1
        for t in reversed(w.letters[:idx]):
            root = reflect_root(root, t)
        out.append(_root_to_interval(root))
    return out


def is_compatible(word: ReducedWord | Sequence[int], quiver: QuiverA) -> bool:
    """
    True iff every letter is a sink of the quiver reflected at all previous letters.

    >>> is_compatible((1, 2, 1, 3, 2, 1), QuiverA("LL"))
    True
    >>> is_compatible((1, 2, 1, 3, 2, 1), QuiverA("RR"))
    False
    """
    q = quiver
    for s in word:
        if not 1 <= s <= q.n or not q.is_sink(s):
            return False
        q = q.reflect(s)
    return True


def _down_to(m: int, stop: int = 1) -> list[int]:
    return list(range(m, stop - 1, -1))


@lru_cache(maxsize=None)
def _word_for_edges(edges: str) -> tuple[tuple[int, ...], ...]:
    q = QuiverA(edges)
    n = q.n
    parts = [tuple(_down_to(l)) for l in q.left_edges()]
    parts.append(tuple(_down_to(n)))
    parts += [tuple(_down_to(n, n + 1 - r)) for r in reversed(q.right_edges())]
    return tuple(parts)


def word_parts(quiver: QuiverA) -> list[tuple[int, ...]]:
    """The bracketed factors ``(l_1 -> 1) ... (n -> 1) (n -> n+1-r_b) ... (n -> n+1-r_1)``."""
    return list(_word_for_edges(quiver.edges))


def word_for_quiver(quiver: QuiverA) -> ReducedWord:
    """
    The reduced word i(Q) compatible with ``quiver``.

    >>> word_for_quiver(QuiverA("RLRL")).letters
    (2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 5, 4, 3, 5)
    >>> word_for_quiver(QuiverA("R")).letters
    (2, 1, 2)
    """
    letters = tuple(s for part in _word_for_edges(quiver.edges) for s in part)
    return ReducedWord(quiver.n, letters)


def word_k(n: int) -> ReducedWord:
    """The word ``(1, 2,1, 3,2,1, ..., n,...,1)``."""
    return ReducedWord(n, tuple(s for m in range(1, n + 1) for s in _down_to(m)))


def commutation_normal_form(letters: Sequence[int]) -> tuple[int, ...]:
    """
    Lexicographically least word in the commutation class of ``letters``.

    A letter can be pulled to the front iff it commutes with (differs by more
    than one from) every letter before it; taking the smallest such letter at
    every step yields the lexicographic normal form of the trace.
    """
    rest = list(letters)
    out = []
    while rest:
        best_pos = None
        for pos, s in enumerate(rest):
            if all(abs(s - t) > 1 for t in rest[:pos]):
                if best_pos is None or s < rest[best_pos]:
                    best_pos = pos
        out.append(rest.pop(best_pos))
    return tuple(out)


def commutation_neighbours(letters: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for p in range(len(letters) - 1):
        a, b = letters[p], letters[p + 1]
        if abs(a - b) > 1:
            yield letters[:p] + (b, a) + letters[p + 2:]


def braid_neighbours(letters: tuple[int, ...]) -> Iterator[tuple[int, int, tuple[int, ...]]]:
    """Yield ``(position, kind, word)`` for single commutation (kind 2) and braid (kind 3) moves."""
    for p in range(len(letters) - 1):
        a, b = letters[p], letters[p + 1]
        if abs(a - b) > 1:
            yield p, 2, letters[:p] + (b, a) + letters[p + 2:]
        elif p + 2 < len(letters) and abs(a - b) == 1 and letters[p + 2] == a:
            yield p, 3, letters[:p] + (b, a, b) + letters[p + 3:]


def commutation_class(letters: Sequence[int], limit: int = 10**6) -> set[tuple[int, ...]]:
    """Breadth-first closure under commutations. Exponential in general; fine for n <= 6."""
    start = tuple(letters)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for v in commutation_neighbours(w):
            if v not in seen:
                seen.add(v)
                if len(seen) > limit:
                    raise RuntimeError("commutation class exceeds search limit")
                queue.append(v)
    return seen


def commutation_equivalent(w1: ReducedWord | Sequence[int], w2: ReducedWord | Sequence[int]) -> bool:
    """
    True iff ``w2`` is obtained from ``w1`` by swapping adjacent commuting letters.

    >>> commutation_equivalent((1, 3, 2, 1, 3, 2), (3, 1, 2, 3, 1, 2))
    True
    >>> commutation_equivalent((1, 2, 1), (2, 1, 2))
    False
    """
    a, b = tuple(w1), tuple(w2)
    if len(a) != len(b) or sorted(a) != sorted(b):
        return False
    return commutation_normal_form(a) == commutation_normal_form(b)
