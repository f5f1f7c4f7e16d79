"""
Bounded verification sweeps for the cone and reparametrization statements.

Every sweep enumerates lattice points with coordinates in ``[0, bound]`` and
returns a :class:`VerificationReport`. Failure records name the public
operation that disagreed, so :func:`replay` can recompute them from the record
alone with the scalar implementations.

>>> verify_coincide(QuiverA("RL"), 1).passed
True
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import crystal
from .batch import monomials_batch, string_condition_batch, strings_batch
from .cones import (
    ConeSpec,
    _coeff_matrix,
    c_pbw_cone,
    cone_image_under,
    enumerate_array,
    l_pbw_cone,
    outer_rows,
    lusztig_cone,
    membership,
)
from .maps import apply, d_map, e_map
from .typea import QuiverA, word_for_quiver

MAX_RECORDS = 20


@dataclass
class VerificationReport:
    theorem: str
    quiver: str
    bound: int | None
    points_checked: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    failure_count: int = 0
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, record: dict[str, Any]) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_RECORDS:
            self.failures.append(record)

    def to_json(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "quiver": self.quiver,
            "bound": self.bound,
            "verdict": "pass" if self.passed else "fail",
            "points_checked": self.points_checked,
            "failure_count": self.failure_count,
            "failures": sorted(self.failures, key=lambda r: (r["check"], r["input"])),
            "elapsed": round(self.elapsed, 3),
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        verdict = "PASS" if self.passed else f"FAIL ({self.failure_count})"
        b = "" if self.bound is None else f" bound={self.bound}"
        return f"{self.theorem:<15} {self.quiver:<8}{b} points={self.points_checked} {verdict} {self.elapsed:.2f}s"


def _record(check: str, operation: str, quiver: QuiverA, x: Iterable[int], expected: Any, actual: Any) -> dict[str, Any]:
    return {
        "check": check,
        "operation": operation,
        "quiver": quiver.edges,
        "input": [int(v) for v in x],
        "expected": expected,
        "actual": actual,
    }


def _as_list(v) -> Any:
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    return [int(x) for x in v]


def replay(record: dict[str, Any]) -> Any:
    """
    Recompute the ``actual`` field of a failure record with the scalar code.

    >>> replay({"operation": "s_inverse", "quiver": "L", "input": [1, 0, 1]})
    [1, 1, 0]
    """
    q = QuiverA(record["quiver"])
    x = tuple(record["input"])
    word = word_for_quiver(q)
    op = record["operation"]
    if op == "s_inverse":
        return list(crystal.s_inverse(q, crystal.Triangle(q.n, x)).a)
    if op == "apply_monomial":
        return list(crystal.apply_monomial(word, x).values)
    if op == "satisfies_string_condition":
        return crystal.satisfies_string_condition(word, x)
    if op == "in_string_cone":
        return crystal.in_string_cone(word, x)
    if op == "d_map":
        return list(apply(d_map(q), x))
    if op == "e_map":
        return list(apply(e_map(q), x))
    cones: dict[str, Callable[[QuiverA], ConeSpec]] = {
        "membership:c_pbw": c_pbw_cone,
        "membership:l_pbw": l_pbw_cone,
        "membership:outer": outer_rows,
        "membership:lusztig": lambda qq: lusztig_cone(word_for_quiver(qq)),
    }
    if op in cones:
        return membership(cones[op](q), x)
    raise ValueError(f"unknown operation {op!r}")


def _rows_ok(matrix: np.ndarray, points: np.ndarray) -> np.ndarray:
    ok = np.all(points >= 0, axis=1)
    if matrix.size:
        ok &= np.all(points @ matrix.T >= 0, axis=1)
    return ok


def _safe_strings(letters: Sequence[int], points: np.ndarray) -> np.ndarray | None:
    try:
        return strings_batch(letters, points)
    except AssertionError:
        return None


def verify_coincide(q: QuiverA, bound: int = 2) -> VerificationReport:
    """
    On lattice points ``c`` of C_PBW(Q): the string of ``c`` along ``i(Q)`` is
    ``D(c)``, ``D(c)`` satisfies the string condition, and it lies in the string
    cone (the monomial of ``D(c)`` gives back ``c``).
    """
    rep = VerificationReport("coincide", q.edges, bound)
    t0 = time.perf_counter()
    word = word_for_quiver(q)
    letters, size = word.letters, len(word.letters)
    D = d_map(q).coeffs
    for block in enumerate_array(c_pbw_cone(q), bound):
        rep.points_checked += len(block)
        a = block @ D.T
        s = _safe_strings(letters, block)
        bad_s = np.ones(len(block), bool) if s is None else np.any(s != a, axis=1)
        bad_c = ~string_condition_batch(letters, a, size)
        back = monomials_batch(letters, a, size)
        bad_m = np.any(back != block, axis=1)
        for r in np.flatnonzero(bad_s | bad_c | bad_m):
            c = block[r]
            if bad_s[r]:
                actual = list(crystal.s_inverse(q, crystal.Triangle(q.n, tuple(int(v) for v in c))).a)
                rep.fail(_record("s_inverse = D", "s_inverse", q, c, _as_list(a[r]), actual))
            if bad_c[r]:
                rep.fail(_record("string condition", "satisfies_string_condition", q, a[r], True, False))
            if bad_m[r]:
                rep.fail(_record("string cone", "apply_monomial", q, a[r], _as_list(c), _as_list(back[r])))
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_inclusion(q: QuiverA, bound: int = 3) -> VerificationReport:
    """Lattice points of L_PBW(Q) lie in C_PBW(Q) and satisfy the outer-row consequences."""
    rep = VerificationReport("inclusion", q.edges, bound)
    t0 = time.perf_counter()
    C = _coeff_matrix(c_pbw_cone(q))
    M = _coeff_matrix(outer_rows(q))
    for block in enumerate_array(l_pbw_cone(q), bound):
        rep.points_checked += len(block)
        in_c = _rows_ok(C, block)
        in_m = _rows_ok(M, block)
        for r in np.flatnonzero(~in_c):
            rep.fail(_record("L_PBW in C_PBW", "membership:c_pbw", q, block[r], True, False))
        for r in np.flatnonzero(~in_m):
            rep.fail(_record("outer rows", "membership:outer", q, block[r], True, False))
    rep.elapsed = time.perf_counter() - t0
    return rep


# The correspondence table for RLRL, one string-side row against its PBW-side row.
# Each side is (terms on the larger side, terms on the smaller side).
RLRL_TABLE: tuple[tuple[tuple[tuple[str, ...], tuple[str, ...]], tuple[tuple[str, ...], tuple[str, ...]]], ...] = (
    ((("a_2", "a_4"), ("a_1", "a_5")), (("c_1_1",), ("c_2_2",))),
    ((("a_5",), ("a_2", "a_6")), (("c_2_2", "c_2_3"), ("c_1_1", "c_1_2"))),
    ((("a_4", "a_7"), ("a_3", "a_8")), (("c_2_3", "c_1_3"), ("c_3_4", "c_2_4"))),
    ((("a_5", "a_8"), ("a_4", "a_9")), (("c_2_2",), ("c_3_3",))),
    ((("a_6", "a_9"), ("a_5", "a_10")), (("c_3_3", "c_3_4"), ("c_2_2", "c_2_3"))),
    ((("a_10",), ("a_6", "a_11")), (("c_2_4", "c_2_5"), ("c_1_3", "c_1_4"))),
    ((("a_8",), ("a_7", "a_12")), (("c_3_4", "c_2_4"), ("c_4_5", "c_3_5"))),
    ((("a_9", "a_12"), ("a_8", "a_13")), (("c_3_3",), ("c_4_4",))),
    ((("a_10", "a_13"), ("a_9", "a_14")), (("c_4_4", "c_4_5"), ("c_3_3", "c_3_4"))),
    ((("a_13",), ("a_12", "a_15")), (("c_4_4",), ("c_5_5",))),
)


def _row_vector(names: Sequence[str], side: tuple[tuple[str, ...], tuple[str, ...]]) -> tuple[int, ...]:
    v = [0] * len(names)
    for s in side[0]:
        v[names.index(s)] += 1
    for s in side[1]:
        v[names.index(s)] -= 1
    return tuple(v)


def correspondence_table(q: QuiverA) -> list[tuple[str, str]]:
    """Each Lusztig-cone row of ``i(q)`` beside its image under E, both as text."""
    lst = lusztig_cone(word_for_quiver(q))
    E = e_map(q)
    out = []
    for row in lst.rows:
        single = ConeSpec(lst.dim, (row,), lst.names)
        image = cone_image_under(E, single)
        out.append((lst.format_row(row), image.format_row(image.rows[0])))
    return out


def _table_diff(q: QuiverA) -> list[dict[str, Any]]:
    lst = lusztig_cone(word_for_quiver(q))
    E = e_map(q)
    diffs = []
    if len(lst.rows) != len(RLRL_TABLE):
        return [{"row": None, "expected": len(RLRL_TABLE), "actual": len(lst.rows)}]
    for k, (row, (left, right)) in enumerate(zip(lst.rows, RLRL_TABLE)):
        want_left = _row_vector(lst.names, left)
        img = cone_image_under(E, ConeSpec(lst.dim, (row,), lst.names)).rows[0].coeffs
        want_right = _row_vector(E.row_names, right)
        if row.coeffs != want_left or img != want_right:
            diffs.append({"row": k + 1, "expected": [list(want_left), list(want_right)], "actual": [list(row.coeffs), list(img)]})
    return diffs


def verify_cone_correspondence(q: QuiverA, bound: int = 3) -> VerificationReport:
    """
    E(L_st(i(q))) against L_PBW(q).

    The inequality rows are compared exactly after normalization. Nonnegativity
    is handled separately: D has 0/1 entries so ``c >= 0`` gives ``a >= 0``, and
    the converse is checked on the lattice in both directions.
    """
    rep = VerificationReport("correspondence", q.edges, bound)
    t0 = time.perf_counter()
    word = word_for_quiver(q)
    lst = lusztig_cone(word)
    lpbw = l_pbw_cone(q)
    Dm, Em = d_map(q), e_map(q)
    image = cone_image_under(Em, lst)
    got, want = image.row_set(), lpbw.row_set()
    for row in sorted(got - want):
        rep.fail({"check": "symbolic", "operation": "cone_image_under", "quiver": q.edges,
                  "input": list(row), "expected": "row of l_pbw_cone", "actual": "extra row"})
    for row in sorted(want - got):
        rep.fail({"check": "symbolic", "operation": "cone_image_under", "quiver": q.edges,
                  "input": list(row), "expected": "row of the image", "actual": "missing row"})
    if np.any(Dm.coeffs < 0):
        rep.fail({"check": "D nonnegative", "operation": "d_map", "quiver": q.edges,
                  "input": [], "expected": True, "actual": False})
    rep.notes.append(f"{len(got)} rows in the image, {len(want)} rows in L_PBW")
    D, E = Dm.coeffs, Em.coeffs
    L_rows, P_rows = _coeff_matrix(lst), _coeff_matrix(lpbw)
    for block in enumerate_array(lpbw, bound):
        rep.points_checked += len(block)
        ok = _rows_ok(L_rows, block @ D.T)
        for r in np.flatnonzero(~ok):
            rep.fail(_record("D(L_PBW) in L_st", "membership:lusztig", q, block[r] @ D.T, True, False))
    for block in enumerate_array(lst, bound):
        rep.points_checked += len(block)
        ok = _rows_ok(P_rows, block @ E.T)
        for r in np.flatnonzero(~ok):
            rep.fail(_record("E(L_st) in L_PBW", "membership:l_pbw", q, block[r] @ E.T, True, False))
    if q.edges == "RLRL":
        for d in _table_diff(q):
            rep.fail({"check": "table", "operation": "cone_image_under", "quiver": q.edges,
                      "input": [d["row"]] if d["row"] else [], "expected": d["expected"], "actual": d["actual"]})
        rep.notes.append("table of 10 rows compared")
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_image(q: QuiverA, bound: int = 2) -> VerificationReport:
    """
    On lattice points ``a`` of L_st(i(q)): the monomial of ``a`` is ``E(a)``, lies in
    L_PBW(q) and has string ``a``. From the other side, each lattice point of
    L_PBW(q) has string ``D(c)``, which lies in L_st.
    """
    rep = VerificationReport("image", q.edges, bound)
    t0 = time.perf_counter()
    word = word_for_quiver(q)
    letters, size = word.letters, len(word.letters)
    lst, lpbw = lusztig_cone(word), l_pbw_cone(q)
    D, E = d_map(q).coeffs, e_map(q).coeffs
    L_rows, P_rows = _coeff_matrix(lst), _coeff_matrix(lpbw)
    for block in enumerate_array(lst, bound):
        rep.points_checked += len(block)
        c = monomials_batch(letters, block, size)
        bad_e = np.any(c != block @ E.T, axis=1)
        bad_p = ~_rows_ok(P_rows, c)
        s = _safe_strings(letters, c)
        bad_s = np.ones(len(block), bool) if s is None else np.any(s != block, axis=1)
        for r in np.flatnonzero(bad_e):
            rep.fail(_record("s_map = E", "apply_monomial", q, block[r], _as_list(block[r] @ E.T), _as_list(c[r])))
        for r in np.flatnonzero(bad_p):
            rep.fail(_record("s_map in L_PBW", "membership:l_pbw", q, c[r], True, False))
        for r in np.flatnonzero(bad_s):
            rep.fail(_record("string round trip", "in_string_cone", q, block[r], True, False))
    for block in enumerate_array(lpbw, bound):
        rep.points_checked += len(block)
        a = block @ D.T
        s = _safe_strings(letters, block)
        bad_s = np.ones(len(block), bool) if s is None else np.any(s != a, axis=1)
        bad_l = ~_rows_ok(L_rows, a)
        for r in np.flatnonzero(bad_s):
            actual = list(crystal.s_inverse(q, crystal.Triangle(q.n, tuple(int(v) for v in block[r]))).a)
            rep.fail(_record("s_inverse = D", "s_inverse", q, block[r], _as_list(a[r]), actual))
        for r in np.flatnonzero(bad_l):
            rep.fail(_record("D(L_PBW) in L_st", "membership:lusztig", q, a[r], True, False))
    rep.elapsed = time.perf_counter() - t0
    return rep


SWEEPS: dict[str, tuple[Callable[[QuiverA, int], VerificationReport], int]] = {
    "coincide": (verify_coincide, 2),
    "inclusion": (verify_inclusion, 3),
    "correspondence": (verify_cone_correspondence, 3),
    "image": (verify_image, 2),
}


def verify_all(quivers: Iterable[QuiverA], bound: int | None = None, which: Sequence[str] = tuple(SWEEPS)) -> list[VerificationReport]:
    """Run the named sweeps on every quiver; ``bound`` overrides each sweep's default."""
    out = []
    for q in quivers:
        for name in which:
            fn, default = SWEEPS[name]
            out.append(fn(q, default if bound is None else bound))
    return out


def _operator_checks(t: crystal.Triangle, rep: VerificationReport) -> None:
    w0 = t.weight()
    for j in range(1, t.n + 1):
        up = crystal.f_tilde(j, t)
        expect = tuple(x + (k == j - 1) for k, x in enumerate(w0))
        if up.weight() != expect:
            rep.fail({"check": "weight of F", "operation": "f_tilde", "quiver": "", "input": list(t.values),
                      "expected": list(expect), "actual": list(up.weight()), "j": j})
        back = crystal.e_tilde(j, up)
        if back != t:
            rep.fail({"check": "E after F", "operation": "e_tilde", "quiver": "", "input": list(up.values),
                      "expected": list(t.values), "actual": None if back is None else list(back.values), "j": j})
        down = crystal.e_tilde(j, t)
        if down is not None:
            expect = tuple(x - (k == j - 1) for k, x in enumerate(w0))
            again = crystal.f_tilde(j, down)
            if down.weight() != expect or again != t:
                rep.fail({"check": "F after E", "operation": "f_tilde", "quiver": "", "input": list(down.values),
                          "expected": list(t.values), "actual": list(again.values), "j": j})


def _round_trips(points: np.ndarray, words: Sequence[tuple[int, ...]], rep: VerificationReport) -> None:
    for letters in words:
        strings = _safe_strings(letters, points)
        if strings is None:
            rep.fail({"check": "string residual", "operation": "string_of", "quiver": "", "input": [],
                      "expected": "zero residual", "actual": "nonzero residual", "word": list(letters)})
            continue
        back = monomials_batch(letters, strings, points.shape[1])
        for r in np.flatnonzero(np.any(back != points, axis=1)):
            rep.fail({"check": "string round trip", "operation": "apply_monomial", "quiver": "",
                      "input": _as_list(strings[r]), "expected": _as_list(points[r]),
                      "actual": _as_list(back[r]), "word": list(letters)})


def verify_crystal(n: int, max_total: int = 0, samples: int = 0, seed: int = 0, max_entry: int = 3) -> VerificationReport:
    """
    Operator identities on triangles of rank ``n``: ``E_j F_j = id``, ``F_j E_j = id``
    where ``E_j`` is nonzero, weights move by one simple root, and the monomial of
    a string gives back the triangle (for the standard word and every ``i(Q)``).

    Exhaustive over entry sums up to ``max_total``, then ``samples`` random
    triangles with entries up to ``max_entry`` drawn from ``seed``.
    """
    rep = VerificationReport("crystal", f"n={n}", max_total)
    t0 = time.perf_counter()
    words = [crystal._k_letters(n)] + [word_for_quiver(q).letters for q in QuiverA.all_quivers(n)]
    size = n * (n + 1) // 2
    exhaustive = [t.values for t in crystal.all_triangles(n, max_total)]
    rng = np.random.default_rng(seed)
    random_rows = rng.integers(0, max_entry + 1, size=(samples, size))
    points = np.vstack([np.array(exhaustive, dtype=np.int64).reshape(-1, size), random_rows]).astype(np.int64)
    for row in points:
        _operator_checks(crystal.Triangle(n, tuple(int(v) for v in row)), rep)
    _round_trips(points, words, rep)
    rep.points_checked = len(points)
    rep.notes.append(f"seed={seed} samples={samples}")
    rep.elapsed = time.perf_counter() - t0
    return rep
