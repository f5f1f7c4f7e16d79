"""
Acceptance suite: one line per criterion, ``PASS`` or ``FAIL``, exact integer comparisons.

Run on its own with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import sys
import time
from pathlib import Path
from typing import Callable

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from canonbasis.arquiver import components_of, is_directed_partition, slice_restriction, slices_for  # noqa: E402
from canonbasis.maps import d_map, e_map, is_difference_row  # noqa: E402
from canonbasis.typea import QuiverA, RootInterval, word_for_quiver  # noqa: E402
from canonbasis.verify import (  # noqa: E402
    verify_coincide,
    verify_cone_correspondence,
    verify_crystal,
    verify_image,
    verify_inclusion,
)
from goldens import RLRL_D, RLRL_E, RLRL_GRID, RLRL_PANELS, RLRL_WORD  # noqa: E402

RLRL = QuiverA("RLRL")


def quivers(lo: int, hi: int) -> list[QuiverA]:
    return [q for n in range(lo, hi + 1) for q in QuiverA.all_quivers(n)]


def sweep(fn, qs: list[QuiverA], bound: int) -> tuple[bool, str]:
    reps = [fn(q, bound) for q in qs]
    bad = [r for r in reps if not r.passed]
    points = sum(r.points_checked for r in reps)
    detail = f"{len(qs)} quivers, {points} points"
    if bad:
        first = bad[0].to_json()
        detail += f", {sum(r.failure_count for r in bad)} failures, first {first['quiver']}: {first['failures'][:1]}"
    return not bad, detail


def golden_word() -> tuple[bool, str]:
    got = word_for_quiver(RLRL).letters
    return got == RLRL_WORD, f"i(RLRL) = {got}"


def golden_e() -> tuple[bool, str]:
    E = e_map(RLRL)
    wrong = []
    for c, (plus, minus) in RLRL_E.items():
        want = {f"a_{plus}": 1}
        if minus is not None:
            want[f"a_{minus}"] = -1
        if E.row(c) != want:
            wrong.append(c)
    return not wrong and len(RLRL_E) == 15, f"15 entries, mismatches {wrong}"


def golden_d() -> tuple[bool, str]:
    D = d_map(RLRL)
    got = [set(D.expression(a).split(" + ")) for a in D.row_names]
    want = [set(e.split(" + ")) for e in RLRL_D]
    wrong = [k + 1 for k, (g, w) in enumerate(zip(got, want)) if g != w]
    return not wrong and len(got) == 15, f"15 components, mismatches {wrong}"


def golden_slices() -> tuple[bool, str]:
    p = slices_for(RLRL)
    grid = [[p.slice_of[RootInterval(i, i + a - 1)] for i in range(1, 7 - a)] for a in range(1, 6)]
    panels_ok = True
    for comp in components_of(RLRL):
        panel = RLRL_PANELS[comp.index]
        for z in range(1, 6):
            got, _ = slice_restriction(p, comp, z)
            want = {RootInterval(i, i + a - 1) for a, row in enumerate(panel, 1) if row
                    for i, s in enumerate(row, 1) if s == z}
            panels_ok &= set(got) == want
    return grid == RLRL_GRID and panels_ok, f"grid {'ok' if grid == RLRL_GRID else grid}, panels {'ok' if panels_ok else 'differ'}"


def pbw_coincides_with_strings() -> tuple[bool, str]:
    return sweep(verify_coincide, quivers(2, 5), 2)


def l_pbw_inside_c_pbw() -> tuple[bool, str]:
    return sweep(verify_inclusion, quivers(1, 5), 3)


def lusztig_cone_correspondence() -> tuple[bool, str]:
    ok, detail = sweep(verify_cone_correspondence, quivers(1, 5), 3)
    return ok, detail + ", RLRL table of 10 rows compared"


def image_of_lusztig_cone() -> tuple[bool, str]:
    return sweep(verify_image, quivers(1, 5), 2)


def crystal_properties() -> tuple[bool, str]:
    reps = [verify_crystal(n, max_total=4) for n in range(1, 5)]
    reps += [verify_crystal(n, samples=10_000, seed=n) for n in (5, 6)]
    bad = [r for r in reps if not r.passed]
    points = sum(r.points_checked for r in reps)
    return not bad, f"{points} triangles, failing ranks {[r.quiver for r in bad]}"


def linear_maps() -> tuple[bool, str]:
    bad = []
    qs = quivers(1, 6)
    for q in qs:
        D, E = d_map(q), e_map(q)
        eye = np.eye(D.shape[0], dtype=np.int64)
        ok = (np.array_equal(D.coeffs @ E.coeffs, eye)
              and set(np.unique(D.coeffs)) <= {0, 1}
              and all(is_difference_row(r) for r in E.coeffs.tolist())
              and abs(D.determinant()) == 1)
        if not ok:
            bad.append(q.edges)
    return not bad, f"{len(qs)} quivers, failing {bad}"


def directedness() -> tuple[bool, str]:
    qs = quivers(1, 5)
    bad = [q.edges for q in qs if not is_directed_partition(slices_for(q))]
    return not bad, f"{len(qs)} quivers, failing {bad}"


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "golden reduced word for RLRL", golden_word),
    (2, "golden inverse map E for RLRL", golden_e),
    (3, "golden map D for RLRL", golden_d),
    (4, "golden slices and component views for RLRL", golden_slices),
    (5, "strings of C_PBW points equal D(c), n = 2..5, bound 2", pbw_coincides_with_strings),
    (6, "L_PBW inside C_PBW with outer rows, n <= 5, bound 3", l_pbw_inside_c_pbw),
    (7, "E(L_st) equals L_PBW, n <= 5, bound 3", lusztig_cone_correspondence),
    (8, "monomials of L_st points equal E(a) in L_PBW, n <= 5, bound 2", image_of_lusztig_cone),
    (9, "crystal operator and round-trip properties", crystal_properties),
    (10, "D and E are inverse unimodular 0/1 and difference maps, n <= 6", linear_maps),
    (11, "slices form directed partitions, n <= 5", directedness),
]


def run_criterion(number: int, title: str, check: Callable[[], tuple[bool, str]]) -> bool:
    t0 = time.perf_counter()
    ok, detail = check()
    print(f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}  ({detail}; {time.perf_counter() - t0:.1f}s)", flush=True)
    return ok


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, capsys):
    with capsys.disabled():
        print()
        ok = run_criterion(number, title, check)
    assert ok


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
