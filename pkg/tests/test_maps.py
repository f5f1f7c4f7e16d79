from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from canonbasis.maps import (
    IntLinearMap,
    NotUnimodularError,
    apply,
    bareiss_determinant,
    d_map,
    e_map,
    integer_inverse,
    is_difference_row,
    pbw_names,
)
from canonbasis.typea import QuiverA
from goldens import RLRL_D, RLRL_E

RLRL = QuiverA("RLRL")


def all_quivers_upto(n: int):
    return [q for m in range(1, n + 1) for q in QuiverA.all_quivers(m)]


def terms(expr: str) -> set[str]:
    return set(expr.split(" + "))


def test_rlrl_d_matches_golden():
    D = d_map(RLRL)
    assert D.row_names == tuple(f"a_{j}" for j in range(1, 16))
    assert [terms(D.expression(a)) for a in D.row_names] == [terms(e) for e in RLRL_D]


def test_rlrl_e_matches_golden():
    E = e_map(RLRL)
    for c, (plus, minus) in RLRL_E.items():
        want = {f"a_{plus}": 1}
        if minus is not None:
            want[f"a_{minus}"] = -1
        assert E.row(c) == want, c


def test_rank_two_left_quiver():
    D = d_map(QuiverA("L"))
    assert D.coeffs.tolist() == [[1, 0, 0], [0, 1, 1], [0, 1, 0]]
    E = e_map(QuiverA("L"))
    assert [E.expression(c) for c in E.row_names] == ["a_1", "a_3", "a_2 - a_3"]


def test_apply_examples():
    D, E = d_map(RLRL), e_map(RLRL)
    c = [0] * 15
    c[pbw_names(5).index("c_1_2")] = 1
    a = apply(D, c)
    assert a == (1, 1) + (0,) * 13
    assert apply(E, a) == tuple(c)
    assert apply(D, [0] * 15) == (0,) * 15
    ident = IntLinearMap(np.eye(3, dtype=np.int64), ("x", "y", "z"), ("x", "y", "z"))
    assert apply(ident, (4, -2, 7)) == (4, -2, 7)
    with pytest.raises(ValueError):
        apply(D, [1, 2])


@pytest.mark.parametrize("q", all_quivers_upto(6), ids=lambda q: q.edges or "A1")
def test_linear_map_invariants(q):
    D, E = d_map(q), e_map(q)
    size = D.shape[0]
    assert np.array_equal(D.coeffs @ E.coeffs, np.eye(size, dtype=np.int64))
    assert np.array_equal(E.coeffs @ D.coeffs, np.eye(size, dtype=np.int64))
    assert set(np.unique(D.coeffs)) <= {0, 1}
    assert all(is_difference_row(row) for row in E.coeffs.tolist())
    assert abs(D.determinant()) == 1


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(all_quivers_upto(5)), st.data())
def test_d_is_additive_and_nonnegative(q, data):
    size = q.n * (q.n + 1) // 2
    vec = st.lists(st.integers(0, 50), min_size=size, max_size=size)
    c1, c2 = data.draw(vec), data.draw(vec)
    D, E = d_map(q), e_map(q)
    a1, a2 = apply(D, c1), apply(D, c2)
    assert apply(D, [x + y for x, y in zip(c1, c2)]) == tuple(x + y for x, y in zip(a1, a2))
    assert min(a1) >= 0
    assert apply(E, a1) == tuple(c1)


def test_integer_inverse_rejects_non_unimodular():
    with pytest.raises(NotUnimodularError):
        integer_inverse([[2, 0], [0, 1]])
    with pytest.raises(NotUnimodularError):
        integer_inverse([[1, 2], [2, 4]])
    assert integer_inverse([[2, 3], [1, 2]]) == [[2, -3], [-1, 2]]
    assert bareiss_determinant([[2, 3], [1, 2]]) == 1
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0


def test_json_round_trip():
    D = d_map(QuiverA("RL"))
    again = IntLinearMap.from_json(D.to_json(), D.col_names, D.n)
    assert again == D
    E = e_map(QuiverA("RL"))
    assert D.compose(E).coeffs.tolist() == np.eye(6, dtype=int).tolist()
