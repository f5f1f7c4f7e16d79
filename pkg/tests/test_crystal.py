from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from canonbasis.batch import monomials_batch, string_condition_batch, strings_batch
from canonbasis.crystal import (
    NotAStringError,
    StringVector,
    Triangle,
    all_triangles,
    apply_monomial,
    apply_moves,
    braid_transform,
    e_tilde,
    epsilon,
    f_tilde,
    in_string_cone,
    move_path,
    pbw_transition,
    s_inverse,
    s_map,
    satisfies_string_condition,
    string_of,
)
from canonbasis.maps import apply, d_map
from canonbasis.typea import QuiverA, ReducedWord, commutation_class, word_for_quiver, word_k


def triangles(n: int, hi: int = 4):
    size = n * (n + 1) // 2
    return st.lists(st.integers(0, hi), min_size=size, max_size=size).map(lambda v: Triangle(n, tuple(v)))


def test_single_operator_examples():
    assert f_tilde(1, Triangle.zero(2)).values == (1, 0, 0)
    assert f_tilde(2, Triangle(2, (1, 0, 0))).values == (0, 1, 0)
    assert f_tilde(2, Triangle(2, (0, 1, 0))).values == (0, 1, 1)
    assert e_tilde(2, Triangle(2, (0, 0, 1))).values == (0, 0, 0)
    for j in (1, 2, 3):
        assert e_tilde(j, Triangle.zero(3)) is None
    with pytest.raises(ValueError):
        f_tilde(3, Triangle.zero(2))


def test_triangle_validation_and_json():
    with pytest.raises(ValueError):
        Triangle(2, (1, 2))
    with pytest.raises(ValueError):
        Triangle(2, (1, -1, 0))
    t = Triangle(3, (1, 2, 3, 4, 5, 6))
    assert t[1, 3] == 4 and t[3, 3] == 6
    assert Triangle.from_json(t.to_json()) == t
    # weight coordinate s sums the entries c_ij with i <= s <= j
    assert t.weight() == (1 + 2 + 4, 2 + 3 + 4 + 5, 4 + 5 + 6)
    sv = StringVector(word_k(2), (1, 1, 0))
    assert StringVector.from_json(sv.to_json()) == sv


def test_monomial_and_string_examples():
    assert apply_monomial((1, 2, 1), (0, 0, 0)).is_zero()
    assert apply_monomial((1, 2, 1), (1, 1, 0)).values == (1, 0, 1)
    assert string_of((1, 2, 1), Triangle(2, (1, 0, 1))).a == (1, 1, 0)
    assert string_of(word_k(4), Triangle.zero(4)).a == (0,) * 10
    with pytest.raises(ValueError):
        apply_monomial((1, 2, 1), (1, 1))


def test_string_condition_examples():
    assert satisfies_string_condition((1, 2, 1), (0, 0, 0))
    assert satisfies_string_condition((1, 2, 1), (1, 1, 0))
    assert satisfies_string_condition((1, 2, 1), (0, 1, 1))
    assert not satisfies_string_condition((1, 2, 1), (5, 0, 1))
    assert in_string_cone((1, 2, 1), (0, 0, 0))
    assert in_string_cone((1, 2, 1), (1, 1, 0))
    assert not in_string_cone((1, 2, 1), (0, 0, 5))
    assert not in_string_cone((1, 2, 1), (-1, 0, 0))


def test_s_map_and_inverse():
    q = QuiverA("RLRL")
    assert s_map(q, (0,) * 15).is_zero()
    c = Triangle.from_entries(5, {(1, 2): 1})
    a = s_inverse(q, c)
    assert a.a == apply(d_map(q), c.values)
    assert s_map(q, a) == c
    with pytest.raises(NotAStringError):
        s_map(QuiverA("L"), (0, 0, 5))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(triangles(n), st.integers(1, n))))
def test_e_inverts_f(data):
    t, j = data
    up = f_tilde(j, t)
    assert e_tilde(j, up) == t
    assert up.weight() == tuple(w + (k == j - 1) for k, w in enumerate(t.weight()))
    down = e_tilde(j, t)
    if down is not None:
        assert f_tilde(j, down) == t
        assert down.weight() == tuple(w - (k == j - 1) for k, w in enumerate(t.weight()))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(triangles(n, 3), st.integers(1, n))))
def test_epsilon_counts_raising_steps(data):
    t, j = data
    k = epsilon(j, t)
    cur = t
    for _ in range(k):
        cur = e_tilde(j, cur)
        assert cur is not None
    assert e_tilde(j, cur) is None


@pytest.mark.parametrize("n", range(1, 5))
def test_round_trip_exhaustive(n):
    words = [word_k(n).letters] + [word_for_quiver(q).letters for q in QuiverA.all_quivers(n)]
    for t in all_triangles(n, 4):
        for w in words:
            s = string_of(w, t)
            assert apply_monomial(w, s) == t
            assert string_of(w, apply_monomial(w, s)) == s


def test_braid_transform_is_an_involution_preserving_weight():
    rng = random.Random(2)
    for _ in range(500):
        x, y, z = (rng.randint(0, 9) for _ in range(3))
        image = braid_transform(x, y, z)
        assert braid_transform(*image) == (x, y, z)
        # the roots are (a, a+b, b) before and (b, a+b, a) after the move
        assert (x + y, y + z) == (image[1] + image[2], image[0] + image[1])


def test_pbw_transition():
    assert pbw_transition((1, 2, 1), (2, 1, 2), (1, 0, 1)) == (0, 1, 0)
    assert pbw_transition((1, 2, 1), (1, 2, 1), (3, 1, 4)) == (3, 1, 4)
    rng = random.Random(8)
    w1 = word_k(3).letters
    w2 = word_for_quiver(QuiverA("RR")).letters
    for _ in range(50):
        c = tuple(rng.randint(0, 5) for _ in range(6))
        there = pbw_transition(w1, w2, c)
        assert pbw_transition(w2, w1, there) == c


def test_pbw_transition_is_path_independent():
    rng = random.Random(3)
    words = sorted(commutation_class(word_k(3).letters) | commutation_class(word_for_quiver(QuiverA("RR")).letters)
                   | commutation_class(word_for_quiver(QuiverA("RL")).letters))
    distinct_paths = 0
    for _ in range(30):
        w1, w2 = rng.sample(words, 2)
        p1, p2 = move_path(w1, w2), move_path(w1, w2, reverse=True)
        distinct_paths += p1 != p2
        for _ in range(10):
            c = tuple(rng.randint(0, 6) for _ in range(6))
            assert apply_moves(p1, c) == apply_moves(p2, c)
    assert distinct_paths > 0


def test_apply_moves_rejects_non_moves():
    with pytest.raises(ValueError):
        apply_moves([(1, 2, 1), (1, 1, 2)], (0, 0, 0))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_batch_kernels_agree_with_scalar(n):
    rng = np.random.default_rng(n)
    size = n * (n + 1) // 2
    points = rng.integers(0, 4, size=(200, size))
    for q in QuiverA.all_quivers(n)[:4]:
        w = word_for_quiver(q)
        s = strings_batch(w.letters, points)
        strings = rng.integers(0, 3, size=(200, size))
        m = monomials_batch(w.letters, strings, size)
        good = string_condition_batch(w.letters, strings, size)
        for r in range(200):
            t = Triangle(n, tuple(int(v) for v in points[r]))
            assert tuple(s[r]) == string_of(w, t).a
            assert tuple(m[r]) == apply_monomial(w, strings[r]).values
            assert bool(good[r]) == satisfies_string_condition(w, strings[r])


def test_batch_rejects_negative_exponents():
    with pytest.raises(ValueError):
        monomials_batch((1, 2, 1), np.array([[0, -1, 0]]), 3)


def test_reduced_word_objects_are_accepted():
    w = ReducedWord(2, (2, 1, 2))
    t = apply_monomial(w, (1, 0, 2))
    assert string_of(w, t).word == w
