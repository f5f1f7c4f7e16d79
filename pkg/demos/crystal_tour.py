"""
Kashiwara operators on PBW triangles, strings along different reduced words,
and a transition of PBW coordinates by braid moves.

    python demos/crystal_tour.py
"""
from __future__ import annotations

from canonbasis.crystal import Triangle, apply_monomial, e_tilde, f_tilde, move_path, pbw_transition, string_of
from canonbasis.render import render
from canonbasis.typea import QuiverA, word_for_quiver, word_k


def main() -> None:
    n = 3
    t = Triangle.zero(n)
    print("lowering the zero triangle by F_1, F_2, F_2, F_3, F_1:")
    for j in (1, 2, 2, 3, 1):
        t = f_tilde(j, t)
        print(f"\nafter F_{j}, weight {t.weight()}\n{render(t)}")

    print("\nstrings of the final triangle along several reduced words:")
    s = string_of(word_k(n), t)
    print(f"string along k = {word_k(n).letters}: {s.a}")
    for q in QuiverA.all_quivers(n):
        w = word_for_quiver(q)
        a = string_of(w, t).a
        assert apply_monomial(w, a) == t
        print(f"string along i({q.edges}) = {w.letters}: {a}")
    print("zero triangle raised by E_1:", e_tilde(1, Triangle.zero(n)))

    w1, w2 = word_k(n).letters, word_for_quiver(QuiverA("RR")).letters
    path = move_path(w1, w2)
    print(f"\n{len(path) - 1} moves from {w1} to {w2}:")
    for w in path:
        print("  ", w)
    c = (1, 0, 2, 0, 1, 1)
    print(f"PBW coordinates {c} along the first word become {pbw_transition(w1, w2, c)} along the last")


if __name__ == "__main__":
    main()
