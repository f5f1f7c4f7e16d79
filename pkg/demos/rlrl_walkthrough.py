"""
The A_5 quiver RLRL end to end: its reduced word, slices, the maps D and E,
both PBW-side cones and how the Lusztig cone lines up with L_PBW.

    python demos/rlrl_walkthrough.py
"""
from __future__ import annotations

from canonbasis.arquiver import components_of, slices_for
from canonbasis.cones import c_pbw_cone, l_pbw_cone
from canonbasis.maps import d_map, e_map
from canonbasis.render import render, render_components
from canonbasis.typea import QuiverA, word_for_quiver
from canonbasis.verify import correspondence_table, verify_cone_correspondence


def heading(text: str) -> None:
    print(f"\n== {text}")


def main() -> None:
    q = QuiverA("RLRL")
    heading("reduced word i(Q)")
    print(" ".join(map(str, word_for_quiver(q).letters)))

    heading("slice number of each root, one row per root length")
    p = slices_for(q)
    print(render(p))
    for comp, view in zip(components_of(q), render_components(p)):
        print(f"\ncomponent {comp.index} ({comp.direction})\n{view}")

    heading("D: string coordinates as sums of PBW exponents")
    D = d_map(q)
    for a in D.row_names:
        print(f"{a:>5} = {D.expression(a)}")

    heading("E: PBW exponents as differences of string coordinates")
    E = e_map(q)
    for c in E.row_names:
        print(f"{c:>5} = {E.expression(c)}")

    heading("C_PBW(Q)")
    print(render(c_pbw_cone(q).normalized()))
    heading("L_PBW(Q)")
    print(render(l_pbw_cone(q).normalized()))

    heading("each Lusztig cone row and its image under E")
    for left, right in correspondence_table(q):
        print(f"{left:<28} {right}")
    print()
    print(verify_cone_correspondence(q, 2).summary())


if __name__ == "__main__":
    main()
