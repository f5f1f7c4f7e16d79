"""Frozen reference values for the A_5 quiver RLRL."""
from __future__ import annotations

RLRL_WORD = (2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 5, 4, 3, 5)

# a_1 .. a_15 as sums of PBW exponents for RLRL
RLRL_D = [
    "c_1_2",
    "c_1_1 + c_1_2",
    "c_1_4",
    "c_1_3 + c_2_3 + c_1_4",
    "c_2_2 + c_1_3 + c_2_3 + c_1_4",
    "c_1_3 + c_1_4",
    "c_1_5 + c_2_5",
    "c_2_4 + c_3_4 + c_1_5 + c_2_5",
    "c_3_3 + c_2_4 + c_3_4 + c_1_5 + c_2_5",
    "c_2_4 + c_1_5 + c_2_5",
    "c_1_5",
    "c_3_5 + c_4_5",
    "c_4_4 + c_3_5 + c_4_5",
    "c_3_5",
    "c_5_5",
]

# each c_ij for RLRL in terms of a, as (plus index, minus index or None)
RLRL_E = {
    "c_1_1": (2, 1), "c_2_2": (5, 4), "c_3_3": (9, 8), "c_4_4": (13, 12), "c_5_5": (15, None),
    "c_1_2": (1, None), "c_2_3": (4, 6), "c_3_4": (8, 10), "c_4_5": (12, 14),
    "c_1_3": (6, 3), "c_2_4": (10, 7), "c_3_5": (14, None),
    "c_1_4": (3, None), "c_2_5": (7, 11),
    "c_1_5": (11, None),
}

# slice number of every root for RLRL, one list per root length
RLRL_GRID = [[1, 2, 3, 4, 5], [1, 2, 3, 4], [2, 3, 4], [2, 3], [3]]

# per-component views for RLRL: slice numbers on the component's rows, None elsewhere
RLRL_PANELS = {
    1: [[1, 2, 3, 4, 5], [1, 2, 3, 4], None, None, None],
    2: [None, [1, 2, 3, 4], [2, 3, 4], None, None],
    3: [None, None, [2, 3, 4], [2, 3], None],
    4: [None, None, None, [2, 3], [3]],
}

# C_PBW(RLRL) as (greater side, smaller side)
RLRL_C_PBW = [
    (["c_1_1"], ["c_2_2"]),
    (["c_2_2"], ["c_3_3"]),
    (["c_3_3"], ["c_4_4"]),
    (["c_4_4"], ["c_5_5"]),
    (["c_1_3"], ["c_2_4"]),
    (["c_2_4"], ["c_3_5"]),
    (["c_1_3", "c_2_3"], ["c_2_4", "c_3_4"]),
    (["c_2_4", "c_3_4"], ["c_3_5", "c_4_5"]),
]

RLRL_TEXT = "1 2 3 4 5\n 1 2 3 4\n  2 3 4\n   2 3\n    3"
