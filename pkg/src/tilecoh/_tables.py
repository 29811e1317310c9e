"""Substitution tables for the built-in rules (data only)."""

PAIR5_A = [
    [0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0],
]

PAIR5_B = [
    [0, 2, 1, 2, 0],
    [0, 1, 1, 1, 0],
    [0, 2, 2, 2, 0],
]

PAIR4_A = [
    [0, 0, 0, 1],
    [0, 1, 1, 1],
]

PAIR4_B = [
    [0, 1, 1, 0],
    [1, 0, 0, 1],
]

THREE_COLOR_5X5 = [
    [2, 2, 2, 2, 2, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0],
    [2, 2, 2, 2, 2, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
]

THREE_COLOR_4X4 = [
    [0, 0, 1, 0, 2, 2, 2, 2, 1, 0, 1, 0, 0, 1, 0, 1],
    [0, 0, 0, 1, 2, 2, 2, 2, 1, 1, 1, 1, 1, 0, 0, 1],
    [2, 2, 2, 2, 1, 0, 0, 1, 2, 2, 2, 2, 2, 2, 2, 2],
]

CHECKERBOARD_4D = [
    [0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 0, 1, 0, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0],
    [1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 1, 2, 1, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1],
    [2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 2, 3, 2, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2],
    [3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 3, 4, 3, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3],
    [4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 4, 5, 4, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4],
    [5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 5, 6, 5, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5],
    [6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 6, 7, 6, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6],
    [7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 7, 0, 7, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7],
]

SQUIRAL3_4D = [
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0],
    [1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1],
    [2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 0, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2],
]

TWOCOLOR_4D = [
    [0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0],
    [1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 0, 1],
]

CENTER_DOT_4D = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]

