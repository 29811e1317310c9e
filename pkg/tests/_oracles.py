"""Frozen oracle data for the acceptance and unit tests.
Transcribed reference matrices and expected values; characteristic
polynomials were computed with sympy in an independent scratch run
before the engine existed, then frozen here as literals.
"""

TOP_ACTION_PROD1 = [[3, 3, 3, 3, 4, 4, 3, 3, 3, 3, 4, 3, 3, 3, 4, 3, 3, 3, 4, 3, 3, 3, 4, 3, 3, 3, 4, 3, 3, 3, 3, 3, 4, 4, 3, 3], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 3, 4, 3, 0, 0, 0, 0, 0, 0, 0, 0, 3, 3, 4, 3, 3, 0, 3, 0, 4, 0, 3, 0], [1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 1, 1], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0], [1, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1, 1, 1, 1], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 0], [0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0], [3, 3, 3, 3, 4, 4, 3, 3, 3, 3, 4, 3, 0, 0, 0, 0, 3, 3, 4, 3, 3, 3, 4, 3, 0, 0, 0, 0, 0, 3, 0, 3, 0, 4, 0, 3], [1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1], [1, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1], [0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 6, 8, 6, 0, 0, 0, 0, 0, 0, 0, 0, 6, 6, 8, 6, 6, 0, 6, 0, 8, 0, 6, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 2, 0, 2, 0, 0, 0, 2, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 2, 2, 0, 0, 0, 2, 0, 2, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0], [3, 3, 3, 3, 4, 4, 3, 3, 3, 3, 4, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], [1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], [1, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 6, 8, 6, 6, 6, 8, 6, 0, 0, 0, 0, 0, 6, 0, 6, 0, 8, 0, 6], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 2, 2, 0, 2, 0, 0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 2], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 2, 2, 0, 2, 2, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 2], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 3, 4, 3, 0, 0, 0, 0, 0, 0, 0, 0, 3, 3, 4, 3, 3, 0, 3, 0, 4, 0, 3, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0], [3, 3, 3, 3, 4, 4, 3, 3, 3, 3, 4, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], [3, 3, 3, 3, 4, 4, 3, 3, 3, 3, 4, 3, 0, 0, 0, 0, 3, 3, 4, 3, 3, 3, 4, 3, 0, 0, 0, 0, 0, 3, 0, 3, 0, 4, 0, 3], [1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], [1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1], [1, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], [1, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1], [0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]]

TOP_ACTION_PROD2 = [[2, 0, 2, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0], [2, 4, 2, 4, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0], [1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1], [1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1], [1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1], [1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1], [0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 2, 2, 0, 0, 2, 2], [0, 0, 0, 0, 2, 4, 2, 4, 0, 0, 2, 2, 0, 0, 2, 2], [2, 2, 2, 2, 0, 0, 0, 0, 4, 4, 0, 0, 2, 2, 0, 0], [1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 1, 1, 1, 1], [0, 0, 0, 0, 2, 2, 2, 2, 0, 0, 4, 4, 0, 0, 2, 2], [2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0], [1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1], [0, 0, 0, 0, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 2, 2]]

TOP_ACTION_EX3 = [[1, 1, 2, 3, 1, 1, 2, 2, 2, 1, 3, 3, 0, 0, 0, 0, 0, 1, 1, 2, 3, 3, 2], [0, 0, 1, 1, 0, 0, 2, 3, 2, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 2, 1, 1, 2], [3, 3, 0, 0, 3, 4, 2, 0, 2, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 2, 3, 3, 2], [1, 1, 0, 0, 1, 0, 2, 0, 2, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 2, 1, 1, 2], [2, 2, 3, 3, 2, 2, 1, 2, 1, 2, 2, 2, 0, 0, 0, 0, 0, 2, 2, 1, 2, 2, 1], [1, 1, 2, 1, 1, 1, 2, 4, 2, 1, 2, 2, 0, 0, 0, 0, 0, 1, 1, 2, 2, 2, 2], [1, 1, 2, 3, 1, 2, 1, 2, 1, 1, 2, 2, 0, 0, 0, 0, 0, 2, 2, 1, 2, 2, 1], [1, 1, 0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], [2, 2, 2, 1, 2, 1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 2, 2, 2, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 2, 1, 1, 2], [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1], [1, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1], [2, 2, 2, 2, 2, 2, 3, 3, 3, 2, 3, 3, 0, 0, 0, 0, 3, 2, 2, 3, 3, 3, 3], [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 20, 20, 20, 20, 15, 0, 0, 0, 0, 0, 0], [2, 2, 2, 2, 2, 2, 1, 1, 1, 2, 1, 1, 0, 0, 0, 0, 0, 2, 2, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0], [1, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1], [0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1], [2, 2, 2, 2, 2, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0], [0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0]]

TOP_ACTION_EX4 = [[2, 1, 1, 1, 2, 2, 2, 2, 2, 3, 1, 1, 2, 2, 2, 2, 2, 2, 3, 2, 2], [2, 2, 2, 2, 2, 2, 2, 2, 2, 0, 2, 1, 2, 0, 0, 0, 0, 2, 0, 0, 0], [2, 2, 2, 2, 2, 2, 2, 2, 2, 0, 2, 1, 2, 0, 0, 0, 0, 2, 0, 0, 0], [0, 1, 1, 1, 0, 0, 0, 0, 0, 4, 1, 1, 0, 4, 4, 4, 4, 0, 4, 4, 4], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1], [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1], [3, 1, 1, 1, 1, 1, 3, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1, 0], [2, 0, 0, 0, 3, 2, 1, 3, 1, 0, 0, 0, 2, 1, 1, 0, 1, 1, 0, 1, 0], [3, 1, 1, 1, 1, 1, 2, 1, 1, 3, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1], [0, 3, 3, 3, 0, 0, 0, 0, 0, 0, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0], [0, 4, 4, 4, 0, 0, 0, 0, 0, 0, 4, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 2, 2, 1, 1, 1, 0, 1, 1], [2, 0, 0, 0, 3, 3, 2, 3, 2, 0, 0, 0, 3, 0, 0, 0, 0, 2, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 0, 0, 0, 2, 2, 2, 1, 1, 1, 1, 2], [0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 2, 0, 1, 2, 1], [0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0], [0, 1, 1, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1]]

H2_ACTION_MAIN4D = [[-8, -7, -4, -8, -2, 4, 0, -2, -11, -4, 0, 0, 0, 0, 0, 0, 9, 0, 0, 0, 0, 0, 0, 0], [1, 2, 14, 16, 1, -2, 0, 1, 1, 14, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], [0, 0, 9, 6, 0, 2, -2, 0, 0, 6, 0, 0, 0, -2, 2, 0, 0, 2, -4, 2, -2, -2, 2, 0], [0, 0, -3, 0, 0, -2, 2, 0, 0, -3, 0, 0, 0, 2, -2, 0, 0, -2, 4, -2, 2, 2, -2, 0], [9, 7, 6, 8, 3, -2, 0, 2, 11, -2, 0, 0, 0, 0, 0, 0, -9, 0, 0, 0, 0, 0, 0, 0], [0, 0, 3, 3, 0, 1, 2, 0, 0, 3, 0, 0, 0, 2, -2, 0, 0, -2, 4, -2, 2, 2, -2, 0], [-3, -3, 6, 6, 0, -2, 5, 0, -3, 6, 0, 0, 0, 2, -2, 0, 3, -2, 4, -2, 2, 2, -2, 0], [-2, -2, 8, 8, 1, 0, 0, 2, -4, 16, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0], [3, 3, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0, -3, 0, 0, 0, 0, 0, 0, 0], [0, 0, 3, 3, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], [-13, -11, 10, 8, -1, 2, 0, -1, -13, 10, 9, 6, 0, 0, 0, 6, 6, 0, 2, 0, 2, 2, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -3, 0, 0, 0, 0, -3, 3, 0, -2, 0, -2, -2, 0, 0], [0, 0, 0, 0, 0, 8, -8, 0, 0, 0, 7, 9, 5, -8, 8, 7, -7, 0, -6, 0, 2, 2, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 3, 0, 3, 0, 3, -3, 0, -2, 0, -2, -2, 0, 0], [-3, -3, 3, 3, 0, 2, -2, 0, -3, 3, 1, 3, 2, -2, 5, 1, 2, 0, -2, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 3, 0, 0, 0, 6, -3, 0, 0, 0, 0, 0, 0, 0], [-13, -11, 10, 8, -1, 2, 0, -1, -13, 10, 0, 0, 0, 0, 0, 0, 15, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, -8, 8, 0, 0, 0, 2, 0, -2, 8, -8, 2, -2, -1, 16, -4, 4, 4, -2, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 2, 2, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, -2, 0, 0, 2, -2, 2, 0, 5, 0, 0, 2, 0], [0, 0, 0, 0, 0, 4, -4, 0, 0, 0, -2, 0, 2, -4, 4, -2, 2, 0, -4, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, -4, 4, 0, 0, 0, 2, 0, -2, 4, -4, 2, -2, 0, 12, 0, 4, 5, 0, 0], [0, 0, 0, 0, 0, 16, -16, 0, 0, 0, -2, 0, 2, -16, 16, -2, 2, 6, -24, 12, -4, -4, 7, 0], [0, 0, 0, 0, 0, -4, 4, 0, 0, 0, 0, 0, 0, 4, -4, 0, 0, -2, 8, -4, 2, 2, -2, 1]]

CHARPOLY_PROD1 = [1, -40, 341, 1360, -12525, -9000, 84375, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]

CHARPOLY_PROD2 = [1, -36, 468, -2880, 9024, -13824, 8192, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]

CHARPOLY_EX3 = [1, -26, -119, 2714, 20555, 40250, -7125, -56250, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]

CHARPOLY_EX4 = [1, -36, 469, -2914, 9424, -15904, 13056, -4096, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]

CHARPOLY_H2_MAIN4D = [1, -92, 3940, -104468, 1924474, -26206196, 274060132, -2257720220, 14912028583, -79957337304, 351096872328, -1269925475976, 3796668999180, -9394166453544, 19222382930472, -32432917974264, 44884634922783, -50536148558220, 45745571370132, -32729812225956, 18055487958426, -7395943228452, 2115315869940, -376572715308, 31381059609]

RULE_EX1_A = [[0, 0, 0, 0, 1], [1, 0, 0, 0, 0]]

RULE_EX1_B = [[0, 2, 1, 2, 0], [0, 1, 1, 1, 0], [0, 2, 2, 2, 0]]

RULE_EX2_A = [[0, 0, 0, 1], [0, 1, 1, 1]]

RULE_EX2_B = [[0, 1, 1, 0], [1, 0, 0, 1]]

RULE_EX3 = [[2, 2, 2, 2, 2, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0], [2, 2, 2, 2, 2, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2]]

RULE_EX4 = [[0, 0, 1, 0, 2, 2, 2, 2, 1, 0, 1, 0, 0, 1, 0, 1], [0, 0, 0, 1, 2, 2, 2, 2, 1, 1, 1, 1, 1, 0, 0, 1], [2, 2, 2, 2, 1, 0, 0, 1, 2, 2, 2, 2, 2, 2, 2, 2]]

RULE_MAIN4D = [[0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 0, 1, 0, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0, 2, 3, 2, 0, 1, 0], [1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 1, 2, 1, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3, 1, 2, 1], [2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 2, 3, 2, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2, 4, 5, 4, 2, 3, 2], [3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 3, 4, 3, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3, 5, 6, 5, 3, 4, 3], [4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 4, 5, 4, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4, 6, 7, 6, 4, 5, 4], [5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 5, 6, 5, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5, 7, 0, 7, 5, 6, 5], [6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 6, 7, 6, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6, 0, 1, 0, 6, 7, 6], [7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 7, 0, 7, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7, 1, 2, 1, 7, 0, 7]]

RULE_THREEPROTO4D = [[0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0], [1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1], [2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 0, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2]]

RULE_TWOPROTO4D = [[0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0], [1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 0, 1]]

RULE_SQUIRAL4D = [[1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1], [0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0]]

RULE_EQUIVARIANT4D = [[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]]

EIGVEC3_H2_MAIN4D = [0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1, 1, 1, 0, 0, 0, 0, 0, 0, 0]

PF_TOP_PROD1 = [95, 19, 25, 5, 25, 5, 5, 1, 76, 20, 20, 4, 38, 10, 10, 2, 38, 10, 10, 2, 76, 20, 20, 4, 19, 5, 5, 1, 38, 76, 10, 20, 10, 20, 2, 4]

EDGE_ACTION_PROD1_F1 = [[3, 3, 4, 3], [1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 0, 0]]

EDGE_ACTION_PROD1_F2 = [[1, 1, 1, 1, 1, 1, 1, 1, 1], [0, 0, 0, 1, 0, 0, 1, 1, 0], [1, 1, 1, 0, 1, 1, 0, 0, 1], [0, 0, 0, 2, 0, 0, 2, 2, 0], [1, 1, 1, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 2, 2, 0, 0, 2], [0, 0, 0, 1, 0, 0, 1, 1, 0], [1, 1, 1, 0, 0, 0, 0, 0, 0], [1, 1, 1, 0, 1, 1, 0, 0, 1]]

EDGE_ACTION_EX3_V = [[0, 0, 3, 0, 0], [0, 0, 1, 0, 0], [5, 5, 0, 5, 5], [0, 0, 1, 0, 0], [0, 0, 0, 0, 0]]

