"""Pinned scenarios transcribed from published worked examples.

Matrices are copied row by row from the printed examples.  Moduli are
ascending coefficient tuples and bases are lists of exponents of gamma.
"""

from __future__ import annotations

import numpy as np

# GF(5^5) over GF(5), gamma^5 + 4 gamma + 3
F5_MODULUS = (3, 4, 0, 0, 0, 1)
F5_BASIS = (0, 2968, 1531, 1556, 1566)

# GF(2^8) over GF(2), gamma^8 + gamma^4 + gamma^3 + gamma^2 + 1
F2_MODULUS = (1, 0, 1, 1, 1, 0, 0, 0, 1)
F2_BASIS = (0, 170, 136, 204, 222, 38, 143, 5)


def _bits(rows: list[str]) -> np.ndarray:
    return np.array([[int(c) for c in r] for r in rows], dtype=np.int64)


# Worked deletions for D = (0,1,1,4,5), d = 3
FER5_DIAGRAM = (0, 1, 1, 4, 5)
FER5_D = 3
FER5_NU = (5, 3, 2)
FER5_NU_MIN = 2

# d = 2..5 rows of (nu_min, nu_MDS)
NU_TABLE = {
    (0, 0, 1, 3, 4): {2: (4, 4), 3: (1, 1), 4: (0, 0), 5: (0, 0)},
    (1, 2, 4, 5, 5): {2: (12, 10), 3: (7, 6), 4: (3, 3), 5: (1, 1)},
}

# f = id + gamma^68 sigma_bar^2 over GF(2), n = 8
F2_PHI_TERMS = ((0, 0), (2, 68))   # (sigma_bar power, gamma exponent)
F2_PHI = _bits([
    "10110010",
    "01110111",
    "00000100",
    "00001001",
    "00001011",
    "00000111",
    "00000000",
    "00000000",
])

# D = (1,3,4,5,5), d = 4 over GF(5)
F5_MFD_DIAGRAM = (1, 3, 4, 5, 5)
F5_MFD_D = 4
F5_MFD_GENERATORS = [
    np.eye(5, dtype=np.int64),
    np.eye(5, k=1, dtype=np.int64),
    np.array([[0, 0, 0, 0, 4],
              [0, 1, 1, 0, 0],
              [0, 0, 2, 2, 0],
              [0, 0, 0, 3, 3],
              [0, 0, 0, 0, 4]], dtype=np.int64),
    np.array([[0, 0, 0, 1, 0],
              [0, 0, 0, 0, 0],
              [0, 1, 2, 1, 0],
              [0, 0, 3, 1, 3],
              [0, 0, 0, 1, 2]], dtype=np.int64),
]

# D = (1,2,3,4,5,6), d = 4 over GF(2), built inside order 8
F2_UT_DIAGRAM = (1, 2, 3, 4, 5, 6)
F2_UT_D = 4
F2_UT_GENERATORS = [
    np.eye(6, dtype=np.int64),
    np.eye(6, k=1, dtype=np.int64),
    _bits(["001010", "011101", "000010", "000111", "000000", "000001"]),
    _bits(["001000", "000100", "000010", "000001", "000000", "000000"]),
    _bits(["000101", "001110", "000001", "000011", "000000", "000000"]),
    _bits(["000001", "000111", "001010", "000100", "000000", "000000"]),
]

# D = (0,2,2,3,3,5,6,8), d = 4 through the MDS-constructible route
MDS_DIAGRAM = (0, 2, 2, 3, 3, 5, 6, 8)
MDS_D = 4
MDS_TRACE = {
    "j": 1,
    "ell": 2,
    "D_prime": [0, 1, 2, 3, 3, 5, 6, 7],
    "D_double_prime": [0, 1, 2, 3, 4, 5, 6, 7],
    "nu_min_D_double_prime": 10,
    "removed_cells": 1,
}
MDS_DIMENSION = 9
