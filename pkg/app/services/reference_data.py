"""
Published reference values for p_n and the matrices that achieve them.

p_1..p_3 are exact; p_4..p_7 are best-known lower values found by local search.
"""
from typing import Dict, List, Optional

from models.schemas import Grid

EXACT_VALUES: Dict[int, int] = {1: 1, 2: 54, 3: 761}

BEST_KNOWN_VALUES: Dict[int, int] = {4: 5284, 5: 24303, 6: 85352, 7: 248045}

PUBLISHED_MATRICES: Dict[int, List[List[int]]] = {
    4: [
        [1, 2, 7, 6],
        [3, 4, 12, 9],
        [8, 11, 16, 15],
        [5, 10, 14, 13],
    ],
    5: [
        [25, 23, 17, 13, 21],
        [24, 22, 11, 10, 18],
        [16, 12, 4, 2, 8],
        [14, 9, 3, 1, 5],
        [20, 19, 7, 6, 15],
    ],
    6: [
        [11, 26, 5, 8, 28, 16],
        [25, 33, 14, 21, 35, 29],
        [6, 15, 1, 2, 18, 10],
        [7, 20, 3, 4, 22, 13],
        [27, 34, 19, 23, 36, 32],
        [17, 30, 9, 12, 31, 24],
    ],
    7: [
        [1, 15, 2, 24, 9, 6, 20],
        [14, 41, 18, 45, 32, 27, 43],
        [3, 19, 4, 29, 11, 8, 25],
        [23, 44, 30, 49, 40, 36, 47],
        [10, 31, 12, 39, 22, 16, 38],
        [5, 28, 7, 35, 17, 13, 34],
        [21, 42, 26, 48, 37, 33, 46],
    ],
}

# Example output of the border construction at n = 7
CONSTRUCTION_EXAMPLE_7: List[List[int]] = [
    [49, 48, 45, 44, 41, 40, 37],
    [47, 36, 35, 32, 31, 28, 27],
    [46, 34, 25, 24, 21, 20, 17],
    [43, 33, 23, 16, 15, 12, 11],
    [42, 30, 22, 14, 9, 8, 5],
    [39, 29, 19, 13, 7, 4, 3],
    [38, 26, 18, 10, 6, 2, 1],
]


def known_exact(n: int) -> Optional[int]:
    """p_n when it is known exactly."""
    return EXACT_VALUES.get(n)


def best_known(n: int) -> Optional[int]:
    """Largest published value of s(A^2) for side n (exact or best-known)."""
    return EXACT_VALUES.get(n, BEST_KNOWN_VALUES.get(n))


def published_matrix(n: int) -> Optional[Grid]:
    """The published search matrix for n in 4..7."""
    rows = PUBLISHED_MATRICES.get(n)
    return Grid.from_rows(rows) if rows else None
