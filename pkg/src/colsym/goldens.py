"""Frozen expected census values used by the self-test and test suite.

Each table row is the known list of achievable colour counts with
multiplicities for one tiling, as independently published; a row is a
truncated prefix, so nothing is claimed past its largest entry.  The
spherical and checkerboard entries are complete classifications.
"""
from __future__ import annotations

from .census import CensusReport, TilingKind

# (p, q, kind) -> (multiplicity by colour count, largest value the row shows)
FULL_ROWS: dict[tuple[int, int, TilingKind], tuple[dict[int, int], int]] = {
    (7, 3, TilingKind.PQ): (
        {1: 1, 8: 1, 15: 1, 22: 1, 24: 1, 30: 1, 36: 2, 44: 1, 50: 5},
        50,
    ),
    (7, 3, TilingKind.LAVES): (
        {1: 1, 9: 1, 15: 1, 21: 1, 28: 2, 30: 1, 35: 2, 36: 1, 37: 1, 42: 5, 49: 8, 50: 3},
        50,
    ),
    (7, 3, TilingKind.QP): (
        {1: 1, 22: 1, 28: 5, 37: 1, 42: 4, 44: 1, 49: 7, 50: 3},
        50,
    ),
    (8, 3, TilingKind.PQ): (
        {1: 1, 3: 1, 6: 1, 12: 1, 17: 1, 21: 4, 24: 1, 25: 5, 27: 3, 29: 4, 31: 4, 33: 6, 37: 6, 39: 8},
        39,
    ),
    (8, 3, TilingKind.LAVES): (
        {1: 1, 3: 1, 6: 1, 12: 3, 17: 1, 18: 1, 21: 4, 24: 15, 25: 5, 27: 3, 28: 4, 29: 4, 30: 7},
        30,
    ),
    (8, 3, TilingKind.QP): (
        {1: 1, 2: 1, 4: 1, 8: 1, 10: 2, 12: 1, 14: 1, 16: 2, 18: 1, 20: 4, 24: 3, 25: 5, 26: 1, 28: 12, 29: 1, 30: 2},
        30,
    ),
    (5, 4, TilingKind.PQ): (
        {1: 1, 2: 1, 6: 1, 11: 1, 12: 1, 16: 2, 21: 3, 22: 5, 24: 1, 26: 9, 28: 1},
        28,
    ),
    (5, 4, TilingKind.LAVES): (
        {1: 1, 5: 2, 10: 5, 11: 1, 15: 7, 20: 22, 21: 3, 22: 4, 25: 27, 26: 4, 27: 3, 30: 63},
        30,
    ),
    (5, 4, TilingKind.QP): (
        {1: 1, 5: 2, 10: 4, 11: 1, 15: 7, 16: 1, 20: 9, 21: 3, 22: 1, 25: 27, 26: 1, 27: 3, 30: 38},
        30,
    ),
}

ROTATION_ROWS: dict[tuple[int, int, TilingKind], tuple[dict[int, int], int]] = {
    (7, 3, TilingKind.PQ): ({1: 1, 8: 1, 9: 1, 15: 2, 22: 7, 24: 1}, 24),
    (7, 3, TilingKind.LAVES): ({1: 1, 7: 1, 9: 1, 14: 6, 15: 2, 21: 5, 22: 7}, 22),
    (7, 3, TilingKind.QP): ({1: 1, 7: 1, 8: 1, 14: 6, 21: 2, 22: 7}, 22),
    (8, 3, TilingKind.PQ): (
        {1: 1, 3: 1, 6: 1, 9: 1, 10: 1, 12: 1, 13: 2, 15: 1, 17: 5, 18: 5, 19: 5},
        19,
    ),
    (8, 3, TilingKind.LAVES): (
        {1: 1, 3: 1, 4: 1, 6: 1, 8: 3, 9: 1, 10: 2, 12: 4, 13: 2, 15: 1, 16: 9, 17: 5, 18: 12},
        18,
    ),
    (8, 3, TilingKind.QP): (
        {1: 1, 2: 1, 4: 1, 8: 4, 10: 3, 12: 1, 13: 2, 14: 2, 16: 12, 17: 5, 18: 1, 19: 5},
        19,
    ),
    (5, 4, TilingKind.PQ): ({1: 1, 2: 1, 6: 2, 11: 3, 12: 6, 16: 12, 17: 4}, 17),
    (5, 4, TilingKind.LAVES): (
        {1: 1, 5: 2, 6: 1, 10: 9, 11: 3, 12: 4, 15: 15, 16: 10, 17: 4},
        17,
    ),
    (5, 4, TilingKind.QP): ({1: 1, 5: 2, 6: 1, 10: 6, 11: 3, 15: 15, 16: 2, 17: 4}, 17),
}

# census bounds the check runs at (the published rows may extend further)
FULL_BOUNDS: dict[tuple[int, int, TilingKind], int] = {
    (7, 3, TilingKind.PQ): 36,
    (7, 3, TilingKind.LAVES): 42,
    (7, 3, TilingKind.QP): 44,
    (8, 3, TilingKind.PQ): 30,
    (8, 3, TilingKind.LAVES): 30,
    (8, 3, TilingKind.QP): 30,
    (5, 4, TilingKind.PQ): 26,
    (5, 4, TilingKind.LAVES): 26,
    (5, 4, TilingKind.QP): 26,
}

ROTATION_BOUNDS: dict[tuple[int, int, TilingKind], int] = {
    (7, 3, TilingKind.PQ): 24,
    (7, 3, TilingKind.LAVES): 24,
    (7, 3, TilingKind.QP): 24,
    (8, 3, TilingKind.PQ): 18,
    (8, 3, TilingKind.LAVES): 18,
    (8, 3, TilingKind.QP): 18,
    (5, 4, TilingKind.PQ): 17,
    (5, 4, TilingKind.LAVES): 17,
    (5, 4, TilingKind.QP): 17,
}

# complete classifications (no truncation): every achievable colour count
CUBE_FULL_PQ = {1: 1, 3: 1, 6: 1}
ICOSAHEDRON_FULL_PQ = {1: 1, 10: 1, 20: 1}


def matches_row(
    report: CensusReport, row: dict[int, int], last_shown: int
) -> tuple[bool, str]:
    """Compare a census against a published row prefix.

    Every colour count up to min(census bound, last shown value) must
    match the row exactly, absences included.  Beyond the row's last
    value the row says nothing, so the census is unconstrained there.
    """
    got = report.multiplicities()
    bound = min(report.max_colours, last_shown)
    for k in range(1, bound + 1):
        expect = row.get(k, 0)
        actual = got.get(k, 0)
        if expect != actual:
            return False, f"at {k} colours: expected {expect}, computed {actual}"
    return True, f"all colour counts up to {bound} match"
