"""Rook's-grid oracle: exhaustive counting of common line-mates."""

import itertools

import pytest

from moore57 import grid

PATTERNS = [(2, 2, 2), (3, 2, 2), (2, 3, 2), (2, 2, 3), (3, 3, 2), (3, 2, 3), (2, 3, 3), (3, 3, 3)]


def test_placements_realize_their_patterns():
    for n in (4, 7):
        for pattern in PATTERNS:
            u, v, w = grid.place_pattern(n, pattern)
            got = (
                3 if grid.are_linemates(v, w) else 2,
                3 if grid.are_linemates(u, w) else 2,
                3 if grid.are_linemates(u, v) else 2,
            )
            assert got == pattern


def test_pattern_counts_at_56():
    assert grid.pattern_count(56, (2, 2, 2)) == 0
    assert grid.pattern_count(56, (3, 2, 2)) == 1
    assert grid.pattern_count(56, (3, 3, 2)) == 0
    assert grid.pattern_count(56, (3, 3, 3)) == 53


@pytest.mark.parametrize("n", range(4, 13))
def test_pattern_counts_generalize(n):
    # only the all-collinear case depends on n
    assert grid.pattern_count(n, (2, 2, 2)) == 0
    assert grid.pattern_count(n, (3, 2, 2)) == 1
    assert grid.pattern_count(n, (3, 3, 2)) == 0
    assert grid.pattern_count(n, (3, 3, 3)) == n - 3
    # permuted patterns agree, the counts are symmetric in the three pairs
    assert grid.pattern_count(n, (2, 3, 2)) == 1
    assert grid.pattern_count(n, (2, 2, 3)) == 1
    assert grid.pattern_count(n, (3, 2, 3)) == 0
    assert grid.pattern_count(n, (2, 3, 3)) == 0


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9, 10, 56])
def test_pair_candidates_noncollinear(n):
    assert grid.pair_candidates(n, (1, 1), (2, 2)) == 2
    assert grid.pair_candidates(n, (2, 5), (4, 3)) == 2


def test_pair_candidates_collinear():
    assert grid.pair_candidates(6, (1, 1), (1, 2)) == 4  # n - 2
    for n in (5, 8, 56):
        assert grid.pair_candidates(n, (3, 1), (3, 4)) == n - 2
        assert grid.pair_candidates(n, (1, 2), (4, 2)) == n - 2


@pytest.mark.parametrize("n", range(4, 13))
def test_every_row_line_meets_every_column_line_once(n):
    for row, col in itertools.product(range(1, n + 1), repeat=2):
        row_line = {(row, c) for c in range(1, n + 1)}
        col_line = {(r, col) for r in range(1, n + 1)}
        assert len(row_line & col_line) == 1


def test_linemate_degree():
    n = 9
    u = (4, 7)
    mates = [
        z
        for z in itertools.product(range(1, n + 1), repeat=2)
        if grid.are_linemates(z, u)
    ]
    assert len(mates) == 2 * (n - 1)


def test_errors():
    with pytest.raises(grid.Unrealizable):
        grid.place_pattern(6, (1, 2, 2))
    with pytest.raises(ValueError):
        grid.place_pattern(3, (2, 2, 2))
    with pytest.raises(ValueError):
        grid.common_linemates(6, (1, 1), (1, 1), (2, 2))
    with pytest.raises(ValueError):
        grid.pair_candidates(6, (1, 1), (1, 1))
