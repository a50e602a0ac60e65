"""Embedded symmetric matrices: golden values, decompositions, rank, parity."""

import pytest

from hosoya_cographs.matrices import (
    BitMatrix,
    ExactMatrix,
    det_hosoya_matrix,
    exact_rank,
    hosoya_matrix,
    mod2,
    rank2_vectors,
)
from hosoya_cographs.triangles import det_entry

S7_GOLDEN = [
    [0, 1, 1, 2, 3, 5, 8],
    [1, 3, 4, 7, 11, 18, 29],
    [1, 4, 5, 9, 14, 23, 37],
    [2, 7, 9, 16, 25, 41, 66],
    [3, 11, 14, 25, 39, 64, 103],
    [5, 18, 23, 41, 64, 105, 169],
    [8, 29, 37, 66, 103, 169, 272],
]

S7_MOD2_GOLDEN = [
    [0, 1, 1, 0, 1, 1, 0],
    [1, 1, 0, 1, 1, 0, 1],
    [1, 0, 1, 1, 0, 1, 1],
    [0, 1, 1, 0, 1, 1, 0],
    [1, 1, 0, 1, 1, 0, 1],
    [1, 0, 1, 1, 0, 1, 1],
    [0, 1, 1, 0, 1, 1, 0],
]


def test_s7_golden():
    assert det_hosoya_matrix(7).to_lists() == S7_GOLDEN


def test_s7_mod2_golden():
    bits = mod2(det_hosoya_matrix(7))
    assert [list(r) for r in bits.rows] == S7_MOD2_GOLDEN
    assert list(bits.rows[0]) == [0, 1, 1, 0, 1, 1, 0]
    assert list(bits.rows[3]) == [0, 1, 1, 0, 1, 1, 0]


def test_s_small_cases():
    assert det_hosoya_matrix(1).to_lists() == [[0]]
    assert det_hosoya_matrix(7).entry(4, 4) == 16
    assert det_hosoya_matrix(7).entry(1, 6) == 5


def test_t_matrix_values():
    assert hosoya_matrix(3).to_lists() == [[1, 1, 2], [1, 1, 2], [2, 2, 4]]
    assert hosoya_matrix(1).to_lists() == [[1]]
    assert hosoya_matrix(4).entry(4, 4) == 9


def test_t_mod2():
    assert [list(r) for r in mod2(hosoya_matrix(3)).rows] == [[1, 1, 0], [1, 1, 0], [0, 0, 0]]


def test_matrices_symmetric():
    for w in range(1, 21):
        assert det_hosoya_matrix(w).is_symmetric()
        assert hosoya_matrix(w).is_symmetric()


def test_rows_read_triangle_diagonals():
    for w in range(1, 13):
        s = det_hosoya_matrix(w)
        for i in range(1, w + 1):
            assert list(s.rows[i - 1]) == [det_entry(r, i) for r in range(i, w + i)]


def test_size_validation():
    for build in (det_hosoya_matrix, hosoya_matrix, rank2_vectors):
        with pytest.raises(ValueError):
            build(0)


# -- rank-two decomposition -------------------------------------------------------


def test_rank2_vectors_w7():
    d = rank2_vectors(7)
    assert d.u1 == (0, 1, 1, 2, 3, 5, 8)
    assert d.v1 == (1, 1, 2, 3, 5, 8, 13)
    assert d.u2 == (1, 2, 3, 5, 8, 13, 21)
    assert d.v2 == (0, 1, 1, 2, 3, 5, 8)


def test_rank2_vectors_w1():
    d = rank2_vectors(1)
    assert d == ((0,), (1,), (1,), (0,))
    assert d.u1[0] * d.v1[0] + d.u2[0] * d.v2[0] == det_hosoya_matrix(1).entry(1, 1)


def test_rank2_reconstruction():
    for w in range(1, 13):
        u1, v1, u2, v2 = rank2_vectors(w)
        s = det_hosoya_matrix(w)
        for i in range(w):
            for j in range(w):
                assert u1[i] * v1[j] + u2[i] * v2[j] == s.rows[i][j]


# -- exact rank ---------------------------------------------------------------------


def test_rank_examples():
    assert exact_rank(det_hosoya_matrix(7)) == 2
    assert exact_rank(det_hosoya_matrix(1)) == 0
    assert exact_rank(hosoya_matrix(5)) == 1


def test_rank_sweep():
    for w in range(1, 41):
        assert exact_rank(det_hosoya_matrix(w)) == (0 if w == 1 else 2)
        assert exact_rank(hosoya_matrix(w)) == 1


def test_rank_rectangular_and_known():
    assert exact_rank(ExactMatrix([[1, 2, 3], [2, 4, 6]])) == 1
    assert exact_rank(ExactMatrix([[1, 0], [0, 1], [1, 1]])) == 2
    assert exact_rank(ExactMatrix([[0, 0], [0, 0]])) == 0


# -- mod-2 structure -----------------------------------------------------------------


def test_mod2_structure_rule_via_direct_parity():
    # oracle: direct parity of the entries, compared against the residue rule
    for w in range(1, 41):
        bits = mod2(det_hosoya_matrix(w))
        for i in range(1, w + 1):
            for j in range(1, w + 1):
                direct = det_entry(i + j - 1, min(i, j)) % 2
                assert bits.entry(i, j) == direct
                assert (direct == 0) == ((i + j) % 3 == 2)


def test_t_mod2_structure_rule():
    for w in range(1, 41):
        bits = mod2(hosoya_matrix(w))
        for i in range(1, w + 1):
            for j in range(1, w + 1):
                assert (bits.entry(i, j) == 0) == (i % 3 == 0 or j % 3 == 0)


def test_mod2_requires_square():
    with pytest.raises(ValueError):
        mod2(ExactMatrix([[1, 2, 3], [4, 5, 6]]))


def test_bitmatrix_validation():
    with pytest.raises(ValueError):
        BitMatrix([[0, 1], [0, 0]])  # asymmetric
    with pytest.raises(ValueError):
        BitMatrix([[2]])  # not 0/1
