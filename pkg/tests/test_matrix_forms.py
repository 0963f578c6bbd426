from itertools import permutations

import pytest

from springer_pinball.combinatorics import (
    Filling, Partition, Permutation, all_fillings, english_read, rotated_english_sigma,
)
from springer_pinball.matrix_forms import (
    NilMatrix, WeightAssignment, adjacent_pair_matrix, algorithm_filling,
    brute_force_highest_forms, circle_weights, conjugate, count_distinct_highest_forms,
    highest_form_fillings, is_highest_form, jordan_matrix, pivots, pivots_dense,
)

SMALL_SHAPES = [Partition(r) for r in [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (2, 2),
                                       (3, 1), (2, 1, 1), (3, 2), (2, 2, 1), (4, 1)]]


def test_jordan_matrix_blocks():
    J = jordan_matrix(Partition((3, 2)))
    assert J.ones == {(1, 2), (2, 3), (4, 5)}
    assert J.is_strictly_upper()


@pytest.mark.parametrize("shape", SMALL_SHAPES, ids=str)
def test_adjacent_pair_matrix_is_conjugate_of_jordan(shape):
    J = jordan_matrix(shape)
    for T in all_fillings(shape):
        assert adjacent_pair_matrix(T) == conjugate(J, english_read(T))


def test_nilmatrix_validation_and_json():
    with pytest.raises(ValueError):
        NilMatrix(3, frozenset({(1, 2), (1, 3)}))
    with pytest.raises(ValueError):
        NilMatrix(2, frozenset({(1, 3)}))
    X = NilMatrix(4, frozenset({(1, 3), (2, 4)}))
    assert NilMatrix.from_json(X.to_json()) == X


def test_pivots_dense_general():
    X = [[0, 1, 1],
         [0, 0, 1],
         [0, 0, 0]]
    assert pivots_dense(X) == (0, 1, 2)
    Y = [[1, 0],
         [1, 1]]
    # column 2's lowest entry has a nonzero to its left
    assert pivots_dense(Y) == (2, 0)


def test_pivots_match_dense():
    for p in permutations(range(1, 6)):
        X = conjugate(jordan_matrix(Partition((3, 2))), Permutation(p))
        r = pivots(X)
        assert r == pivots_dense(X.dense())


def test_highest_form_definition():
    assert is_highest_form(NilMatrix(4, frozenset({(1, 3), (2, 4)})))
    # pivot rows 0,0,2,1 decrease
    assert not is_highest_form(NilMatrix(4, frozenset({(2, 3), (1, 4)})))
    # not upper triangular
    assert not is_highest_form(NilMatrix(3, frozenset({(2, 1)})))


def test_algorithm_filling_example():
    T = algorithm_filling(Partition((3, 2, 1)), (2, 1, 3))
    assert T == Filling(((2, 5, 6), (1, 4), (3,)))
    with pytest.raises(ValueError):
        algorithm_filling(Partition((2, 2)), (1, 1))


@pytest.mark.parametrize("rows,count", [((2, 2), 1), ((3, 2), 2), ((2, 2, 1), 3),
                                        ((3, 2, 1), 6), ((4, 2), 2), ((4,), 1)])
def test_highest_form_counts(rows, count):
    shape = Partition(rows)
    assert count_distinct_highest_forms(shape) == count
    fills = highest_form_fillings(shape)
    mats = {adjacent_pair_matrix(T) for T in fills}
    assert all(is_highest_form(X) for X in mats)
    assert len(mats) == count
    if shape.n <= 5:
        assert brute_force_highest_forms(shape) == mats


def test_circle_weights_rotated_english():
    shape = Partition((4, 2))
    wts = circle_weights(shape, rotated_english_sigma(shape))
    assert wts.weights == (2, 6, 1, 5, 4, 3)


@pytest.mark.parametrize("shape", SMALL_SHAPES + [Partition((4, 2)), Partition((3, 2, 1))], ids=str)
def test_circle_weights_scale_n_by_one(shape):
    # the conjugated circle acts on N with weight t: c_i - c_j = 1 for every 1 at (i, j)
    for sigma in [rotated_english_sigma(shape), Permutation.identity(shape.n)]:
        wts = circle_weights(shape, sigma)
        N = conjugate(jordan_matrix(shape), sigma)
        assert all(wts[i] - wts[j] == 1 for i, j in N.ones)


def test_weight_assignment_validation():
    with pytest.raises(ValueError):
        WeightAssignment((1, 1, 2))
