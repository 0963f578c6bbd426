from math import comb

import pytest

from springer_pinball.combinatorics import (
    Filling, Partition, Permutation, bruhat_leq, rotated_english_sigma,
)
from springer_pinball.pinball import (
    betti_numbers, dimension_pairs, filling_of_fixed_point, is_two_row_shape, omega,
    pinball_table, rolldown, top_parts,
)


def test_dimension_pairs_examples():
    assert dimension_pairs(Filling(((1, 2), (3, 4)))) == {(2, 3), (2, 4)}
    assert dimension_pairs(Filling(((2, 4), (1, 3)))) == frozenset()
    assert dimension_pairs(Filling(((1, 2, 3), (4, 5)))) == {(3, 4), (3, 5)}
    with pytest.raises(ValueError):
        dimension_pairs(Filling(((2, 1), (3, 4))))


def test_top_parts_and_omega():
    x = top_parts({(2, 3), (2, 4)}, 4)
    assert x == (0, 1, 1)
    assert omega(x) == Permutation.parse("1342")
    assert omega((0, 0, 0)).is_identity()
    assert omega((1, 2, 3)) == Permutation.from_word([1, 2, 1, 3, 2, 1], 4)
    with pytest.raises(ValueError):
        omega((2, 0, 0))


def test_rolldown_examples():
    shape = Partition((3, 2))
    assert rolldown(Permutation.parse("24513"), shape) == Permutation.parse("12534")
    assert rolldown(Permutation.parse("24135"), shape) == Permutation.parse("14235")
    with pytest.raises(ValueError):
        rolldown(Permutation.parse("54321"), shape)


@pytest.mark.parametrize("rows", [(2, 2), (3, 2), (4, 2), (3, 1, 1), (2, 2, 1), (3, 3), (3, 2, 1)])
def test_degree_is_rolldown_length(rows):
    for r in pinball_table(Partition(rows)):
        assert r.roll.length() == r.deg
        assert r.omega == r.roll.inverse()


@pytest.mark.parametrize("n", range(4, 9))
def test_rolldowns_injective(n):
    rolls = [r.roll for r in pinball_table(Partition((n - 2, 2)))]
    assert len(set(rolls)) == len(rolls)


@pytest.mark.parametrize("n", range(4, 10))
def test_betti_sum(n):
    b = betti_numbers(Partition((n - 2, 2)))
    assert sum(b) == comb(n, 2)


def test_betti_tables():
    assert betti_numbers(Partition((2, 2))) == (1, 3, 2)
    assert betti_numbers(Partition((3, 2))) == (1, 4, 5)
    assert betti_numbers(Partition((6,))) == (1,)


@pytest.mark.parametrize("n", [6, 7, 8])
def test_bottom_row_fixed_points(n):
    shape = Partition((n - 2, 2))
    rows = [r for r in pinball_table(shape) if n in r.filling.rows[1]]
    assert len(rows) == n - 1
    expected = [Permutation.simple(n - 1, n)] + [
        Permutation.from_word([n - 1, k], n) for k in range(1, n - 1)]
    assert [r.roll for r in rows] == expected
    assert [r.filling.rows[1] for r in rows] == [(k, n) for k in range(1, n)]
    # w = s_3 s_4 .. s_{n-1} s_1 s_2 .. s_{k}, a Bruhat chain
    ws = [r.w for r in rows]
    base = list(range(3, n))
    assert ws == [Permutation.from_word(base + list(range(1, k + 1)), n) for k in range(n - 1)]
    assert all(bruhat_leq(a, b) and a != b for a, b in zip(ws, ws[1:]))


def test_order_top_rows_embed_smaller_case():
    small = pinball_table(Partition((3, 2)))
    big = pinball_table(Partition((4, 2)))
    assert [r.w for r in big[:len(small)]] == [r.w.embed(6) for r in small]
    assert [r.roll for r in big[:len(small)]] == [r.roll.embed(6) for r in small]


def test_filling_of_fixed_point_round_trip():
    shape = Partition((3, 2))
    sigma = rotated_english_sigma(shape)
    for r in pinball_table(shape):
        assert filling_of_fixed_point(r.w, shape, sigma) == r.filling


def test_two_row_shape():
    assert is_two_row_shape(Partition((4, 2)))
    assert not is_two_row_shape(Partition((3, 3)))
    assert not is_two_row_shape(Partition((2, 1, 1)))


def test_one_row_table():
    rows = pinball_table(Partition((5,)))
    assert len(rows) == 1 and rows[0].roll.is_identity() and rows[0].w.is_identity()
