"""Zero/one nilpotent matrices: Jordan forms, adjacent-pair matrices,
pivots, highest forms, and the circle weights after conjugation."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial, prod
from typing import Sequence

from .combinatorics import (
    Filling, Partition, Permutation, english_fill,
)

__all__ = [
    "NilMatrix", "WeightAssignment", "jordan_matrix", "adjacent_pair_matrix",
    "pivots", "pivots_dense", "is_highest_form", "highest_form_fillings",
    "algorithm_filling", "count_distinct_highest_forms",
    "brute_force_highest_forms", "conjugate", "circle_weights",
]


@dataclass(frozen=True)
class NilMatrix:
    """An ``n x n`` matrix with entries 0/1, at most one 1 per row and column."""
    n: int
    ones: frozenset[tuple[int, int]]

    def __post_init__(self):
        ones = frozenset((int(i), int(j)) for i, j in self.ones)
        object.__setattr__(self, "ones", ones)
        for i, j in ones:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"position {(i, j)} outside {self.n}x{self.n}")
        if len({i for i, _ in ones}) != len(ones) or len({j for _, j in ones}) != len(ones):
            raise ValueError("at most one 1 per row and per column")

    @classmethod
    def zero(cls, n: int) -> "NilMatrix":
        return cls(n, frozenset())

    def dense(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for i, j in self.ones:
            m[i - 1][j - 1] = 1
        return m

    def is_strictly_upper(self) -> bool:
        return all(i < j for i, j in self.ones)

    def to_json(self) -> dict:
        return {"n": self.n, "ones": [list(p) for p in sorted(self.ones)]}

    @classmethod
    def from_json(cls, data: dict) -> "NilMatrix":
        return cls(int(data["n"]), frozenset(tuple(p) for p in data["ones"]))


@dataclass(frozen=True)
class WeightAssignment:
    """Circle weights: coordinate ``t_i`` restricts to ``weights[i-1] * t``."""
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"weights must permute 1..{len(w)}: {w}")

    @property
    def n(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> int:
        return self.weights[i - 1]

    def to_json(self) -> list[int]:
        return list(self.weights)


def adjacent_pair_matrix(T: Filling) -> NilMatrix:
    return NilMatrix(T.n, frozenset(T.adjacent_pairs()))


def jordan_matrix(shape: Partition) -> NilMatrix:
    return adjacent_pair_matrix(english_fill(shape))


def conjugate(X: NilMatrix, sigma: Permutation) -> NilMatrix:
    """``sigma X sigma^{-1}`` where ``sigma`` has ``i``-th column ``e_{sigma(i)}``."""
    if sigma.n != X.n:
        raise ValueError(f"size mismatch: {X.n}x{X.n} matrix, sigma in S_{sigma.n}")
    return NilMatrix(X.n, frozenset((sigma(i), sigma(j)) for i, j in X.ones))


def pivots_dense(X: Sequence[Sequence]) -> tuple[int, ...]:
    """Pivot rows ``r_1..r_m`` of an arbitrary rectangular matrix (0 = no pivot).

    Only the lowest nonzero entry of a column can be a pivot; it is one when
    everything to its left in its row vanishes.
    """
    nrows = len(X)
    ncols = len(X[0]) if nrows else 0
    out = []
    for k in range(ncols):
        r = 0
        for i in reversed(range(nrows)):
            if X[i][k] != 0:
                if all(X[i][j] == 0 for j in range(k)):
                    r = i + 1
                break
        out.append(r)
    return tuple(out)


def pivots(X: NilMatrix) -> tuple[int, ...]:
    # one 1 per row and column: every 1 is a pivot
    r = [0] * X.n
    for i, j in X.ones:
        r[j - 1] = i
    return tuple(r)


def is_highest_form(X: NilMatrix) -> bool:
    if not X.is_strictly_upper():
        return False
    r = pivots(X)
    return all(a <= b for a, b in zip(r, r[1:]))


def algorithm_filling(shape: Partition, first_column: Sequence[int]) -> Filling:
    """Complete a filling of the leftmost column (top to bottom) column by column.

    Column ``s`` receives the next ``mu_s`` integers, placed in the rows in the
    order given by their leftmost-column entries.
    """
    ell = shape.num_rows
    if sorted(first_column) != list(range(1, ell + 1)):
        raise ValueError(f"leftmost column must be filled with 1..{ell}")
    row_order = sorted(range(ell), key=lambda i: first_column[i])
    grid = [[0] * r for r in shape.rows]
    for i in range(ell):
        grid[i][0] = first_column[i]
    nxt = ell + 1
    for s in range(1, shape.num_cols):
        for i in row_order:
            if shape.rows[i] > s:
                grid[i][s] = nxt
                nxt += 1
    return Filling(tuple(tuple(r) for r in grid))


def highest_form_fillings(shape: Partition) -> list[Filling]:
    """All ``ell!`` fillings produced by the column algorithm."""
    return [algorithm_filling(shape, col)
            for col in permutations(range(1, shape.num_rows + 1))]


def count_distinct_highest_forms(shape: Partition) -> int:
    return factorial(shape.num_rows) // prod(factorial(d) for _, d in shape.multiplicities)


def brute_force_highest_forms(shape: Partition) -> set[NilMatrix]:
    """Every distinct highest form among all ``n!`` conjugates ``sigma N sigma^{-1}``."""
    N = jordan_matrix(shape)
    out = set()
    for w in permutations(range(1, shape.n + 1)):
        X = conjugate(N, Permutation(w))
        if is_highest_form(X):
            out.add(X)
    return out


def circle_weights(shape: Partition, sigma: Permutation) -> WeightAssignment:
    """Weights of ``sigma S^1 sigma^{-1}``: coordinate ``i`` gets ``n + 1 - sigma^{-1}(i)``."""
    n = shape.n
    if sigma.n != n:
        raise ValueError(f"size mismatch: shape has {n} boxes, sigma in S_{sigma.n}")
    inv = sigma.inverse()
    return WeightAssignment(tuple(n + 1 - inv(i) for i in range(1, n + 1)))

