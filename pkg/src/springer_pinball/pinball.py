"""The dimension-pair algorithm for Springer varieties (identity Hessenberg
function): dimension pairs, top parts, ``omega(x)``, rolldowns, and the Betti
numbers of the affine paving."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .combinatorics import (
    Filling, Partition, Permutation, filling_from_sigma_reading,
    rotated_english_sigma,
)
from .fixed_points import fixed_point_of_filling, identity_h, permissible_fillings

__all__ = [
    "dimension_pairs", "top_parts", "omega", "rolldown", "filling_of_fixed_point",
    "betti_numbers", "PinballRow", "pinball_table", "fixed_point_order",
    "is_two_row_shape",
]


def dimension_pairs(T: Filling) -> frozenset[tuple[int, int]]:
    """Pairs ``(a, b)`` with ``b > a``, ``b`` below ``a`` in its column or anywhere in
    a column strictly left of it, and ``b <= c`` if ``c`` is right-adjacent to ``a``."""
    if not T.is_row_strict():
        raise ValueError(f"dimension pairs need a row-strict filling, got {T}")
    pairs = set()
    pos = T.positions
    for a, (ra, ca) in pos.items():
        c = T.right_neighbor(a)
        for b, (rb, cb) in pos.items():
            if b <= a:
                continue
            if not ((cb == ca and rb > ra) or cb < ca):
                continue
            if c is not None and b > c:
                continue
            pairs.add((a, b))
    return frozenset(pairs)


def top_parts(pairs, n: int) -> tuple[int, ...]:
    """``(x_2, .., x_n)``: ``x_l`` counts pairs with top part ``l``."""
    counts = Counter(b for _, b in pairs)
    x = tuple(counts.get(l, 0) for l in range(2, n + 1))
    assert all(xl <= l - 1 for l, xl in zip(range(2, n + 1), x)), x
    return x


def omega(x: Sequence[int]) -> Permutation:
    """``u_2(x) u_3(x) ... u_n(x)`` with ``u_l = s_{l-1} s_{l-2} ... s_{l-x_l}``."""
    n = len(x) + 1
    word: list[int] = []
    for l, xl in zip(range(2, n + 1), x):
        if not 0 <= xl <= l - 1:
            raise ValueError(f"x_{l} = {xl} outside 0..{l - 1}")
        word.extend(range(l - 1, l - 1 - xl, -1))
    return Permutation.from_word(word, n)


def filling_of_fixed_point(w: Permutation, shape: Partition,
                           sigma: Permutation) -> Filling:
    """The filling ``T`` with ``sigma_read(T, sigma) == w^{-1}``."""
    return filling_from_sigma_reading(w.inverse(), shape, sigma)


def rolldown(w: Permutation, shape: Partition, sigma: Permutation | None = None) -> Permutation:
    if sigma is None:
        sigma = rotated_english_sigma(shape)
    T = filling_of_fixed_point(w, shape, sigma)
    if not T.is_row_strict():
        raise ValueError(f"{w} is not a Springer fixed point for shape {shape}")
    return omega(top_parts(dimension_pairs(T), shape.n)).inverse()


@dataclass(frozen=True)
class PinballRow:
    w: Permutation
    filling: Filling
    dim_pairs: tuple[tuple[int, int], ...]
    omega: Permutation
    roll: Permutation

    @property
    def deg(self) -> int:
        return len(self.dim_pairs)

    def to_json(self) -> dict:
        return {
            "w": list(self.w.oneline),
            "filling": self.filling.to_json(),
            "dim_pairs": [list(p) for p in self.dim_pairs],
            "deg": self.deg,
            "omega": list(self.omega.oneline),
            "roll": list(self.roll.oneline),
        }


def _row(T: Filling, sigma: Permutation) -> PinballRow:
    pairs = dimension_pairs(T)
    om = omega(top_parts(pairs, T.n))
    ordered = tuple(sorted(pairs))
    return PinballRow(fixed_point_of_filling(T, sigma), T, ordered, om, om.inverse())


def is_two_row_shape(shape: Partition) -> bool:
    """Whether ``shape == (n-2, 2)`` with ``n >= 4``."""
    return len(shape.rows) == 2 and shape.rows[1] == 2 and shape.rows[0] >= 2


def fixed_point_order(shape: Partition, rows: Sequence[PinballRow]) -> list[PinballRow]:
    """Order the fixed points for tables and restriction matrices.

    For ``(n-2, 2)`` with ``n >= 5``: fillings with ``n`` in the top row first, in
    the order of the ``(n-3, 2)`` case, then those with ``n`` in the bottom row
    ``[k, n]`` for ``k = 1 .. n-1``. Otherwise (including the base ``(2, 2)``):
    by number of dimension pairs, then descent set of ``w``, then ``w``.
    """
    n = shape.n
    if is_two_row_shape(shape) and n >= 5:
        by_w = {r.w: r for r in rows}
        top = [r for r in rows if n in r.filling.rows[0]]
        bottom = [r for r in rows if n in r.filling.rows[1]]
        smaller = Partition((shape.rows[0] - 1, 2))
        sub = fixed_point_order(smaller, pinball_rows(smaller))
        ordered_top = []
        for r in sub:
            # deleting n from the top row leaves the (n-3, 2) filling; w embeds
            ordered_top.append(by_w[r.w.embed(n)])
        if len(ordered_top) != len(top):
            raise AssertionError("top-row fixed points do not match the smaller case")
        bottom.sort(key=lambda r: r.filling.rows[1][0])
        return ordered_top + bottom
    return sorted(rows, key=lambda r: (r.deg, r.w.descents(), r.w.oneline))


def pinball_rows(shape: Partition, sigma: Permutation | None = None) -> list[PinballRow]:
    if sigma is None:
        sigma = rotated_english_sigma(shape)
    return [_row(T, sigma) for T in permissible_fillings(shape, identity_h(shape.n))]


def pinball_table(shape: Partition, sigma: Permutation | None = None) -> list[PinballRow]:
    """One row per Springer fixed point, in :func:`fixed_point_order`."""
    default = sigma is None or sigma == rotated_english_sigma(shape)
    rows = pinball_rows(shape, sigma)
    if default:
        return fixed_point_order(shape, rows)
    return sorted(rows, key=lambda r: (r.deg, r.w.descents(), r.w.oneline))


def betti_numbers(shape: Partition) -> tuple[int, ...]:
    degs = Counter(len(dimension_pairs(T))
                   for T in permissible_fillings(shape, identity_h(shape.n)))
    return tuple(degs.get(k, 0) for k in range(max(degs) + 1))
