"""Partitions, fillings, their readings, and the symmetric group.

Permutations are 1-based and written in one-line notation. Composition is
``(u * v)(i) == u(v(i))`` everywhere in the package; with this convention
right multiplication by ``s`` permutes the *positions* of a one-line word,
which is what the sigma-reading of a filling relies on.

Boxes of a Young diagram are addressed as ``(row, col)``, 1-based, English
orientation (row 1 on top).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterator, Sequence

__all__ = [
    "Partition", "Filling", "Permutation",
    "english_read", "english_fill", "rotated_english_fill",
    "rotated_english_sigma", "sigma_read", "filling_from_sigma_reading",
    "bruhat_leq", "reduced_word", "length", "all_fillings",
]


@dataclass(frozen=True)
class Partition:
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("partition must have at least one row")
        if any(r < 1 for r in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))
        except ValueError as exc:
            raise ValueError(f"invalid partition {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return sum(self.rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return self.rows[0]

    @cached_property
    def column_lengths(self) -> tuple[int, ...]:
        return tuple(sum(1 for r in self.rows if r > j) for j in range(self.num_cols))

    @cached_property
    def multiplicities(self) -> tuple[tuple[int, int], ...]:
        """Pairs ``(row length, number of rows of that length)``, longest first."""
        out: list[list[int]] = []
        for r in self.rows:
            if out and out[-1][0] == r:
                out[-1][1] += 1
            else:
                out.append([r, 1])
        return tuple((a, b) for a, b in out)

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Boxes in English reading order."""
        for i, r in enumerate(self.rows, start=1):
            for j in range(1, r + 1):
                yield (i, j)

    def __str__(self) -> str:
        return ",".join(map(str, self.rows))


@dataclass(frozen=True, order=True)
class Permutation:
    oneline: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.oneline)
        object.__setattr__(self, "oneline", w)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation of 1..{len(w)}: {w}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text:
            return cls(tuple(int(x) for x in text.split(",") if x.strip()))
        return cls(tuple(int(c) for c in text))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        if not 1 <= i < n:
            raise ValueError(f"s_{i} is not a simple transposition of S_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        """The product ``s_{word[0]} s_{word[1]} ...`` in ``S_n``."""
        w = list(range(1, n + 1))
        for i in word:
            if not 1 <= i < n:
                raise ValueError(f"s_{i} is not a simple transposition of S_{n}")
            # right multiplication by s_i swaps positions i, i+1
            w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @property
    def n(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"size mismatch: S_{self.n} vs S_{other.n}")
        return Permutation(tuple(self.oneline[j - 1] for j in other.oneline))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, wi in enumerate(self.oneline, start=1):
            inv[wi - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        w = self.oneline
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def descents(self) -> tuple[int, ...]:
        w = self.oneline
        return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def embed(self, n: int) -> "Permutation":
        """View as an element of ``S_n`` fixing ``self.n+1 .. n``."""
        if n < self.n:
            raise ValueError("cannot embed into a smaller group")
        return Permutation(self.oneline + tuple(range(self.n + 1, n + 1)))

    def is_identity(self) -> bool:
        return all(wi == i for i, wi in enumerate(self.oneline, start=1))

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(map(str, self.oneline))
        return ",".join(map(str, self.oneline))


@dataclass(frozen=True)
class Filling:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = Partition(tuple(len(r) for r in rows))  # validates the shape
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, shape.n + 1)):
            raise ValueError(f"filling entries must be exactly 1..{shape.n}: {rows}")

    @cached_property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return self.shape.n

    def __getitem__(self, box: tuple[int, int]) -> int:
        i, j = box
        return self.rows[i - 1][j - 1]

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        """Map entry -> (row, col)."""
        return {x: (i, j) for i, row in enumerate(self.rows, start=1)
                for j, x in enumerate(row, start=1)}

    def right_neighbor(self, entry: int) -> int | None:
        i, j = self.positions[entry]
        row = self.rows[i - 1]
        return row[j] if j < len(row) else None

    def adjacent_pairs(self) -> Iterator[tuple[int, int]]:
        """Pairs ``(left, right)`` occupying horizontally adjacent boxes."""
        for row in self.rows:
            yield from zip(row, row[1:])

    def column(self, j: int) -> tuple[int, ...]:
        """Entries of column ``j`` from top to bottom."""
        return tuple(row[j - 1] for row in self.rows if len(row) >= j)

    def is_row_strict(self) -> bool:
        return all(a < b for a, b in self.adjacent_pairs())

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "[" + " | ".join(" ".join(map(str, r)) for r in self.rows) + "]"


def _fill_from_word(shape: Partition, word: Sequence[int]) -> Filling:
    rows, k = [], 0
    for r in shape.rows:
        rows.append(tuple(word[k:k + r]))
        k += r
    return Filling(tuple(rows))


def english_read(T: Filling) -> Permutation:
    """Row-by-row reading, top row first."""
    return Permutation(tuple(x for row in T.rows for x in row))


def english_fill(shape: Partition) -> Filling:
    return _fill_from_word(shape, range(1, shape.n + 1))


def rotated_english_fill(shape: Partition) -> Filling:
    """The filling read as ``1..n`` bottom-to-top along columns, left to right."""
    grid = [[0] * r for r in shape.rows]
    k = 1
    for j, mu in enumerate(shape.column_lengths):
        for i in reversed(range(mu)):
            grid[i][j] = k
            k += 1
    return Filling(tuple(tuple(r) for r in grid))


def rotated_english_sigma(shape: Partition) -> Permutation:
    return english_read(rotated_english_fill(shape))


def sigma_read(T: Filling, sigma: Permutation) -> Permutation:
    """Read ``T`` in the box order labelled by the English filling of ``sigma``.

    Position ``j`` of the result is the entry of ``T`` in the box where the
    English filling of ``sigma`` holds ``j``; equivalently the result is
    ``english_read(T) * sigma.inverse()``.
    """
    if sigma.n != T.n:
        raise ValueError(f"size mismatch: filling has {T.n} boxes, sigma in S_{sigma.n}")
    word = english_read(T).oneline
    out = [0] * T.n
    for k, label in enumerate(sigma.oneline):
        out[label - 1] = word[k]
    return Permutation(tuple(out))


def filling_from_sigma_reading(tau: Permutation, shape: Partition,
                               sigma: Permutation) -> Filling:
    """The unique filling ``T`` of ``shape`` with ``sigma_read(T, sigma) == tau``."""
    if not tau.n == sigma.n == shape.n:
        raise ValueError("size mismatch between tau, sigma and shape")
    return _fill_from_word(shape, (tau * sigma).oneline)


def all_fillings(shape: Partition) -> Iterator[Filling]:
    for word in permutations(range(1, shape.n + 1)):
        yield _fill_from_word(shape, word)


def length(w: Permutation) -> int:
    return w.length()


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Bruhat comparison by the rank-matrix criterion.

    ``v <= w`` iff for every ``i, j``:
    ``#{a <= i : v(a) >= j} <= #{a <= i : w(a) >= j}``.
    """
    if v.n != w.n:
        raise ValueError(f"size mismatch: S_{v.n} vs S_{w.n}")
    n = v.n
    if v.length() > w.length():
        return False
    cv = [0] * (n + 2)
    cw = [0] * (n + 2)
    for i in range(n):
        # cv[j] = #{a <= i+1 : v(a) >= j}
        for j in range(1, v.oneline[i] + 1):
            cv[j] += 1
        for j in range(1, w.oneline[i] + 1):
            cw[j] += 1
        if any(cv[j] > cw[j] for j in range(1, n + 1)):
            return False
    return True


def reduced_word(w: Permutation) -> list[int]:
    """Canonical reduced word ``[i_1, .., i_l]`` with ``s_{i_1} ... s_{i_l} == w``.

    Sorts ``w`` to the identity by carrying the largest misplaced value to its
    place with adjacent swaps of positions; the swaps, read backwards, spell
    ``w``.
    """
    cur = list(w.oneline)
    swaps: list[int] = []
    for value in range(w.n, 0, -1):
        p = cur.index(value) + 1
        while p < value:
            cur[p - 1], cur[p] = cur[p], cur[p - 1]
            swaps.append(p)
            p += 1
    # w * s_{a_1} * ... * s_{a_m} == e, so w == s_{a_m} ... s_{a_1}
    return swaps[::-1]
