"""Hessenberg functions, permissible fillings and circle-fixed points.

A fixed point of ``Hess(N, h)`` is a permutation ``w`` with ``w^{-1} N w`` in
the Hessenberg space of ``h``. For ``N = sigma J sigma^{-1}`` (``J`` in Jordan
form of shape ``lambda``) these are in bijection with the permissible
fillings of ``lambda`` via ``T -> sigma_read(T, sigma)^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable

from .combinatorics import (
    Filling, Partition, Permutation, all_fillings, sigma_read,
)
from .matrix_forms import NilMatrix, conjugate

__all__ = [
    "HessenbergFunction", "identity_h", "in_hessenberg_space", "is_permissible",
    "permissible_fillings", "fixed_points_bruteforce", "fixed_point_of_filling",
    "fixed_points", "BRUTE_FORCE_MAX_N",
]

# n! enumeration beyond this is not attempted
BRUTE_FORCE_MAX_N = 8


@dataclass(frozen=True)
class HessenbergFunction:
    h: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(x) for x in self.h)
        object.__setattr__(self, "h", h)
        n = len(h)
        if n == 0:
            raise ValueError("Hessenberg function must have n >= 1 values")
        for i, hi in enumerate(h, start=1):
            if not i <= hi <= n:
                raise ValueError(f"need i <= h(i) <= n, got h({i}) = {hi}")
        if any(a > b for a, b in zip(h, h[1:])):
            raise ValueError(f"Hessenberg function must be nondecreasing: {h}")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "HessenbergFunction":
        text = text.strip()
        if text == "id":
            if n is None:
                raise ValueError("'id' needs the size n")
            return identity_h(n)
        return cls(tuple(int(x) for x in text.split(",") if x.strip()))

    @property
    def n(self) -> int:
        return len(self.h)

    def __call__(self, j: int) -> int:
        return self.h[j - 1]

    def is_identity(self) -> bool:
        return all(hi == i for i, hi in enumerate(self.h, start=1))

    def to_json(self) -> list[int]:
        return list(self.h)

    def __str__(self) -> str:
        return "id" if self.is_identity() else ",".join(map(str, self.h))


def identity_h(n: int) -> HessenbergFunction:
    if n < 1:
        raise ValueError("n must be >= 1")
    return HessenbergFunction(tuple(range(1, n + 1)))


def in_hessenberg_space(X, h: HessenbergFunction) -> bool:
    """Whether ``X[i][j] == 0`` whenever ``i > h(j)``.

    ``X`` is a NilMatrix or a square array (nested sequences) of numbers.
    """
    if isinstance(X, NilMatrix):
        if X.n != h.n:
            raise ValueError(f"size mismatch: {X.n}x{X.n} matrix, h of length {h.n}")
        return all(i <= h(j) for i, j in X.ones)
    n = len(X)
    if n != h.n or any(len(row) != n for row in X):
        raise ValueError(f"expected a square {h.n}x{h.n} matrix")
    return all(X[i - 1][j - 1] == 0
               for j in range(1, n + 1) for i in range(h(j) + 1, n + 1))


def is_permissible(T: Filling, h: HessenbergFunction) -> bool:
    if T.n != h.n:
        raise ValueError(f"size mismatch: filling has {T.n} boxes, h of length {h.n}")
    return all(k <= h(j) for k, j in T.adjacent_pairs())


def _row_strict_fillings(shape: Partition) -> Iterable[Filling]:
    def rec(remaining: tuple[int, ...], rows_left: tuple[int, ...]):
        if not rows_left:
            yield ()
            return
        r = rows_left[0]
        for chosen in combinations(remaining, r):
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in rec(rest, rows_left[1:]):
                yield (chosen,) + tail

    for rows in rec(tuple(range(1, shape.n + 1)), shape.rows):
        yield Filling(rows)


def permissible_fillings(shape: Partition, h: HessenbergFunction) -> list[Filling]:
    """Permissible fillings, sorted by their English reading."""
    if shape.n != h.n:
        raise ValueError(f"size mismatch: shape has {shape.n} boxes, h of length {h.n}")
    if h.is_identity():
        out = list(_row_strict_fillings(shape))
    else:
        if shape.n > BRUTE_FORCE_MAX_N:
            raise ValueError(f"general h enumerates n! fillings; n <= {BRUTE_FORCE_MAX_N} only")
        out = [T for T in all_fillings(shape) if is_permissible(T, h)]
    return sorted(out, key=lambda T: [x for row in T.rows for x in row])


def fixed_points_bruteforce(N: NilMatrix, h: HessenbergFunction) -> list[Permutation]:
    """All ``w`` in ``S_n`` with ``w^{-1} N w`` in the Hessenberg space, sorted."""
    if N.n != h.n:
        raise ValueError(f"size mismatch: {N.n}x{N.n} matrix, h of length {h.n}")
    if N.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force is capped at n <= {BRUTE_FORCE_MAX_N}")
    out = []
    for oneline in permutations(range(1, N.n + 1)):
        w = Permutation(oneline)
        if in_hessenberg_space(conjugate(N, w.inverse()), h):
            out.append(w)
    return out


def fixed_point_of_filling(T: Filling, sigma: Permutation) -> Permutation:
    """The fixed point ``w`` whose permissible filling is ``T``: ``sigma_read(T, sigma)^{-1}``."""
    return sigma_read(T, sigma).inverse()


def fixed_points(shape: Partition, h: HessenbergFunction,
                 sigma: Permutation) -> list[tuple[Permutation, Filling]]:
    """Fixed points of ``Hess(sigma J sigma^{-1}, h)`` with their fillings, sorted by ``w``."""
    pairs = [(fixed_point_of_filling(T, sigma), T) for T in permissible_fillings(shape, h)]
    return sorted(pairs, key=lambda p: p[0].oneline)
