"""Restriction matrices ``(p_{roll(w)}(u))`` and exact rank checks over ``Q[t]``.

Rank is computed over the fraction field ``Q(t)`` by fraction-free
(Bareiss) elimination, which only ever divides exactly. Evaluating at
``t = 1`` can only lose rank, so a full-rank specialization is a sufficient
certificate; the symbolic elimination is the authority.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .billey import schubert_restrict, springer_schubert
from .combinatorics import Partition, Permutation, bruhat_leq, rotated_english_sigma
from .matrix_forms import circle_weights
from .pinball import PinballRow, filling_of_fixed_point, is_two_row_shape, pinball_table
from .polynomials import Poly, UniPoly

__all__ = [
    "RestrictionMatrix", "RankResult", "build_matrix", "bareiss_echelon",
    "is_full_column_rank", "rank_at", "poly_gcd", "BlockReport", "block_report",
    "UpperTriangularReport", "check_upper_triangular", "d_block_closed_form",
    "change_of_basis", "ChangeOfBasis", "stated_multipliers", "stated_remainders",
]


@dataclass
class RestrictionMatrix:
    """Rows are indexed by fixed points ``u``, columns by fixed points ``w``."""
    shape: Partition
    order: list[Permutation]
    rolls: list[Permutation]
    entries: list[list[UniPoly]]

    @property
    def size(self) -> int:
        return len(self.order)

    def column(self, j: int) -> list[UniPoly]:
        return [row[j] for row in self.entries]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> list[list[UniPoly]]:
        return [[self.entries[i][j] for j in cols] for i in rows]

    def is_column_homogeneous(self) -> bool:
        """Nonzero entries in column ``w`` are multiples of ``t^{len(roll(w))}``."""
        return all(e == UniPoly.monomial(e.lead(), r.length())
                   for j, r in enumerate(self.rolls) for e in self.column(j) if not e.is_zero())

    def to_json(self) -> dict:
        return {
            "order": [list(w.oneline) for w in self.order],
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict, shape: Partition) -> "RestrictionMatrix":
        order = [Permutation(tuple(w)) for w in data["order"]]
        entries = [[UniPoly.from_json(e) for e in row] for row in data["entries"]]
        rolls_by_w = {r.w: r.roll for r in pinball_table(shape)}
        return cls(shape, order, [rolls_by_w[w] for w in order], entries)


def build_matrix(shape: Partition) -> RestrictionMatrix:
    """Entry ``(u, w)`` is ``p_{roll(w)}(u)`` for the rotated-English highest form."""
    sigma = rotated_english_sigma(shape)
    wts = circle_weights(shape, sigma)
    rows: list[PinballRow] = pinball_table(shape)
    order = [r.w for r in rows]
    rolls = [r.roll for r in rows]
    entries = [[springer_schubert(v, u, wts) for v in rolls] for u in order]
    return RestrictionMatrix(shape, order, rolls, entries)


@dataclass
class Echelon:
    rank: int
    pivot_rows: list[int]  # original row indices, in pivot order
    pivot_cols: list[int]
    last_pivot: UniPoly


def bareiss_echelon(M: Sequence[Sequence[UniPoly]]) -> Echelon:
    """Fraction-free row echelon form; the last pivot is a maximal minor
    (rows ``pivot_rows`` in that order, columns ``pivot_cols``)."""
    A = [[UniPoly.coerce(x) for x in row] for row in M]
    m = len(A)
    ncols = len(A[0]) if m else 0
    perm = list(range(m))
    prev = UniPoly([1])
    r = 0
    pcols: list[int] = []
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if not A[i][c].is_zero()), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            perm[r], perm[piv] = perm[piv], perm[r]
        p = A[r][c]
        for i in range(r + 1, m):
            a = A[i][c]
            row_i, row_r = A[i], A[r]
            for j in range(c + 1, ncols):
                if a.is_zero():
                    val = p * row_i[j]
                else:
                    val = p * row_i[j] - a * row_r[j]
                row_i[j] = val.exact_div(prev) if not val.is_zero() else val
            row_i[c] = UniPoly()
        prev = p
        pcols.append(c)
        r += 1
    return Echelon(r, perm[:r], pcols, prev if r else UniPoly([1]))


def _det(M: Sequence[Sequence[UniPoly]]) -> UniPoly:
    n = len(M)
    if n == 0:
        return UniPoly([1])
    ech = bareiss_echelon(M)
    if ech.rank < n:
        return UniPoly()
    # sign of the row permutation
    perm = ech.pivot_rows
    sign, seen = 1, [False] * n
    for i in range(n):
        if not seen[i]:
            j, cyc = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                cyc += 1
            if cyc % 2 == 0:
                sign = -sign
    return ech.last_pivot * sign


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if a.is_zero():
        return a
    return a * UniPoly([Fraction(1) / Fraction(a.lead())])


def rank_at(M: Sequence[Sequence[UniPoly]], t) -> int:
    """Rank over Q of the matrix specialized at ``t``."""
    A = [[Fraction(e(t)) for e in row] for row in M]
    m = len(A)
    ncols = len(A[0]) if m else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            f = A[i][c] / A[r][c]
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == m:
            break
    return r


@dataclass
class RankResult:
    full_rank: bool
    rank: int
    ncols: int
    specialization_rank: int
    minor: UniPoly | None = None
    minor_rows: list[int] = field(default_factory=list)
    minor_cols: list[int] = field(default_factory=list)
    dependence: list[UniPoly] | None = None

    def to_json(self) -> dict:
        out = {
            "full_rank": self.full_rank,
            "rank": self.rank,
            "ncols": self.ncols,
            "rank_at_t_equals_1": self.specialization_rank,
        }
        if self.minor is not None:
            out["minor"] = {"rows": self.minor_rows, "cols": self.minor_cols,
                            "value": self.minor.to_json()}
        if self.dependence is not None:
            out["dependence"] = [e.to_json() for e in self.dependence]
        return out


def _normalize(vec: list[UniPoly]) -> list[UniPoly]:
    g = UniPoly()
    for e in vec:
        g = poly_gcd(e, g)
    vec = [e.exact_div(g) for e in vec]
    first = next(e for e in vec if not e.is_zero())
    scale = UniPoly([Fraction(1) / Fraction(first.lead())])
    return [e * scale for e in vec]


def is_full_column_rank(M, fast: bool = False) -> RankResult:
    """Exact column rank over ``Q(t)`` with a certificate.

    Full rank comes with a nonzero maximal minor; deficiency with a nonzero
    polynomial vector ``x`` with ``M x = 0``. With ``fast=True`` a full-rank
    specialization at ``t = 1`` is accepted without symbolic elimination.
    """
    entries = M.entries if isinstance(M, RestrictionMatrix) else [list(r) for r in M]
    ncols = len(entries[0]) if entries else 0
    at_one = rank_at(entries, 1)
    if fast and at_one == ncols:
        return RankResult(True, ncols, ncols, at_one)
    ech = bareiss_echelon(entries)
    rows = sorted(ech.pivot_rows)
    if ech.rank == ncols:
        minor = _det([[entries[i][j] for j in ech.pivot_cols] for i in rows])
        return RankResult(True, ech.rank, ncols, at_one, minor, rows, list(ech.pivot_cols))
    free = next(j for j in range(ncols) if j not in ech.pivot_cols)
    pcols = list(ech.pivot_cols)
    x = [UniPoly() for _ in range(ncols)]
    base = [[entries[i][j] for j in pcols] for i in rows]
    x[free] = _det(base)
    for k, pc in enumerate(pcols):
        repl = [row[:k] + [entries[i][free]] + row[k + 1:] for row, i in zip(base, rows)]
        x[pc] = -_det(repl)
    return RankResult(False, ech.rank, ncols, at_one, dependence=_normalize(x))


# --- block structure for (n-2, 2) -------------------------------------------

def d_block_closed_form(n: int, variant: str = "stated") -> list[list[UniPoly]]:
    """Expected bottom-right block (rows ``u``, columns ``w``, both with ``n`` in
    the bottom row, ordered ``[k, n]`` for ``k = 1..n-1``).

    ``variant="stated"`` gives the stated values: columns ``s_{n-1} s_k`` for
    ``3 <= k <= n-3`` have ``k`` entries ``2(n-k+3) t^2`` then ``2(n-k+3) + 2(n-k+1)``.
    ``variant="projected"`` gives the circle projection of the same Billey
    polynomials ``(t_3 - t_{k+1})(t_3 - t_n)`` and ``(t_1 - t_{k+2})(t_3 - t_n)``:
    ``2(n-k+1)`` then ``2(n-k+1) + 2(n-k-1)``.
    """
    if n < 6:
        raise ValueError("the D block closed form needs n >= 6")
    if variant not in ("stated", "projected"):
        raise ValueError(f"unknown variant {variant!r}")
    size = n - 1
    t1 = UniPoly.monomial(-2, 1)
    cols: list[list[UniPoly]] = [[t1] * size]
    sq = lambda c: UniPoly.monomial(c, 2)  # noqa: E731
    zero = UniPoly()
    cols.append([zero] + [sq(2 * (n - 2))] * (size - 1))
    cols.append([zero] * 2 + [sq(2 * (n - 3))] * (size - 2))
    for k in range(3, n - 2):
        if variant == "stated":
            top, extra = 2 * (n - k + 3), 2 * (n - k + 1)
        else:
            top, extra = 2 * (n - k + 1), 2 * (n - k - 1)
        cols.append([sq(top)] * k + [sq(top + extra)] * (size - k))
    cols.append([zero] * (size - 1) + [sq(2)])
    return [[cols[j][i] for j in range(size)] for i in range(size)]


def _embed_poly(P: Poly, n: int) -> Poly:
    pad = (0,) * (n - P.n)
    return Poly(n, {e + pad: c for e, c in P.terms.items()})


@dataclass
class BlockReport:
    n: int
    top: list[int]
    bottom: list[int]
    b_block_zero: bool
    a_block_matches_smaller: bool | None
    a_block_matches_smaller_equivariant: bool | None
    d_block: list[list[UniPoly]]
    d_mismatches_stated: list[tuple[int, int]]
    d_mismatches_projected: list[tuple[int, int]]

    @property
    def d_matches_stated(self) -> bool:
        return not self.d_mismatches_stated

    @property
    def d_matches_projected(self) -> bool:
        return not self.d_mismatches_projected


def block_report(M: RestrictionMatrix) -> BlockReport:
    """Split ``M`` by whether ``n`` sits in the top or bottom row of the filling."""
    shape = M.shape
    if not is_two_row_shape(shape):
        raise ValueError(f"block analysis applies to shapes (n-2, 2), got {shape}")
    n = shape.n
    sigma = rotated_english_sigma(shape)
    bottom = [i for i, w in enumerate(M.order)
              if n in filling_of_fixed_point(w, shape, sigma).rows[1]]
    top = [i for i in range(M.size) if i not in bottom]
    b_zero = all(M.entries[u][w].is_zero() for u in top for w in bottom)
    a_ok = a_eq = None
    if n >= 5:
        smaller = build_matrix(Partition((shape.rows[0] - 1, 2)))
        aligned = (smaller.size == len(top)
                   and [M.order[i] for i in top] == [w.embed(n) for w in smaller.order])
        a_ok = aligned and M.submatrix(top, top) == smaller.entries
        # before projection: sigma_v(u) for v, u in S_{n-1} does not see t_n
        a_eq = aligned and all(
            _embed_poly(schubert_restrict(v, u), n)
            == schubert_restrict(v.embed(n), u.embed(n))
            for v in smaller.rolls for u in smaller.order)
    D = M.submatrix(bottom, bottom)
    mism_s: list[tuple[int, int]] = []
    mism_p: list[tuple[int, int]] = []
    if n >= 6:
        for variant, out in (("stated", mism_s), ("projected", mism_p)):
            exp = d_block_closed_form(n, variant)
            out.extend((i, j) for i in range(n - 1) for j in range(n - 1)
                       if D[i][j] != exp[i][j])
    return BlockReport(n, top, bottom, b_zero, a_ok, a_eq, D, mism_s, mism_p)


@dataclass
class ChangeOfBasis:
    adjusted: list[list[UniPoly]]
    multipliers: dict[int, UniPoly]
    lower_triangular: bool  # with nonzero diagonal
    pattern_ok: bool  # column k: k zeros, then one repeated value
    remainders: dict[int, UniPoly]  # the repeated value in each adjusted column

    def matches(self, expected: dict[int, UniPoly]) -> bool:
        return self.pattern_ok and all(self.remainders.get(k) == v for k, v in expected.items())


def stated_multipliers(n: int) -> dict[int, UniPoly]:
    """Subtracting ``2(n-k+3)`` (as a ``t^2`` coefficient) via the ``-2t`` column:
    column ``s_{n-1} s_k`` minus ``-(n-k+3) t`` times the first column."""
    return {k: UniPoly.monomial(-(n - k + 3), 1) for k in range(3, n - 2)}


def stated_remainders(n: int) -> dict[int, UniPoly]:
    """The stated post-change value ``2(n-k+1) t^2`` below ``k`` zeros."""
    return {k: UniPoly.monomial(2 * (n - k + 1), 2) for k in range(3, n - 2)}


def change_of_basis(D: list[list[UniPoly]],
                    multipliers: dict[int, UniPoly] | None = None) -> ChangeOfBasis:
    """Subtract ``multipliers[k]`` times the first column from column ``k``.

    Without explicit multipliers, each column with a nonzero top entry gets
    the ``Q[t]`` multiple of the (constant ``-2t``) first column that clears it.
    Afterwards column ``k`` should have ``k`` zeros on top and a single
    repeated nonzero value below.
    """
    size = len(D)
    first = [row[0] for row in D]
    cols = [[D[i][j] for i in range(size)] for j in range(size)]
    mult: dict[int, UniPoly] = {}
    for j in range(1, size):
        if multipliers is not None:
            if j not in multipliers:
                continue
            q = multipliers[j]
        else:
            top = cols[j][0]
            if top.is_zero():
                continue
            q = top.exact_div(first[0])
        mult[j] = q
        cols[j] = [c - q * f for c, f in zip(cols[j], first)]
    adjusted = [[cols[j][i] for j in range(size)] for i in range(size)]
    lower = all(adjusted[i][j].is_zero() for i in range(size) for j in range(i + 1, size)) \
        and all(not adjusted[i][i].is_zero() for i in range(size))
    pattern = lower and all(
        all(cols[j][i] == cols[j][j] for i in range(j, size)) for j in range(size))
    return ChangeOfBasis(adjusted, mult, lower, pattern,
                         {j: cols[j][j] for j in range(size)})


@dataclass
class UpperTriangularReport:
    violations: list[tuple[Permutation, Permutation]]
    stated: ChangeOfBasis | None = None  # stated multipliers
    derived: ChangeOfBasis | None = None  # multipliers read off the data

    @property
    def stated_pattern_reproduced(self) -> bool | None:
        """Stated multipliers give ``k`` zeros then ``2(n-k+1) t^2``."""
        if self.stated is None:
            return None
        n = len(self.stated.adjusted) + 1
        return self.stated.matches(stated_remainders(n))

    @property
    def poset_upper_triangular(self) -> bool:
        return not self.violations


def check_upper_triangular(shape: Partition, M: RestrictionMatrix | None = None) -> UpperTriangularReport:
    """Pairs ``(w, u)`` of fixed points with ``roll(w) <= u`` not equivalent to ``w <= u``."""
    rows = pinball_table(shape)
    viol = [(a.w, b.w) for a in rows for b in rows
            if bruhat_leq(a.roll, b.w) != bruhat_leq(a.w, b.w)]
    if not (is_two_row_shape(shape) and shape.n >= 6):
        return UpperTriangularReport(viol)
    M = M or build_matrix(shape)
    D = block_report(M).d_block
    return UpperTriangularReport(viol, change_of_basis(D, stated_multipliers(shape.n)),
                                 change_of_basis(D))

