"""Restrictions of equivariant Schubert classes to fixed points.

``schubert_restrict(v, w)`` evaluates Billey's formula: fix a reduced word
``i_1 .. i_m`` of ``w``; for every reduced subword (a set ``J`` of positions)
whose product is ``v``, multiply over ``j in J`` the root
``s_{i_1} .. s_{i_{j-1}} (alpha_{i_j})``; sum over ``J``.

Subwords are found by backtracking. A partial product ``p`` of chosen letters
must be a left prefix of a reduced word of ``v``, i.e.
``len(p^{-1} v) == len(v) - len(p)``; branches violating this, or with too few
positions left, are cut. For ``n <= 9`` and ``len(v) <= 2`` this is instant;
cost grows like ``binom(len(w), len(v))`` in the worst case.
"""

from __future__ import annotations

from typing import Sequence

from .combinatorics import Permutation, bruhat_leq, reduced_word
from .matrix_forms import WeightAssignment
from .polynomials import LinForm, Poly, UniPoly, simple_root

__all__ = [
    "billey_terms", "schubert_restrict", "project_s1", "springer_schubert",
]


def _prefix_perms(word: Sequence[int], n: int) -> list[Permutation]:
    """``prefix[j] = s_{i_1} .. s_{i_j}`` for ``j = 0 .. len(word)``."""
    cur = list(range(1, n + 1))
    out = [Permutation(tuple(cur))]
    for i in word:
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
        out.append(Permutation(tuple(cur)))
    return out


def billey_terms(v: Permutation, w: Permutation,
                 word: Sequence[int] | None = None) -> list[list[LinForm]]:
    """The factor lists of the nonzero terms of the Billey sum."""
    if v.n != w.n:
        raise ValueError(f"size mismatch: S_{v.n} vs S_{w.n}")
    n = w.n
    if word is None:
        word = reduced_word(w)
    elif Permutation.from_word(word, n) != w or len(word) != w.length():
        raise ValueError(f"{list(word)} is not a reduced word for {w}")
    lv = v.length()
    m = len(word)
    if lv > m:
        return []
    prefixes = _prefix_perms(word, n)
    terms: list[list[LinForm]] = []

    def rec(start: int, p: Permutation, chosen: list[int]):
        k = len(chosen)
        if k == lv:
            if p == v:
                terms.append([simple_root(word[j], n).act(prefixes[j]) for j in chosen])
            return
        for j in range(start, m - (lv - k) + 1):
            q = p * Permutation.simple(word[j], n)
            lq = k + 1
            if q.length() != lq:
                continue
            # q must be a left factor of v: len(q^{-1} v) = len(v) - len(q)
            if (q.inverse() * v).length() != lv - lq:
                continue
            chosen.append(j)
            rec(j + 1, q, chosen)
            chosen.pop()

    rec(0, Permutation.identity(n), [])
    return terms


def schubert_restrict(v: Permutation, w: Permutation,
                      word: Sequence[int] | None = None) -> Poly:
    """``sigma_v(w)`` as an expanded polynomial in ``t_1..t_n``."""
    n = w.n
    total = Poly(n)
    for factors in billey_terms(v, w, word):
        total = total + Poly.product(factors, n)
    return total


def project_s1(P: Poly, wts: WeightAssignment) -> UniPoly:
    """Substitute ``t_i -> c_i t``; a homogeneous input of degree ``d`` lands on ``t^d``."""
    if P.n != wts.n:
        raise ValueError(f"variable count mismatch: {P.n} vs {wts.n}")
    coeffs: dict[int, object] = {}
    for e, c in P.terms.items():
        d = sum(e)
        m = c
        for ci, k in zip(wts.weights, e):
            if k:
                m = m * ci ** k
        coeffs[d] = coeffs.get(d, 0) + m
    if not coeffs:
        return UniPoly()
    return UniPoly(coeffs.get(k, 0) for k in range(max(coeffs) + 1))


def springer_schubert(v: Permutation, w: Permutation, wts: WeightAssignment) -> UniPoly:
    """``p_v(w)``: the circle projection of ``sigma_v(w)``."""
    if not bruhat_leq(v, w):
        return UniPoly()
    return project_s1(schubert_restrict(v, w), wts)
