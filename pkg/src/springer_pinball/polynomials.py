"""Exact polynomial arithmetic over the rationals.

``LinForm`` is a linear form in ``t_1..t_n``, ``Poly`` a sparse multivariate
polynomial in the same variables, and ``UniPoly`` a univariate polynomial in
``t``. Coefficients are ``int`` or ``Fraction``; nothing is ever a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

__all__ = ["LinForm", "Poly", "UniPoly", "simple_root"]


def _norm(c):
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


@dataclass(frozen=True)
class LinForm:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_norm(c) for c in self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @classmethod
    def var(cls, i: int, n: int) -> "LinForm":
        c = [0] * n
        c[i - 1] = 1
        return cls(tuple(c))

    def __sub__(self, other: "LinForm") -> "LinForm":
        return LinForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __add__(self, other: "LinForm") -> "LinForm":
        return LinForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def act(self, w) -> "LinForm":
        """Apply a permutation: ``w(t_i) = t_{w(i)}``."""
        c = [0] * self.n
        for i, ci in enumerate(self.coeffs, start=1):
            c[w(i) - 1] += ci
        return LinForm(tuple(c))

    def to_poly(self) -> "Poly":
        terms = {}
        for i, ci in enumerate(self.coeffs):
            if ci:
                e = [0] * self.n
                e[i] = 1
                terms[tuple(e)] = ci
        return Poly(self.n, terms)


def simple_root(i: int, n: int) -> LinForm:
    """``alpha_i = t_i - t_{i+1}``."""
    return LinForm.var(i, n) - LinForm.var(i + 1, n)


class Poly:
    """Sparse polynomial in ``t_1..t_n``: a map exponent-tuple -> coefficient."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.n = n
        self.terms = {e: _norm(c) for e, c in (terms or {}).items() if c != 0}
        for e in self.terms:
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong arity for n={n}")

    @classmethod
    def const(cls, c, n: int) -> "Poly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def product(cls, forms: Iterable[LinForm], n: int) -> "Poly":
        out = cls.const(1, n)
        for f in forms:
            out = out * f.to_poly()
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.n, out)

    def __neg__(self) -> "Poly":
        return Poly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Rational):
            return Poly(self.n, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, Rational):
            return self == Poly.const(other, self.n)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.n:
            raise ValueError(f"expected {self.n} values")
        total = Fraction(0)
        for e, c in self.terms.items():
            m = Fraction(c)
            for x, k in zip(point, e):
                if k:
                    m *= Fraction(x) ** k
            total += m
        return total

    def _check(self, other: "Poly"):
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"t{i + 1}" + (f"^{k}" if k > 1 else "")
                            for i, k in enumerate(e) if k)
            if mono and c in (1, -1):
                s = ("-" if c == -1 else "") + mono
            else:
                s = f"{c}" + (f"*{mono}" if mono else "")
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")


class UniPoly:
    """Polynomial in ``t``; ``coeffs[k]`` is the coefficient of ``t^k``.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, c, d: int) -> "UniPoly":
        return cls([0] * d + [c])

    @classmethod
    def coerce(cls, x) -> "UniPoly":
        return x if isinstance(x, UniPoly) else cls([x])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other) -> "UniPoly":
        other = UniPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return UniPoly((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)
                       for k in range(m))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        return self + (-UniPoly.coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return UniPoly.coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        other = UniPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree()
        lead = Fraction(other.lead())
        q = [Fraction(0)] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] / lead
            if c:
                q[k - d] = c
                for j, oc in enumerate(other.coeffs):
                    rem[k - d + j] -= c * oc
        return UniPoly(q), UniPoly(rem[:d] if d > 0 else [])

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{self!r} is not divisible by {other!r}")
        return q

    def __call__(self, x):
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "UniPoly":
        return cls(Fraction(s) for s in data)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}{mono}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")

    __str__ = __repr__
