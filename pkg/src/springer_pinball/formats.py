"""Text, CSV and LaTeX renderings shared by the CLI and the tests."""

from __future__ import annotations

import csv
import io
import re
from typing import Sequence

from .combinatorics import Filling
from .pinball import PinballRow
from .polynomials import UniPoly

__all__ = [
    "PINBALL_HEADER", "format_pairs", "pinball_text", "pinball_csv",
    "pinball_latex", "matrix_csv", "matrix_latex", "poly_latex",
]

PINBALL_HEADER = ("w", "w^-1", "filling", "dim pairs", "deg", "omega(x)", "roll(w)")


def format_pairs(pairs: Sequence[tuple[int, int]]) -> str:
    return "{" + ",".join(f"({a},{b})" for a, b in pairs) + "}"


def _cells(r: PinballRow) -> list[str]:
    return [str(r.w), str(r.w.inverse()), str(r.filling), format_pairs(r.dim_pairs),
            str(r.deg), str(r.omega), str(r.roll)]


def pinball_text(rows: Sequence[PinballRow]) -> str:
    """One line per fixed point, columns separated by `` ; ``."""
    lines = [" ; ".join(PINBALL_HEADER)]
    lines += [" ; ".join(_cells(r)) for r in rows]
    return "\n".join(lines) + "\n"


def pinball_csv(rows: Sequence[PinballRow]) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(PINBALL_HEADER)
    for r in rows:
        wr.writerow(_cells(r))
    return buf.getvalue()


def _filling_latex(T: Filling) -> str:
    width = max(len(r) for r in T.rows)
    body = r" \\ ".join(" & ".join(map(str, r)) for r in T.rows)
    return rf"$\begin{{array}}{{{'c' * width}}} {body} \end{{array}}$"


def pinball_latex(rows: Sequence[PinballRow]) -> str:
    out = [r"\begin{tabular}{|c|c|c|c|c|c|c|}\hline",
           r"$w$ & $w^{-1}$ & perm filling & dim pair & deg & $\omega(\mathbf{x})$ & roll$(w)$ \\ \hline\hline"]
    for r in rows:
        pairs = r"$\emptyset$" if not r.dim_pairs else \
            "$\\{" + ",".join(f"({a},{b})" for a, b in r.dim_pairs) + "\\}$"
        out.append(f"{r.w} & {r.w.inverse()} & {_filling_latex(r.filling)} & {pairs} & "
                   rf"{r.deg} & {r.omega} & {r.roll} \\ \hline")
    out.append(r"\end{tabular}")
    return "\n".join(out) + "\n"


def matrix_csv(entries: Sequence[Sequence[UniPoly]],
               labels: Sequence[str] | None = None) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    if labels is not None:
        wr.writerow([""] + list(labels))
    for i, row in enumerate(entries):
        cells = [str(e) for e in row]
        wr.writerow(([labels[i]] if labels is not None else []) + cells)
    return buf.getvalue()


def poly_latex(p: UniPoly) -> str:
    return re.sub(r"t\^(\d+)", r"t^{\1}", str(p))


def matrix_latex(entries: Sequence[Sequence[UniPoly]]) -> str:
    rows = [" & ".join(poly_latex(e) for e in row) for row in entries]
    return "\\begin{bmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{bmatrix}\n"
