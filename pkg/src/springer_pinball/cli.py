"""Command-line interface: ``springer-pinball <subcommand> ...``.

Exit codes: 0 success or verified, 1 verification failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from . import formats
from .basis import (
    block_report, build_matrix, check_upper_triangular, is_full_column_rank,
)
from .billey import project_s1, schubert_restrict, springer_schubert
from .combinatorics import Partition, Permutation, bruhat_leq, english_read, rotated_english_sigma
from .fixed_points import (
    BRUTE_FORCE_MAX_N, HessenbergFunction, fixed_points, fixed_points_bruteforce,
)
from .matrix_forms import (
    adjacent_pair_matrix, brute_force_highest_forms, circle_weights, conjugate,
    count_distinct_highest_forms, highest_form_fillings, jordan_matrix,
)
from .pinball import betti_numbers, is_two_row_shape, pinball_table

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2


class InputError(ValueError):
    pass


def parse_sigma(text: str, shape: Partition) -> Permutation:
    if text == "rotated-english":
        return rotated_english_sigma(shape)
    if text == "identity":
        return Permutation.identity(shape.n)
    sigma = Permutation.parse(text)
    if sigma.n != shape.n:
        raise InputError(f"sigma has {sigma.n} letters, shape has {shape.n} boxes")
    return sigma


def _emit(fmt: str, text: str, payload) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(text)


# --- subcommands -------------------------------------------------------------

def cmd_highest_forms(args) -> int:
    shape = Partition.parse(args.partition)
    fills = highest_form_fillings(shape)
    items = []
    for T in fills:
        sigma = english_read(T)
        items.append((T, sigma, adjacent_pair_matrix(T)))
    distinct = len({X for _, _, X in items})
    formula = count_distinct_highest_forms(shape)
    payload = {
        "shape": list(shape.rows),
        "fillings": [{"filling": T.to_json(), "sigma": list(s.oneline), "matrix": X.to_json()}
                     for T, s, X in items],
        "distinct": distinct,
        "formula": formula,
    }
    if args.brute_force:
        payload["brute_force"] = len(brute_force_highest_forms(shape))
    if args.format == "csv":
        lines = ["filling,sigma,ones"]
        lines += [f'"{T}",{s},"{sorted(X.ones)}"' for T, s, X in items]
        text = "\n".join(lines) + "\n"
    elif args.format == "latex":
        text = "\\begin{tabular}{|c|c|}\\hline\nfilling & $\\sigma$ \\\\ \\hline\n"
        text += "".join(f"{T} & {s} \\\\ \\hline\n" for T, s, _ in items)
        text += "\\end{tabular}\n"
    else:
        lines = []
        for T, s, X in items:
            lines.append(f"{T}  sigma={s}  ones={sorted(X.ones)}")
        mark = "ok" if distinct == formula else "MISMATCH"
        lines.append(f"fillings: {len(items)}")
        lines.append(f"distinct matrices: {distinct}")
        lines.append(f"formula: {formula} ({mark})")
        if args.brute_force:
            lines.append(f"brute force over S_{shape.n}: {payload['brute_force']}")
        text = "\n".join(lines) + "\n"
    _emit(args.format, text, payload)
    return EXIT_OK if distinct == formula else EXIT_FAILED


def cmd_pinball(args) -> int:
    shape = Partition.parse(args.partition)
    if not HessenbergFunction.parse(args.h, shape.n).is_identity():
        raise InputError("the dimension-pair algorithm is defined for Springer varieties (h = id)")
    sigma = parse_sigma(args.sigma, shape)
    rows = pinball_table(shape, sigma)
    text = {"csv": formats.pinball_csv, "latex": formats.pinball_latex}.get(
        args.format, formats.pinball_text)(rows)
    _emit(args.format, text, [r.to_json() for r in rows])
    return EXIT_OK


def cmd_fixed_points(args) -> int:
    shape = Partition.parse(args.partition)
    h = HessenbergFunction.parse(args.h, shape.n)
    if h.n != shape.n:
        raise InputError(f"h has {h.n} values, shape has {shape.n} boxes")
    sigma = parse_sigma(args.sigma, shape)
    pts = fixed_points(shape, h, sigma)
    payload = {"shape": list(shape.rows), "h": h.to_json(), "sigma": list(sigma.oneline),
               "points": [{"w": list(w.oneline), "filling": T.to_json()} for w, T in pts]}
    ok = True
    if args.brute_force:
        if shape.n > BRUTE_FORCE_MAX_N:
            raise InputError(f"--brute-force needs n <= {BRUTE_FORCE_MAX_N}")
        N = conjugate(jordan_matrix(shape), sigma)
        brute = fixed_points_bruteforce(N, h)
        ok = brute == [w for w, _ in pts]
        payload["brute_force_agrees"] = ok
    if args.format == "csv":
        text = "w,filling\n" + "".join(f'{w},"{T}"\n' for w, T in pts)
    elif args.format == "latex":
        text = "\\begin{tabular}{|c|c|}\\hline\n$w$ & filling \\\\ \\hline\n"
        text += "".join(f"{w} & {T} \\\\ \\hline\n" for w, T in pts) + "\\end{tabular}\n"
    else:
        lines = [f"{w}  {T}" for w, T in pts]
        lines.append(f"fixed points: {len(pts)}")
        if args.brute_force:
            lines.append(f"brute force agrees: {'yes' if ok else 'no'}")
        text = "\n".join(lines) + "\n"
    _emit(args.format, text, payload)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_betti(args) -> int:
    shape = Partition.parse(args.partition)
    b = betti_numbers(shape)
    text = ",".join(map(str, b)) + "\n"
    if args.format == "latex":
        text = "$(" + ", ".join(map(str, b)) + ")$\n"
    _emit(args.format, text, {"shape": list(shape.rows), "betti": list(b)})
    return EXIT_OK


def _yn(x) -> str:
    return "n/a" if x is None else ("yes" if x else "no")


def cmd_verify_basis(args) -> int:
    shape = Partition.parse(args.partition)
    M = build_matrix(shape)
    rank = is_full_column_rank(M, fast=args.fast)
    upper = check_upper_triangular(shape, M)
    payload = {"shape": list(shape.rows), "matrix": M.to_json(), "rank": rank.to_json(),
               "poset_upper_triangular": upper.poset_upper_triangular,
               "violations": [[list(w.oneline), list(u.oneline)] for w, u in upper.violations]}
    lines = [f"shape: {shape}", f"fixed points: {M.size}",
             f"rank: {rank.rank} of {rank.ncols}",
             f"full column rank: {_yn(rank.full_rank)}"]
    if rank.minor is not None:
        lines.append(f"nonzero maximal minor: {rank.minor}")
    if rank.dependence is not None:
        lines.append(f"dependence: {rank.dependence}")
    lines.append(f"poset-upper-triangular: {_yn(upper.poset_upper_triangular)}"
                 f" ({len(upper.violations)} violating pairs)")
    block = None
    if is_two_row_shape(shape) and shape.n >= 6:
        block = block_report(M)
        payload["blocks"] = {
            "b_block_zero": block.b_block_zero,
            "a_block_matches_smaller": block.a_block_matches_smaller,
            "a_block_matches_smaller_equivariant": block.a_block_matches_smaller_equivariant,
            "d_block": [[e.to_json() for e in row] for row in block.d_block],
            "d_matches_closed_form": block.d_matches_stated,
            "d_matches_projected_form": block.d_matches_projected,
            "change_of_basis_stated_pattern": upper.stated_pattern_reproduced,
            "change_of_basis_derived_lower_triangular": upper.derived.lower_triangular,
        }
        lines += [
            f"B block zero: {_yn(block.b_block_zero)}",
            f"A block equals (n-3,2) matrix: {_yn(block.a_block_matches_smaller)}",
            f"A block equals (n-3,2) matrix before projection: "
            f"{_yn(block.a_block_matches_smaller_equivariant)}",
            f"D matches closed form: {_yn(block.d_matches_stated)}"
            f" ({len(block.d_mismatches_stated)} entries differ)",
            f"D matches projected closed form: {_yn(block.d_matches_projected)}",
            f"change of basis, stated multipliers give stated pattern: "
            f"{_yn(upper.stated_pattern_reproduced)}",
            f"change of basis, cancelling multipliers give lower triangular D: "
            f"{_yn(upper.derived.lower_triangular)}",
        ]
    elif is_two_row_shape(shape):
        lines.append(f"expected size C(n,2) = {comb(shape.n, 2)}")
    if args.format in ("csv", "latex"):
        entries = block.d_block if block is not None else M.entries
        labels = [str(M.order[i]) for i in block.bottom] if block is not None \
            else [str(w) for w in M.order]
        text = formats.matrix_csv(entries, labels) if args.format == "csv" \
            else formats.matrix_latex(entries)
    else:
        text = "\n".join(lines) + "\n"
    _emit(args.format, text, payload)
    return EXIT_OK if rank.full_rank else EXIT_FAILED


def cmd_restrict(args) -> int:
    v = Permutation.parse(args.v)
    u = Permutation.parse(args.u)
    if v.n != u.n:
        raise InputError(f"v in S_{v.n} but u in S_{u.n}")
    P = schubert_restrict(v, u) if bruhat_leq(v, u) else None
    payload = {"v": list(v.oneline), "u": list(u.oneline),
               "equivariant": "0" if P is None else repr(P)}
    lines = [f"sigma_{v}({u}) = {payload['equivariant']}"]
    if args.shape is not None:
        shape = Partition.parse(args.shape)
        if shape.n != v.n:
            raise InputError(f"shape has {shape.n} boxes, permutations are in S_{v.n}")
        wts = circle_weights(shape, parse_sigma(args.sigma, shape))
        p = springer_schubert(v, u, wts) if P is None else project_s1(P, wts)
        payload["weights"] = wts.to_json()
        payload["projected"] = p.to_json()
        lines.append(f"p_{v}({u}) = {p}   weights {list(wts.weights)}")
    text = "\n".join(lines) + "\n"
    _emit(args.format, text, payload)
    return EXIT_OK


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json", "csv", "latex"],
                     default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="springer-pinball",
        description="Springer fixed points, dimension-pair pinball and basis checks.")
    parser.add_argument("--format", choices=["text", "json", "csv", "latex"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("highest-forms", parents=[fmt], help="list highest forms of N")
    p.add_argument("partition")
    p.add_argument("--brute-force", action="store_true",
                   help="also count highest forms among all n! conjugates")
    p.set_defaults(func=cmd_highest_forms)

    p = sub.add_parser("pinball", parents=[fmt], help="dimension-pair table")
    p.add_argument("partition")
    p.add_argument("--sigma", default="rotated-english")
    p.add_argument("--h", default="id", help="only 'id' is supported")
    p.set_defaults(func=cmd_pinball)

    p = sub.add_parser("fixed-points", parents=[fmt], help="circle-fixed points")
    p.add_argument("partition")
    p.add_argument("--h", default="id", help="'id' or a comma list h(1),..,h(n)")
    p.add_argument("--sigma", default="rotated-english")
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(func=cmd_fixed_points)

    p = sub.add_parser("betti", parents=[fmt], help="Betti numbers of the paving")
    p.add_argument("partition")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify-basis", parents=[fmt], help="rank and block checks")
    p.add_argument("partition")
    p.add_argument("--fast", action="store_true",
                   help="accept full rank at t=1 without symbolic elimination")
    p.set_defaults(func=cmd_verify_basis)

    p = sub.add_parser("restrict", parents=[fmt], help="sigma_v(u) and its circle projection")
    p.add_argument("v")
    p.add_argument("u")
    p.add_argument("--shape", help="project with the circle weights of this shape")
    p.add_argument("--sigma", default="rotated-english")
    p.set_defaults(func=cmd_restrict)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:  # includes InputError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
