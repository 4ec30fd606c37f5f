"""Command-line interface: ``qcldpc analyze|dmin|expand|cover|cycles|enum-wm``."""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .bounds import bound_eq1, bound_eq2, bound_factorial, bound_girth_adjusted, construct_codeword
from .covers import (
    SplitError,
    build_cover_block,
    build_cover_interleaved,
    cover_distance_bounds,
    read_split,
    split_auto,
    verify_cover_projection,
)
from .cycles import (
    CycleWitness,
    detect_4cycle_type1,
    detect_6cycle_type1,
    equal_products,
    qc_diameter,
    qc_girth,
    type2_4cycle_free,
    wm_girth_caps,
)
from .distance import DEFAULT_MAX_DIM, code_dimension, dmin_exhaustive
from .matrix import ParseError, PolyMatrix, WeightMatrix, classify, expand_scalar, read_matrix, regularity
from .wm_enum import REFERENCE_COUNTS, enumerate_wm

EXIT_INPUT = 2
EXIT_GUARD = 3


def _num(x: int | float | None) -> int | str | None:
    if x is None:
        return None
    if x == math.inf:
        return "inf"
    return int(x)


def _text(x: object) -> str:
    if x is None:
        return "n/a"
    if x == math.inf:
        return "inf"
    return str(x)


@dataclass(frozen=True)
class CodeReport:
    n: int
    k: int
    type_M: int
    regularity: tuple[int, int] | None
    weight_matrix: WeightMatrix
    bound_eq1: int | float | None
    bound_eq2: int | float | None
    bound_factorial: int | None
    bound_girth_adjusted: int | float | None
    girth: int | float
    diameter: int | float
    four_cycle_free: bool | None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "type_M": self.type_M,
            "regularity": list(self.regularity) if self.regularity else None,
            "weight_matrix": self.weight_matrix.tolist(),
            "bound_eq1": _num(self.bound_eq1),
            "bound_eq2": _num(self.bound_eq2),
            "bound_factorial": _num(self.bound_factorial),
            "bound_girth_adjusted": _num(self.bound_girth_adjusted),
            "girth": _num(self.girth),
            "diameter": _num(self.diameter),
            "four_cycle_free": self.four_cycle_free,
        }


def four_cycle_free(H: PolyMatrix, type_M: int, girth: int | float) -> bool:
    if type_M <= 1:
        return detect_4cycle_type1(H) is None
    if type_M == 2:
        return type2_4cycle_free(H)[0]
    return girth > 4


def analyze(H: PolyMatrix) -> CodeReport:
    n, k = code_dimension(H)
    type_M, reg = classify(H)
    A = H.weight_matrix()
    eq1 = eq2 = fact = adjusted = None
    if H.J + 1 <= H.L:
        eq1_report = bound_eq1(H)
        eq2_report = bound_eq2(A)
        eq1, eq2 = eq1_report.value, eq2_report.value
        if type_M <= 1:
            fact = bound_factorial(H.J)
            adjusted = bound_girth_adjusted(H).value
        _check_chain(H, eq1, eq2_report.subset, eq2, fact, adjusted)
    g = qc_girth(H)
    return CodeReport(
        n, k, type_M, reg, A, eq1, eq2, fact, adjusted, g, qc_diameter(H), four_cycle_free(H, type_M, g)
    )


def _check_chain(H, eq1, eq2_subset, eq2, fact, adjusted) -> None:
    # eq1 <= eq2 is only guaranteed when the subset attaining eq2 yields a
    # nonzero codeword; degenerate (rank-deficient) subsets can break it
    if eq2_subset is not None and not construct_codeword(H, eq2_subset).is_zero() and eq1 > eq2:
        raise RuntimeError(f"inconsistent bounds: eq1={eq1} > eq2={eq2}")
    if adjusted is not None and adjusted > fact:
        raise RuntimeError(f"inconsistent bounds: refined {adjusted} > (J+1)! = {fact}")


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _matrix_text(A: WeightMatrix, indent: str = "  ") -> str:
    return "\n".join(indent + " ".join(str(a) for a in row) for row in A.entries)


def cmd_analyze(args: argparse.Namespace) -> int:
    H = read_matrix(args.file)
    rep = analyze(H)
    reg = f"({rep.regularity[0]},{rep.regularity[1]})-regular" if rep.regularity else "irregular"
    lines = [
        f"n = {rep.n}, k = {rep.k}, J x L = {H.J} x {H.L}, r = {H.r}",
        f"type {rep.type_M}, {reg}",
        "weight matrix:",
        _matrix_text(rep.weight_matrix),
        f"bound_eq1 = {_text(rep.bound_eq1)}",
        f"bound_eq2 = {_text(rep.bound_eq2)}",
        f"bound_factorial = {_text(rep.bound_factorial)}",
        f"bound_girth_adjusted = {_text(rep.bound_girth_adjusted)}",
        f"girth = {_text(rep.girth)}",
        f"diameter = {_text(rep.diameter)}",
        f"four_cycle_free = {_text(rep.four_cycle_free)}",
    ]
    _emit(args, rep.as_dict(), "\n".join(lines))
    return 0


def cmd_dmin(args: argparse.Namespace) -> int:
    H = read_matrix(args.file)
    progress = None
    if args.progress:

        def progress(done: int, total: int) -> bool:
            print(f"{done}/{total} codewords ({100 * done / total:.1f}%)", file=sys.stderr)
            return True

    p = dmin_exhaustive(H, max_dim=args.max_dim, jobs=args.jobs, progress=progress)
    text = str(p)
    payload = {
        "n": p.n,
        "k": p.k,
        "dmin": p.dmin,
        "dmin_upper": _num(p.dmin_upper),
        "dmin_status": p.dmin_status,
    }
    _emit(args, payload, text)
    return 0


def cmd_expand(args: argparse.Namespace) -> int:
    Hs = expand_scalar(read_matrix(args.file))
    text = Hs.to_text()
    payload = {"n_rows": Hs.n_rows, "n_cols": Hs.n_cols, "rows": text.splitlines()}
    _emit(args, payload, text)
    return 0


def cmd_cover(args: argparse.Namespace) -> int:
    H = read_matrix(args.file)
    split = read_split(H, args.split_file) if args.split_file else split_auto(H)
    build = build_cover_block if args.mode == "block" else build_cover_interleaved
    cover = build(split)
    n, k = code_dimension(cover)
    reg = regularity(cover.weight_matrix())
    ok = verify_cover_projection(cover, H, layout=args.mode)
    sandwich = cover_distance_bounds(args.base_dmin) if args.base_dmin is not None else None
    payload = {
        "mode": args.mode,
        "matrix": cover.to_text().splitlines(),
        "n": n,
        "k": k,
        "rank": n - k,
        "regularity": list(reg) if reg else None,
        "cover_projection": ok,
        "dmin_bounds": list(sandwich) if sandwich else None,
    }
    lines = [cover.to_text().rstrip("\n")]
    lines.append(f"# n = {n}, k = {k}, rank = {n - k}")
    lines.append(f"# regularity: {f'({reg[0]},{reg[1]})' if reg else 'irregular'}")
    lines.append(f"# double cover of input: {ok}")
    if sandwich:
        lines.append(f"# {sandwich[0]} <= dmin <= {sandwich[1]}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _witness_dict(w: CycleWitness | None) -> dict | None:
    if w is None:
        return None
    return {
        "R": w.R,
        "rows": list(w.rows),
        "cols": list(w.cols),
        "sigma": list(w.sigma),
        "tau": list(w.tau),
        "single_cycle": w.single_cycle,
        "equation": w.equation(),
    }


def _witness_text(w: CycleWitness | None) -> str:
    if w is None:
        return "none"
    return f"rows {list(w.rows)}, cols {list(w.cols)}: {w.equation()}"


def cmd_cycles(args: argparse.Namespace) -> int:
    H = read_matrix(args.file)
    type_M, _ = classify(H)
    g = qc_girth(H)
    d = qc_diameter(H)
    cap = wm_girth_caps(H.weight_matrix())
    payload: dict = {"girth": _num(g), "diameter": _num(d), "weight_matrix_cap": _num(cap)}
    lines = [f"girth = {_text(g)}", f"diameter = {_text(d)}", f"weight-matrix girth cap = {_text(cap)}"]
    if type_M <= 1:
        w4, w6 = detect_4cycle_type1(H), detect_6cycle_type1(H)
        products = {}
        for R in range(2, min(H.J, H.L, 5) + 1):
            products[str(R)] = _witness_dict(equal_products(H, R))
        payload.update({"four_cycle": _witness_dict(w4), "six_cycle": _witness_dict(w6), "equal_products": products})
        lines += [f"4-cycle witness: {_witness_text(w4)}", f"6-cycle witness: {_witness_text(w6)}"]
        for R, w in products.items():
            lines.append(f"equal products R={R}: {'none' if w is None else w['equation']}")
    elif type_M == 2:
        free, violations = type2_4cycle_free(H)
        payload["four_cycle_free"] = free
        payload["violations"] = [
            {"condition": v.condition, "rows": list(v.rows), "cols": list(v.cols), "detail": v.detail}
            for v in violations
        ]
        lines.append(f"4-cycle free: {free}")
        for v in violations:
            lines.append(f"  condition {v.condition} at rows {list(v.rows)}, cols {list(v.cols)}: {v.detail}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_enum_wm(args: argparse.Namespace) -> int:
    key = (args.J, args.L, args.col_sum, args.row_sum, args.max_entry)
    classes = enumerate_wm(*key)
    expected = REFERENCE_COUNTS.get(key)
    if expected is not None and expected != len(classes):
        print(
            f"warning: found {len(classes)} classes, reference list has {expected}",
            file=sys.stderr,
        )
    payload = {
        "count": len(classes),
        "classes": [{"matrix": c.canonical.tolist(), "bound": _num(c.bound)} for c in classes],
    }
    blocks = [f"{len(classes)} classes"]
    for c in classes:
        blocks.append(f"bound {_text(c.bound)}:\n{_matrix_text(c.canonical)}")
    _emit(args, payload, "\n".join(blocks))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcldpc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str, with_file: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        if with_file:
            p.add_argument("file", help="polynomial parity-check matrix file")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    add("analyze", cmd_analyze, "bounds, girth and structure report")
    p = add("dmin", cmd_dmin, "exact minimum distance by exhaustive search")
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM, help="largest k searched exhaustively")
    p.add_argument("--jobs", type=int, default=1, help="parallel search ranges")
    p.add_argument("--progress", action="store_true", help="report progress on stderr")
    add("expand", cmd_expand, "print the binary parity-check matrix")
    p = add("cover", cmd_cover, "build a double cover")
    p.add_argument("--mode", choices=("block", "interleaved"), default="block")
    p.add_argument("--split-file", help="matrix file giving the first part of every entry")
    p.add_argument("--base-dmin", type=int, help="minimum distance of the input code")
    add("cycles", cmd_cycles, "girth, diameter and cycle witnesses")
    p = add("enum-wm", cmd_enum_wm, "enumerate regular weight matrices", with_file=False)
    p.add_argument("-J", type=int, required=True)
    p.add_argument("-L", type=int, required=True)
    p.add_argument("--col-sum", type=int, required=True)
    p.add_argument("--row-sum", type=int, required=True)
    p.add_argument("--max-entry", type=int, required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, SplitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
