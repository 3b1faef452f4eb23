"""Command line entry point: ``python -m rearep <command> ...``.

R-matrices are read from JSON files; ``catalog:N`` selects the built-in
standard Hecke R-matrix of size N instead.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .family import RepFamily
from .hecke import Partition, hook_count, partitions_of, standard_tableaux, young_projector
from .oracle import central_spectrum, check_relations, commutant_dimension
from .rep_b import (
    char_b_col,
    char_b_row,
    char_b_s1,
    project_b,
    renormalize,
    sl_char_b,
    sl_reduce,
    tensor_power_b,
)
from .rep_r import (
    char_r,
    check_b_r_equivalence,
    indecomposable_example,
    project_r,
    r_type_rep,
    sl_reduce_r,
    sl_zeta_r,
    to_mrea,
    zeta_r_s1,
)
from .rmatrix import catalog_standard_hecke, dump_rmatrix, load_rmatrix, validate
from .scalar import ONE, ZERO, parse_scalar
from .tensor import QMatrix, rank_exact


def _load_r(source: str) -> QMatrix:
    if source.startswith("catalog:"):
        return catalog_standard_hecke(int(source.split(":", 1)[1]))
    return load_rmatrix(source)


def _profile(args):
    profile = validate(_load_r(args.rmatrix), getattr(args, "kmax", 6))
    if not profile.valid:
        failed = [k for k, v in profile.flags.items() if not v]
        raise SystemExit(f"R-matrix rejected: failed {', '.join(failed)}")
    profile.require()
    return profile


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=1)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_validate(args) -> int:
    profile = validate(_load_r(args.rmatrix), args.kmax)
    _emit(profile.report(), args.out)
    return 0 if profile.valid and all(profile.flags.values()) else 1


def cmd_decompose(args) -> int:
    profile = _profile(args)
    n, k = profile.n, args.k
    rows, total = [], 0
    for shape in partitions_of(k):
        for idx, t in enumerate(standard_tableaux(shape)):
            rank = rank_exact(young_projector(profile, t))
            rows.append({"shape": str(shape), "tableau": t.to_json(), "index": idx, "rank": rank})
        rank0 = rank_exact(young_projector(profile, standard_tableaux(shape)[0]))
        total += hook_count(shape) * rank0
    summary = {"n": n, "k": k, "tableaux": rows, "sum_dim_times_rank": total,
               "expected": n ** k, "ok": total == n ** k}
    _emit(summary, args.out)
    return 0 if summary["ok"] else 1


def _build(profile, kind: str, k: int, shape: str | None, index: int, alpha=ONE) -> RepFamily:
    if kind == "B":
        rep = tensor_power_b(profile, k)
        project = project_b
    else:
        rep = r_type_rep(profile, k, alpha)
        project = project_r
    if shape:
        part = Partition.parse(shape)
        tabs = standard_tableaux(part)
        if not 0 <= index < len(tabs):
            raise SystemExit(f"tableau index {index} out of range for {part} ({len(tabs)} tableaux)")
        rep = project(rep, tabs[index], profile)
    return rep


def cmd_build(args) -> int:
    profile = _profile(args)
    rep = _build(profile, args.type, args.k, args.shape, args.tableau,
                 parse_scalar(args.alpha) if args.alpha else ONE)
    if args.renorm:
        if rep.flavor == "REA":
            rep = to_mrea(rep)
        rep = renormalize(rep, parse_scalar(args.renorm))
    if args.sl:
        rep = sl_reduce_r(rep, profile) if rep.flavor == "REA" else sl_reduce(rep, profile)
    report = check_relations(rep, profile)
    obj = rep.to_json()
    obj["meta"]["rmatrix"] = dump_rmatrix(profile.R)
    obj["verification"] = report.to_json()
    _emit(obj, args.out)
    for line in report.lines():
        print(line, file=sys.stderr)
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    obj = json.loads(Path(args.rep).read_text())
    rep = RepFamily.from_json(obj)
    rmat = obj.get("meta", {}).get("rmatrix")
    if args.rmatrix:
        r = _load_r(args.rmatrix)
    elif rmat:
        r = QMatrix([[parse_scalar(s) for s in row] for row in rmat["entries"]],
                    (rmat["n"], rmat["n"]), (rmat["n"], rmat["n"]))
    else:
        raise SystemExit("the representation file carries no R-matrix; pass --rmatrix")
    profile = validate(r)
    report = check_relations(rep, profile)
    result = report.to_json()
    if rep.projector is not None and rep.module_dim and rep.module_dim <= 16:
        result["commutant_dimension"] = commutant_dimension(rep)
    _emit(result, args.out)
    return 0 if report.ok else 1


def _closed_form(kind: str, sl: bool, shape: Partition, m: int, p: int):
    k = shape.weight
    if shape.is_row():
        tag = "row"
    elif shape.is_column():
        tag = "col"
    else:
        tag = None
    if sl:
        if tag is not None:
            return sl_char_b(k, m, p, tag) if kind == "B" else sl_zeta_r(k, m, p, tag)
        return ZERO if m == 1 else None
    if tag == "row":
        return char_b_row(k, m, p) if kind == "B" else char_r(k, m, p, "row")
    if tag == "col":
        return char_b_col(k, m, p) if kind == "B" else char_r(k, m, p, "col")
    if m == 1:
        return char_b_s1(shape, p) if kind == "B" else zeta_r_s1(shape, p)
    return None


def character_table(profile, kind: str, k: int, m_max: int, sl: bool = False) -> list[dict]:
    p = profile.p
    rows = []
    for shape in partitions_of(k):
        t = standard_tableaux(shape)[0]
        if young_projector(profile, t).is_zero():
            continue
        rep = _build(profile, kind, k, str(shape), 0)
        if sl:
            rep = sl_reduce_r(rep, profile) if rep.flavor == "REA" else sl_reduce(rep, profile)
        for m in range(1, m_max + 1):
            oracle = central_spectrum(rep, m, profile)
            closed = _closed_form(kind, sl, shape, m, p)
            match = None if closed is None else (oracle is not None and oracle == closed)
            rows.append({
                "shape": str(shape), "m": m,
                "closed_form": None if closed is None else str(closed),
                "oracle": None if oracle is None else str(oracle),
                "match": match,
            })
    return rows


def cmd_characters(args) -> int:
    profile = _profile(args)
    rows = character_table(profile, args.type, args.k, args.m, args.sl)
    _emit({"type": args.type, "k": args.k, "sl": args.sl, "rows": rows}, args.json)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["shape", "m", "closed_form", "oracle", "match"])
    writer.writeheader()
    writer.writerows(rows)
    if args.csv:
        Path(args.csv).write_text(buf.getvalue())
    elif args.json:
        print(buf.getvalue(), end="")
    failed = any(r["match"] is False or r["oracle"] is None for r in rows)
    return 1 if failed else 0


def cmd_equivalence(args) -> int:
    profile = _profile(args)
    report = check_b_r_equivalence(profile)
    _emit({"p": report.p, "ok": report.ok, "checks": report.checks}, args.out)
    return 0 if report.ok else 1


def cmd_indecomposable(args) -> int:
    x, y, z = (parse_scalar(s) for s in (args.x, args.y, args.z))
    an = indecomposable_example(x, y, z)
    result = {
        "matrices": {name: [[str(v) for v in row] for row in mat.rows] for name, mat in an.matrices.items()},
        "relation_holds": an.relation_holds,
        "e1_spans_submodule": an.submodule_e1,
        "invariant_complement": None if an.complement is None else [str(v) for v in an.complement],
        "decomposable": an.decomposable,
    }
    _emit(result, args.out)
    return 0 if an.relation_holds and an.submodule_e1 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rearep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_r(p, need_k=False):
        p.add_argument("--rmatrix", required=True, help="JSON file or catalog:N")
        p.add_argument("--kmax", type=int, default=6)
        if need_k:
            p.add_argument("--k", type=int, required=True)
        return p

    p = with_r(sub.add_parser("validate", help="validate an R-matrix and print its profile"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_validate)

    p = with_r(sub.add_parser("decompose", help="projector ranks and dimension bookkeeping"), True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = with_r(sub.add_parser("build", help="build a representation"), True)
    p.add_argument("--type", choices=["B", "R"], required=True)
    p.add_argument("--shape")
    p.add_argument("--tableau", type=int, default=0)
    p.add_argument("--sl", action="store_true")
    p.add_argument("--renorm")
    p.add_argument("--alpha")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check the defining relation for a stored representation")
    p.add_argument("--rep", required=True)
    p.add_argument("--rmatrix")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = with_r(sub.add_parser("characters", help="closed-form vs brute-force central characters"), True)
    p.add_argument("--type", choices=["B", "R"], required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--sl", action="store_true")
    p.add_argument("--json")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_characters)

    p = with_r(sub.add_parser("equivalence", help="compare B-type and R-type fundamental modules"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_equivalence)

    p = sub.add_parser("indecomposable", help="the two-dimensional module without complement")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_indecomposable)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)
