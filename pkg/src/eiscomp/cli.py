"""Command-line front end: `eiscomp <command> [options]`."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .euler import euler_characteristic, format_over_576, table1, table1_zero_rows
from .faces import all_faces_table, face_cohomology, render_table, table_records
from .ghost import ProofError, pgh_scan, potentially_ghost, prove_ghost
from .levi import Branch, RegistryError, load_registry
from .spectral import (
    Constraint, Contradiction, UndeterminedDifferential, boundary_cohomology,
    page_records, render_page, standard_constraints,
)
from .weyl import all_words, dot_action, face_name, is_dominant, kostant_reps, parse_face

EXIT_OK, EXIT_USAGE, EXIT_CONTRADICTION = 0, 2, 3


class UsageError(Exception):
    pass


def _weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.strip("()").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed weight {text!r}; expected e.g. 1,1,0") from None


def _constraint(text: str) -> Constraint:
    try:
        deg, dim = (int(x) for x in text.split("="))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed constraint {text!r}; expected DEG=DIM") from None
    return Constraint(deg, dim, "command line")


def _fmt_wt(t: Sequence[int]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _resolve(args, sizes=(3, 4)) -> tuple[int, tuple[int, ...]]:
    weight = args.weight
    n = args.n if args.n is not None else (len(weight) if weight else None)
    if n is None:
        raise UsageError("--n or --weight is required")
    if weight is None:
        weight = (0,) * n
    if n not in sizes:
        raise UsageError(f"GL_{n} is not supported here (choose n in {sorted(sizes)})")
    if len(weight) != n:
        raise UsageError(f"weight {_fmt_wt(weight)} has {len(weight)} entries, expected {n}")
    if not is_dominant(weight):
        raise UsageError(f"weight {_fmt_wt(weight)} is not dominant")
    return n, weight


# ---------------------------------------------------------------------------
# commands; each returns (text, structured data, exit status)


def cmd_kostant(args):
    n, weight = _resolve(args, sizes=(1, 2, 3, 4))
    if args.face:
        face = _face(args.face, n)
        data = [{"w": str(d.w), "length": d.length, "weight": list(d.weight),
                 "levi": [list(b) for b in d.levi_weight]} for d in kostant_reps(face, weight)]
    else:
        data = [{"w": str(w), "length": w.length, "weight": list(dot_action(w, weight))}
                for w in all_words(n)]
    cells = [["w", "l", "w.lambda"] + (["levi"] if args.face else [])]
    for r in data:
        row = [r["w"], str(r["length"]), _fmt_wt(r["weight"])]
        if "levi" in r:
            row.append(" x ".join(_fmt_wt(b) for b in r["levi"]))
        cells.append(row)
    widths = [max(len(c[i]) for c in cells) for i in range(len(cells[0]))]
    lines = ["  ".join(x.ljust(w) for x, w in zip(c, widths)).rstrip() for c in cells]
    return "\n".join(lines), data, EXIT_OK


def _face(name: str, n: int):
    try:
        return parse_face(name, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_faces(args):
    n, weight = _resolve(args)
    if args.face:
        face = _face(args.face, n)
        coh = face_cohomology(n, weight, face, args.branch)
        data = [{"face": face_name(face), "degree": q, "w": str(fc.origin),
                 "labels": [fc.label.symbol], "torus": None if fc.torus is None else list(fc.torus)}
                for q, classes in coh.items() for fc in classes]
        lines = [f"H^{q}({face_name(face)}) = " + " + ".join(str(x) for x in classes)
                 for q, classes in coh.items()]
        return "\n".join(lines) or f"H^*({face_name(face)}) = 0", data, EXIT_OK
    rows = all_faces_table(n, weight, args.branch)
    return render_table(n, rows), table_records(n, weight, rows), EXIT_OK


def cmd_euler(args):
    n, weight = _resolve(args, sizes=(1, 2, 3, 4))
    chi = euler_characteristic(n, weight)
    return str(chi), {"n": n, "weight": list(weight), "chi": str(chi)}, EXIT_OK


def cmd_table1(args):
    rows = table1()
    data = {
        "rows": [{"charpoly": str(r.charpoly), "centralizer": r.centralizer, "det": r.det,
                  "chi": str(r.chi), "res": r.res, "product": str(r.product)} for r in rows],
        "zero_rows": [{"charpoly": str(f), "reason": why} for f, why in table1_zero_rows()],
        "sum_det_plus": str(sum(r.product for r in rows if r.det == 1)),
        "sum_det_minus": str(sum(r.product for r in rows if r.det == -1)),
    }
    head = ("f_A", "C(A)", "det", "chi(C(A))", "R(f)", "chi*R")
    body = [(r.charpoly, r.centralizer, r.det, format_over_576(r.chi), r.res, format_over_576(r.product))
            for r in rows]
    cells = [tuple(map(str, head))] + [tuple(map(str, b)) for b in body]
    widths = [max(len(c[i]) for c in cells) for i in range(len(head))]
    lines = ["  ".join(x.ljust(w) for x, w in zip(c, widths)).rstrip() for c in cells]
    lines.insert(1, "-" * len(lines[0]))
    lines.append(f"sum over det = +1: {data['sum_det_plus']}")
    lines.append(f"sum over det = -1: {data['sum_det_minus']}")
    lines.append("chi_h(GL_4(Z), Q) = sum of both; chi_h(GL_4(Z), det) = difference")
    lines.append("rows with vanishing chi(C(A)):")
    lines.extend(f"  {z['reason']}" for z in data["zero_rows"])
    return "\n".join(lines), data, EXIT_OK


def cmd_boundary(args):
    n, weight = _resolve(args)
    constraints = standard_constraints(n, weight) + list(args.constraint or [])
    branch = Branch.parse(args.branch)
    try:
        res = boundary_cohomology(n, weight, branch, constraints)
    except UndeterminedDifferential as exc:
        msg = f"{exc} (try --branch and --constraint DEG=DIM)"
        return msg, {"error": msg}, EXIT_CONTRADICTION
    cons = [{"degree": c.degree, "dim": c.dim, "citation": c.citation} for c in constraints]
    if isinstance(res, Contradiction):
        text = "\n".join([render_page("E2", res.e2), res.message])
        data = {"pages": page_records("E2", res.e2), "constraints": cons,
                "contradiction": {"degree": res.constraint.degree, "citation": res.constraint.citation,
                                  "survivors": [{"p": p, "q": q, "label": str(e)}
                                                for (p, q), e in res.survivors]}}
        # the no-ghost branch is expected to fail; anything else is a real inconsistency
        return text, data, EXIT_OK if branch is Branch.NO_GHOST else EXIT_CONTRADICTION
    pages = page_records("E1", res.e1) + page_records("E2", res.e2) + page_records("E3", res.e3)
    coh = {str(k): [str(e) for _, e in v] for k, v in res.by_degree().items()}
    lines = [render_page("E1", res.e1), render_page("E2", res.e2)]
    for (src, tgt, torus), r in res.d2_ranks.items():
        lines.append(f"d2: E2^{src[0]},{src[1]} -> E2^{tgt[0]},{tgt[1]} on {_fmt_wt(torus)}: rank {r}")
    lines.extend(f"H^{k}_boundary = " + " + ".join(v) for k, v in coh.items())
    for k, parts in res.extensions().items():
        lines.append(f"extension in degree {k}: 0 -> {parts[0]} -> H^{k} -> {' + '.join(parts[1:])} -> 0")
    data = {"pages": pages, "constraints": cons, "cohomology": coh,
            "extensions": {str(k): v for k, v in res.extensions().items()}}
    return "\n".join(lines), data, EXIT_OK


def cmd_pgh(args):
    n, weight = _resolve(args, sizes=(3,))
    pgh = potentially_ghost(weight)
    data = {str(q): [l.symbol for l in v] for q, v in pgh.items()}
    lines = [f"pGh^{q} = " + (" + ".join(v) if v else "0") for q, v in data.items()]
    return "\n".join(lines), data, EXIT_OK


def cmd_pgh_scan(args):
    rows = pgh_scan(args.weights, count=args.count)
    data = [{"weight": list(r.weight), "family": r.family, "dim": r.dim2,
             "labels": [l.symbol for l in r.pgh2]} for r in rows]
    lines = [f"{_fmt_wt(r['weight']):<12} {r['family']:<12} dim pGh^2 = {r['dim']}  "
             + (" + ".join(r["labels"]) or "0") for r in data]
    return "\n".join(lines), data, EXIT_OK


def cmd_ghost_prove(args):
    try:
        t = prove_ghost(load_registry())
    except ProofError as exc:
        return str(exc), {"error": str(exc), "step": exc.step}, EXIT_CONTRADICTION
    return t.render(), {"steps": t.records(), "conclusion": t.conclusion}, EXIT_OK


COMMANDS = {
    "kostant": (cmd_kostant, "Weyl group table w, l(w), w.lambda (Kostant representatives with --face)"),
    "faces": (cmd_faces, "cohomology of one boundary face, or the table over all faces"),
    "euler": (cmd_euler, "homological Euler characteristic of GL_n(Z) with coefficients V_lambda"),
    "table1": (cmd_table1, "torsion classes of GL_4(Z) contributing to the Euler characteristic"),
    "boundary": (cmd_boundary, "spectral sequence pages and boundary cohomology"),
    "pgh": (cmd_pgh, "potentially ghost classes of GL_3(Z)"),
    "ghost-prove": (cmd_ghost_prove, "replay the deduction of H^3(GL_4(Z), det)"),
    "pgh-scan": (cmd_pgh_scan, "potentially ghost classes along odd symmetric power families"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eiscomp", description="Eisenstein and ghost class computations.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("--format", choices=("text", "struct"), default="text")
        if name in ("table1", "ghost-prove"):
            continue
        if name == "pgh-scan":
            p.add_argument("--count", type=int, default=4, help="members of each family")
            p.add_argument("--weight", dest="weights", type=_weight, action="append",
                           help="scan these weights instead (repeatable)")
            continue
        p.add_argument("--n", type=int)
        p.add_argument("--weight", type=_weight)
        if name in ("kostant", "faces"):
            p.add_argument("--face", help='alias such as "P_12" or "B", or block sizes "2,1,1"')
        if name in ("faces", "boundary"):
            p.add_argument("--branch", choices=[b.value for b in Branch], default=Branch.UNDETERMINED.value)
        if name == "boundary":
            p.add_argument("--constraint", type=_constraint, action="append",
                           help="extra boundary dimension constraint DEG=DIM (repeatable)")
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = COMMANDS[args.command][0]
    try:
        text, data, status = handler(args)
    except UsageError as exc:
        print(f"eiscomp {args.command}: error: {exc}", file=err)
        return EXIT_USAGE
    except RegistryError as exc:
        print(f"eiscomp {args.command}: registry: {exc}", file=err)
        return EXIT_CONTRADICTION
    if args.format == "struct":
        print(json.dumps(data, sort_keys=True, indent=2), file=out)
    else:
        print(text, file=out)
    return status


def main() -> None:
    sys.exit(run())
