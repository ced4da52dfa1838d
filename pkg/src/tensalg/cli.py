"""Command line front end.

Every command prints optional human-readable tables followed by a JSON
result block on stdout; ``--quiet`` keeps only the JSON.  The exit code is
zero exactly when no check failed.  ``--out`` writes constructed objects as
a workspace document that reloads to the same object; for commands that do
not construct anything it writes the result block instead.
"""

from __future__ import annotations

import argparse
import importlib.resources
import json
import os
import sys

from .adjunctions import mu_table
from .errors import ParseError, TensalgError
from .fsemilattice import construct_FJ
from .functors import hom_frame, tensor
from .generators import (laws_suite, naturality_suite, nuclei_suite,
                         triangles_suite)
from .reference_example import (EXPECTED_HOMS, EXPECTED_MU, EXPECTED_R,
                                HOM_NAMES, build, verify)
from .vmodule import enumerate_module_homs
from .workspace import Workspace, document, load, loads, save

FJ_PRINT_LIMIT = 64


def _fmt_table(headers: list[str], rows: list[list[str]]) -> str:
    cells = [headers] + rows
    widths = [max(len(str(line[c])) for line in cells)
              for c in range(len(headers))]
    out = []
    for line in cells:
        out.append("  ".join(str(v).ljust(w)
                             for v, w in zip(line, widths)).rstrip())
    return "\n".join(out)


def _show(args, text: str):
    if not args.quiet:
        print(text)


def _emit(args, block: dict, outdoc: dict | None = None):
    print(json.dumps(block, indent=2, ensure_ascii=False))
    if args.out:
        save(args.out, outdoc if outdoc is not None else block)


def _load_ws(args) -> Workspace:
    if not args.workspace:
        raise ParseError("this command needs --workspace FILE")
    return load(args.workspace, cap=args.max_carrier)


# commands ---------------------------------------------------------------------

def cmd_validate(args) -> int:
    ws = _load_ws(args)
    rows = []
    for kind, table in (("quantale", ws.quantales), ("module", ws.modules),
                        ("frame", ws.frames),
                        ("fsemilattice", ws.fsemilattices)):
        for name, obj in table.items():
            size = obj.n if hasattr(obj, "n") else obj.module.n
            rows.append([kind, name, str(size)])
    _show(args, _fmt_table(["kind", "name", "size"], rows))
    block = {
        "command": "validate",
        "workspace": args.workspace,
        "quantales": list(ws.quantales),
        "modules": list(ws.modules),
        "frames": list(ws.frames),
        "fsemilattices": list(ws.fsemilattices),
        "failed": 0,
    }
    _emit(args, block)
    return 0


def cmd_homs(args) -> int:
    ws = _load_ws(args)
    src = ws.module(args.source)
    dst = ws.module(args.target)
    homs = enumerate_module_homs(src, dst)
    tables = [[dst.labels[v] for v in h.values] for h in homs]
    rows = [[f"h{i}", *tab] for i, tab in enumerate(tables)]
    _show(args, _fmt_table(["hom", *src.labels], rows))
    block = {
        "command": "homs",
        "from": args.source,
        "to": args.target,
        "count": len(homs),
        "homs": tables,
        "failed": 0,
    }
    _emit(args, block)
    return 0


def cmd_hom_frame(args) -> int:
    ws = _load_ws(args)
    fsl = ws.fsemilattice(args.fsl)
    mod = ws.module(args.module)
    hf = hom_frame(fsl, mod)
    vlabels = hf.frame.quantale.labels
    tables = [[mod.labels[v] for v in h.values] for h in hf.homs]
    rows = [[hf.frame.points[i], *tab] for i, tab in enumerate(tables)]
    _show(args, _fmt_table(["point", *fsl.module.labels], rows))
    r_rows = [[hf.frame.points[i],
               *(vlabels[v] for v in hf.frame.r[i])]
              for i in range(hf.n)]
    _show(args, "\n" + _fmt_table(["r", *hf.frame.points], r_rows))
    block = {
        "command": "hom-frame",
        "fsl": args.fsl,
        "module": args.module,
        "frame": hf.frame.name,
        "points": hf.n,
        "homs": tables,
        "r": [[vlabels[v] for v in row] for row in hf.frame.r],
        "failed": 0,
    }
    _emit(args, block,
          outdoc=document(quantales=[hf.frame.quantale], frames=[hf.frame]))
    return 0


def cmd_tensor(args) -> int:
    ws = _load_ws(args)
    frame = ws.frame(args.frame)
    fsl = ws.fsemilattice(args.fsl)
    tm = tensor(frame, fsl)
    _show(args, f"{tm.quotient.name}: {tm.quotient.n} classes "
                f"(from {tm.power.n} tuples)")
    _show(args, _fmt_table(["class"], [[lab] for lab in tm.quotient.labels]))
    block = {
        "command": "tensor",
        "frame": args.frame,
        "fsl": args.fsl,
        "module": tm.quotient.name,
        "classes": tm.quotient.n,
        "tuples": tm.power.n,
        "elements": list(tm.quotient.labels),
        "failed": 0,
    }
    _emit(args, block,
          outdoc=document(quantales=[tm.quotient.quantale],
                          modules=[tm.quotient]))
    return 0


def cmd_fj(args) -> int:
    ws = _load_ws(args)
    mod = ws.module(args.module)
    frame = ws.frame(args.frame)
    fsl = construct_FJ(mod, frame)
    power = fsl.module
    shown = min(power.n, FJ_PRINT_LIMIT)
    rows = [[power.labels[x], power.labels[fsl.F[x]]] for x in range(shown)]
    _show(args, _fmt_table(["x", "F(x)"], rows))
    if shown < power.n:
        _show(args, f"... {power.n - shown} more rows")
    block = {
        "command": "fj",
        "module": args.module,
        "frame": args.frame,
        "fsl": fsl.name,
        "size": power.n,
        "failed": 0,
    }
    if power.n <= 1024:
        block["F"] = [power.labels[v] for v in fsl.F]
    else:
        block["truncated"] = True
    _emit(args, block,
          outdoc=document(quantales=[mod.quantale], modules=[power],
                          fsemilattices=[fsl]))
    return 0


def cmd_check(args) -> int:
    suite = args.suite
    seed = args.seed
    count = args.count
    reports = {}
    if suite in ("laws", "all"):
        reports["laws"] = laws_suite(count or 50, seed)
    if suite in ("nuclei", "all"):
        reports["nuclei"] = nuclei_suite(count or 100, seed)
    if suite in ("adjunctions", "all"):
        reports["triangles"] = triangles_suite(count or 100, seed)
        reports["naturality"] = naturality_suite(count or 60, seed)
    counts = {}
    failures = []
    for name, report in reports.items():
        total, failed = report.counts()
        counts[name] = {"checks": total, "failed": failed}
        failures.extend(report.failures)
        _show(args, f"{name}: {total} checks, {failed} failed")
    if not args.quiet:
        for c in failures[:100]:
            print(c.line())
    block = {
        "command": "check",
        "suite": suite,
        "seed": seed,
        "counts": counts,
        "failures": [{"name": c.name, "instance": c.instance,
                      "witness": repr(c.witness)} for c in failures[:100]],
        "failed": len(failures),
    }
    _emit(args, block)
    return 0 if not failures else 1


def _shipped_workspace_text() -> str:
    res = importlib.resources.files("tensalg").joinpath(
        "data/paper_example.json")
    return res.read_text(encoding="utf-8")


def cmd_paper_example(args) -> int:
    ex = build()
    checks = verify(ex)

    # The shipped workspace file must reproduce the same frame.
    ws = loads(_shipped_workspace_text())
    hf2 = hom_frame(ws.fsemilattice("H"), ws.module("L"))
    file_ok = (
        tuple(h.values for h in hf2.homs) == EXPECTED_HOMS
        and tuple(tuple(row) for row in hf2.frame.r) == EXPECTED_R
        and mu_table(hf2) == EXPECTED_MU
    )
    checks = checks + [("shipped-workspace", file_ok)]

    mod = ex.module
    tgt = ex.target
    vlabels = ex.quantale.labels
    hom_tables = [[tgt.labels[v] for v in h.values] for h in ex.hf.homs]
    _show(args, _fmt_table(["hom", *mod.labels],
                           [[HOM_NAMES[i], *tab]
                            for i, tab in enumerate(hom_tables)]))
    r_rows = [[HOM_NAMES[i], *(vlabels[v] for v in ex.hf.frame.r[i])]
              for i in range(ex.hf.n)]
    _show(args, "\n" + _fmt_table(["r", *HOM_NAMES], r_rows))
    mu_rows = [[mod.labels[a], *(tgt.labels[v] for v in ex.mu_rows[a])]
               for a in range(mod.n)]
    _show(args, "\n" + _fmt_table(["mu", *HOM_NAMES], mu_rows))

    def yn(flag: bool) -> str:
        return "yes" if flag else "no"

    _show(args, f"\nlax: {yn(ex.lax)}, injective: {yn(ex.injective)}")

    failed = [name for name, ok in checks if not ok]
    block = {
        "command": "paper-example",
        "homs": {HOM_NAMES[i]: tab for i, tab in enumerate(hom_tables)},
        "r": [[vlabels[v] for v in row] for row in ex.hf.frame.r],
        "mu": [[tgt.labels[v] for v in row] for row in ex.mu_rows],
        "lax": ex.lax,
        "strict": ex.strict,
        "injective": ex.injective,
        "checks": {name: ok for name, ok in checks},
        "failed": len(failed),
    }
    _emit(args, block)
    return 0 if not failed else 1


# parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workspace", metavar="FILE",
                        help="workspace JSON file to load")
    common.add_argument("--seed", type=int, default=0,
                        help="RNG seed for generated suites")
    common.add_argument("--count", type=int, default=None,
                        help="instances per generated suite")
    common.add_argument("--max-carrier", type=int, default=None,
                        help="override the base carrier size cap")
    common.add_argument("--out", metavar="FILE",
                        help="also write the result to FILE")
    common.add_argument("--quiet", action="store_true",
                        help="suppress human tables, keep the JSON block")

    parser = argparse.ArgumentParser(
        prog="tensalg",
        description="finite quantale modules, tense operators and their "
                    "three adjunctions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="load a workspace and validate every object")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("homs", parents=[common],
                       help="enumerate module homomorphisms")
    p.add_argument("source", metavar="FROM")
    p.add_argument("target", metavar="TO")
    p.set_defaults(func=cmd_homs)

    p = sub.add_parser("hom-frame", parents=[common],
                       help="build the frame of operator-module homs")
    p.add_argument("fsl", metavar="FSL")
    p.add_argument("module", metavar="MODULE")
    p.set_defaults(func=cmd_hom_frame)

    p = sub.add_parser("tensor", parents=[common],
                       help="tensor a frame with an operator module")
    p.add_argument("frame", metavar="FRAME")
    p.add_argument("fsl", metavar="FSL")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("fj", parents=[common],
                       help="build the power operator module along a frame")
    p.add_argument("module", metavar="MODULE")
    p.add_argument("frame", metavar="FRAME")
    p.set_defaults(func=cmd_fj)

    p = sub.add_parser("check", parents=[common],
                       help="run generated verification suites")
    p.add_argument("--suite", choices=("laws", "adjunctions", "nuclei", "all"),
                   default="all")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("paper-example", parents=[common],
                       help="reproduce the worked three-hom example")
    p.set_defaults(func=cmd_paper_example)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_carrier is not None:
        os.environ["TENSALG_MAX_CARRIER"] = str(args.max_carrier)
    try:
        return args.func(args)
    except TensalgError as e:
        print(f"error: {e}", file=sys.stderr)
        block = {"command": args.command, "error": type(e).__name__,
                 "message": str(e), "failed": 1}
        if e.witness is not None:
            block["witness"] = repr(e.witness)
        print(json.dumps(block, indent=2, ensure_ascii=False))
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
