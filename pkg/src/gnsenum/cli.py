"""Command line front end: count, enumerate and verify subcommands.

Results go to stdout (or --output); diagnostics go to stderr.  Exit codes:
0 success, 1 verification mismatch, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import bruteforce, counting
from .canonical import _profile
from .core import get_order
from .trees import TreeKind, _format_gapset, traverse


@dataclass
class RunConfig:
    """Validated invocation parameters for one command."""

    command: str
    dim: int = 0
    order_name: str = "lex"
    mode: str = "representatives"
    tree: str = "frontier"
    genus: Optional[int] = None
    gmax: Optional[int] = None
    threads: int = 1
    fmt: str = "text"
    output: Optional[str] = None
    checkpoint: Optional[str] = None


_MODE_TO_VARIANT = {"all": "full", "representatives": "representative",
                    "equivariant": "equivariant"}


def _add_tree_args(sp):
    sp.add_argument("--dim", type=int, required=True, metavar="D",
                    help="ambient dimension")
    sp.add_argument("--order", choices=["lex", "glex", "order1"],
                    default="lex", help="total order driving the walk")
    sp.add_argument("--mode", choices=["all", "representatives", "equivariant"],
                    default="representatives",
                    help="count everything, one per orbit, or symmetric only")
    sp.add_argument("--tree", choices=["frontier", "fixed-genus"],
                    default="frontier",
                    help="genus-by-genus frontier walk or the single-genus tree")
    sp.add_argument("--threads", type=int, default=1, metavar="N",
                    help="worker processes for level expansion")
    sp.add_argument("--format", choices=["text", "json", "csv"],
                    default="text", dest="fmt")
    sp.add_argument("--output", metavar="PATH",
                    help="write results here instead of stdout")
    sp.add_argument("--checkpoint", metavar="PATH",
                    help="level-boundary resume file")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gnsenum",
        description="Enumerate finite-complement submonoids of N^d "
                    "up to coordinate permutation.")
    sub = p.add_subparsers(dest="command", metavar="{count,enumerate,verify}")
    sub.required = True

    pc = sub.add_parser("count", help="tabulate counts per genus")
    _add_tree_args(pc)
    pc.add_argument("--gmax", type=int, metavar="G",
                    help="largest genus for the frontier walk")
    pc.add_argument("--genus", type=int, metavar="G",
                    help="target genus for the fixed-genus tree")

    pe = sub.add_parser("enumerate", help="list gap sets at one genus")
    _add_tree_args(pe)
    pe.add_argument("--genus", type=int, required=True, metavar="G")

    pv = sub.add_parser("verify",
                        help="check computed counts against recorded ones")
    pv.add_argument("--cells", action="append", default=[],
                    metavar="KIND:DIM:RANGE",
                    help="table cells, e.g. N:2:1..8 (N per orbit, n all)")
    pv.add_argument("--identity", action="store_true",
                    help="check the span-sum identity at --g, --dim")
    pv.add_argument("--stabilization", action="store_true",
                    help="check dimension stabilization at --g up to --dmax")
    pv.add_argument("--g", type=int, metavar="G")
    pv.add_argument("--dim", type=int, metavar="D")
    pv.add_argument("--dmax", type=int, metavar="D")
    pv.add_argument("--order", choices=["lex", "glex", "order1"], default="lex")
    pv.add_argument("--threads", type=int, default=1, metavar="N")
    pv.add_argument("--format", choices=["text", "json"], default="text",
                    dest="fmt")
    pv.add_argument("--output", metavar="PATH")

    # debugging helper, deliberately absent from the advertised commands
    po = sub.add_parser("oracle")
    po.add_argument("--dim", type=int, required=True)
    po.add_argument("--genus", type=int, required=True)
    po.add_argument("--representatives", action="store_true")
    po.add_argument("--order", choices=["lex", "glex", "order1"], default="lex")
    po.add_argument("--format", choices=["text", "json"], default="text",
                    dest="fmt")
    po.add_argument("--output", metavar="PATH")
    return p


def _tree_config(parser, args) -> RunConfig:
    cfg = RunConfig(command=args.command, dim=args.dim, order_name=args.order,
                    mode=args.mode, tree=args.tree, threads=args.threads,
                    fmt=args.fmt, output=args.output,
                    checkpoint=args.checkpoint,
                    genus=getattr(args, "genus", None),
                    gmax=getattr(args, "gmax", None))
    if not 1 <= cfg.dim <= 8:
        parser.error("--dim must be in 1..8")
    if cfg.threads < 1:
        parser.error("--threads must be at least 1")
    if cfg.tree == "fixed-genus":
        if cfg.order_name == "glex":
            parser.error("--tree fixed-genus cannot run under glex: the "
                         "construction is only valid for lex and order1")
        if cfg.mode != "representatives":
            parser.error("--tree fixed-genus implies --mode representatives")
        if cfg.genus is None:
            parser.error("--tree fixed-genus needs --genus")
        if cfg.genus < 0:
            parser.error("--genus must be nonnegative")
    else:
        if cfg.command == "count":
            if cfg.gmax is None:
                parser.error("count needs --gmax (or --tree fixed-genus with --genus)")
            if cfg.gmax < 0:
                parser.error("--gmax must be nonnegative")
        if cfg.command == "enumerate" and cfg.genus < 0:
            parser.error("--genus must be nonnegative")
    return cfg


def _tree_kind(cfg: RunConfig) -> TreeKind:
    order = get_order(cfg.order_name)
    if cfg.tree == "fixed-genus":
        return TreeKind("fixed-genus", order, genus_target=cfg.genus)
    return TreeKind(_MODE_TO_VARIANT[cfg.mode], order)


def _open_out(cfg):
    if cfg.output:
        return open(cfg.output, "w", encoding="utf-8")
    return None


def _emit(cfg, text):
    out = _open_out(cfg)
    if out is None:
        sys.stdout.write(text)
    else:
        with out:
            out.write(text)


def _run_mode(cfg) -> tuple:
    return ("parallel", cfg.threads) if cfg.threads > 1 else ("sequential", 1)


def _table_text(table) -> str:
    return "".join(f"{g},{c}\n" for g, c in sorted(table.rows.items()))


def _table_json(table, cfg) -> str:
    doc = {"d": table.d, "order": table.order, "mode": cfg.mode,
           "rows": [{"g": g, "count": c} for g, c in sorted(table.rows.items())]}
    return json.dumps(doc, indent=2) + "\n"


def _table_csv(table) -> str:
    import io

    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["g", "count"])
    for g, c in sorted(table.rows.items()):
        w.writerow([g, c])
    return buf.getvalue()


def cmd_count(cfg: RunConfig) -> int:
    kind = _tree_kind(cfg)
    mode, workers = _run_mode(cfg)
    table = counting.count(kind, cfg.dim, g_max=cfg.gmax, mode=mode,
                           workers=workers, checkpoint=cfg.checkpoint)
    if cfg.fmt == "json":
        _emit(cfg, _table_json(table, cfg))
    elif cfg.fmt == "csv":
        _emit(cfg, _table_csv(table))
    else:
        _emit(cfg, _table_text(table))
    return 0


def cmd_enumerate(cfg: RunConfig) -> int:
    kind = _tree_kind(cfg)
    order = kind.order
    mode, workers = _run_mode(cfg)
    target = cfg.genus
    hits = []

    def see(S, depth):
        if S.genus == target:
            hits.append(S)

    limit = None if kind.variant == "fixed-genus" else target
    traverse(kind, cfg.dim, limit, visitor=see, mode=mode, workers=workers,
             checkpoint=cfg.checkpoint)
    if mode == "parallel":
        hits.sort(key=lambda S: _profile(S.gaps, order.key))
    if cfg.fmt == "json":
        doc = {"d": cfg.dim, "order": order.name, "mode": cfg.mode,
               "genus": target,
               "semigroups": [[list(h) for h in sorted(S.gaps, key=order.key)]
                              for S in hits]}
        _emit(cfg, json.dumps(doc, indent=2) + "\n")
    elif cfg.fmt == "csv":
        import io

        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["gaps"])
        for S in hits:
            w.writerow([_format_gapset(S.gaps, order.key)])
        _emit(cfg, buf.getvalue())
    else:
        _emit(cfg, "".join(_format_gapset(S.gaps, order.key) + "\n" for S in hits))
    return 0


def _parse_cells(parser, spec: str):
    parts = spec.split(":")
    if len(parts) != 3:
        parser.error(f"bad --cells value {spec!r}, expected KIND:DIM:RANGE")
    kind_letter, dim_s, rng = parts
    if kind_letter not in ("n", "N"):
        parser.error(f"bad --cells kind {kind_letter!r}, use n or N")
    try:
        dim = int(dim_s)
    except ValueError:
        parser.error(f"bad --cells dimension {dim_s!r}")
    if ".." in rng:
        lo_s, hi_s = rng.split("..", 1)
    else:
        lo_s = hi_s = rng
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        parser.error(f"bad --cells range {rng!r}")
    if lo < 1 or hi < lo:
        parser.error(f"bad --cells range {rng!r}")
    mode = "representative" if kind_letter == "N" else "full"
    return kind_letter, mode, dim, lo, hi


def cmd_verify(parser, args) -> int:
    order = get_order(args.order)
    run_mode = "parallel" if args.threads > 1 else "sequential"
    workers = args.threads
    checks = []
    mismatch = False

    cells = [_parse_cells(parser, spec) for spec in args.cells]
    if not cells and not args.identity and not args.stabilization:
        parser.error("nothing to verify: give --cells, --identity or --stabilization")
    for letter, mode, dim, lo, hi in cells:
        for g in range(lo, hi + 1):
            if counting.reference_value(mode, dim, g) is None:
                parser.error(
                    f"no recorded count for {letter}_{{{g},{dim}}}")
        variant = "representative" if mode == "representative" else "full"
        table = counting.count(TreeKind(variant, order), dim, hi,
                               mode=run_mode, workers=workers)
        for g in range(lo, hi + 1):
            got = table.rows[g]
            want = counting.reference_value(mode, dim, g)
            ok = got == want
            mismatch = mismatch or not ok
            checks.append({"check": f"{letter}_{{{g},{dim}}}", "computed": got,
                           "reference": want, "ok": ok})
    if args.identity:
        if args.g is None or args.dim is None:
            parser.error("--identity needs --g and --dim")
        rep = counting.verify_sum_identity(args.g, args.dim)
        mismatch = mismatch or not rep["ok"]
        checks.append({"check": f"identity g={args.g} d={args.dim}",
                       "computed": rep["rhs"], "reference": rep["lhs"],
                       "terms": rep["terms"], "ok": rep["ok"]})
    if args.stabilization:
        if args.g is None or args.dmax is None:
            parser.error("--stabilization needs --g and --dmax")
        rep = counting.verify_stabilization(args.g, args.dmax)
        mismatch = mismatch or not rep["ok"]
        checks.append({"check": f"stabilization g={args.g} dmax={args.dmax}",
                       "values": {str(k): v for k, v in rep["values"].items()},
                       "ok": rep["ok"]})
    cfg = RunConfig(command="verify", fmt=args.fmt, output=args.output)
    if args.fmt == "json":
        _emit(cfg, json.dumps({"checks": checks, "ok": not mismatch},
                              indent=2) + "\n")
    else:
        lines = []
        for c in checks:
            if "computed" in c:
                body = f"{c['check']}={c['computed']}"
                tail = "ok" if c["ok"] else f"MISMATCH expected {c['reference']}"
            else:
                body = f"{c['check']} {c['values']}"
                tail = "ok" if c["ok"] else "MISMATCH"
            lines.append(f"{body} {tail}\n")
        _emit(cfg, "".join(lines))
    return 1 if mismatch else 0


def cmd_oracle(args) -> int:
    order = get_order(args.order)
    if args.representatives:
        sgs = bruteforce.brute_force_representatives(args.genus, args.dim, order)
    else:
        sgs = bruteforce.brute_force_all(args.genus, args.dim)
    lines = sorted(_format_gapset(S.gaps, order.key) for S in sgs)
    cfg = RunConfig(command="oracle", fmt=args.fmt, output=args.output)
    if args.fmt == "json":
        doc = {"d": args.dim, "genus": args.genus,
               "count": len(lines), "semigroups": lines}
        _emit(cfg, json.dumps(doc, indent=2) + "\n")
    else:
        _emit(cfg, "".join(line + "\n" for line in lines))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            return cmd_count(_tree_config(parser, args))
        if args.command == "enumerate":
            return cmd_enumerate(_tree_config(parser, args))
        if args.command == "verify":
            return cmd_verify(parser, args)
        if args.command == "oracle":
            return cmd_oracle(args)
    except counting.ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        return 0
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
