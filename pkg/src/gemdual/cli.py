"""Command-line interface.

Exit status: 0 success, 1 usage error, 2 invalid input, 3 cross-check
disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .c2c import is_closed_2cell, separating_features
from .conditions import conditions_predict_c2c, separation_graph
from .duality import PERM_NAMES, EdgeSubset, TwistSpec, jewel_from_gem, partial_dual, partial_petrie, trace_partial_dual, twist
from .gem import Gem, GemError, gem_from_rotation, rotation_from_gem, summary, validate_gem
from .io import (
    export_dot,
    format_rotation,
    gem_to_json,
    parse_gem,
    parse_rotation,
    separation_to_json,
    summary_to_json,
    trace_to_json,
)
from .rotation import RotationError, canonical_rotation
from .search import MODES, SearchCapError, find_c2c_duals

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _detect_format(path: str, fmt: str | None) -> str:
    if fmt:
        return fmt
    return "gemjson" if path.endswith(".json") else "rot"


def load(path: str, fmt: str | None = None, validate: bool = True) -> Gem:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    if _detect_format(path, fmt) == "gemjson":
        return parse_gem(text, validate=validate)
    return gem_from_rotation(parse_rotation(text))


def resolve_subset(g: Gem, edges: str | None, mask: str | None, default_all: bool = False) -> EdgeSubset:
    m = g.num_edges
    if edges is not None and mask is not None:
        raise UsageError("give either --edges or --mask, not both")
    if mask is not None:
        try:
            value = int(mask, 0)
        except ValueError:
            raise UsageError(f"bad bitmask {mask!r}") from None
        if not 0 <= value < (1 << m):
            raise UsageError(f"bitmask {mask} out of range for {m} edges")
        return EdgeSubset(value, m)
    if edges is None:
        return EdgeSubset.full(m) if default_all else EdgeSubset(0, m)
    names = {g.edge_name(e): e for e in range(m)}
    ids = []
    for tok in filter(None, (t.strip() for t in edges.split(","))):
        if tok in names:
            ids.append(names[tok])
        elif tok.isdigit() and int(tok) < m:
            ids.append(int(tok))
        else:
            raise UsageError(f"unknown edge {tok!r}")
    return EdgeSubset.from_edges(ids, m)


def _gem_output(g: Gem, as_json: bool) -> str:
    s = summary(g)
    if as_json:
        return _dumps({"gem": gem_to_json(g), "summary": summary_to_json(s)})
    return f"# {s.line()}\n" + format_rotation(canonical_rotation(rotation_from_gem(g)))


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# subcommands; each returns (exit status, output text)


def cmd_validate(args):
    g = load(args.input, args.format, validate=False)
    report = validate_gem(g)
    if args.json:
        out = _dumps({"ok": report.ok, "violations": [{"rule": r, "witness": w} for r, w in report.violations]})
    else:
        out = "ok\n" if report.ok else "".join(f"{r}: {w}\n" for r, w in report.violations)
    return (EXIT_OK if report.ok else EXIT_INVALID), out


def cmd_summary(args):
    s = summary(load(args.input, args.format))
    return EXIT_OK, (_dumps(summary_to_json(s)) if args.json else s.line() + "\n")


def cmd_dual(args):
    g = load(args.input, args.format)
    return EXIT_OK, _gem_output(partial_dual(g, resolve_subset(g, args.edges, args.mask, default_all=True)), args.json)


def cmd_petrie(args):
    g = load(args.input, args.format)
    return EXIT_OK, _gem_output(partial_petrie(g, resolve_subset(g, args.edges, args.mask, default_all=True)), args.json)


def cmd_twist(args):
    g = load(args.input, args.format)
    d = resolve_subset(g, args.edges, args.mask, default_all=True)
    t = TwistSpec.on_edges(g.num_edges, d, PERM_NAMES[args.perm])
    return EXIT_OK, _gem_output(twist(jewel_from_gem(g), t).gem, args.json)


def cmd_trace(args):
    g = load(args.input, args.format)
    tr = trace_partial_dual(g, resolve_subset(g, args.edges, args.mask))
    if args.json:
        return EXIT_OK, _dumps(trace_to_json(tr))
    lines = [f"k={tr.k} l={tr.l}"]
    for label, cycles in (("R", tr.r_cycles), ("B", tr.b_cycles)):
        for i, c in enumerate(cycles):
            lines.append(f"{label}{i} {c.kind}({c.index}) corners={list(c.corners)}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_check_c2c(args):
    g = load(args.input, args.format)
    h = partial_dual(g, resolve_subset(g, args.edges, args.mask))
    res = is_closed_2cell(h)
    if args.json:
        return EXIT_OK, _dumps(res.to_json())
    out = res.verdict.value
    if res.witness is not None:
        w = res.witness
        out += f" (vertex {w.vertex} and face {w.face} share {len(w.corners)} corners)"
    elif res.loop is not None:
        out += f" (loop {h.edge_name(res.loop)})"
    return EXIT_OK, out + "\n"


def cmd_obstructions(args):
    rep = separating_features(load(args.input, args.format))
    if args.json:
        return EXIT_OK, _dumps(rep.to_json())
    lines = [
        f"separating vertex/face pairs: {[(p.vertex, p.face) for p in rep.separating_pairs]}",
        f"separating loops: {list(rep.separating_loops)}",
        f"separating coloops: {list(rep.separating_coloops)}",
        f"blocks all partial duals: {'yes' if rep.blocks_all_partial_duals else 'no'}",
    ]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_conditions(args):
    g = load(args.input, args.format)
    d = resolve_subset(g, args.edges, args.mask)
    cv = conditions_predict_c2c(g, d)
    doc = cv.to_json()
    if args.explain:
        doc["separation_graph"] = separation_to_json(separation_graph(g, d))
    if args.json:
        return EXIT_OK, _dumps(doc)
    lines = [
        f"LC {'pass' if cv.lc.passed else 'fail'}",
        f"MC {'pass' if cv.mc.passed else 'fail'}",
        f"GC {'pass' if cv.gc.passed else 'fail'}",
        f"predicted closed 2-cell: {cv.predicted_c2c.value}",
    ]
    if args.explain:
        sep = separation_graph(g, d)
        for w in sep.petrie_walks:
            lines.append(f"{w.kind}-walk {list(w.corners)}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_search(args):
    g = load(args.input, args.format)
    try:
        rep = find_c2c_duals(g, args.mode, cap=args.cap, allow_large=args.allow_large, audit=args.audit, workers=args.workers)
    except SearchCapError as exc:
        raise UsageError(str(exc)) from None
    if args.csv:
        Path(args.csv).write_text(rep.to_csv(), encoding="utf-8")
    if args.json or args.out:
        out = _dumps(rep.to_json())
    else:
        out = (
            f"subsets={rep.total} closed_2cell={len(rep.c2c)} pruned={rep.pruned} "
            f"disagreements={len(rep.disagreements)}\n"
            + "".join(f"{m:#x}\n" for m in rep.c2c)
        )
    return (EXIT_DISAGREE if rep.disagreements else EXIT_OK), out


def cmd_convert(args):
    g = load(args.input, args.format)
    if args.to == "gemjson":
        return EXIT_OK, _dumps(gem_to_json(g))
    return EXIT_OK, format_rotation(canonical_rotation(rotation_from_gem(g)))


def cmd_export_dot(args):
    g = load(args.input, args.format)
    if args.separation:
        return EXIT_OK, export_dot(separation_graph(g, resolve_subset(g, args.edges, args.mask)))
    return EXIT_OK, export_dot(jewel_from_gem(g) if args.jewel else g)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gemdual", description="Partial duals of graph embeddings via gems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, subset=False):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("input", help="rotation file (.rot) or gem JSON (.json); '-' reads stdin")
        sp.add_argument("--format", choices=("rot", "gemjson"), help="override format detection")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--out", help="write output to this file")
        if subset:
            sp.add_argument("--edges", help="comma-separated edge names or ids")
            sp.add_argument("--mask", help="edge subset as an integer bitmask (0x.. accepted)")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check gem invariants")
    add("summary", cmd_summary, "V, E, F, Euler characteristic, orientability")
    add("dual", cmd_dual, "partial dual over --edges (default: all)", subset=True)
    add("petrie", cmd_petrie, "partial Petrie dual over --edges (default: all)", subset=True)
    tw = add("twist", cmd_twist, "apply a colour permutation on --edges (default: all)", subset=True)
    tw.add_argument("--perm", choices=sorted(PERM_NAMES), required=True)
    add("trace", cmd_trace, "vertex and face cycles of the partial dual", subset=True)
    add("check-c2c", cmd_check_c2c, "is the partial dual over --edges closed 2-cell", subset=True)
    add("obstructions", cmd_obstructions, "separating pairs, loops and coloops")
    cd = add("conditions", cmd_conditions, "evaluate LC, MC, GC for --edges", subset=True)
    cd.add_argument("--explain", action="store_true", help="also list the separation graph's Petrie walks")
    se = add("search", cmd_search, "enumerate all partial duals")
    se.add_argument("--mode", choices=MODES, default="cross-check")
    se.add_argument("--cap", type=int, help="maximum edge count for full enumeration")
    se.add_argument("--allow-large", action="store_true", help="enumerate even above the cap")
    se.add_argument("--audit", action="store_true", help="check pruned gems directly anyway")
    se.add_argument("--workers", type=int, default=1)
    se.add_argument("--csv", help="write per-subset verdicts as CSV")
    cv = add("convert", cmd_convert, "convert between rotation text and gem JSON")
    cv.add_argument("--to", choices=("rot", "gemjson"), required=True)
    ed = add("export-dot", cmd_export_dot, "Graphviz export", subset=True)
    group = ed.add_mutually_exclusive_group()
    group.add_argument("--jewel", action="store_true", help="include green diagonals")
    group.add_argument("--separation", action="store_true", help="export the separation graph for --edges")
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        status, out = args.func(args)
    except UsageError as exc:
        print(f"gemdual: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GemError, RotationError) as exc:
        print(f"gemdual: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"gemdual: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
