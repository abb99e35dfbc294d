"""Text formats: rotation files, gem JSON and Graphviz DOT.

Rotation file grammar, one statement per line::

    file      := { line "\\n" }
    line      := [ statement ] [ "#" any-text ]
    statement := "vertex" NAME ":" { DART }
               | "signature" NAME ":" SIGN
    DART      := NAME ( "+" | "-" )
    SIGN      := "+1" | "1" | "-1"
    NAME      := [A-Za-z0-9_.]+

Tokens are separated by blanks; the colon may touch the name.  ``NAME+``
is end 0 of the edge and ``NAME-`` end 1.  Edges get dense ids in order of
first appearance; omitted signatures are ``+1``.
"""

from __future__ import annotations

import json
import re

from .conditions import SeparationGraph
from .duality import Jewel, PartialDualTrace, TraceCycle
from .gem import EmbeddingSummary, Gem, GemError, require_valid
from .rotation import RotationEmbedding, RotationError

_NAME = r"[A-Za-z0-9_.]+"
_VERTEX = re.compile(rf"vertex\s+({_NAME})\s*:")
_SIGNATURE = re.compile(rf"signature\s+({_NAME})\s*:\s*(\S+)\s*$")
_DART = re.compile(rf"({_NAME})([+-])$")


class RotationSyntaxError(RotationError):
    def __init__(self, line: int, column: int, message: str):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {message}")


def parse_rotation(text: str) -> RotationEmbedding:
    rotations: dict[str, list[tuple[str, int]]] = {}
    signatures: dict[str, int] = {}
    sig_lines: dict[str, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        stripped = body.lstrip()
        if not stripped:
            continue
        indent = len(body) - len(stripped)
        col = indent + 1
        if stripped.startswith("vertex"):
            m = _VERTEX.match(stripped)
            if not m:
                raise RotationSyntaxError(lineno, col, "expected 'vertex <name>:'")
            name = m.group(1)
            if name in rotations:
                raise RotationSyntaxError(lineno, col + m.start(1), f"vertex {name} declared twice")
            darts = []
            pos = m.end()
            for tok in re.finditer(r"\S+", stripped[pos:]):
                dm = _DART.match(tok.group())
                if not dm:
                    raise RotationSyntaxError(lineno, col + pos + tok.start(), f"bad dart {tok.group()!r}; expected <edge>+ or <edge>-")
                darts.append((dm.group(1), 0 if dm.group(2) == "+" else 1))
            rotations[name] = darts
        elif stripped.startswith("signature"):
            m = _SIGNATURE.match(stripped)
            if not m:
                raise RotationSyntaxError(lineno, col, "expected 'signature <edge>: -1'")
            name, value = m.groups()
            if value not in ("+1", "1", "-1"):
                raise RotationSyntaxError(lineno, col + m.start(2), f"signature must be +1 or -1, got {value!r}")
            if name in signatures:
                raise RotationSyntaxError(lineno, col + m.start(1), f"signature for {name} given twice")
            signatures[name] = -1 if value == "-1" else 1
            sig_lines[name] = (lineno, col + m.start(1))
        else:
            raise RotationSyntaxError(lineno, col, f"unknown statement {stripped.split()[0]!r}")
    if not rotations:
        raise RotationSyntaxError(1, 1, "no vertices declared")
    declared = {e for darts in rotations.values() for e, _ in darts}
    for name, (lineno, col) in sig_lines.items():
        if name not in declared:
            raise RotationSyntaxError(lineno, col, f"signature for unknown edge {name}")
    return RotationEmbedding.build(rotations, signatures)


def format_rotation(rot: RotationEmbedding) -> str:
    lines = []
    for v, darts in enumerate(rot.vertices):
        parts = " ".join(rot.dart_name(d) for d in darts)
        lines.append(f"vertex {rot.vertex_name(v)}: {parts}".rstrip())
    # signature lines follow first appearance, matching the ids parse_rotation assigns
    seen = dict.fromkeys(e for darts in rot.vertices for e, _ in darts)
    for e in seen:
        if rot.signatures[e] == -1:
            lines.append(f"signature {rot.edge_name(e)}: -1")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# gem JSON


def gem_to_json(g: Gem) -> dict:
    out = {
        "n": g.n,
        "red": [list(p) for p in g.pairs("red")],
        "yellow": [list(p) for p in g.pairs("yellow")],
        "blue": [list(p) for p in g.pairs("blue")],
        "edge_anchor": {f"e{e}": list(q) for e, q in g.edge_anchor.items()},
    }
    if g.edge_names is not None:
        out["edge_names"] = list(g.edge_names)
    return out


def serialize_gem(g: Gem) -> str:
    return json.dumps(gem_to_json(g), separators=(",", ":"))


def _pairs(doc: dict, key: str, n: int) -> list[tuple[int, int]]:
    value = doc.get(key)
    if not isinstance(value, list):
        raise GemError(f"field {key!r} must be a list of pairs")
    out = []
    for p in value:
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in p)):
            raise GemError(f"field {key!r} has a malformed pair {p!r}")
        out.append((p[0], p[1]))
    return out


def gem_from_json(doc: dict, validate: bool = True) -> Gem:
    if not isinstance(doc, dict):
        raise GemError("gem JSON must be an object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise GemError("field 'n' must be a positive integer")
    pairs = {c: _pairs(doc, c, n) for c in ("red", "yellow", "blue")}
    anchor = doc.get("edge_anchor")
    # with n not a multiple of 4 the anchor cannot match; validate_gem reports the size instead
    if anchor is not None and n % 4 == 0:
        expected = {f"e{e}": [4 * e, 4 * e + 1, 4 * e + 2, 4 * e + 3] for e in range(n // 4)}
        if not isinstance(anchor, dict) or {k: sorted(v) for k, v in anchor.items()} != expected:
            raise GemError("edge_anchor must map e<i> to [4i, 4i+1, 4i+2, 4i+3]")
    names = doc.get("edge_names")
    if names is not None and (not isinstance(names, list) or len(names) != n // 4 or not all(isinstance(s, str) for s in names)):
        raise GemError("edge_names must list one string per edge")
    g = Gem.from_pairs(n, pairs["red"], pairs["yellow"], pairs["blue"], edge_names=tuple(names) if names else None)
    return require_valid(g) if validate else g


def parse_gem(text: str, validate: bool = True) -> Gem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GemError(f"invalid JSON: {exc}") from None
    return gem_from_json(doc, validate)


# ---------------------------------------------------------------------------
# report encoders


def summary_to_json(s: EmbeddingSummary) -> dict:
    return {
        "V": s.V,
        "E": s.E,
        "F": s.F,
        "euler_characteristic": s.euler_characteristic,
        "euler_genus": s.euler_genus,
        "orientable": s.orientable,
        "genus": s.genus,
        "vertex_bigons": [list(c) for c in s.vertex_bigons],
        "face_bigons": [list(c) for c in s.face_bigons],
        "edge_bigons": [list(c) for c in s.edge_bigons],
    }


def _cycle_to_json(c: TraceCycle) -> dict:
    return {
        "corners": list(c.corners),
        "class": c.tag,
        "projection": {"vertices": list(c.projection.vertices), "edges": list(c.projection.edges)},
    }


def trace_to_json(tr: PartialDualTrace) -> dict:
    return {
        "mask": tr.mask,
        "k": tr.k,
        "l": tr.l,
        "r_cycles": [_cycle_to_json(c) for c in tr.r_cycles],
        "b_cycles": [_cycle_to_json(c) for c in tr.b_cycles],
    }


def separation_to_json(sep: SeparationGraph) -> dict:
    def node(n):
        return f"{n[0]}{n[1]}"

    return {
        "nodes": [node(n) for n in sep.nodes],
        "edges": [{"corner": y, "ends": [node(x) for x in sep.ends[y]]} for y in sep.edges],
        "rotation": {node(n): list(sep.rotation[n]) for n in sep.nodes},
        "r_walks": [list(w.corners) for w in sep.r_walks],
        "b_walks": [list(w.corners) for w in sep.b_walks],
        "shared_edge_index": [[i, j, k] for (i, j), k in sep.shared_edge_index.items()],
    }


# ---------------------------------------------------------------------------
# DOT

_STYLE = {
    "red": 'color="red"',
    "blue": 'color="blue", style="dashed"',
    "yellow": 'color="yellow:invis:yellow"',
    "green": 'color="green:invis:green", penwidth=3',
}


def export_dot(obj, name: str | None = None) -> str:
    """Graphviz text for a gem, a jewel or a separation graph."""
    if isinstance(obj, SeparationGraph):
        return _dot_separation(obj, name or "separation")
    if isinstance(obj, Jewel):
        g, green = obj.gem, obj.green
    elif isinstance(obj, Gem):
        g, green = obj, None
    else:
        raise TypeError(f"cannot export {type(obj).__name__} to DOT")
    lines = [f"graph {name or ('jewel' if green else 'gem')} {{", "  node [shape=circle];"]
    for x in range(g.n):
        lines.append(f'  {x} [label="{x}"];')
    colours = [("red", g.red), ("yellow", g.yellow), ("blue", g.blue)]
    if green is not None:
        colours.append(("green", green))
    for colour, m in colours:
        for x, y in enumerate(m):
            if x < y:
                lines.append(f"  {x} -- {y} [{_STYLE[colour]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_separation(sep: SeparationGraph, name: str) -> str:
    lines = [f"graph {name} {{"]
    for kind, i in sep.nodes:
        shape = "circle" if kind == "v" else "box"
        lines.append(f'  {kind}{i} [shape={shape}, label="{kind}{i}"];')
    for y in sep.edges:
        (a, i), (b, j) = sep.ends[y]
        lines.append(f'  {a}{i} -- {b}{j} [label="y{y}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
