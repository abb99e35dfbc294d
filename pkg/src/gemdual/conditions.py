"""Deciding whether a partial dual is closed 2-cell from data on G itself.

Three conditions are checked on the original embedding:

* LC: no bad vertex/face pair of G has both members pure;
* MC: an exposed pure vertex or face meets each boundary walk of a region
  of the opposite kind at most once;
* GC: in the Petrie dual of the separation graph no two faces share two
  edges, and 0-pure corners add no further coincidences.

Together they hold exactly when the partial dual is closed 2-cell.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .c2c import Verdict, bad_pairs
from .duality import TDB, TPB, EdgeSubset, PartialDualTrace, as_subset, trace_partial_dual
from .gem import Gem

MIXED, PRIMAL, DUAL = "mixed", "primal", "dual"


# ---------------------------------------------------------------------------
# corners


@dataclass(frozen=True)
class CornerInfo:
    corner: int
    yellow: tuple[int, int]
    nu: int
    phi: int
    eps: tuple[int, int]
    side: str  # MIXED, PRIMAL or DUAL
    pure_count: int | None  # how many of nu, phi are pure; None for mixed corners

    @property
    def mixed(self) -> bool:
        return self.side == MIXED

    @property
    def label(self) -> str:
        return MIXED if self.mixed else f"{self.pure_count}-{self.side}-pure"


@dataclass(frozen=True)
class CornerTable:
    mask: int
    corners: tuple[CornerInfo, ...]
    vertex_kind: tuple[str, ...]
    face_kind: tuple[str, ...]
    exposed_vertices: frozenset[int]
    exposed_faces: frozenset[int]

    @property
    def mixed_vertices(self) -> list[int]:
        return [v for v, k in enumerate(self.vertex_kind) if k == MIXED]

    @property
    def mixed_faces(self) -> list[int]:
        return [f for f, k in enumerate(self.face_kind) if k == MIXED]

    @property
    def pure_vertices(self) -> list[int]:
        return [v for v, k in enumerate(self.vertex_kind) if k != MIXED]

    @property
    def pure_faces(self) -> list[int]:
        return [f for f, k in enumerate(self.face_kind) if k != MIXED]

    def zero_pure(self) -> list[CornerInfo]:
        return [c for c in self.corners if c.pure_count == 0]


def _kind(classes: set[bool]) -> str:
    if classes == {False}:
        return PRIMAL
    if classes == {True}:
        return DUAL
    return MIXED


def corner_table(g: Gem, d) -> CornerTable:
    d = as_subset(d, g.num_edges)
    in_d = [e in d for e in range(g.num_edges)]
    vclass: list[set[bool]] = [set() for _ in g.vertex_bigons]
    fclass: list[set[bool]] = [set() for _ in g.face_bigons]
    for x in range(g.n):
        vclass[g.vertex_of[x]].add(in_d[x // 4])
        fclass[g.face_of[x]].add(in_d[x // 4])
    vkind = tuple(_kind(s) for s in vclass)
    fkind = tuple(_kind(s) for s in fclass)
    infos = []
    for i, (a, b) in enumerate(g.corners):
        e1, e2 = sorted((a // 4, b // 4))
        v, f = g.vertex_of[a], g.face_of[a]
        if in_d[e1] != in_d[e2]:
            side, count = MIXED, None
        else:
            side = DUAL if in_d[e1] else PRIMAL
            count = (vkind[v] != MIXED) + (fkind[f] != MIXED)
        infos.append(CornerInfo(i, (a, b), v, f, (e1, e2), side, count))
    one_pure_at_v = Counter(c.nu for c in infos if c.pure_count == 1 and vkind[c.nu] != MIXED)
    one_pure_at_f = Counter(c.phi for c in infos if c.pure_count == 1 and fkind[c.phi] != MIXED)
    return CornerTable(
        d.mask,
        tuple(infos),
        vkind,
        fkind,
        frozenset(v for v, k in one_pure_at_v.items() if k > 1),
        frozenset(f for f, k in one_pure_at_f.items() if k > 1),
    )


# ---------------------------------------------------------------------------
# separation graph

Node = tuple[str, int]  # ("v", vertex id) or ("f", face id)


@dataclass(frozen=True)
class LambdaWalk:
    """A closed walk in the separation graph, as its sequence of edges (mixed corners)."""

    kind: str  # "R" or "B" for Petrie walks, "D" or "P" for region boundaries
    corners: tuple[int, ...]


@dataclass(frozen=True)
class SeparationGraph:
    nodes: tuple[Node, ...]
    edges: tuple[int, ...]  # mixed corner ids
    ends: dict[int, tuple[Node, Node]] = field(repr=False)  # corner -> (vertex node, face node)
    rotation: dict[Node, tuple[int, ...]] = field(repr=False)
    gap_after: dict[tuple[Node, int], str] = field(repr=False)  # "D" or "P"
    r_walks: tuple[LambdaWalk, ...]
    b_walks: tuple[LambdaWalk, ...]
    region_walks: tuple[LambdaWalk, ...]

    @property
    def petrie_walks(self) -> tuple[LambdaWalk, ...]:
        return self.r_walks + self.b_walks

    @property
    def empty(self) -> bool:
        return not self.edges

    def r_walk_of(self) -> dict[int, int]:
        return {y: i for i, w in enumerate(self.r_walks) for y in w.corners}

    def b_walk_of(self) -> dict[int, int]:
        return {y: j for j, w in enumerate(self.b_walks) for y in w.corners}

    @property
    def shared_edge_index(self) -> dict[tuple[int, int], int]:
        """``(R-walk, B-walk) -> number of edges they share``.

        Each edge lies on one walk of each type, so pairs of walks of the
        same type never share an edge.
        """
        rw, bw = self.r_walk_of(), self.b_walk_of()
        return dict(sorted(Counter((rw[y], bw[y]) for y in self.edges).items()))


def _bigon_corner_order(g: Gem, cyc: tuple[int, ...]) -> list[tuple[int, int]]:
    """``(corner, gem vertex just after it)`` in traversal order of a bigon.

    Bigons start along red (vertices) or blue (faces), so yellow edges sit
    at odd positions.
    """
    out = []
    k = len(cyc)
    for i in range(1, k, 2):
        out.append((g.corner_of[cyc[i]], cyc[(i + 1) % k]))
    return out


def separation_graph(g: Gem, d, ct: CornerTable | None = None) -> SeparationGraph:
    d = as_subset(d, g.num_edges)
    ct = ct or corner_table(g, d)
    mixed = [c for c in ct.corners if c.mixed]
    rotation: dict[Node, tuple[int, ...]] = {}
    gap_after: dict[tuple[Node, int], str] = {}
    for tag, cycles in (("v", g.vertex_bigons), ("f", g.face_bigons)):
        for i, cyc in enumerate(cycles):
            node = (tag, i)
            order = []
            for y, nxt in _bigon_corner_order(g, cyc):
                if ct.corners[y].mixed:
                    order.append(y)
                    gap_after[(node, y)] = "D" if nxt // 4 in d else "P"
            if order:
                rotation[node] = tuple(order)
    nodes = tuple(sorted(rotation))
    ends = {c.corner: (("v", c.nu), ("f", c.phi)) for c in mixed}
    rot_pos = {(node, y): i for node, ys in rotation.items() for i, y in enumerate(ys)}

    def cross(node: Node, y: int, gap: str) -> int:
        ys = rotation[node]
        i = rot_pos[(node, y)]
        if gap_after[(node, y)] == gap:
            return ys[(i + 1) % len(ys)]
        return ys[(i - 1) % len(ys)]

    def walks(kind: str, at_vertex: str, at_face: str) -> tuple[LambdaWalk, ...]:
        used: set[int] = set()
        out = []
        for y0 in sorted(ends):
            if y0 in used:
                continue
            seq = []
            y, to_vertex = y0, True
            while True:
                seq.append(y)
                used.add(y)
                vnode, fnode = ends[y]
                if to_vertex:
                    y = cross(vnode, y, at_vertex)
                else:
                    y = cross(fnode, y, at_face)
                to_vertex = not to_vertex
                if y == y0 and to_vertex:
                    break
            out.append(LambdaWalk(kind, tuple(seq)))
        return tuple(out)

    return SeparationGraph(
        nodes,
        tuple(sorted(ends)),
        ends,
        rotation,
        gap_after,
        walks("R", "P", "D"),
        walks("B", "D", "P"),
        walks("D", "D", "D") + walks("P", "P", "P"),
    )


# ---------------------------------------------------------------------------
# the three conditions


@dataclass(frozen=True)
class LCWitness:
    vertex: int
    face: int
    purity: str
    corners: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "face": self.face, "purity": self.purity, "corners": [list(c) for c in self.corners]}


@dataclass(frozen=True)
class MCWitness:
    target: str  # "vertex" or "face"
    index: int
    purity: str
    cycle_kind: str  # TDB or TPB
    cycle: int  # index into the trace's r_cycles or b_cycles
    corners: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "index": self.index,
            "purity": self.purity,
            "walk": {self.cycle_kind: self.cycle},
            "corners": list(self.corners),
        }


@dataclass(frozen=True)
class GCWitness:
    clause: str  # "a", "b" or "c"
    r_cycle: int
    b_cycle: int
    shared_edges: tuple[int, ...]
    zero_pure_corners: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "clause": self.clause,
            "r_cycle": self.r_cycle,
            "b_cycle": self.b_cycle,
            "shared_edges": list(self.shared_edges),
            "zero_pure_corners": list(self.zero_pure_corners),
        }


@dataclass(frozen=True)
class ConditionResult:
    witnesses: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"pass": self.passed, "witnesses": [w.to_json() for w in self.witnesses]}


def check_LC(g: Gem, d, ct: CornerTable | None = None) -> ConditionResult:
    ct = ct or corner_table(g, d)
    out = []
    for bp in bad_pairs(g):
        vk, fk = ct.vertex_kind[bp.vertex], ct.face_kind[bp.face]
        if vk != MIXED and fk != MIXED:
            out.append(LCWitness(bp.vertex, bp.face, vk, bp.corners))
    return ConditionResult(tuple(out))


def check_MC(g: Gem, d, ct: CornerTable | None = None, tr: PartialDualTrace | None = None) -> ConditionResult:
    d = as_subset(d, g.num_edges)
    ct = ct or corner_table(g, d)
    tr = tr or trace_partial_dual(g, d)
    # exposed primal-pure vertices and dual-pure faces meet totally primal boundaries (faces of the
    # partial dual); exposed dual-pure vertices and primal-pure faces meet totally dual ones
    targets = []
    for v in sorted(ct.exposed_vertices):
        targets.append(("vertex", v, ct.vertex_kind[v]))
    for f in sorted(ct.exposed_faces):
        targets.append(("face", f, ct.face_kind[f]))
    out = []
    for target, idx, purity in targets:
        use_b = (target == "vertex") == (purity == PRIMAL)
        cycles, kind = (tr.b_cycles, TPB) if use_b else (tr.r_cycles, TDB)
        for ci, cyc in enumerate(cycles):
            if cyc.kind != kind:
                continue
            if target == "vertex":
                hits = tuple(y for y in cyc.corners if ct.corners[y].nu == idx)
            else:
                hits = tuple(y for y in cyc.corners if ct.corners[y].phi == idx)
            if len(hits) >= 2:
                out.append(MCWitness(target, idx, purity, kind, ci, hits))
    return ConditionResult(tuple(out))


def check_GC(
    g: Gem,
    d,
    sep: SeparationGraph | None = None,
    ct: CornerTable | None = None,
    tr: PartialDualTrace | None = None,
) -> ConditionResult:
    d = as_subset(d, g.num_edges)
    ct = ct or corner_table(g, d)
    sep = sep or separation_graph(g, d, ct)
    tr = tr or trace_partial_dual(g, d)
    r_at, b_at = tr.r_cycle_at(), tr.b_cycle_at()
    # walks are matched to trace cycles through their first corner
    r_cycle_of_walk = [r_at[w.corners[0]] for w in sep.r_walks]
    b_cycle_of_walk = [b_at[w.corners[0]] for w in sep.b_walks]
    rw, bw = sep.r_walk_of(), sep.b_walk_of()
    shared: dict[tuple[int, int], list[int]] = defaultdict(list)
    for y in sep.edges:
        shared[(r_cycle_of_walk[rw[y]], b_cycle_of_walk[bw[y]])].append(y)
    out = []
    for (i, j), ys in sorted(shared.items()):
        if len(ys) >= 2:
            out.append(GCWitness("a", i, j, tuple(ys)))
    zero: dict[tuple[int, int], list[int]] = defaultdict(list)
    for c in ct.zero_pure():
        zero[(r_at[c.corner], b_at[c.corner])].append(c.corner)
    for (i, j), ys in sorted(zero.items()):
        common = tuple(shared.get((i, j), ()))
        if common:
            out.append(GCWitness("b", i, j, common, tuple(ys)))
        if len(ys) >= 2:
            out.append(GCWitness("c", i, j, common, tuple(ys)))
    return ConditionResult(tuple(out))


@dataclass(frozen=True)
class ConditionVerdict:
    lc: ConditionResult
    mc: ConditionResult
    gc: ConditionResult
    predicted_c2c: Verdict

    @property
    def failing(self) -> list[str]:
        return [name for name, r in (("LC", self.lc), ("MC", self.mc), ("GC", self.gc)) if not r.passed]

    def to_json(self) -> dict:
        return {
            "lc": self.lc.to_json(),
            "mc": self.mc.to_json(),
            "gc": self.gc.to_json(),
            "predicted_c2c": self.predicted_c2c.value,
        }


def conditions_predict_c2c(g: Gem, d) -> ConditionVerdict:
    d = as_subset(d, g.num_edges)
    ct = corner_table(g, d)
    tr = trace_partial_dual(g, d)
    lc = check_LC(g, d, ct)
    mc = check_MC(g, d, ct, tr)
    gc = check_GC(g, d, separation_graph(g, d, ct), ct, tr)
    if g.num_edges < 2:
        verdict = Verdict.DEGENERATE
    elif lc.passed and mc.passed and gc.passed:
        verdict = Verdict.YES
    else:
        verdict = Verdict.NO
    return ConditionVerdict(lc, mc, gc, verdict)
