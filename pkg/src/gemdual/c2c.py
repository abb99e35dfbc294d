"""Closed 2-cell detection and the separating obstructions to it."""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass

from .cuts import two_edge_cuts
from .duality import as_subset, partial_dual
from .gem import BLUE, RED, YELLOW, Gem


@dataclass(frozen=True)
class BadPair:
    """A vertex and a face of G meeting at two or more corners."""

    vertex: int
    face: int
    corners: tuple[tuple[int, int], ...]  # the shared yellow edges

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "face": self.face, "shared_corners": [list(c) for c in self.corners]}


def bad_pairs(g: Gem) -> list[BadPair]:
    shared: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
    for a, b in g.corners:
        shared[(g.vertex_of[a], g.face_of[a])].append((a, b))
    return [BadPair(v, f, tuple(ys)) for (v, f), ys in sorted(shared.items()) if len(ys) >= 2]


class Verdict(str, enum.Enum):
    YES = "yes"
    NO = "no"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class C2CResult:
    verdict: Verdict
    witness: BadPair | None = None
    loop: int | None = None  # set when a loop is the reason

    def __bool__(self) -> bool:
        return self.verdict is Verdict.YES

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict.value}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.loop is not None:
            out["loop"] = self.loop
        return out


def loops(g: Gem) -> list[int]:
    """Edges whose two ends lie on the same vertex."""
    return [e for e in range(g.num_edges) if g.vertex_of[4 * e] == g.vertex_of[4 * e + 2]]


def is_closed_2cell(g: Gem) -> C2CResult:
    """Every face boundary is a cycle.

    With fewer than two edges the answer depends on conventions for a
    lone loop or link, so ``degenerate`` is returned instead.
    """
    if g.num_edges < 2:
        return C2CResult(Verdict.DEGENERATE)
    bad = bad_pairs(g)
    if bad:
        return C2CResult(Verdict.NO, witness=bad[0])
    ls = loops(g)
    if ls:
        return C2CResult(Verdict.NO, loop=ls[0])
    return C2CResult(Verdict.YES)


@dataclass(frozen=True)
class ObstructionReport:
    separating_pairs: tuple[BadPair, ...]
    separating_loops: tuple[int, ...]
    separating_coloops: tuple[int, ...]

    @property
    def blocks_all_partial_duals(self) -> bool:
        return bool(self.separating_pairs or self.separating_loops or self.separating_coloops)

    def to_json(self) -> dict:
        return {
            "separating_pairs": [p.to_json() for p in self.separating_pairs],
            "separating_loops": list(self.separating_loops),
            "separating_coloops": list(self.separating_coloops),
            "blocks_all_partial_duals": self.blocks_all_partial_duals,
        }


def separating_features(g: Gem) -> ObstructionReport:
    pairs, loop_edges, coloop_edges = [], set(), set()
    for cut in two_edge_cuts(g):
        colour = cut.monochromatic
        if colour == YELLOW:
            (_, a, b), (_, c, d) = cut.edges
            pairs.append(BadPair(g.vertex_of[a], g.face_of[a], ((a, b), (c, d))))
        elif colour == RED:
            loop_edges.add(cut.edges[0][1] // 4)
        elif colour == BLUE:
            coloop_edges.add(cut.edges[0][1] // 4)
    pairs.sort(key=lambda p: (p.vertex, p.face, p.corners))
    return ObstructionReport(tuple(pairs), tuple(sorted(loop_edges)), tuple(sorted(coloop_edges)))


def has_yellow_two_cut(g: Gem) -> bool:
    return any(c.monochromatic == YELLOW for c in two_edge_cuts(g))


def obstruction_persists(g: Gem, d) -> bool:
    """True iff ``g`` has a 2-edge cut.

    When it does and ``g`` has at least two edges, checks that the partial
    dual over ``d`` still has a yellow 2-edge cut.
    """
    d = as_subset(d, g.num_edges)
    if not two_edge_cuts(g):
        return False
    if g.num_edges >= 2:
        assert has_yellow_two_cut(partial_dual(g, d)), "yellow 2-edge cut lost under partial duality"
    return True
