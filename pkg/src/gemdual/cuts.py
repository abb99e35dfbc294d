"""Small edge cuts in gems.

Cuts are found with cycle-space labels: every non-tree edge gets a random
64-bit label and every tree edge the XOR of the labels of the fundamental
cycles through it.  An edge set containing a cut always XORs to zero, so no
cut is missed; candidates are then confirmed by a connectivity check.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass

from .gem import BLUE, COLOURS, RED, YELLOW, Gem

GemEdge = tuple[str, int, int]


@dataclass(frozen=True)
class EdgeCut:
    edges: tuple[GemEdge, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def colour_counts(self) -> dict[str, int]:
        c = Counter(col for col, _, _ in self.edges)
        return {col: c.get(col, 0) for col in COLOURS}

    @property
    def monochromatic(self) -> str | None:
        cols = {col for col, _, _ in self.edges}
        return cols.pop() if len(cols) == 1 else None

    def satisfies_parity(self) -> bool:
        return all((self.size - k) % 2 == 0 for k in self.colour_counts.values())


def gem_edges(g: Gem) -> list[GemEdge]:
    return [(c, a, b) for c in (RED, YELLOW, BLUE) for a, b in g.pairs(c)]


def _disconnects(g: Gem, removed: set[GemEdge]) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for c in COLOURS:
            y = g.matching(c)[x]
            key = (c, min(x, y), max(x, y))
            if key in removed or y in seen:
                continue
            seen.add(y)
            stack.append(y)
    return len(seen) < g.n


def _labels(g: Gem, edges: list[GemEdge], seed: int) -> list[int]:
    rng = random.Random(seed)
    index = {e: i for i, e in enumerate(edges)}
    parent_edge = [-1] * g.n
    parent_vertex = [-1] * g.n
    order = [0]
    seen = [False] * g.n
    seen[0] = True
    tree = set()
    for x in order:
        for c in COLOURS:
            y = g.matching(c)[x]
            if not seen[y]:
                seen[y] = True
                i = index[(c, min(x, y), max(x, y))]
                parent_edge[y] = i
                parent_vertex[y] = x
                tree.add(i)
                order.append(y)
    labels = [0] * len(edges)
    acc = [0] * g.n
    for i, (_, a, b) in enumerate(edges):
        if i not in tree:
            labels[i] = rng.getrandbits(64) | 1
            acc[a] ^= labels[i]
            acc[b] ^= labels[i]
    for x in reversed(order[1:]):
        labels[parent_edge[x]] = acc[x]
        acc[parent_vertex[x]] ^= acc[x]
    return labels


def edge_cuts_of_size_le(g: Gem, k: int, seed: int = 0x6E3) -> list[EdgeCut]:
    """All minimal edge cuts with at most ``k`` edges (``k <= 3``)."""
    if not 1 <= k <= 3:
        raise ValueError("k must be 1, 2 or 3")
    edges = gem_edges(g)
    labels = _labels(g, edges, seed)
    by_label = defaultdict(list)
    for i, lab in enumerate(labels):
        by_label[lab].append(i)
    found: list[tuple[int, ...]] = []
    found += [(i,) for i in by_label.get(0, [])]
    if k >= 2:
        for lab, idx in by_label.items():
            if lab == 0:
                continue
            for p in range(len(idx)):
                for q in range(p + 1, len(idx)):
                    found.append((idx[p], idx[q]))
    if k >= 3:
        nz = [i for i, lab in enumerate(labels) if lab]
        for p, i in enumerate(nz):
            for j in nz[p + 1:]:
                if labels[i] == labels[j]:
                    continue
                for h in by_label.get(labels[i] ^ labels[j], ()):
                    if h > j:
                        found.append((i, j, h))
    cuts = []
    for combo in found:
        sel = {edges[i] for i in combo}
        if _disconnects(g, sel):
            cuts.append(EdgeCut(tuple(sorted(sel, key=lambda t: (t[1], t[2], t[0])))))
    cuts.sort(key=lambda c: (c.size, [(a, b, col) for col, a, b in c.edges]))
    return cuts


def two_edge_cuts(g: Gem) -> list[EdgeCut]:
    return [c for c in edge_cuts_of_size_le(g, 2) if c.size == 2]


def yellow_two_cuts(g: Gem) -> set[frozenset[tuple[int, int]]]:
    return {frozenset((a, b) for _, a, b in c.edges) for c in two_edge_cuts(g) if c.monochromatic == YELLOW}
