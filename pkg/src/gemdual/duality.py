"""Partial duality, partial Petrie duality and twisted duality on gems.

Partial duality over ``D`` swaps red and blue inside every red-blue
4-cycle ``Q_e`` with ``e`` in ``D``.  Adding the two diagonals of each
``Q_e`` as green edges gives a jewel, on which ``S_3^E`` acts by permuting
red, blue and green inside each 4-cycle.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .gem import Gem, GemError, YELLOW

# ---------------------------------------------------------------------------
# edge subsets


@dataclass(frozen=True)
class EdgeSubset:
    """A set ``D`` of edges as a bitmask; ``P`` is the complement."""

    mask: int
    num_edges: int

    def __post_init__(self):
        if self.num_edges < 0 or self.mask < 0 or self.mask >> self.num_edges:
            raise ValueError(f"mask {self.mask:#x} is not a subset of {self.num_edges} edges")

    @classmethod
    def from_edges(cls, edges: Iterable[int], num_edges: int) -> EdgeSubset:
        mask = 0
        for e in edges:
            if not 0 <= e < num_edges:
                raise ValueError(f"edge {e} out of range")
            mask |= 1 << e
        return cls(mask, num_edges)

    @classmethod
    def full(cls, num_edges: int) -> EdgeSubset:
        return cls((1 << num_edges) - 1, num_edges)

    def __contains__(self, e: int) -> bool:
        return bool(self.mask >> e & 1)

    def __iter__(self):
        return (e for e in range(self.num_edges) if self.mask >> e & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def complement(self) -> EdgeSubset:
        return EdgeSubset(self.mask ^ ((1 << self.num_edges) - 1), self.num_edges)

    def symmetric_difference(self, other: EdgeSubset) -> EdgeSubset:
        return EdgeSubset(self.mask ^ other.mask, self.num_edges)

    @property
    def is_trivial(self) -> bool:
        return self.mask == 0 or self.mask == (1 << self.num_edges) - 1


def as_subset(d, num_edges: int) -> EdgeSubset:
    """Accept an ``EdgeSubset``, an int bitmask or an iterable of edge ids."""
    if isinstance(d, EdgeSubset):
        if d.num_edges != num_edges:
            raise ValueError("edge subset built for a different edge count")
        return d
    if isinstance(d, int):
        return EdgeSubset(d, num_edges)
    return EdgeSubset.from_edges(d, num_edges)


# ---------------------------------------------------------------------------
# partial duals


def partial_dual(g: Gem, d) -> Gem:
    d = as_subset(d, g.num_edges)
    red, blue = list(g.red), list(g.blue)
    for e in d:
        for x in range(4 * e, 4 * e + 4):
            red[x], blue[x] = g.blue[x], g.red[x]
    return Gem(tuple(red), g.yellow, tuple(blue), edge_names=g.edge_names)


# permutations of (red, blue, green) as image tuples over indices 0, 1, 2
Perm = tuple[int, int, int]
IDENTITY: Perm = (0, 1, 2)
SWAP_RB: Perm = (1, 0, 2)
SWAP_BG: Perm = (0, 2, 1)
SWAP_RG: Perm = (2, 1, 0)
CYCLE_RBG: Perm = (1, 2, 0)  # red -> blue -> green -> red
CYCLE_RGB: Perm = (2, 0, 1)

PERM_NAMES: dict[str, Perm] = {
    "id": IDENTITY,
    "rb": SWAP_RB,
    "bg": SWAP_BG,
    "rg": SWAP_RG,
    "rbg": CYCLE_RBG,
    "rgb": CYCLE_RGB,
}


def compose(p: Perm, q: Perm) -> Perm:
    """``p`` after ``q``."""
    return tuple(p[q[i]] for i in range(3))


def inverse(p: Perm) -> Perm:
    inv = [0, 0, 0]
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


@dataclass(frozen=True)
class TwistSpec:
    """One permutation of {red, blue, green} per edge."""

    perms: tuple[Perm, ...]

    def __post_init__(self):
        object.__setattr__(self, "perms", tuple(tuple(p) for p in self.perms))
        for p in self.perms:
            if sorted(p) != [0, 1, 2]:
                raise ValueError(f"{p!r} is not a permutation of three colours")

    @classmethod
    def identity(cls, num_edges: int) -> TwistSpec:
        return cls((IDENTITY,) * num_edges)

    @classmethod
    def on_edges(cls, num_edges: int, edges, perm: Perm) -> TwistSpec:
        d = as_subset(edges, num_edges)
        return cls(tuple(perm if e in d else IDENTITY for e in range(num_edges)))

    @classmethod
    def from_mapping(cls, num_edges: int, perms: Mapping[int, Perm]) -> TwistSpec:
        return cls(tuple(perms.get(e, IDENTITY) for e in range(num_edges)))

    def then(self, other: TwistSpec) -> TwistSpec:
        """Apply ``self`` first, then ``other``."""
        return TwistSpec(tuple(compose(b, a) for a, b in zip(self.perms, other.perms)))

    def inverse(self) -> TwistSpec:
        return TwistSpec(tuple(inverse(p) for p in self.perms))


@dataclass(frozen=True)
class Jewel:
    red: tuple[int, ...]
    yellow: tuple[int, ...]
    blue: tuple[int, ...]
    green: tuple[int, ...]
    edge_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.yellow)
        for x in range(n):
            q = x // 4
            trio = {self.red[x], self.blue[x], self.green[x]}
            if len(trio) != 3 or any(y // 4 != q for y in trio):
                raise GemError(f"trigon of edge {q} is not a K4 at vertex {x}")

    @property
    def gem(self) -> Gem:
        return Gem(self.red, self.yellow, self.blue, edge_names=self.edge_names)

    @property
    def n(self) -> int:
        return len(self.yellow)

    @property
    def num_edges(self) -> int:
        return self.n // 4


def jewel_from_gem(g: Gem) -> Jewel:
    green = tuple(g.red[g.blue[x]] for x in range(g.n))
    return Jewel(g.red, g.yellow, g.blue, green, edge_names=g.edge_names)


def twist(j: Jewel, t: TwistSpec) -> Jewel:
    """Recolour each trigon: an edge of colour ``c`` in trigon ``e`` gets colour ``t[e](c)``."""
    if len(t.perms) != j.num_edges:
        raise ValueError("twist spec has wrong length")
    old = (j.red, j.blue, j.green)
    new = [list(j.red), list(j.blue), list(j.green)]
    for e, p in enumerate(t.perms):
        if p == IDENTITY:
            continue
        for x in range(4 * e, 4 * e + 4):
            for c in range(3):
                new[p[c]][x] = old[c][x]
    return Jewel(tuple(new[0]), j.yellow, tuple(new[1]), tuple(new[2]), edge_names=j.edge_names)


def partial_petrie(g: Gem, d) -> Gem:
    t = TwistSpec.on_edges(g.num_edges, d, SWAP_BG)
    return twist(jewel_from_gem(g), t).gem


# ---------------------------------------------------------------------------
# walks in the corner graph and their projection to G


@dataclass(frozen=True)
class Walk:
    """A walk in G: ``vertices[i] --edges[i]--> vertices[i+1]``.

    Closed walks drop the repeated final vertex, so they have as many
    vertices as edges (a trivial closed walk has one vertex, no edges).
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    closed: bool

    @property
    def trivial(self) -> bool:
        return not self.edges


def project_walk(g: Gem, walk) -> Walk:
    """Project a corner-graph walk onto G.

    ``walk`` alternates corner ids and corner-graph edges, each edge given
    as a red or blue gem edge ``(a, b)``.  Corners map to their vertex;
    blue edges (which run alongside an edge of G) map to that edge; red
    edges (which cross one) are dropped; repeated vertices collapse.
    """
    walk = list(walk)
    if not walk or len(walk) % 2 == 0:
        raise ValueError("walk must alternate corners and edges and start and end at a corner")
    corners = walk[0::2]
    kedges = walk[1::2]
    for c in corners:
        if not (isinstance(c, int) and 0 <= c < len(g.corners)):
            raise ValueError(f"{c!r} is not a corner id")
    seq: list[tuple[str, int]] = [("v", g.vertex_of[g.corners[corners[0]][0]])]
    for i, (a, b) in enumerate(kedges):
        before, after = set(g.corners[corners[i]]), set(g.corners[corners[i + 1]])
        if not ((a in before and b in after) or (b in before and a in after)):
            raise ValueError(f"edge ({a}, {b}) does not join corners {corners[i]} and {corners[i + 1]}")
        if g.blue[a] == b:
            seq.append(("e", a // 4))
        elif g.red[a] != b:
            raise ValueError(f"({a}, {b}) is not a red or blue gem edge")
        seq.append(("v", g.vertex_of[g.corners[corners[i + 1]][0]]))
    collapsed: list[tuple[str, int]] = []
    for item in seq:
        if collapsed and item[0] == "v" and collapsed[-1][0] == "v":
            continue
        collapsed.append(item)
    closed = len(corners) > 1 and corners[0] == corners[-1]
    if closed and len(collapsed) > 1:
        collapsed.pop()
    verts = tuple(x for kind, x in collapsed if kind == "v")
    edges = tuple(x for kind, x in collapsed if kind == "e")
    return Walk(verts, edges, closed)


# ---------------------------------------------------------------------------
# the R_i / B_j trace of a partial dual

PPV, DPF, TDB = "ppv", "dpf", "tdb"
DPV, PPF, TPB = "dpv", "ppf", "tpb"


@dataclass(frozen=True)
class TraceCycle:
    corners: tuple[int, ...]
    path: tuple[int, ...]  # gem vertices: corner endpoints, then the red/blue edge, ...
    kind: str
    index: int  # vertex, face or region id, depending on kind
    projection: Walk

    @property
    def tag(self) -> dict[str, int]:
        return {self.kind: self.index}

    def walk(self) -> list:
        """The cycle as a closed corner-graph walk for ``project_walk``."""
        out: list = [self.corners[0]]
        p = self.path
        for i in range(len(self.corners)):
            out.append((p[2 * i + 1], p[2 * i + 2]))
            out.append(self.corners[(i + 1) % len(self.corners)])
        return out


@dataclass(frozen=True)
class PartialDualTrace:
    mask: int
    r_cycles: tuple[TraceCycle, ...]
    b_cycles: tuple[TraceCycle, ...]

    @property
    def k(self) -> int:
        return len(self.r_cycles)

    @property
    def l(self) -> int:
        return len(self.b_cycles)

    def r_cycle_at(self) -> tuple[int, ...]:
        """Index of the r-cycle through each corner."""
        return _cycle_owner(self.r_cycles)

    def b_cycle_at(self) -> tuple[int, ...]:
        return _cycle_owner(self.b_cycles)


def _cycle_owner(cycles) -> tuple[int, ...]:
    total = sum(len(c.corners) for c in cycles)
    own = [0] * total
    for i, c in enumerate(cycles):
        for y in c.corners:
            own[y] = i
    return tuple(own)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def edge_components(g: Gem, mask: int) -> dict[int, int]:
    """Region id of every edge in ``mask``, grouping edges that share a vertex.

    Regions are numbered by their smallest edge.
    """
    m = g.num_edges
    uf = _UnionFind(m + len(g.vertex_bigons))
    for e in range(m):
        if mask >> e & 1:
            for x in range(4 * e, 4 * e + 4):
                uf.union(e, m + g.vertex_of[x])
    ids: dict[int, int] = {}
    out = {}
    for e in range(m):
        if mask >> e & 1:
            root = uf.find(e)
            out[e] = ids.setdefault(root, len(ids))
    return out


def _cycles(g: Gem, step) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    seen = [False] * len(g.corners)
    out = []
    for c0, (a0, b0) in enumerate(g.corners):
        if seen[c0]:
            continue
        corners, path = [], []
        c, a, b = c0, a0, b0
        while True:
            seen[c] = True
            corners.append(c)
            x = step(a)
            path += [b, a, x]
            c = g.corner_of[x]
            if c == c0:
                break
            b, a = x, g.yellow[x]
        # path holds (entry, exit, next) triples; keep entry, exit per corner plus final return
        flat = []
        for i in range(len(corners)):
            flat += [path[3 * i], path[3 * i + 1]]
        flat.append(path[-1])
        out.append((tuple(corners), tuple(flat)))
    return out


def trace_partial_dual(g: Gem, d) -> PartialDualTrace:
    """Cycles of ``R_P + B_D + Y`` (new vertices) and ``R_D + B_P + Y`` (new faces).

    Each cycle starts at its smallest corner and leaves that corner from its
    smaller endpoint.
    """
    d = as_subset(d, g.num_edges)
    mask = d.mask

    def in_d(x: int) -> bool:
        return bool(mask >> (x // 4) & 1)

    r_step = lambda x: g.blue[x] if in_d(x) else g.red[x]
    b_step = lambda x: g.red[x] if in_d(x) else g.blue[x]
    d_regions = edge_components(g, mask)
    p_regions = edge_components(g, d.complement().mask)

    def build(raw, vertex_kind, face_kind, region_kind, regions, region_in_d):
        cycles = []
        for corners, path in raw:
            exits = path[1::2]
            red_only = all(g.red[path[2 * i + 1]] == path[2 * i + 2] for i in range(len(corners)))
            blue_only = all(g.blue[path[2 * i + 1]] == path[2 * i + 2] for i in range(len(corners)))
            if red_only:
                kind, idx = vertex_kind, g.vertex_of[path[0]]
            elif blue_only:
                kind, idx = face_kind, g.face_of[path[0]]
            else:
                e = next(x // 4 for x in exits if in_d(x) == region_in_d)
                kind, idx = region_kind, regions[e]
            tmp = TraceCycle(corners, path, kind, idx, Walk((), (), True))
            proj = project_walk(g, tmp.walk())
            cycles.append(TraceCycle(corners, path, kind, idx, proj))
        return tuple(cycles)

    r_cycles = build(_cycles(g, r_step), PPV, DPF, TDB, d_regions, True)
    b_cycles = build(_cycles(g, b_step), DPV, PPF, TPB, p_regions, False)
    return PartialDualTrace(mask, r_cycles, b_cycles)
