"""Graph-encoded maps (gems).

A gem on ``n = 4|E|`` vertices is stored as three fixed-point-free
involutions ``red``, ``yellow`` and ``blue``: ``red[x]`` is the red
neighbour of gem vertex ``x``.  Edge ``e`` of the embedded graph owns gem
vertices ``4e .. 4e+3``; in a gem built from a rotation system the red pairs
are ``{4e, 4e+1}, {4e+2, 4e+3}`` and the blue pairs ``{4e+1, 4e+2},
{4e+3, 4e}``.

Gem vertices are flags.  Writing flag ``4e + k`` as ``(end, side)`` with
``k = 0, 1, 2, 3`` for ``(0, 0), (0, 1), (1, 1), (1, 0)``: red changes the
side, blue changes the end, yellow changes the edge around a vertex.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .rotation import Dart, RotationEmbedding

RED, YELLOW, BLUE = "red", "yellow", "blue"
COLOURS = (RED, YELLOW, BLUE)

_PAIR_ALIASES = {
    "ry": (RED, YELLOW),
    "by": (BLUE, YELLOW),
    "rb": (RED, BLUE),
}

# flag offset within Q_e for (end, side)
_FLAG = {(0, 0): 0, (0, 1): 1, (1, 1): 2, (1, 0): 3}


class GemError(ValueError):
    """Raised for syntactically malformed gems (e.g. a colour class that is not a matching)."""


class InvalidGemError(GemError):
    def __init__(self, report: ValidationReport):
        self.report = report
        rule, witness = report.violations[0]
        super().__init__(f"invalid gem: {rule}: {witness}")


def _check_matching(name: str, m: Sequence[int], n: int) -> None:
    if len(m) != n:
        raise GemError(f"{name} has {len(m)} entries, expected {n}")
    for x, y in enumerate(m):
        if not (0 <= y < n) or y == x or m[y] != x:
            raise GemError(f"{name} is not a matching (vertex {x})")


@dataclass(frozen=True)
class Gem:
    red: tuple[int, ...]
    yellow: tuple[int, ...]
    blue: tuple[int, ...]
    edge_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        for name in COLOURS:
            object.__setattr__(self, name, tuple(getattr(self, name)))
        n = len(self.red)
        if n == 0:
            raise GemError("gem has no vertices")
        for name in COLOURS:
            _check_matching(name, getattr(self, name), n)
        if self.edge_names is not None:
            object.__setattr__(self, "edge_names", tuple(self.edge_names))

    @property
    def n(self) -> int:
        return len(self.red)

    @property
    def num_edges(self) -> int:
        return self.n // 4

    def matching(self, colour: str) -> tuple[int, ...]:
        return getattr(self, colour)

    def pairs(self, colour: str) -> list[tuple[int, int]]:
        m = self.matching(colour)
        return [(x, y) for x, y in enumerate(m) if x < y]

    @property
    def edge_anchor(self) -> dict[int, tuple[int, int, int, int]]:
        return {e: (4 * e, 4 * e + 1, 4 * e + 2, 4 * e + 3) for e in range(self.num_edges)}

    def edge_name(self, e: int) -> str:
        if self.edge_names is not None and e < len(self.edge_names):
            return self.edge_names[e]
        return f"e{e}"

    def colour_of(self, x: int, y: int) -> str | None:
        """Colour of the gem edge ``xy``; red/blue win over a parallel yellow."""
        for c in (RED, BLUE, YELLOW):
            if self.matching(c)[x] == y:
                return c
        return None

    @classmethod
    def from_pairs(cls, n, red, yellow, blue, edge_names=None) -> Gem:
        arrays = []
        for name, pairs in ((RED, red), (YELLOW, yellow), (BLUE, blue)):
            m = [-1] * n
            for a, b in pairs:
                if not (0 <= a < n and 0 <= b < n):
                    raise GemError(f"{name} pair ({a}, {b}) out of range")
                if a == b or m[a] != -1 or m[b] != -1:
                    raise GemError(f"{name} is not a matching (pair ({a}, {b}))")
                m[a], m[b] = b, a
            if -1 in m:
                raise GemError(f"{name} is not a matching (vertex {m.index(-1)} uncovered)")
            arrays.append(tuple(m))
        return cls(*arrays, edge_names=edge_names)

    # cached derived structure; valid because instances are immutable

    @cached_property
    def vertex_bigons(self) -> tuple[tuple[int, ...], ...]:
        return tuple(bigons(self, "ry"))

    @cached_property
    def face_bigons(self) -> tuple[tuple[int, ...], ...]:
        return tuple(bigons(self, "by"))

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        """Index of the red-yellow bigon through each gem vertex."""
        return _owner(self.n, self.vertex_bigons)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        return _owner(self.n, self.face_bigons)

    @cached_property
    def corners(self) -> tuple[tuple[int, int], ...]:
        """Yellow edges sorted lexicographically; a corner id is an index here."""
        return tuple(self.pairs(YELLOW))

    @cached_property
    def corner_of(self) -> tuple[int, ...]:
        c = [0] * self.n
        for i, (a, b) in enumerate(self.corners):
            c[a] = c[b] = i
        return tuple(c)


def _owner(n: int, cycles) -> tuple[int, ...]:
    own = [0] * n
    for i, cyc in enumerate(cycles):
        for x in cyc:
            own[x] = i
    return tuple(own)


def _normalize_pair(pair) -> tuple[str, str]:
    if isinstance(pair, str):
        if pair in _PAIR_ALIASES:
            pair = _PAIR_ALIASES[pair]
        else:
            a, _, b = pair.partition("-")
            pair = (a, b)
    a, b = pair
    if a not in COLOURS or b not in COLOURS or a == b:
        raise ValueError(f"bad colour pair {pair!r}")
    return tuple(sorted((a, b)))


def bigons(g: Gem, pair) -> list[tuple[int, ...]]:
    """Alternating two-colour cycles, as gem-vertex sequences.

    Cycles are listed by smallest vertex; each starts there and leaves along
    the alphabetically smaller colour.
    """
    first, second = _normalize_pair(pair)
    m1, m2 = g.matching(first), g.matching(second)
    seen = [False] * g.n
    out = []
    for x0 in range(g.n):
        if seen[x0]:
            continue
        cyc = []
        x, use_first = x0, True
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = m1[x] if use_first else m2[x]
            use_first = not use_first
        out.append(tuple(cyc))
    return out


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[tuple[str, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_gem(g: Gem) -> ValidationReport:
    """Check every gem invariant; failures become report entries."""
    v: list[tuple[str, str]] = []
    if g.n % 4:
        v.append(("size-not-multiple-of-4", f"n={g.n}"))
    for x in range(g.n):
        if x < g.red[x] and g.red[x] == g.blue[x]:
            v.append(("red-blue-parallel", f"({x}, {g.red[x]})"))
    for cyc in bigons(g, "rb"):
        if len(cyc) != 4:
            v.append(("Q-bigon-not-4-cycle", f"{list(cyc)}"))
        elif len({x // 4 for x in cyc}) != 1:
            v.append(("Q-bigon-not-anchored", f"{list(cyc)}"))
    if not _gem_connected(g):
        v.append(("disconnected", f"{len(_components(g))} components"))
    return ValidationReport(tuple(v))


def require_valid(g: Gem) -> Gem:
    report = validate_gem(g)
    if not report.ok:
        raise InvalidGemError(report)
    return g


def _components(g: Gem) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in (g.red[x], g.yellow[x], g.blue[x]):
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(comp)
    return comps


def _gem_connected(g: Gem) -> bool:
    return len(_components(g)) == 1


def is_bipartite(g: Gem) -> bool:
    side = [-1] * g.n
    side[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in (g.red[x], g.yellow[x], g.blue[x]):
            if side[y] == -1:
                side[y] = 1 - side[x]
                queue.append(y)
            elif side[y] == side[x]:
                return False
    return True


@dataclass(frozen=True)
class EmbeddingSummary:
    vertex_bigons: tuple[tuple[int, ...], ...]
    face_bigons: tuple[tuple[int, ...], ...]
    edge_bigons: tuple[tuple[int, ...], ...]
    orientable: bool

    @property
    def V(self) -> int:
        return len(self.vertex_bigons)

    @property
    def E(self) -> int:
        return len(self.edge_bigons)

    @property
    def F(self) -> int:
        return len(self.face_bigons)

    @property
    def euler_characteristic(self) -> int:
        return self.V - self.E + self.F

    @property
    def euler_genus(self) -> int:
        return 2 - self.euler_characteristic

    @property
    def genus(self) -> int:
        """Orientable genus, or crosscap number for nonorientable surfaces."""
        return self.euler_genus // 2 if self.orientable else self.euler_genus

    def line(self) -> str:
        kind = "orientable" if self.orientable else "nonorientable"
        return (
            f"V={self.V} E={self.E} F={self.F} χ={self.euler_characteristic} "
            f"{kind} genus={self.genus}"
        )


def summary(g: Gem) -> EmbeddingSummary:
    edge_bigons = [None] * g.num_edges
    for cyc in bigons(g, "rb"):
        edge_bigons[min(cyc) // 4] = cyc
    return EmbeddingSummary(g.vertex_bigons, g.face_bigons, tuple(edge_bigons), is_bipartite(g))


def _sides(sig: int, end: int) -> tuple[int, int]:
    """(counterclockwise side, clockwise side) of a dart, as sides of its edge."""
    if end == 0 or sig == -1:
        return 0, 1
    return 1, 0


def gem_from_rotation(rot: RotationEmbedding) -> Gem:
    m = rot.edge_count
    n = 4 * m
    red, blue, yellow = [0] * n, [0] * n, [0] * n
    for e in range(m):
        b = 4 * e
        for x, y in ((b, b + 1), (b + 2, b + 3)):
            red[x], red[y] = y, x
        for x, y in ((b + 1, b + 2), (b + 3, b)):
            blue[x], blue[y] = y, x

    def flag(d: Dart, which: int) -> int:
        e, end = d
        return 4 * e + _FLAG[(end, _sides(rot.signatures[e], end)[which])]

    for darts in rot.vertices:
        k = len(darts)
        for i, d in enumerate(darts):
            x = flag(d, 0)
            y = flag(darts[(i + 1) % k], 1)
            yellow[x], yellow[y] = y, x
    return Gem(tuple(red), tuple(yellow), tuple(blue), edge_names=rot.edge_names)


def rotation_from_gem(g: Gem) -> RotationEmbedding:
    """Recover a rotation system in canonical form.

    Vertices follow the red-yellow bigon order and for edge ``e`` the red
    edge containing ``4e`` is end 0.  Each bigon is read from its smallest
    gem vertex, yellow edge first; then local orientations are flipped so
    that a breadth-first spanning tree (from vertex 0, edges by id) is
    untwisted, and each rotation is rotated to start at its smallest dart.
    The result is a fixed point of ``rotation_from_gem(gem_from_rotation(.))``.
    """
    require_valid(g)
    rows: list[list[Dart]] = []
    ccw: dict[Dart, int] = {}
    where: dict[Dart, int] = {}
    for v, cyc in enumerate(g.vertex_bigons):
        x0 = min(cyc)
        x = x0
        darts = []
        while True:
            y = g.yellow[x]
            r = g.red[y]
            e = y // 4
            end = 0 if 4 * e in (y, r) else 1
            darts.append((e, end))
            ccw[(e, end)] = r
            where[(e, end)] = v
            x = r
            if x == x0:
                break
        rows.append(darts)
    sig = [-1 if g.blue[ccw[(e, 0)]] == ccw[(e, 1)] else 1 for e in range(g.num_edges)]

    flip = [False] * len(rows)
    seen = [False] * len(rows)
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for e, end in sorted(rows[v]):
            w = where[(e, 1 - end)]
            if not seen[w]:
                seen[w] = True
                flip[w] = flip[v] ^ (sig[e] == -1)
                queue.append(w)
    for e in range(g.num_edges):
        if flip[where[(e, 0)]] != flip[where[(e, 1)]]:
            sig[e] = -sig[e]
    vertices = []
    for v, darts in enumerate(rows):
        if flip[v]:
            darts = darts[::-1]
        i = darts.index(min(darts))
        vertices.append(tuple(darts[i:] + darts[:i]))
    return RotationEmbedding(tuple(vertices), tuple(sig), g.edge_names)


def is_isomorphic(g1: Gem, g2: Gem) -> bool:
    """Colour-preserving isomorphism mapping each Q_e onto Q_e.

    Fixing the image of vertex 0 determines the rest by propagation, so at
    most four candidates are checked.
    """
    if g1.n != g2.n:
        return False
    for start in range(4):
        phi = [-1] * g1.n
        phi[0] = start
        queue = deque([0])
        ok = True
        while queue and ok:
            x = queue.popleft()
            for c in COLOURS:
                y, y2 = g1.matching(c)[x], g2.matching(c)[phi[x]]
                if phi[y] == -1:
                    if y2 // 4 != y // 4:
                        ok = False
                        break
                    phi[y] = y2
                    queue.append(y)
                elif phi[y] != y2:
                    ok = False
                    break
        if ok and -1 not in phi and len(set(phi)) == g1.n:
            return True
    return False
