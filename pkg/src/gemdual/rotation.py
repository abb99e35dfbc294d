"""Rotation systems with edge signatures.

A dart is a pair ``(edge, end)`` with ``end`` in ``{0, 1}``.  Each vertex
carries the cyclic order of its darts; each edge carries a signature
``+1`` (untwisted) or ``-1`` (twisted).
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

Dart = tuple[int, int]


class RotationError(ValueError):
    """Raised when a rotation system violates one of its invariants."""


@dataclass(frozen=True)
class RotationEmbedding:
    vertices: tuple[tuple[Dart, ...], ...]
    signatures: tuple[int, ...]
    edge_names: tuple[str, ...] | None = field(default=None, compare=False)
    vertex_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(tuple(d) for d in v) for v in self.vertices))
        object.__setattr__(self, "signatures", tuple(self.signatures))
        m = len(self.signatures)
        if m < 1:
            raise RotationError("embedding needs at least one edge")
        for e, s in enumerate(self.signatures):
            if s not in (1, -1):
                raise RotationError(f"edge {self.edge_name(e)} has signature {s!r}, expected +1 or -1")
        seen: dict[Dart, int] = {}
        for v, darts in enumerate(self.vertices):
            for d in darts:
                e, end = d
                if not (0 <= e < m) or end not in (0, 1):
                    raise RotationError(f"dart {d!r} at vertex {v} is out of range")
                if d in seen:
                    raise RotationError(f"dart {self.dart_name(d)} appears twice")
                seen[d] = v
        for e in range(m):
            count = ((e, 0) in seen) + ((e, 1) in seen)
            if count != 2:
                raise RotationError(f"edge {self.edge_name(e)} has {count} dart{'s' if count != 1 else ''}")
        if self.edge_names is not None and len(self.edge_names) != m:
            raise RotationError("edge_names length does not match edge count")
        if self.vertex_names is not None and len(self.vertex_names) != len(self.vertices):
            raise RotationError("vertex_names length does not match vertex count")
        if not _connected(self.vertices, seen):
            raise RotationError("underlying graph is disconnected")

    @property
    def edge_count(self) -> int:
        return len(self.signatures)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edge_name(self, e: int) -> str:
        return self.edge_names[e] if self.edge_names is not None else f"e{e}"

    def vertex_name(self, v: int) -> str:
        return self.vertex_names[v] if self.vertex_names is not None else f"v{v}"

    def dart_name(self, d: Dart) -> str:
        return self.edge_name(d[0]) + ("+" if d[1] == 0 else "-")

    def degree(self, v: int) -> int:
        return len(self.vertices[v])

    def dart_positions(self) -> dict[Dart, tuple[int, int]]:
        """Map each dart to ``(vertex, index in rotation)``."""
        return {d: (v, i) for v, darts in enumerate(self.vertices) for i, d in enumerate(darts)}

    def endpoints(self, e: int) -> tuple[int, int]:
        pos = self.dart_positions()
        return pos[(e, 0)][0], pos[(e, 1)][0]

    def is_loop(self, e: int) -> bool:
        u, w = self.endpoints(e)
        return u == w

    def with_signatures(self, signatures: Sequence[int]) -> RotationEmbedding:
        return RotationEmbedding(self.vertices, tuple(signatures), self.edge_names, self.vertex_names)

    @classmethod
    def build(
        cls,
        rotations: Mapping[str, Sequence[tuple[str, int]]],
        signatures: Mapping[str, int] | None = None,
    ) -> RotationEmbedding:
        """Build from named vertices and ``(edge name, end)`` darts.

        Edge ids are assigned in order of first appearance.
        """
        ids: dict[str, int] = {}
        vertices = []
        for darts in rotations.values():
            row = []
            for name, end in darts:
                ids.setdefault(name, len(ids))
                row.append((ids[name], end))
            vertices.append(tuple(row))
        signatures = signatures or {}
        unknown = set(signatures) - set(ids)
        if unknown:
            raise RotationError(f"signature given for unknown edge {sorted(unknown)[0]}")
        sig = tuple(signatures.get(name, 1) for name in ids)
        return cls(tuple(vertices), sig, tuple(ids), tuple(rotations))


def _connected(vertices: Sequence[Sequence[Dart]], where: Mapping[Dart, int]) -> bool:
    if not vertices:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for e, end in vertices[v]:
            w = where[(e, 1 - end)]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _trace(rot: RotationEmbedding, zigzag: bool) -> list[tuple[Dart, ...]]:
    pos = rot.dart_positions()
    states = [((e, end), o) for e in range(rot.edge_count) for end in (0, 1) for o in (1, -1)]
    used = set()
    orbits = []
    for start in states:
        if start in used:
            continue
        walk = []
        corners = []
        d, o = start
        while (d, o) not in used:
            used.add((d, o))
            walk.append(d)
            e, end = d
            o2 = o * rot.signatures[e] * (-1 if zigzag else 1)
            v, i = pos[(e, 1 - end)]
            k = rot.degree(v)
            corners.append((v, i if o2 == 1 else (i - 1) % k))
            d, o = rot.vertices[v][(i + o2) % k], o2
        orbits.append((frozenset(corners), tuple(walk)))
    # each face is traced once in each direction; keep the first traversal
    faces = {}
    for key, walk in orbits:
        faces.setdefault(key, walk)
    return list(faces.values())


def faces(rot: RotationEmbedding) -> list[tuple[Dart, ...]]:
    """Face boundary walks by the signed face-tracing algorithm.

    Each walk lists the darts it leaves along, in order.
    """
    return _trace(rot, zigzag=False)


def petrie_walks(rot: RotationEmbedding) -> list[tuple[Dart, ...]]:
    """Left-right walks: face tracing that switches side at every edge."""
    return _trace(rot, zigzag=True)


def euler_characteristic(rot: RotationEmbedding) -> int:
    return rot.vertex_count - rot.edge_count + len(faces(rot))


def is_orientable(rot: RotationEmbedding) -> bool:
    """True iff some choice of local orientation flips makes every signature +1."""
    pos = rot.dart_positions()
    flip = {0: 1}
    stack = [0]
    while stack:
        v = stack.pop()
        for e, end in rot.vertices[v]:
            w = pos[(e, 1 - end)][0]
            want = flip[v] * rot.signatures[e]
            if w not in flip:
                flip[w] = want
                stack.append(w)
            elif flip[w] != want:
                return False
    return True


def canonical_rotation(rot: RotationEmbedding) -> RotationEmbedding:
    """An equivalent rotation that depends only on edge names and the embedding.

    The root is the ``+`` dart of the edge with the smallest name.  A
    breadth-first search from it fixes each vertex's orientation so that
    tree edges are untwisted, and starts each vertex at the dart it was
    reached through.  Of the two orientations at the root the one with the
    smaller listing wins.  Vertices are renamed ``v0, v1, ...`` in discovery
    order and edge ids follow first appearance, so the result is a fixed
    point of a text round trip.
    """
    pos = rot.dart_positions()
    root = (min(range(rot.edge_count), key=rot.edge_name), 0)
    best = None
    for root_flip in (False, True):
        lines, sig = _canonical_walk(rot, pos, root, root_flip)
        key = (
            [[(rot.edge_name(e), end) for e, end in line] for line in lines],
            sorted(rot.edge_name(e) for e, s in sig.items() if s == -1),
        )
        if best is None or key < best[0]:
            best = (key, lines, sig)
    _, lines, sig = best
    rows = {f"v{i}": [(rot.edge_name(e), end) for e, end in line] for i, line in enumerate(lines)}
    return RotationEmbedding.build(rows, {rot.edge_name(e): s for e, s in sig.items()})


def _canonical_walk(rot, pos, root, root_flip):
    v0, i0 = pos[root]
    flip, start, order = {v0: root_flip}, {v0: i0}, [v0]
    lines = []
    for v in order:
        darts = rot.vertices[v]
        k, i = len(darts), start[v]
        step = -1 if flip[v] else 1
        line = [darts[(i + step * j) % k] for j in range(k)]
        for e, end in line:
            w, j = pos[(e, 1 - end)]
            if w not in flip:
                flip[w] = flip[v] ^ (rot.signatures[e] == -1)
                start[w] = j
                order.append(w)
        lines.append(line)
    sig = {}
    for e in range(rot.edge_count):
        u, w = pos[(e, 0)][0], pos[(e, 1)][0]
        sig[e] = rot.signatures[e] * (-1 if flip[u] != flip[w] else 1)
    return lines, sig


def from_local_geometry(
    num_vertices: int,
    edges: Iterable[tuple[int, int, tuple[float, float]]],
    edge_names: Sequence[str] | None = None,
    vertex_names: Sequence[str] | None = None,
) -> RotationEmbedding:
    """Orientable embedding from edge directions in a planar (or periodic) drawing.

    ``edges`` holds ``(u, w, (dx, dy))`` with the displacement from ``u`` to
    ``w`` in the universal cover.  Darts at a vertex are ordered
    counterclockwise by angle; all signatures are +1.
    """
    at: list[list[tuple[float, Dart]]] = [[] for _ in range(num_vertices)]
    count = 0
    for e, (u, w, (dx, dy)) in enumerate(edges):
        at[u].append((math.atan2(dy, dx), (e, 0)))
        at[w].append((math.atan2(-dy, -dx), (e, 1)))
        count += 1
    vertices = []
    for v, darts in enumerate(at):
        angles = [a for a, _ in darts]
        if len(set(angles)) != len(angles):
            raise RotationError(f"two darts leave vertex {v} in the same direction")
        vertices.append(tuple(d for _, d in sorted(darts)))
    return RotationEmbedding(
        tuple(vertices),
        (1,) * count,
        tuple(edge_names) if edge_names is not None else None,
        tuple(vertex_names) if vertex_names is not None else None,
    )
