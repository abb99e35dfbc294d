"""Small embedded graphs for tests, demos and searches."""

from __future__ import annotations

import random
from collections.abc import Sequence

from .duality import EdgeSubset
from .gem import Gem, gem_from_rotation
from .rotation import RotationEmbedding, from_local_geometry


def theta_rotation(k: int = 3) -> RotationEmbedding:
    """Planar dipole: two vertices joined by ``k`` parallel edges."""
    if k < 1:
        raise ValueError("a dipole needs at least one edge")
    names = [chr(ord("a") + i) if k <= 26 else f"e{i}" for i in range(k)]
    return RotationEmbedding.build(
        {"u": [(x, 0) for x in names], "w": [(x, 1) for x in reversed(names)]}
    )


def gen_theta(k: int = 3) -> Gem:
    if k < 2:
        raise ValueError("gen_theta needs k >= 2")
    return gem_from_rotation(theta_rotation(k))


def bouquet_rotation(signs: Sequence[int], nested: bool = False) -> RotationEmbedding:
    """One vertex with a loop per sign.

    The default rotation interleaves consecutive loops in pairs
    (``a b a b c d c d ...``), so ``[+1, +1]`` is the torus; ``nested``
    gives ``a a b b ...`` instead.
    """
    signs = list(signs)
    if not signs:
        raise ValueError("bouquet needs at least one loop")
    darts = []
    if nested:
        for e in range(len(signs)):
            darts += [(e, 0), (e, 1)]
    else:
        e = 0
        while e < len(signs):
            if e + 1 < len(signs):
                darts += [(e, 0), (e + 1, 0), (e, 1), (e + 1, 1)]
                e += 2
            else:
                darts += [(e, 0), (e, 1)]
                e += 1
    return RotationEmbedding((tuple(darts),), tuple(signs))


def gen_bouquet(signs: Sequence[int], nested: bool = False) -> Gem:
    return gem_from_rotation(bouquet_rotation(signs, nested))


def planar_rotation(points: Sequence[tuple[float, float]], edges: Sequence[tuple[int, int]]) -> RotationEmbedding:
    """Straight-line planar drawing to a rotation system."""
    geo = [(u, w, (points[w][0] - points[u][0], points[w][1] - points[u][1])) for u, w in edges]
    return from_local_geometry(len(points), geo)


def k4_rotation() -> RotationEmbedding:
    pts = [(0.0, 0.0), (0.0, 3.0), (-3.0, -2.0), (3.0, -2.0)]
    return planar_rotation(pts, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])


def gen_k4() -> Gem:
    return gem_from_rotation(k4_rotation())


def cycle_rotation(n: int) -> RotationEmbedding:
    """The cycle ``C_n`` in the plane."""
    if n < 2:
        raise ValueError("cycle needs n >= 2")
    rows = []
    for i in range(n):
        rows.append((((i - 1) % n, 1), (i, 0)))
    return RotationEmbedding(tuple(rows), (1,) * n)


def gen_cycle(n: int) -> Gem:
    return gem_from_rotation(cycle_rotation(n))


def gen_path(n: int) -> Gem:
    """A path with ``n`` edges in the plane (a tree: highly non closed 2-cell)."""
    pts = [(float(i), 0.0) for i in range(n + 1)]
    return gem_from_rotation(planar_rotation(pts, [(i, i + 1) for i in range(n)]))


def gen_bowtie() -> Gem:
    """Two triangles sharing one vertex, drawn in the plane."""
    pts = [(0.0, 0.0), (-2.0, 1.0), (-2.0, -1.0), (2.0, 1.0), (2.0, -1.0)]
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]
    return gem_from_rotation(planar_rotation(pts, edges))


def gen_loop_plus_link() -> Gem:
    """A planar loop at ``u`` plus a pendant edge ``u w``."""
    rot = RotationEmbedding((((0, 0), (0, 1), (1, 0)), ((1, 1),)), (1, 1))
    return gem_from_rotation(rot)


def gen_prism() -> Gem:
    """Triangular prism in the plane (3-connected, 9 edges)."""
    pts = [(0.0, 3.0), (-3.0, -2.0), (3.0, -2.0), (0.0, 1.0), (-1.0, -0.7), (1.0, -0.7)]
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    return gem_from_rotation(planar_rotation(pts, edges))


def gen_k4_torus() -> Gem:
    """K4 on the torus with two faces; not closed 2-cell."""
    rows = (
        ((0, 0), (1, 0), (2, 0)),
        ((0, 1), (4, 0), (3, 0)),
        ((1, 1), (5, 0), (3, 1)),
        ((2, 1), (4, 1), (5, 1)),
    )
    return gem_from_rotation(RotationEmbedding(rows, (1,) * 6))


def toroidal_grid_rotation(m: int, n: int) -> RotationEmbedding:
    """``C_{2m} x C_{2n}`` on the torus; edge ``2i`` goes right, ``2i+1`` up from vertex ``i``."""
    if m < 1 or n < 1:
        raise ValueError("grid sides must be positive")
    cols, rows = 2 * m, 2 * n
    edges, names = [], []
    for y in range(rows):
        for x in range(cols):
            v = y * cols + x
            edges.append((v, y * cols + (x + 1) % cols, (1.0, 0.0)))
            edges.append((v, ((y + 1) % rows) * cols + x, (0.0, 1.0)))
            names += [f"h{x}_{y}", f"v{x}_{y}"]
    return from_local_geometry(cols * rows, edges, edge_names=names)


def gen_toroidal_grid(m: int, n: int) -> Gem:
    if m < 2 or n < 2:
        raise ValueError("gen_toroidal_grid needs m, n >= 2")
    return gem_from_rotation(toroidal_grid_rotation(m, n))


def gen_diagonal_grid(p: int, q: int) -> tuple[Gem, EdgeSubset]:
    """Toroidal grid drawn diagonally, with the ``\\``-direction edges as the subset.

    Vertices are lattice points ``(u, w)`` with ``u + w`` even, taken modulo
    ``(2p, 2q)``; every vertex has a ``/`` edge to ``(u+1, w+1)`` and a ``\\``
    edge to ``(u+1, w-1)``.  Dualizing the ``\\`` edges makes the separation
    graph a standard ``C_{2p} x C_{2q}``-type toroidal grid.
    """
    if p < 1 or q < 1:
        raise ValueError("grid sides must be positive")
    cols, rows = 2 * p, 2 * q
    index = {}
    for u in range(cols):
        for w in range(rows):
            if (u + w) % 2 == 0:
                index[(u, w)] = len(index)
    edges, names = [], []
    for (u, w), i in index.items():
        edges.append((i, index[((u + 1) % cols, (w + 1) % rows)], (1.0, 1.0)))
        names.append(f"up{u}_{w}")
        edges.append((i, index[((u + 1) % cols, (w - 1) % rows)], (1.0, -1.0)))
        names.append(f"dn{u}_{w}")
    g = gem_from_rotation(from_local_geometry(len(index), edges, edge_names=names))
    return g, EdgeSubset.from_edges([e for e in range(len(edges)) if e % 2 == 1], len(edges))


def diamond_band_rotation(k: int) -> tuple[RotationEmbedding, list[int]]:
    """Toroidal band of ``2k`` diamonds (copies of ``K4 - e``) and the vertical-diamond edges.

    The diamond tips form a ``(k/2) x 2`` toroidal grid with unit spacing 4.
    Each grid edge is replaced by a diamond: the two tips plus two side
    vertices, with the tip-to-side edges and a crossbar between the sides.
    """
    if k < 2 or k % 2:
        raise ValueError("diamond band needs an even k >= 2")
    cols, rows = k // 2, 2
    tips = {(x, y): y * cols + x for y in range(rows) for x in range(cols)}
    nverts = len(tips)
    edges, names, vertical = [], [], []

    def diamond(a, b, step, tag):
        nonlocal nverts
        dx, dy = step
        # side vertices sit off the midpoint, perpendicular to the tip axis
        s1, s2 = nverts, nverts + 1
        nverts += 2
        px, py = -dy, dx
        half = (dx / 2, dy / 2)
        side1 = (half[0] + px / 4, half[1] + py / 4)
        side2 = (half[0] - px / 4, half[1] - py / 4)
        local = [
            (a, s1, side1),
            (a, s2, side2),
            (s1, b, (dx - side1[0], dy - side1[1])),
            (s2, b, (dx - side2[0], dy - side2[1])),
            (s1, s2, (side2[0] - side1[0], side2[1] - side1[1])),
        ]
        first = len(edges)
        edges.extend(local)
        names.extend(f"{tag}.{j}" for j in range(5))
        return list(range(first, first + 5))

    for (x, y), a in tips.items():
        diamond(a, tips[((x + 1) % cols, y)], (4.0, 0.0), f"H{x}_{y}")
        vertical += diamond(a, tips[(x, (y + 1) % rows)], (0.0, 4.0), f"V{x}_{y}")
    rot = from_local_geometry(nverts, edges, edge_names=names)
    return rot, vertical


def gen_diamond_band(k: int = 4) -> tuple[Gem, EdgeSubset]:
    rot, vertical = diamond_band_rotation(k)
    g = gem_from_rotation(rot)
    return g, EdgeSubset.from_edges(vertical, g.num_edges)


def random_rotation(num_vertices: int, num_edges: int, rng: random.Random, orientable: bool | None = None) -> RotationEmbedding:
    """Random connected rotation system: a random spanning tree plus extra edges, random rotations and signs."""
    if num_edges < num_vertices - 1 or num_vertices < 1 or num_edges < 1:
        raise ValueError("not enough edges to connect the vertices")
    ends = []
    for v in range(1, num_vertices):
        ends.append((rng.randrange(v), v))
    while len(ends) < num_edges:
        ends.append((rng.randrange(num_vertices), rng.randrange(num_vertices)))
    rng.shuffle(ends)
    at: list[list[tuple[int, int]]] = [[] for _ in range(num_vertices)]
    for e, (u, w) in enumerate(ends):
        at[u].append((e, 0))
        at[w].append((e, 1))
    for darts in at:
        rng.shuffle(darts)
    if orientable:
        sig = (1,) * num_edges
    else:
        sig = tuple(rng.choice((1, -1)) for _ in range(num_edges))
    return RotationEmbedding(tuple(tuple(d) for d in at), sig)


def random_gem(num_vertices: int, num_edges: int, rng: random.Random, orientable: bool | None = None) -> Gem:
    return gem_from_rotation(random_rotation(num_vertices, num_edges, rng, orientable))


def corpus(max_edges: int | None = None) -> dict[str, Gem]:
    """The named test corpus; ``max_edges`` filters by size."""
    items = {
        "theta3": gen_theta(3),
        "theta4": gen_theta(4),
        "bouquet-": gen_bouquet([-1]),
        "bouquet++": gen_bouquet([1, 1]),
        "bouquet+-": gen_bouquet([1, -1]),
        "bouquet++nested": gen_bouquet([1, 1], nested=True),
        "bouquet--+": gen_bouquet([-1, -1, 1]),
        "k4": gen_k4(),
        "k4-torus": gen_k4_torus(),
        "c3": gen_cycle(3),
        "c4": gen_cycle(4),
        "bowtie": gen_bowtie(),
        "loop+link": gen_loop_plus_link(),
        "path3": gen_path(3),
        "prism": gen_prism(),
        "grid2x2": gen_toroidal_grid(2, 2),
        "diamond4": gen_diamond_band(4)[0],
    }
    if max_edges is None:
        return items
    return {k: g for k, g in items.items() if g.num_edges <= max_edges}
