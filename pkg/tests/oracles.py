"""Reference implementations used only by the tests.

They work from first principles (rotation systems, plain edge sets) and
avoid the library's gem machinery wherever possible.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations


def trace_orbits(vertices, signatures, keep=None):
    """Orbits of signed face tracing on the rotation restricted to ``keep``.

    Every face boundary shows up as two orbits, one per direction.
    Returns lists of the vertices each orbit leaves from.
    """
    rows = [[d for d in darts if keep is None or d[0] in keep] for darts in vertices]
    where = {}
    for v, darts in enumerate(rows):
        for i, d in enumerate(darts):
            where[d] = (v, i)
    seen = set()
    orbits = []
    for d0 in sorted(where):
        for o0 in (1, -1):
            if (d0, o0) in seen:
                continue
            state = (d0, o0)
            orbit = []
            while state not in seen:
                seen.add(state)
                (e, end), o = state
                orbit.append(where[(e, end)][0])
                w, i = where[(e, 1 - end)]
                o = o * signatures[e]
                nxt = rows[w][(i + o) % len(rows[w])]
                state = (nxt, o)
            orbits.append(orbit)
    return orbits


def face_count(vertices, signatures, keep=None):
    """Boundary components of the (possibly disconnected) sub-embedding; bare vertices count once."""
    orbits = trace_orbits(vertices, signatures, keep)
    assert len(orbits) % 2 == 0
    isolated = sum(1 for darts in vertices if not any(keep is None or d[0] in keep for d in darts))
    return len(orbits) // 2 + isolated


def partial_dual_counts(rot, dset):
    """(V, F) of the partial dual over ``dset`` from sub-embedding boundary counts."""
    m = rot.edge_count
    rest = set(range(m)) - set(dset)
    return face_count(rot.vertices, rot.signatures, set(dset)), face_count(rot.vertices, rot.signatures, rest)


def closed_2cell_by_tracing(rot):
    """Every face walk visits distinct vertices (needs two or more edges)."""
    if rot.edge_count < 2:
        return None
    for orbit in trace_orbits(rot.vertices, rot.signatures):
        if len(set(orbit)) != len(orbit):
            return False
    return True


def petrie_walk_count(rot):
    """Left-right walks: face tracing that flips orientation on every edge."""
    flipped = tuple(-s for s in rot.signatures)
    return face_count(rot.vertices, flipped)


def gem_edge_list(g):
    out = []
    for colour in ("red", "yellow", "blue"):
        m = getattr(g, colour)
        out += [(colour, x, y) for x, y in enumerate(m) if x < y]
    return out


def _connected_without(g, removed):
    n = g.n
    adj = [[] for _ in range(n)]
    for colour in ("red", "yellow", "blue"):
        m = getattr(g, colour)
        for x in range(n):
            key = (colour, min(x, m[x]), max(x, m[x]))
            if key not in removed:
                adj[x].append(m[x])
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == n


def brute_force_cuts(g, k):
    """All minimal edge cuts with at most ``k`` edges, as frozensets of (colour, a, b)."""
    edges = gem_edge_list(g)
    cuts = []
    for size in range(1, k + 1):
        for combo in combinations(edges, size):
            s = frozenset(combo)
            if any(c <= s for c in cuts):
                continue
            if not _connected_without(g, s):
                cuts.append(s)
    return set(cuts)


def incidence_exceptions(g, d):
    """Corners violating the expected purity for their (r-cycle, b-cycle) classes."""
    from gemdual.conditions import corner_table
    from gemdual.duality import DPF, DPV, PPF, PPV, TDB, TPB, trace_partial_dual

    ct = corner_table(g, d)
    tr = trace_partial_dual(g, d)
    r_at, b_at = tr.r_cycle_at(), tr.b_cycle_at()
    bad = []
    for c in ct.corners:
        rk, bk = tr.r_cycles[r_at[c.corner]].kind, tr.b_cycles[b_at[c.corner]].kind
        if rk == TDB and bk == TPB:
            ok = c.mixed or (c.pure_count == 0 and ct.vertex_kind[c.nu] == "mixed" and ct.face_kind[c.phi] == "mixed")
        elif (rk == TDB and bk in (DPV, PPF)) or (bk == TPB and rk in (PPV, DPF)):
            ok = c.pure_count == 1
        else:
            continue
        if not ok:
            bad.append((c.corner, rk, bk, c.label))
    return bad
