import pytest
from hypothesis import given, strategies as st

from gemdual.c2c import Verdict, bad_pairs, is_closed_2cell, loops, obstruction_persists, separating_features
from gemdual.cuts import yellow_two_cuts
from gemdual.duality import EdgeSubset, partial_dual
from gemdual.gem import gem_from_rotation, rotation_from_gem
from gemdual.generators import gen_bouquet, gen_bowtie, gen_k4, gen_loop_plus_link, gen_path, gen_theta

from conftest import rotations
from oracles import closed_2cell_by_tracing, trace_orbits


def test_bad_pairs_examples():
    assert bad_pairs(gen_k4()) == []
    assert bad_pairs(gen_loop_plus_link())
    bp = bad_pairs(partial_dual(gen_k4(), [0]))
    assert bp and all(len(p.corners) >= 2 for p in bp)
    assert bp == sorted(bp, key=lambda p: (p.vertex, p.face))


def test_bad_pair_corners_lie_on_both_bigons():
    g = gen_bowtie()
    for p in bad_pairs(g):
        for a, b in p.corners:
            assert {a, b} <= set(g.vertex_bigons[p.vertex])
            assert {a, b} <= set(g.face_bigons[p.face])


def test_closed_2cell_examples():
    assert is_closed_2cell(gen_k4()).verdict is Verdict.YES
    assert is_closed_2cell(gen_theta(3)).verdict is Verdict.YES
    res = is_closed_2cell(gen_loop_plus_link())
    assert res.verdict is Verdict.NO and res.witness == bad_pairs(gen_loop_plus_link())[0]
    assert is_closed_2cell(gen_bouquet([-1])).verdict is Verdict.DEGENERATE
    assert is_closed_2cell(gen_path(1)).verdict is Verdict.DEGENERATE


@given(rotations())
def test_closed_2cell_matches_face_walk_oracle(rot):
    g = gem_from_rotation(rot)
    want = closed_2cell_by_tracing(rot)
    got = is_closed_2cell(g).verdict
    if want is None:
        assert got is Verdict.DEGENERATE
    else:
        assert (got is Verdict.YES) == want


@given(rotations())
def test_loop_implies_bad_pair(rot):
    g = gem_from_rotation(rot)
    if g.num_edges >= 2 and loops(g):
        assert bad_pairs(g)


@given(rotations())
def test_no_bad_pairs_iff_faces_visit_vertices_once(rot):
    g = gem_from_rotation(rot)
    simple = all(len(set(o)) == len(o) for o in trace_orbits(rot.vertices, rot.signatures))
    assert (not bad_pairs(g)) == simple


@given(rotations(), st.integers(0, 2**16 - 1))
def test_yellow_cuts_invariant_under_partial_duality(rot, a):
    g = gem_from_rotation(rot)
    d = EdgeSubset(a % (1 << g.num_edges), g.num_edges)
    assert yellow_two_cuts(partial_dual(g, d)) == yellow_two_cuts(g)


@given(rotations(max_edges=6))
def test_full_dual_of_closed_2cell(rot):
    g = gem_from_rotation(rot)
    if is_closed_2cell(g).verdict is Verdict.YES:
        assert is_closed_2cell(partial_dual(g, EdgeSubset.full(g.num_edges))).verdict is Verdict.YES


def test_separating_features_examples():
    rep = separating_features(gen_k4())
    assert not rep.blocks_all_partial_duals
    assert rep.separating_pairs == () and rep.separating_loops == () and rep.separating_coloops == ()
    bow = separating_features(gen_bowtie())
    assert bow.separating_pairs and bow.blocks_all_partial_duals
    # the cut vertex with the outer face
    (p,) = bow.separating_pairs
    g = gen_bowtie()
    assert len(g.vertex_bigons[p.vertex]) == 8
    torus = separating_features(gen_bouquet([1, 1]))
    assert not torus.blocks_all_partial_duals
    lp = separating_features(gen_loop_plus_link())
    assert lp.separating_loops == (0,) and lp.separating_coloops == (1,)
    assert separating_features(gen_path(3)).separating_coloops == (0, 1, 2)


def test_obstruction_persists():
    g = gen_loop_plus_link()
    for mask in range(4):
        assert obstruction_persists(g, mask)
    k4 = gen_k4()
    for mask in (0, 1, 5, 63):
        assert not obstruction_persists(k4, mask)
    bow = gen_bowtie()
    assert obstruction_persists(bow, EdgeSubset.full(6))


@given(rotations(max_edges=5))
def test_blocking_excludes_every_partial_dual(rot):
    g = gem_from_rotation(rot)
    if separating_features(g).blocks_all_partial_duals:
        for mask in range(1 << g.num_edges):
            assert is_closed_2cell(partial_dual(g, mask)).verdict is not Verdict.YES
            assert obstruction_persists(g, mask)
