import random

import pytest
from hypothesis import given

from gemdual.cuts import edge_cuts_of_size_le, two_edge_cuts, yellow_two_cuts
from gemdual.gem import gem_from_rotation
from gemdual.generators import gen_bowtie, gen_k4, gen_loop_plus_link, gen_theta

from conftest import rotations
from oracles import brute_force_cuts


def _as_sets(cuts):
    return {frozenset(c.edges) for c in cuts}


def test_k4_has_no_small_cuts():
    cuts = edge_cuts_of_size_le(gen_k4(), 2)
    assert cuts == []
    # frozen from exhaustive enumeration over all edge pairs of the 24-vertex gem
    assert brute_force_cuts(gen_k4(), 2) == set()


def test_k4_three_cuts_isolate_vertices():
    g = gen_k4()
    cuts = edge_cuts_of_size_le(g, 3)
    assert len(cuts) == g.n
    for c in cuts:
        ends = [x for _, a, b in c.edges for x in (a, b)]
        assert max(ends.count(x) for x in ends) == 3


def test_bad_pair_gives_yellow_cut():
    for g in (gen_bowtie(), gen_loop_plus_link()):
        assert yellow_two_cuts(g)


@pytest.mark.parametrize("g", [gen_theta(3), gen_k4(), gen_bowtie(), gen_loop_plus_link()], ids=["theta", "k4", "bowtie", "loop"])
def test_matches_brute_force(g):
    assert _as_sets(edge_cuts_of_size_le(g, 3)) == brute_force_cuts(g, 3)


@given(rotations(max_vertices=4, max_edges=5))
def test_random_matches_brute_force(rot):
    g = gem_from_rotation(rot)
    k = 3 if g.n <= 20 else 2
    assert _as_sets(edge_cuts_of_size_le(g, k)) == brute_force_cuts(g, k)


@given(rotations())
def test_parity_and_gem_edge_connectivity(rot):
    g = gem_from_rotation(rot)
    cuts = edge_cuts_of_size_le(g, 3)
    assert all(c.size >= 2 for c in cuts)
    assert all(c.satisfies_parity() for c in cuts)
    twos = [c for c in cuts if c.size == 2]
    assert all(c.monochromatic for c in twos)
    if g.n > 4 and twos:
        assert any(c.monochromatic == "yellow" for c in twos)
    if not twos:
        for c in cuts:
            ends = [x for _, a, b in c.edges for x in (a, b)]
            assert max(ends.count(x) for x in ends) == 3


def test_seed_does_not_change_result():
    g = gen_bowtie()
    assert _as_sets(edge_cuts_of_size_le(g, 3, seed=1)) == _as_sets(edge_cuts_of_size_le(g, 3, seed=99))


def test_bad_k():
    with pytest.raises(ValueError):
        edge_cuts_of_size_le(gen_k4(), 4)
