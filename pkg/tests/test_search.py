import csv
import io

import pytest
from hypothesis import given, settings, strategies as st

from gemdual.c2c import Verdict, is_closed_2cell
from gemdual.duality import EdgeSubset, partial_dual
from gemdual.gem import gem_from_rotation, summary
from gemdual.generators import (
    gen_bouquet,
    gen_bowtie,
    gen_diamond_band,
    gen_k4,
    gen_loop_plus_link,
    gen_path,
    gen_theta,
    gen_toroidal_grid,
)
from gemdual.search import SearchCapError, find_c2c_duals, fingerprint, oracle_equivalence_sweep

from conftest import rotations


def test_k4_cross_check():
    rep = find_c2c_duals(gen_k4())
    assert rep.total == 64 and rep.exhaustive
    assert {0, 63} <= set(rep.c2c)
    assert rep.disagreements == () and rep.pruned == 0


def test_modes_agree_on_theta():
    g = gen_theta(3)
    reps = {m: find_c2c_duals(g, m) for m in ("direct", "conditions", "cross-check")}
    assert len({r.c2c for r in reps.values()}) == 1
    assert reps["direct"].c2c == (0, 7)


def test_separating_loop_pruned():
    g = gen_loop_plus_link()
    rep = find_c2c_duals(g, audit=True)
    assert rep.c2c == () and rep.pruned == 2 ** g.num_edges
    assert all(r.source == "pruned" for r in rep.records)


def test_cap_refusal():
    g = gen_toroidal_grid(2, 2)
    with pytest.raises(SearchCapError):
        find_c2c_duals(g)
    with pytest.raises(ValueError):
        find_c2c_duals(gen_k4(), mode="fast")


def test_diamond_subset_listed():
    g, d = gen_diamond_band(4)
    rep = find_c2c_duals(g, subsets=[d.mask, 0])
    assert d.mask in rep.c2c and not rep.exhaustive and rep.disagreements == ()


def test_workers_same_result():
    g = gen_bouquet([1, 1, -1])
    assert find_c2c_duals(g, "direct").c2c == find_c2c_duals(gen_bouquet([1, 1, -1]), "direct", workers=1).c2c
    big = gen_theta(9)
    serial = find_c2c_duals(big, "direct")
    parallel = find_c2c_duals(big, "direct", workers=2)
    assert serial.c2c == parallel.c2c and serial.fingerprint == parallel.fingerprint


def test_csv_and_json():
    rep = find_c2c_duals(gen_theta(3))
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert rows[0] == ["bitmask", "verdict", "source", "failing"]
    assert len(rows) == 9 and rows[1][:3] == ["0", "yes", "both-agree"]
    doc = rep.to_json()
    assert doc["sources"] == {"both-agree": 8} and doc["fingerprint"] == fingerprint(gen_theta(3))


@settings(max_examples=25)
@given(rotations(max_edges=6))
def test_complement_symmetry(rot):
    # G^{E\D} is the full dual of G^D, and c2c is preserved by full duality
    g = gem_from_rotation(rot)
    c2c = set(find_c2c_duals(g, "direct").c2c)
    full = (1 << g.num_edges) - 1
    if g.num_edges >= 2:
        assert {full ^ x for x in c2c} == c2c


def test_sweep_examples():
    rep = oracle_equivalence_sweep({"theta": gen_theta(3)}, cap=3)
    assert rep.total == 8 and rep.ok
    rep = oracle_equivalence_sweep([gen_k4()], cap=6)
    assert rep.total == 64 and rep.ok
    g, d = gen_diamond_band(4)
    rep = oracle_equivalence_sweep({"diamond": g}, cap=16, samples=64, extra={"diamond": [d.mask]})
    (entry,) = rep.entries
    assert not entry.exhaustive and entry.subsets >= 3 and rep.ok


def test_obstructed_gems_exhaustive():
    for g in (gen_bowtie(), gen_loop_plus_link(), gen_path(3)):
        assert find_c2c_duals(g, "direct", audit=True).c2c == ()
        assert all(is_closed_2cell(partial_dual(g, m)).verdict is not Verdict.YES for m in range(1 << g.num_edges))
