"""A short tour: partial duals, closed 2-cell checks and the three conditions.

Run with ``python3 demos/walkthrough.py``.
"""

from pathlib import Path

from gemdual import (
    conditions_predict_c2c,
    find_c2c_duals,
    gem_from_rotation,
    is_closed_2cell,
    parse_rotation,
    partial_dual,
    separating_features,
    summary,
)
from gemdual.generators import gen_diagonal_grid, gen_diamond_band

DATA = Path(__file__).parent / "data"


def load(name):
    return gem_from_rotation(parse_rotation((DATA / name).read_text()))


def show(title, g):
    print(f"{title:<28} {summary(g).line()}  closed 2-cell: {is_closed_2cell(g).verdict.value}")


theta = load("theta.rot")
show("theta", theta)
show("theta, dual over {a}", partial_dual(theta, [0]))
show("theta, full dual", partial_dual(theta, [0, 1, 2]))
print()

# dualizing one link of K4 always creates a bad vertex/face pair
k4 = load("k4.rot")
cv = conditions_predict_c2c(k4, [0])
print("K4 with one edge dualized: failing", cv.failing)
for w in cv.gc.witnesses:
    print(f"  clause {w.clause}: vertex cycle {w.r_cycle} and face cycle {w.b_cycle} share corners {list(w.shared_edges)}")
rep = find_c2c_duals(k4)
print(f"K4: {len(rep.c2c)} closed 2-cell partial duals out of {rep.total}, disagreements {len(rep.disagreements)}")
print()

# a separating vertex/face pair rules out every partial dual
bow = load("bowtie.rot")
obs = separating_features(bow)
print("bowtie blocks all partial duals:", obs.blocks_all_partial_duals)
print("bowtie search:", find_c2c_duals(bow, audit=True).c2c)
print()

g, d = gen_diagonal_grid(2, 2)
print("diagonal torus grid, dual over one direction:", conditions_predict_c2c(g, d).predicted_c2c.value)
g, d = gen_diamond_band(4)
cv = conditions_predict_c2c(g, d)
print("diamond band, vertical diamonds dualized:", cv.predicted_c2c.value, "| direct:", is_closed_2cell(partial_dual(g, d)).verdict.value)
