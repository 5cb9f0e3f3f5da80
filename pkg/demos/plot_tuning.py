"""
Tuning and the unpinched lamination
===================================

Substitute binary words to copy the whole picture into a small region.
"""

from quadlam import build_qml_nr, hyperbolic_root, tune, untune
from quadlam.renorm import oldest_ancestor, all_roots, tune_chord

basilica = hyperbolic_root(("1/3", "2/3"))
airplane = hyperbolic_root(("3/7", "4/7"))
print(basilica)
print(airplane)

# 0 -> word_a and 1 -> word_b
for t in ("1/3", "1/7", "1/5"):
    s = tune(airplane, t)
    print(t, "->", s, "->", untune(airplane, s))

# a tuned minor remembers where it came from
m = tune_chord(airplane, ("1/3", "2/3"))
print(m, oldest_ancestor(m, all_roots(6)))

# the cardioid edges and the maximal primitive gaps are erased
r = build_qml_nr(8, 3)
print(len(r.kept), "kept,", len(r.erased), "erased,",
      len(r.v_gap_edges), "gap edges,", len(r.ca_nr_edges), "central gap edges")
