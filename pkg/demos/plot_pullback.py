"""
Pulling back a critical portrait
================================

Build invariant laminations from a critical leaf or a collapsing
quadrilateral and check them leaf by leaf.
"""

from pathlib import Path

from quadlam import build_pullback, check_sibling_invariant, critical_leaf, render_svg
from quadlam.cleaning import classify_limit
from quadlam.pullback import critical_quadrilateral

out = Path("demo_output")
out.mkdir(exist_ok=True)

# a critical leaf with preperiodic image gives a dendrite
dendrite = build_pullback(critical_leaf("1/12"), 9)
print(dendrite.label, len(dendrite), "leaves")

# the quadrilateral over the airplane minor
quad = critical_quadrilateral("3/14", "2/7", "5/7", "11/14")
airplane = build_pullback(quad, 9)
print(airplane.label, len(airplane), "leaves")
print(classify_limit(quad).tag)

# every stored leaf has its image and its sibling
print(check_sibling_invariant(airplane, 8) or "no violations")

(out / "airplane.svg").write_text(render_svg([dendrite, airplane]))
