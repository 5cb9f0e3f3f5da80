"""
The quadratic minor lamination
===============================

Generate every minor up to a period bound, count them, and draw them.
"""

from collections import Counter
from pathlib import Path

from quadlam import Lamination, lavaurs_qml, render_svg
from quadlam.qml import component_type, is_fixed_return

out = Path("demo_output")
out.mkdir(exist_ok=True)

# minors come from pairing periodic angles in increasing order of period
minors = lavaurs_qml(9)
print(Counter(m.period for m in minors))

# the first few, with their component types
for m in minors[:10]:
    print(m, component_type(m), "fixed-return" if is_fixed_return(m) else "")

# every minor is a leaf of one lamination, so it can be drawn as one picture
lam = Lamination([m.chord for m in minors], label="minors")
(out / "minors.svg").write_text(render_svg(lam))

# zoom in near the airplane minor 3/7 4/7
(out / "minors_zoom.svg").write_text(render_svg(lam, zoom=(-0.9, 0.0, 6)))
print("wrote", sorted(p.name for p in out.iterdir()))
