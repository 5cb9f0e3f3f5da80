"""
Cleaning the minor lamination
=============================

Erase minors whose orbit is not fixed-return and look at what remains.
"""

from quadlam import build_qml_l, limit_class_of_qlam, minor_equivalence_classes

r = build_qml_l(5)
print(len(r.kept), "kept,", len(r.erased), "erased,", len(r.retained_points), "points retained")
print("kept:", ", ".join(str(m) for m in r.kept))

# a primitive minor gives one class with three witnesses
for c in limit_class_of_qlam("3/7 4/7".split()):
    print(c.report_line("airplane"))

# a satellite minor splits into two classes, one per endpoint
classes = []
for c in limit_class_of_qlam(("1/7", "2/7")):
    print(c.report_line("rabbit"))
    classes.append(c)

# minor sets that touch are chained into blocks
items = [(f"rabbit-{i}", c.minor_set) for i, c in enumerate(classes)]
items.append(("rabbit", ("1/7", "2/7")))
print(minor_equivalence_classes(items).blocks)
