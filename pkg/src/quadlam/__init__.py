"""Quadratic invariant laminations under angle doubling."""

from .angles import (Angle, BinaryExpansion, both_expansions, circle_distance, exact_period,
                     from_binary, make_angle, orbit_info, parse_angle, periodic_angles, sigma,
                     sigma_iter, to_binary)
from .cleaning import (EquivalencePartition, LimitClass, build_qml_l, classify_limit,
                       dendritic_quotient_classes, limit_class_of_qlam,
                       minor_equivalence_classes)
from .lamination import (Chord, CrossingError, FiniteGap, GapClass, Lamination, Violation,
                         chord, chord_distance, chord_length, check_sibling_invariant,
                         classify_finite_gap, extract_gaps, find_crossing, hausdorff_distance,
                         image_chord, is_vertical, linked, pairwise_unlinked)
from .leaffile import parse_leaves, read_lamination, read_leaves
from .pullback import (CriticalPortrait, PullbackError, build_pullback, critical_leaf,
                       critical_quadrilateral, sibling_preimages)
from .qml import (FLIP, MinorLeaf, component_type, is_fixed_return, is_valid_minor,
                  lavaurs_qml, majors_of_minor, minor_count, periodic_major)
from .render import RenderStyle, render_svg
from .renorm import (AncestorResult, HyperbolicRoot, build_qml_nr, hyperbolic_root, in_gap_V,
                     maximal_roots, oldest_ancestor, tune, untune, v_edges)

__version__ = "0.1.0"
