"""Critical portraits and the pullback construction of invariant laminations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .angles import Angle, sigma
from .lamination import Chord, Lamination, chord_length, forward_orbit, image_chord, linked

HALF = Fraction(1, 2)


class PullbackError(ValueError):
    pass


def _in_arc(x, lo, hi, closed=True) -> bool:
    """Is x on the counterclockwise arc from lo to hi?"""
    if lo == hi:
        return closed and x == lo or not closed
    if lo < hi:
        return lo <= x <= hi if closed else lo <= x < hi
    return (x >= lo or x <= hi) if closed else (x >= lo or x < hi)


def _arc_length(lo, hi) -> Fraction:
    return (hi - lo) % 1


@dataclass(frozen=True)
class CriticalPortrait:
    """Critical object of a quadratic lamination.

    ``vertices`` are 2k increasing angles with v[i + k] = v[i] + 1/2, so
    that doubling maps them 2-to-1 onto k points: k = 1 is a critical leaf
    (a diameter), k = 2 a critical quadrilateral, larger k a polygon.
    """

    vertices: tuple

    def __post_init__(self):
        vs = tuple(sorted(Angle(v) for v in self.vertices))
        if len(vs) < 2 or len(vs) % 2 or len(set(vs)) != len(vs):
            raise PullbackError("a critical portrait needs an even number of distinct vertices")
        k = len(vs) // 2
        for i in range(k):
            if vs[i + k] - vs[i] != HALF:
                raise PullbackError(f"vertices {vs[i]} and {vs[i + k]} are not antipodal")
        object.__setattr__(self, "vertices", vs)

    @property
    def kind(self) -> str:
        return {2: "critical-leaf", 4: "critical-quadrilateral"}.get(len(self.vertices), "critical-polygon")

    @property
    def k(self) -> int:
        return len(self.vertices) // 2

    def boundary(self) -> list:
        vs = self.vertices
        if len(vs) == 2:
            return [Chord(vs[0], vs[1])]
        return [Chord(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def image_points(self) -> tuple:
        return tuple(sigma(2, v) for v in self.vertices[: self.k])

    def image_edges(self) -> list:
        pts = self.image_points()
        if len(pts) == 1:
            return []
        if len(pts) == 2:
            return [Chord(*pts)]
        return [Chord(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]

    def image(self) -> Chord:
        """Image chord for k <= 2 (a point for a critical leaf)."""
        pts = self.image_points()
        if len(pts) > 2:
            raise PullbackError("a polygon portrait maps onto a polygon, not a chord")
        return Chord(*pts)

    def __str__(self):
        return " ".join(str(v) for v in self.vertices)


def critical_leaf(x) -> CriticalPortrait:
    x = Angle(x)
    return CriticalPortrait((x, Angle(x + HALF)))


def critical_quadrilateral(*vertices) -> CriticalPortrait:
    if len(vertices) != 4:
        raise PullbackError("a quadrilateral has four vertices")
    return CriticalPortrait(tuple(vertices))


def _pullback_arcs(c: Chord, portrait: CriticalPortrait):
    """Indices i of the vertex arcs [v_i, v_i+1] that map onto the region of c."""
    vs = portrait.vertices
    k = portrait.k
    if k == 1:
        return None
    img = portrait.image_points()
    found = []
    for i in range(k):
        lo, hi = img[i], img[(i + 1) % k]
        if _in_arc(c.a, lo, hi) and _in_arc(c.b, lo, hi):
            found.append(i)
    if not found:
        raise PullbackError(f"{c} crosses the image of the critical portrait")
    if k > 2:
        verts = set(img)
        if c.a in verts and c.b in verts:
            i0, i1 = img.index(c.a), img.index(c.b)
            if (i1 - i0) % k not in (1, k - 1):
                raise PullbackError(f"{c} is a diagonal of the critical value polygon")
    # a chord equal to an image edge lies in two regions; take the shorter arc
    return min(found, key=lambda i: (_arc_length(img[i], img[(i + 1) % k]), i))


def sibling_preimages(c: Chord, portrait: CriticalPortrait) -> tuple:
    """The two preimage chords of c that avoid the critical object.

    Each preimage joins preimages of the two endpoints of c lying on the
    same side of the critical portrait.  For a critical leaf {x, x + 1/2}
    the sides are the half-open arcs [x, x + 1/2) and [x + 1/2, x + 1).
    """
    if c.is_degenerate:
        raise PullbackError("cannot pull back a point as a leaf")
    for e in portrait.boundary():
        if linked(c, e):
            raise PullbackError(f"{c} crosses the critical portrait edge {e}")
    for e in portrait.image_edges():
        if linked(c, e):
            raise PullbackError(f"{c} crosses the critical value edge {e}")
    vs = portrait.vertices
    k = portrait.k
    i = _pullback_arcs(c, portrait)
    if i is None:
        arcs = ((vs[0], vs[1], False), (vs[1], vs[0], False))
    else:
        arcs = ((vs[i], vs[(i + 1) % (2 * k)], True),
                (vs[i + k], vs[(i + k + 1) % (2 * k)], True))
    pre_a = (Angle(c.a / 2), Angle(c.a / 2 + HALF))
    pre_b = (Angle(c.b / 2), Angle(c.b / 2 + HALF))
    out = []
    for lo, hi, closed in arcs:
        xa = [x for x in pre_a if _in_arc(x, lo, hi, closed)]
        xb = [x for x in pre_b if _in_arc(x, lo, hi, closed)]
        if len(xa) != 1 or len(xb) != 1:
            raise PullbackError(f"{c} has no consistent pullback through {portrait}")
        out.append(Chord(xa[0], xb[0]))
    out.sort()
    return tuple(out)


def build_pullback(portrait: CriticalPortrait, depth: int) -> Lamination:
    """Pullback lamination truncated after ``depth`` inverse generations.

    Generation 0 holds the portrait's edges together with the forward orbit
    of its image; generation g + 1 holds the sibling preimages of
    generation g.  Each leaf records the first generation that reached it.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    gen = {}
    for e in portrait.boundary():
        gen[e] = 0
    for e in portrait.image_edges():
        for f in forward_orbit(e):
            if not f.is_degenerate:
                gen.setdefault(f, 0)
    frontier = sorted(gen)
    for g in range(1, depth + 1):
        nxt = []
        for c in frontier:
            for p in sibling_preimages(c, portrait):
                if p not in gen:
                    gen[p] = g
                    nxt.append(p)
        frontier = sorted(nxt)
        if not frontier:
            break
    kind = portrait.kind
    return Lamination(gen, depth=depth, label=f"pullback {kind} {portrait}", generation=gen)


def quadrilateral_from_leaf(m: Chord, root) -> CriticalPortrait:
    """Collapsing quadrilateral over a leaf m on the boundary of a root's gap.

    The four preimages of the endpoints of m form the quadrilateral.  The
    leaf must be the root minor itself or have both endpoints in the
    root's tuning image.
    """
    from .renorm import untune

    if m.is_degenerate:
        raise PullbackError("a degenerate leaf gives a critical leaf, not a quadrilateral")
    if m != root.minor:
        if untune(root, m.a) is None or untune(root, m.b) is None:
            raise PullbackError(f"{m} is not on the boundary of the gap of {root}")
    pts = [Angle(m.a / 2), Angle(m.a / 2 + HALF), Angle(m.b / 2), Angle(m.b / 2 + HALF)]
    return CriticalPortrait(tuple(pts))


def shares_pullback_with(portrait: CriticalPortrait, leaf: Chord, period: int, depth: int) -> int:
    """Count leaves of the truncated pullback that map onto ``leaf`` under
    sigma^period and cross it.  Used as a finite witness only."""
    lam = build_pullback(portrait, depth)
    count = 0
    for c in lam:
        img = c
        for _ in range(period):
            img = image_chord(2, img)
        if img == leaf and linked(c, leaf):
            count += 1
    return count
