"""Chords, finite laminations, the chord metric, gaps and sibling checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .angles import Angle, circle_distance, orbit_info, parse_angle, sigma


@dataclass(frozen=True, order=True, slots=True)
class Chord:
    """Unordered pair of angles stored with a <= b; degenerate when a == b."""

    a: Angle
    b: Angle

    def __init__(self, x, y=None):
        x = _as_angle(x)
        y = x if y is None else _as_angle(y)
        if y < x:
            x, y = y, x
        object.__setattr__(self, "a", x)
        object.__setattr__(self, "b", y)

    @property
    def is_degenerate(self) -> bool:
        return self.a == self.b

    @property
    def endpoints(self) -> tuple:
        return (self.a, self.b)

    def __iter__(self):
        return iter((self.a, self.b))

    def __str__(self):
        if self.a == self.b:
            return str(self.a)
        return f"{self.a} {self.b}"

    def __repr__(self):
        return f"Chord({self})"

    def contains_point(self, x) -> bool:
        return x == self.a or x == self.b


def _as_angle(x) -> Angle:
    if isinstance(x, Angle):
        return x
    if isinstance(x, str):
        return parse_angle(x)
    return Angle(x)


def chord(x, y=None) -> Chord:
    return Chord(x, y)


def linked(c1: Chord, c2: Chord) -> bool:
    """Do the chords cross inside the open disk?"""
    a, b = c1.a, c1.b
    x, y = c2.a, c2.b
    if a == b or x == y:
        return False
    if a == x or a == y or b == x or b == y:
        return False
    return (a < x < b) != (a < y < b)


def disjoint(c1: Chord, c2: Chord) -> bool:
    """Disjoint as closed sets: no common endpoint and no crossing."""
    if {c1.a, c1.b} & {c2.a, c2.b}:
        return False
    return not linked(c1, c2)


def chord_length(c: Chord) -> Fraction:
    return circle_distance(c.a, c.b)


def image_chord(d: int, c: Chord) -> Chord:
    return Chord(sigma(d, c.a), sigma(d, c.b))


def is_vertical(c: Chord) -> bool:
    """Invariant under complex conjugation, i.e. a + b = 0 mod 1."""
    return (c.a + c.b) % 1 == 0


def chord_distance(c1: Chord, c2: Chord) -> Fraction:
    """Distance on the space of chords: best matching of endpoints, worst pair."""
    straight = max(circle_distance(c1.a, c2.a), circle_distance(c1.b, c2.b))
    crossed = max(circle_distance(c1.a, c2.b), circle_distance(c1.b, c2.a))
    return min(straight, crossed)


class CrossingError(ValueError):
    def __init__(self, first: Chord, second: Chord):
        super().__init__(f"leaves {first} and {second} cross")
        self.pair = (first, second)


def find_crossing(chords: Iterable[Chord]):
    """Return one crossing pair, or None if the chords are pairwise unlinked.

    Each chord is the interval [a, b] of [0, 1).  Two chords cross exactly
    when their intervals overlap without nesting and without a shared
    endpoint, so an unlinked family is a laminar family of intervals.  A
    sweep that closes intervals innermost-first and opens outermost-first
    finds a violation in O(n log n).
    """
    items = sorted({c for c in chords if not c.is_degenerate})
    events = {}
    for idx, c in enumerate(items):
        events.setdefault(c.a, ([], []))[1].append(idx)
        events.setdefault(c.b, ([], []))[0].append(idx)
    stack = []
    for x in sorted(events):
        closing, opening = events[x]
        closing.sort(key=lambda i: items[i].a, reverse=True)
        for i in closing:
            top = stack.pop()
            if top != i:
                return (items[i], items[top])
        opening.sort(key=lambda i: items[i].b, reverse=True)
        stack.extend(opening)
    return None


def pairwise_unlinked(chords: Iterable[Chord]) -> bool:
    return find_crossing(chords) is None


class Lamination:
    """A finite set of pairwise unlinked non-degenerate chords.

    Points of the circle are implicit members.  ``generation`` optionally
    records, for each leaf, the pullback step that produced it.
    """

    __slots__ = ("degree", "leaves", "depth", "label", "generation", "_set")

    def __init__(self, leaves: Iterable = (), degree: int = 2, depth=None,
                 label: str = "", generation=None, validate: bool = True):
        chords = set()
        for c in leaves:
            if not isinstance(c, Chord):
                c = Chord(*c)
            if not c.is_degenerate:
                chords.add(c)
        if validate:
            bad = find_crossing(chords)
            if bad is not None:
                raise CrossingError(*bad)
        self.degree = degree
        self.leaves = tuple(sorted(chords))
        self._set = frozenset(chords)
        self.depth = depth
        self.label = label
        self.generation = dict(generation) if generation else {}

    def __len__(self):
        return len(self.leaves)

    def __iter__(self):
        return iter(self.leaves)

    def __contains__(self, c):
        return c in self._set

    def __eq__(self, other):
        if not isinstance(other, Lamination):
            return NotImplemented
        return self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def __repr__(self):
        return f"Lamination({len(self.leaves)} leaves, label={self.label!r})"

    def union(self, *others, label: str = "") -> Lamination:
        leaves = set(self.leaves)
        for o in others:
            leaves.update(o)
        return Lamination(leaves, degree=self.degree, label=label or self.label)

    def endpoints(self) -> list:
        return sorted({x for c in self.leaves for x in c})

    def generation_of(self, c: Chord) -> int:
        return self.generation.get(c, 0)


def hausdorff_distance(l1, l2) -> Fraction:
    """Hausdorff distance between two finite laminations in the chord space.

    Both sides implicitly contain every degenerate chord.  A leaf is within
    half its length of the nearest point of the circle, so that term caps
    each nearest-leaf search; points themselves are always at distance 0.
    """
    s1 = {c for c in l1 if not c.is_degenerate}
    s2 = {c for c in l2 if not c.is_degenerate}
    return max(_directed(s1, s2), _directed(s2, s1))


def _directed(src, dst) -> Fraction:
    worst = Fraction(0)
    for c in src:
        if c in dst:
            continue
        best = chord_length(c) / 2
        for e in dst:
            if best <= worst:
                break
            dist = chord_distance(c, e)
            if dist < best:
                best = dist
        if best > worst:
            worst = best
    return worst


@dataclass(frozen=True)
class FiniteGap:
    """Vertices of a finite face, increasing in [0, 1)."""

    vertices: tuple

    def __post_init__(self):
        vs = tuple(sorted({_as_angle(v) for v in self.vertices}))
        if len(vs) < 3:
            raise ValueError("a gap needs at least three vertices")
        object.__setattr__(self, "vertices", vs)

    def edges(self) -> list:
        vs = self.vertices
        return [Chord(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def __len__(self):
        return len(self.vertices)


def extract_gaps(lam) -> list:
    """Faces of the disk cut by the leaves that touch at least 3 endpoints.

    The leaves form a laminar family of intervals.  The face just inside a
    leaf is bounded by that leaf and its maximal sub-leaves; the outer face
    by the maximal leaves.  Faces with only two endpoints are lunes between
    a leaf and the circle and are skipped.
    """
    chords = sorted({c for c in lam if not c.is_degenerate}, key=lambda c: (c.a, -c.b))
    bad = find_crossing(chords)
    if bad is not None:
        raise CrossingError(*bad)
    faces = {None: set()}
    stack = []
    for c in chords:
        while stack and not (stack[-1].a <= c.a and c.b <= stack[-1].b):
            stack.pop()
        parent = stack[-1] if stack else None
        faces[parent].update((c.a, c.b))
        faces[c] = {c.a, c.b}
        stack.append(c)
    gaps = {FiniteGap(tuple(v)) for v in faces.values() if len(v) >= 3}
    return sorted(gaps, key=lambda g: g.vertices)


@dataclass(frozen=True)
class GapClass:
    tag: str
    degree: int
    period: int | None

    TAGS = ("finite-rotational", "finite-non-rotational", "fatou", "siegel-symbolic",
            "caterpillar-symbolic")

    def __str__(self):
        if self.tag == "fatou":
            return f"fatou-degree-{self.degree}"
        return self.tag


def classify_finite_gap(gap: FiniteGap, d: int = 2) -> GapClass:
    """Period, degree and rotation behaviour of a finite gap under sigma_d."""
    if not isinstance(gap, FiniteGap):
        gap = FiniteGap(tuple(gap))
    for v in gap.vertices:
        if not isinstance(v, Fraction):
            raise ValueError(f"vertex {v!r} is not rational")
    current = frozenset(gap.vertices)
    seen = {current: 0}
    sets = [current]
    while True:
        current = frozenset(sigma(d, v) for v in current)
        if current in seen:
            break
        seen[current] = len(sets)
        sets.append(current)
    start = seen[current]
    degree = len(sets[0]) // len(sets[1]) if len(sets) > 1 else 1
    if start > 0:
        return GapClass("finite-non-rotational", degree, None)
    period = len(sets)
    vs = gap.vertices
    index = {v: i for i, v in enumerate(vs)}
    steps = set()
    for i, v in enumerate(vs):
        w = v
        for _ in range(period):
            w = sigma(d, w)
        steps.add((index[w] - i) % len(vs))
    if len(steps) == 1 and 0 not in steps:
        return GapClass("finite-rotational", degree, period)
    return GapClass("finite-non-rotational", degree, period)


def symbolic_gap_class(kind: str, period: int, degree: int, countable_basis: bool = False) -> GapClass:
    """Gap classes that need infinite data, built from a caller's description.

    ``kind`` is ``fatou``, ``siegel`` or ``caterpillar``.  Nothing is
    inferred: the caller vouches for the description.
    """
    if period < 1:
        raise ValueError("period must be positive")
    if kind == "fatou":
        if degree < 2:
            raise ValueError("a Fatou gap has degree at least 2")
        return GapClass("fatou", degree, period)
    if kind == "siegel":
        if degree != 1 or countable_basis:
            raise ValueError("a Siegel gap has degree 1 and an uncountable basis")
        return GapClass("siegel-symbolic", 1, period)
    if kind == "caterpillar":
        if degree != 1 or not countable_basis:
            raise ValueError("a caterpillar gap has degree 1 and a countable basis")
        return GapClass("caterpillar-symbolic", 1, period)
    raise ValueError(f"unknown gap kind {kind!r}")


class Violation(NamedTuple):
    leaf: Chord
    condition: int
    detail: str

    def __str__(self):
        return f"({self.condition}) {self.leaf}: {self.detail}"


def check_sibling_invariant(lam: Lamination, depth_budget: int) -> list:
    """List every failure of the three sibling conditions in a truncation.

    (1) the image of each leaf is a leaf or a point;
    (2) each leaf whose generation is at most ``depth_budget`` has a stored
        preimage leaf (leaves without a recorded generation count as 0);
    (3) each leaf with a non-degenerate image has d - 1 further stored
        leaves with the same image, all pairwise disjoint.
    """
    d = lam.degree
    leaves = lam.leaves
    store = set(leaves)
    by_image = {}
    for c in leaves:
        by_image.setdefault(image_chord(d, c), []).append(c)
    out = []
    for c in leaves:
        img = image_chord(d, c)
        if not img.is_degenerate and img not in store:
            out.append(Violation(c, 1, f"image {img} is not a leaf"))
        if lam.generation_of(c) <= depth_budget and c not in by_image:
            out.append(Violation(c, 2, "no preimage leaf"))
        if not img.is_degenerate:
            siblings = [s for s in by_image[img] if s != c and disjoint(s, c)]
            if not _has_disjoint_family(siblings, d - 1):
                out.append(Violation(c, 3, f"fewer than {d} disjoint leaves map onto {img}"))
    return out


def _has_disjoint_family(cands: list, size: int) -> bool:
    if size <= 0:
        return True
    for i, c in enumerate(cands):
        rest = [e for e in cands[i + 1:] if disjoint(c, e)]
        if _has_disjoint_family(rest, size - 1):
            return True
    return False


def forward_orbit(c: Chord, d: int = 2) -> list:
    """Distinct forward images of a chord, stopping at a repeat or a point."""
    out = []
    seen = set()
    while c not in seen:
        seen.add(c)
        out.append(c)
        if c.is_degenerate:
            break
        c = image_chord(d, c)
    return out


def chord_period(c: Chord, d: int = 2):
    """Least k >= 1 with sigma_d^k(c) == c, or None for non-periodic chords."""
    info = orbit_info(d, c.a)
    if info.preperiod_length:
        return None
    cur = c
    for k in range(1, 2 * info.period_length + 1):
        cur = image_chord(d, cur)
        if cur == c:
            return k
    return None
