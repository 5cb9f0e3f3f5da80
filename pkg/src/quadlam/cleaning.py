"""Cleaning QML into QML^l, limit-lamination classes and minor equivalence."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .angles import Angle, exact_period, sigma
from .lamination import Chord, FiniteGap, forward_orbit, linked
from .pullback import CriticalPortrait, PullbackError, critical_leaf, critical_quadrilateral
from .qml import (MinorLeaf, as_minor, is_fixed_return, is_valid_minor, lavaurs_qml,
                  periodic_major)


class QmlL(NamedTuple):
    kept: tuple
    erased: tuple
    retained_points: tuple

    def leaves(self) -> list:
        """Kept minors together with the retained endpoint points."""
        return sorted([m.chord for m in self.kept] + list(self.retained_points))


def build_qml_l(max_period: int) -> QmlL:
    """Erase every minor whose orbit is not fixed-return, keeping its endpoints."""
    kept, erased = [], []
    for m in lavaurs_qml(max_period):
        (kept if is_fixed_return(m) else erased).append(m)
    points = sorted({Chord(x) for m in erased for x in m.chord})
    return QmlL(tuple(kept), tuple(erased), tuple(points))


CASE_1 = "case-1-finite-critical"
CASE_2A = "case-2a-critical-leaf-periodic-endpoint"
CASE_2B = "case-2b-fixed-return-quadrilateral"
SIEGEL = "siegel-symbolic"
ISOLATED_DENDRITIC = "isolated-dendritic"
ISOLATED_HYPERBOLIC = "isolated-hyperbolic"
NON_ISOLATED = (CASE_1, CASE_2A, CASE_2B, SIEGEL)


@dataclass(frozen=True)
class LimitClass:
    """A class of limit laminations: its case, witness portraits and minor set.

    ``minor_set`` is a Chord, degenerate for a single point, or a FiniteGap
    for a critical polygon.  ``context`` is the minor of the associated
    q-lamination when it is known.
    """

    tag: str
    witnesses: tuple
    minor_set: object
    context: MinorLeaf | None = field(default=None, compare=False)

    @property
    def is_isolated(self) -> bool:
        return self.tag not in NON_ISOLATED

    def report_line(self, identifier: str) -> str:
        ws = "; ".join(str(w) for w in self.witnesses) or "-"
        return f"{identifier}\t{self.tag}\t{ws}"


def siegel_class() -> LimitClass:
    """Symbolic class of a Siegel lamination; it has no rational witness."""
    return LimitClass(SIEGEL, (), None)


# largest period for which a missing context minor is looked up
CONTEXT_LOOKUP_PERIOD = 12


def _lookup_minor(x: Angle, n: int):
    if n > CONTEXT_LOOKUP_PERIOD:
        return None
    for m in lavaurs_qml(max(n, 2)):
        if m.period == n and x in (m.a, m.b):
            return m
    return None


def _check_orbit(portrait: CriticalPortrait):
    edges = portrait.boundary()
    for e in portrait.image_edges():
        for f in forward_orbit(e):
            for b in edges:
                if linked(f, b):
                    raise PullbackError(f"image leaf {f} crosses the portrait edge {b}")


def classify_limit(portrait: CriticalPortrait, context_minor=None) -> LimitClass:
    """Which kind of limit lamination the portrait's pullback is.

    The dendritic test is the rational one: image points strictly
    preperiodic.  For a critical leaf with a periodic endpoint the context
    minor (the minor having the leaf's image as an endpoint) is taken from
    ``context_minor`` or looked up for small periods.
    """
    if not isinstance(portrait, CriticalPortrait):
        portrait = CriticalPortrait(tuple(portrait))
    _check_orbit(portrait)
    pts = portrait.image_points()
    periods = [exact_period(x) for x in pts]
    periodic = [p is not None for p in periods]
    ctx = as_minor(context_minor) if context_minor is not None else None
    if portrait.k == 1:
        x = pts[0]
        if periodic[0]:
            n = periods[0]
            if ctx is None:
                ctx = _lookup_minor(x, n)
            elif x not in (ctx.a, ctx.b):
                raise ValueError(f"{x} is not an endpoint of the context minor {ctx}")
            return LimitClass(CASE_2A, (portrait,), Chord(x), ctx)
        return LimitClass(CASE_1, (portrait,), Chord(x), ctx)
    if any(periodic) and not all(periodic):
        raise ValueError("critical value mixes periodic and preperiodic points")
    if portrait.k == 2:
        img = portrait.image()
        if not all(periodic):
            return LimitClass(CASE_1, (portrait,), img, ctx)
        m = as_minor(img)
        if not is_valid_minor(m):
            raise ValueError(f"{img} is not a minor")
        if is_fixed_return(m):
            return LimitClass(CASE_2B, (portrait,), img, m)
        return LimitClass(ISOLATED_HYPERBOLIC, (portrait,), img, m)
    if all(periodic):
        raise ValueError("a finite critical polygon cannot have periodic image")
    return LimitClass(ISOLATED_DENDRITIC, (portrait,), FiniteGap(pts), ctx)


def limit_class_of_qlam(m) -> tuple:
    """Classes of limit laminations attached to a hyperbolic minor.

    A fixed-return minor gives one class: the two critical leaves at the
    ends of the periodic major and the collapsing quadrilateral on the
    major pair.  Otherwise each end of the periodic major gives its own
    class with a one-point minor set.
    """
    m = as_minor(m)
    if m.is_degenerate or not is_valid_minor(m):
        raise ValueError(f"{m} is not a hyperbolic minor")
    M = periodic_major(m, allow_flip=True)
    a, b = M.a, M.b
    if is_fixed_return(m):
        quad = critical_quadrilateral(a, b, a + Angle(1, 2), b + Angle(1, 2))
        ws = (critical_leaf(a), critical_leaf(b), quad)
        return (LimitClass(CASE_2B, ws, m.chord, m),)
    out = [LimitClass(CASE_2A, (critical_leaf(x),), Chord(sigma(2, x)), m) for x in (a, b)]
    out.sort(key=lambda c: c.minor_set)
    return tuple(out)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def _hull(points) -> object:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return Chord(*pts)
    return FiniteGap(tuple(pts))


@dataclass(frozen=True)
class EquivalencePartition:
    """Blocks of identifiers, each sorted, with the hull of each block's sets."""

    blocks: tuple
    hulls: dict

    def block_of(self, identifier):
        for b in self.blocks:
            if identifier in b:
                return b
        raise KeyError(identifier)

    def __len__(self):
        return len(self.blocks)


def _canonical(blocks: list, sets: dict) -> EquivalencePartition:
    blocks = sorted(tuple(sorted(b)) for b in blocks)
    hulls = {b: _hull(x for i in b for x in sets[i]) for b in blocks}
    return EquivalencePartition(tuple(blocks), hulls)


def _as_set(s) -> tuple:
    if isinstance(s, Chord):
        return (s.a,) if s.is_degenerate else (s.a, s.b)
    if isinstance(s, MinorLeaf):
        return _as_set(s.chord)
    if isinstance(s, (Angle, int, str)) or hasattr(s, "denominator"):
        return (Chord(s).a,)
    return tuple(sorted({Chord(x).a for x in s}))


def minor_equivalence_classes(items) -> EquivalencePartition:
    """Chain-connected blocks of identifiers whose minor sets meet.

    ``items`` are (identifier, minor set) pairs; a minor set is a Chord,
    a MinorLeaf or an angle.  Identifiers must be distinct and sortable.
    """
    items = list(items)
    ids = [i for i, _ in items]
    if len(set(ids)) != len(ids):
        raise ValueError("identifiers must be distinct")
    sets = {i: _as_set(s) for i, s in items}
    uf = _UnionFind(len(items))
    by_point = {}
    for k, i in enumerate(ids):
        for x in sets[i]:
            if x in by_point:
                uf.union(k, by_point[x])
            else:
                by_point[x] = k
    chords = [(k, Chord(*sets[i])) for k, i in enumerate(ids) if len(sets[i]) == 2]
    for p in range(len(chords)):
        for q in range(p + 1, len(chords)):
            if linked(chords[p][1], chords[q][1]):
                uf.union(chords[p][0], chords[q][0])
    groups = {}
    for k, i in enumerate(ids):
        groups.setdefault(uf.find(k), []).append(i)
    return _canonical(list(groups.values()), sets)


def dendritic_quotient_classes(kept, gap_bases) -> EquivalencePartition:
    """Angle classes obtained by collapsing kept leaves and declared gaps.

    Each gap basis becomes one class and each kept minor joins its two
    endpoints; classes are closed under chaining.
    """
    bases = [tuple(sorted({Chord(x).a for x in g})) for g in gap_bases]
    owner = {}
    for j, g in enumerate(bases):
        for x in g:
            if x in owner:
                raise ValueError(f"gap bases {owner[x]} and {j} share the angle {x}")
            owner[x] = j
    angles = sorted(set(owner) | {x for m in kept for x in as_minor(m).chord})
    index = {x: k for k, x in enumerate(angles)}
    uf = _UnionFind(len(angles))
    for g in bases:
        for x in g[1:]:
            uf.union(index[g[0]], index[x])
    for m in kept:
        c = as_minor(m).chord
        uf.union(index[c.a], index[c.b])
    groups = {}
    for x in angles:
        groups.setdefault(uf.find(index[x]), []).append(x)
    return _canonical(list(groups.values()), {x: (x,) for x in angles})
