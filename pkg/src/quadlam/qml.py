"""Thurston's quadratic minor lamination and the classification of minors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .angles import Angle, exact_period, periodic_angles, sigma
from .lamination import Chord, chord_length, disjoint, image_chord, linked

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


@dataclass(frozen=True, order=True)
class MinorLeaf:
    """A periodic chord together with the exact period of its endpoints."""

    period: int
    chord: Chord

    def __post_init__(self):
        c = self.chord
        if not isinstance(c, Chord):
            c = Chord(*c)
            object.__setattr__(self, "chord", c)
        for x in set(c):
            if exact_period(x) != self.period:
                raise ValueError(f"{x} does not have exact period {self.period}")

    @property
    def a(self) -> Angle:
        return self.chord.a

    @property
    def b(self) -> Angle:
        return self.chord.b

    @property
    def is_degenerate(self) -> bool:
        return self.chord.is_degenerate

    def __str__(self):
        return str(self.chord)


def as_minor(m) -> MinorLeaf:
    """Accept a MinorLeaf, a Chord or a pair of angles."""
    if isinstance(m, MinorLeaf):
        return m
    c = m if isinstance(m, Chord) else Chord(*m)
    pa, pb = exact_period(c.a), exact_period(c.b)
    if pa is None or pb is None:
        raise ValueError(f"{c} has a non-periodic endpoint")
    if pa != pb:
        raise ValueError(f"endpoints of {c} have periods {pa} and {pb}")
    return MinorLeaf(pa, c)


def minor_count(n: int) -> int:
    """Number of period-n minors, from the Moebius count of period-n angles."""
    total = sum(_mobius(n // d) * ((1 << d) - 1) for d in range(1, n + 1) if n % d == 0)
    return total // 2


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def lavaurs_qml(max_period: int) -> tuple:
    """Minors of all periods 2..max_period, sorted by (period, chord)."""
    if max_period < 2:
        raise ValueError("max_period must be at least 2")
    return _lavaurs(max_period)


@lru_cache(maxsize=None)
def _lavaurs(max_period: int) -> tuple:
    if max_period > 2:
        done = list(_lavaurs(max_period - 1))
        periods = [max_period]
    else:
        done = []
        periods = [2]
    for n in periods:
        done.extend(_pair_period(n, [m.chord for m in done]))
    return tuple(done)


def _pair_period(n: int, existing: list) -> list:
    """Pair the period-n angles inside the regions cut out by earlier minors.

    The greedy rule (join each free angle to the next free angle it can
    reach without crossing) pairs consecutive angles within each region,
    because angles of one region are separated from the others by older
    chords and a chord between consecutive angles of a region blocks none
    of the later ones.
    """
    angles = periodic_angles(n)
    events = []
    for idx, c in enumerate(existing):
        events.append((c.a, 2, -c.b, idx))
        events.append((c.b, 0, c.a, idx))
    for x in angles:
        events.append((x, 1, 0, -1))
    events.sort(key=lambda e: (e[0], e[1], e[2]))
    stack = []
    groups = {}
    for x, kind, _, idx in events:
        if kind == 0:
            stack.pop()
        elif kind == 2:
            stack.append(idx)
        else:
            groups.setdefault(stack[-1] if stack else -1, []).append(x)
    out = []
    for members in groups.values():
        if len(members) % 2:
            raise AssertionError(f"odd number of period-{n} angles in a region")
        for i in range(0, len(members), 2):
            out.append(MinorLeaf(n, Chord(members[i], members[i + 1])))
    out.sort()
    return out


def minors_of_period(n: int) -> tuple:
    return tuple(m for m in lavaurs_qml(max(n, 2)) if m.period == n)


FLIP = "flip"


def majors_of_minor(m) -> tuple:
    """The two longest leaves mapping onto the minor m.

    For a point {t} both entries are the critical leaf {t/2, t/2 + 1/2}.
    """
    c = m.chord if isinstance(m, MinorLeaf) else (m if isinstance(m, Chord) else Chord(*m))
    u, v = c.a, c.b
    if u == v:
        crit = Chord(u / 2, u / 2 + HALF)
        return (crit, crit)
    if v - u < HALF:
        first = Chord(u / 2, v / 2 + HALF)
        second = Chord(u / 2 + HALF, v / 2)
    else:
        first = Chord(u / 2, v / 2)
        second = Chord(u / 2 + HALF, v / 2 + HALF)
    return tuple(sorted((first, second)))


def periodic_major(m, allow_flip: bool = False):
    """The major whose endpoints are periodic.

    When the major returns to itself before its endpoints do (the endpoints
    are swapped, as for {1/3, 2/3}), ``FLIP`` is returned unless
    ``allow_flip`` is set, in which case the chord itself comes back.
    """
    m = as_minor(m)
    if m.is_degenerate:
        raise ValueError("a degenerate minor has no periodic major")
    for c in majors_of_minor(m):
        if c.a.is_periodic and c.b.is_periodic:
            if not allow_flip and _is_flipped(c, m.period):
                return FLIP
            return c
    raise ValueError(f"no major of {m} has periodic endpoints")


def _is_flipped(c: Chord, period: int) -> bool:
    cur = c
    for k in range(1, period):
        cur = image_chord(2, cur)
        if cur == c:
            return True
    return False


def chord_orbit(c: Chord, steps: int) -> list:
    out = [c]
    for _ in range(steps - 1):
        out.append(image_chord(2, out[-1]))
    return out


def is_fixed_return(m) -> bool:
    """Are the first (endpoint period) images of m pairwise disjoint?"""
    m = as_minor(m)
    if m.is_degenerate:
        raise ValueError("a degenerate minor is not a leaf")
    orbit = chord_orbit(m.chord, m.period)
    for i in range(len(orbit)):
        for j in range(i + 1, len(orbit)):
            if not disjoint(orbit[i], orbit[j]):
                return False
    return True


CARDIOID_EDGE = "cardioid-edge"
SATELLITE = "satellite"
PRIMITIVE = "primitive"


def component_type(m) -> str:
    """``primitive``, ``cardioid-edge`` or ``satellite``."""
    m = as_minor(m)
    if m.is_degenerate:
        raise ValueError("a degenerate minor has no component type")
    if is_fixed_return(m):
        return PRIMITIVE
    pts = set()
    for x in m.chord:
        y = x
        for _ in range(m.period):
            pts.add(y)
            y = sigma(2, y)
    if _acts_as_rotation(sorted(pts)):
        return CARDIOID_EDGE
    return SATELLITE


def _acts_as_rotation(pts: list) -> bool:
    index = {x: i for i, x in enumerate(pts)}
    steps = {(index[sigma(2, x)] - i) % len(pts) for i, x in enumerate(pts)}
    return len(steps) == 1 and 0 not in steps


def is_valid_minor(c) -> bool:
    """Can the chord be the minor of a quadratic invariant lamination?

    Checks that the forward images of c are pairwise unlinked, that none of
    them is shorter than c, and that none of them crosses a major of c.
    """
    m = as_minor(c)
    if m.is_degenerate:
        return True
    c = m.chord
    length = chord_length(c)
    if length > THIRD:
        return False
    orbit = [c]
    for _ in range(m.period - 1):
        e = image_chord(2, orbit[-1])
        if chord_length(e) < length:
            return False
        orbit.append(e)
    majors = majors_of_minor(c)
    for i, e in enumerate(orbit):
        for M in majors:
            if linked(e, M):
                return False
        for f in orbit[i + 1:]:
            if linked(e, f):
                return False
    return True


def minor_endpoints_map(max_period: int) -> dict:
    """Angle -> minor having it as an endpoint, for periods up to max_period."""
    out = {}
    for m in lavaurs_qml(max_period):
        out[m.a] = m
        out[m.b] = m
    return out
