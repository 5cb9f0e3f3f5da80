"""Rational angles on the circle R/Z, the doubling map and binary expansions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import NamedTuple


class Angle(Fraction):
    """A reduced rational in [0, 1), read as a point of the circle.

    Angles compare, hash and sort like the fractions they are.  Arithmetic
    falls back to plain ``Fraction`` results; wrap them again with ``Angle``
    to reduce mod 1.
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        if denominator is None:
            if isinstance(numerator, Angle):
                return numerator
            f = Fraction(numerator)
            p, q = f.numerator, f.denominator
        else:
            if denominator == 0:
                raise ZeroDivisionError("angle with zero denominator")
            p, q = numerator, denominator
            if not isinstance(p, int) or not isinstance(q, int):
                f = Fraction(p, q)
                p, q = f.numerator, f.denominator
            if q < 0:
                p, q = -p, -q
            g = gcd(p, q)
            p, q = p // g, q // g
        return cls._raw(p % q, q)

    @classmethod
    def _raw(cls, p: int, q: int) -> Angle:
        # p, q already reduced with 0 <= p < q
        self = object.__new__(cls)
        self._numerator = p
        self._denominator = q
        return self

    def __repr__(self):
        return f"Angle({self._numerator}, {self._denominator})"

    def __str__(self):
        if self._numerator == 0:
            return "0"
        return f"{self._numerator}/{self._denominator}"

    def __reduce__(self):
        return (Angle, (self._numerator, self._denominator))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    @property
    def is_dyadic(self) -> bool:
        q = self._denominator
        return q & (q - 1) == 0

    @property
    def is_periodic(self) -> bool:
        """True when the angle is periodic under doubling (odd denominator)."""
        return self._denominator % 2 == 1


def make_angle(p: int, q: int) -> Angle:
    return Angle(p, q)


def parse_angle(text: str) -> Angle:
    """Read ``p/q`` (or an integer such as ``0``) into an angle."""
    text = text.strip()
    if "/" in text:
        p, _, q = text.partition("/")
        return Angle(int(p), int(q))
    return Angle(int(text), 1)


def sigma(d: int, a: Angle) -> Angle:
    """The angle-multiplication map t -> d*t mod 1."""
    p, q = a.numerator, a.denominator
    if d == 2:
        # 2p/q is already reduced for odd q; for even q halve the denominator
        if q % 2:
            return Angle._raw(2 * p % q, q)
        h = q // 2
        return Angle._raw(p % h, h)
    return Angle(d * p, q)


def sigma_iter(d: int, a: Angle, k: int) -> Angle:
    p, q = a.numerator, a.denominator
    return Angle(p * pow(d, k, q) % q, q)


@lru_cache(maxsize=65536)
def multiplicative_order(base: int, q: int) -> int:
    """Order of ``base`` modulo ``q``; ``q`` must be coprime to ``base``."""
    if q == 1:
        return 1
    if gcd(base, q) != 1:
        raise ValueError(f"{base} is not invertible mod {q}")
    x = base % q
    k = 1
    while x != 1:
        x = x * base % q
        k += 1
    return k


@dataclass(frozen=True)
class OrbitInfo:
    preperiod_length: int
    period_length: int
    orbit: tuple

    @property
    def cycle(self) -> tuple:
        return self.orbit[self.preperiod_length:]


def orbit_info(d: int, a: Angle) -> OrbitInfo:
    """Preperiod, exact period and the orbit up to the first repeat."""
    seen = {}
    orbit = []
    x = Angle(a)
    while x not in seen:
        seen[x] = len(orbit)
        orbit.append(x)
        x = sigma(d, x)
    start = seen[x]
    return OrbitInfo(start, len(orbit) - start, tuple(orbit))


def exact_period(a: Angle) -> int | None:
    """Exact period under doubling, or None if the angle is not periodic."""
    q = a.denominator
    if q % 2 == 0:
        return None
    return multiplicative_order(2, q)


class BinaryExpansion(NamedTuple):
    """Eventually periodic binary expansion ``0.pre(per)(per)...``.

    Both parts are strings of ``0``/``1``; ``period`` is never empty.
    """

    preperiod: str
    period: str

    def __str__(self):
        return f"0.{self.preperiod}({self.period})"

    def shift(self, k: int = 1) -> BinaryExpansion:
        """Drop the first k digits; this is the doubling map on the value."""
        pre, per = self.preperiod, self.period
        if k <= len(pre):
            return BinaryExpansion(pre[k:], per)
        r = (k - len(pre)) % len(per)
        return BinaryExpansion("", per[r:] + per[:r])

    def digits(self, count: int) -> str:
        """The first ``count`` digits of the infinite sequence."""
        pre, per = self.preperiod, self.period
        if count <= len(pre):
            return pre[:count]
        rest = count - len(pre)
        reps = -(-rest // len(per))
        return pre + (per * reps)[:rest]

    def canonical(self) -> BinaryExpansion:
        return to_binary(from_binary(self))

    @property
    def value(self) -> Angle:
        return from_binary(self)


def to_binary(a: Angle) -> BinaryExpansion:
    """Canonical expansion: primitive period, shortest preperiod.

    Dyadic angles get the terminating form ending in 0 repeated.
    """
    p, q = a.numerator, a.denominator
    k = (q & -q).bit_length() - 1
    odd = q >> k
    head, r = divmod(p, odd)
    length = multiplicative_order(2, odd)
    body = r * ((1 << length) - 1) // odd
    pre = format(head, f"0{k}b") if k else ""
    return BinaryExpansion(pre, format(body, f"0{length}b"))


def from_binary(e: BinaryExpansion | tuple) -> Angle:
    """Value of any eventually periodic expansion, reduced mod 1."""
    pre, per = e
    if not per:
        raise ValueError("period must be non-empty")
    k, n = len(pre), len(per)
    head = int(pre, 2) if pre else 0
    body = int(per, 2)
    m = (1 << n) - 1
    return Angle(head * m + body, m << k)


def both_expansions(a: Angle) -> tuple:
    """All binary expansions of ``a``.

    Non-dyadic angles have one.  Dyadic angles have two: the terminating
    form first, then the form ending in 1 repeated.
    """
    e = to_binary(a)
    if not a.is_dyadic:
        return (e,)
    pre = e.preperiod
    if not pre:
        return (e, BinaryExpansion("", "1"))
    # pre ends in 1 for every dyadic angle other than 0
    return (e, BinaryExpansion(pre[:-1] + "0", "1"))


def periodic_angles(n: int) -> list:
    """All angles of exact period n under doubling, in increasing order."""
    if n < 1:
        raise ValueError("period must be at least 1")
    m = (1 << n) - 1
    if n == 1:
        return [Angle(0)]
    out = []
    for k in range(1, m):
        a = Angle(k, m)
        if multiplicative_order(2, a.denominator) == n:
            out.append(a)
    return out


def circle_distance(x: Fraction, y: Fraction) -> Fraction:
    delta = abs(x - y) % 1
    return min(delta, 1 - delta)
