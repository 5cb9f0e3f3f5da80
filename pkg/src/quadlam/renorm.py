"""Tuning, untuning, oldest ancestors and the unpinched minor lamination."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import _bitwords as bw
from .angles import Angle, BinaryExpansion, both_expansions, from_binary, sigma, to_binary
from .lamination import Chord
from .qml import (CARDIOID_EDGE, PRIMITIVE, MinorLeaf, as_minor, component_type,
                  is_valid_minor, lavaurs_qml, minor_count)


@dataclass(frozen=True, order=True)
class HyperbolicRoot:
    """A periodic minor viewed as the root of a hyperbolic component.

    ``word_a`` and ``word_b`` are the n-digit binary periods of the lower
    and upper endpoints.
    """

    period: int
    minor: MinorLeaf
    word_a: str
    word_b: str
    ctype: str

    def __str__(self):
        return f"{self.minor} ({self.ctype}, {self.word_a}/{self.word_b})"

    @property
    def chord(self) -> Chord:
        return self.minor.chord


# kernels store words as machine integers
MAX_ROOT_PERIOD = 32


def hyperbolic_root(m, check: bool = True) -> HyperbolicRoot:
    m = as_minor(m)
    if m.is_degenerate:
        raise ValueError("a root needs a non-degenerate minor")
    if m.period > MAX_ROOT_PERIOD:
        raise ValueError(f"roots of period above {MAX_ROOT_PERIOD} are not supported")
    if check and not is_valid_minor(m):
        raise ValueError(f"{m} is not a minor")
    return _root(m)


@lru_cache(maxsize=None)
def _root(m: MinorLeaf) -> HyperbolicRoot:
    wa = to_binary(m.a).period
    wb = to_binary(m.b).period
    return HyperbolicRoot(m.period, m, wa, wb, component_type(m))


@lru_cache(maxsize=None)
def _kernel_args(root: HyperbolicRoot):
    n = root.period
    a, b = int(root.word_a, 2), int(root.word_b, 2)
    return bw.chunk_table(a, b, n), np.uint64(a), np.uint64(b), n


def _pack(bits: str, spare_bits: int = 0) -> np.ndarray:
    nwords = (len(bits) + spare_bits) // 64 + 2
    v = int(bits, 2) if bits else 0
    v <<= nwords * 64 - len(bits)
    return np.frombuffer(v.to_bytes(nwords * 8, "big"), dtype=">u8").astype(np.uint64)


def _unpack(w: np.ndarray, nbits: int) -> str:
    raw = w.astype(">u8").tobytes()
    v = int.from_bytes(raw, "big") >> (len(raw) * 8 - nbits)
    return format(v, f"0{nbits}b")


def tune_expansion(root: HyperbolicRoot, e) -> BinaryExpansion:
    """Canonical expansion after substituting 0 -> word_a and 1 -> word_b."""
    pre, per = e
    table, a, b, n = _kernel_args(root)
    src = _pack(pre + per)
    out = np.zeros((len(pre) + len(per)) * n // 64 + 4, dtype=np.uint64)
    bw.substitute(src, len(pre) + len(per), table, a, b, n, out)
    k, length = bw.canonicalize(out, len(pre) * n, (len(pre) + len(per)) * n)
    bits = _unpack(out, k + length)
    return BinaryExpansion(bits[:k], bits[k:])


def untune_expansion(root: HyperbolicRoot, e):
    """Block-parse an expansion into word_a / word_b blocks, or None."""
    pre, per = e
    table, a, b, n = _kernel_args(root)
    k, length = len(pre), len(per)
    cap = (k + n) + length * n
    src = _pack(pre + per)
    words = cap // 64 + 4
    out = np.zeros(words, np.uint64)
    tmp = np.zeros(words, np.uint64)
    tmp2 = np.zeros(words, np.uint64)
    k2, l2 = bw.block_parse(src, k, length, table, a, b, n, out, tmp, tmp2)
    if k2 < 0:
        return None
    bits = _unpack(out, k2 + l2)
    return BinaryExpansion(bits[:k2], bits[k2:])


def tune(root: HyperbolicRoot, t) -> Angle:
    """Image of t under the tuning map of the root.

    Dyadic angles use their terminating expansion.
    """
    return from_binary(tune_expansion(root, to_binary(Angle(t))))


def tune_chord(root: HyperbolicRoot, c) -> Chord:
    if isinstance(c, MinorLeaf):
        c = c.chord
    elif not isinstance(c, Chord):
        c = Chord(*c)
    return Chord(tune(root, c.a), tune(root, c.b))


def untune(root: HyperbolicRoot, s):
    """Preimage of s under tuning, or None when s is not in the image.

    Both expansions of a dyadic angle are tried.
    """
    for e in both_expansions(Angle(s)):
        r = untune_expansion(root, e)
        if r is not None:
            return from_binary(r)
    return None


def in_gap_V(root: HyperbolicRoot, c) -> bool:
    """Does c sit in the tuning image of the root, other than its minor?"""
    c = c.chord if isinstance(c, MinorLeaf) else c
    if c == root.chord:
        return False
    return untune(root, c.a) is not None and untune(root, c.b) is not None


class AncestorResult(NamedTuple):
    tag: str
    root: HyperbolicRoot | None

    def __str__(self):
        return self.tag if self.root is None else f"{self.tag} {self.root.minor}"


TRIVIAL = "trivial"
NONTRIVIAL = "nontrivial"


def all_roots(max_period: int) -> tuple:
    return tuple(_root(m) for m in lavaurs_qml(max_period))


def oldest_ancestor(m, root_pool) -> AncestorResult:
    """Outermost root whose gap contains m, or m's own root.

    Roots on the main cardioid give the trivial ancestor.
    """
    m = as_minor(m)
    pool = set(root_pool)
    p = m.period
    counts = {}
    for r in pool:
        counts[r.period] = counts.get(r.period, 0) + 1
    for n in range(2, p):
        if p % n == 0 and counts.get(n, 0) < minor_count(n):
            raise ValueError(f"root pool lacks roots of period {n}")
    best = None
    for r in sorted(pool):
        if r.period >= p or p % r.period:
            continue
        if best is not None and r.period > best.period:
            break
        if in_gap_V(r, m):
            if best is not None:
                raise AssertionError(f"{m} lies in two gaps of period {r.period}")
            best = r
    if best is None:
        own = component_type(m)
        if own == CARDIOID_EDGE:
            return AncestorResult(TRIVIAL, None)
        if own == PRIMITIVE:
            return AncestorResult(NONTRIVIAL, hyperbolic_root(m, check=False))
        raise ValueError(f"satellite {m} is not inside any gap of the pool")
    if best.ctype == CARDIOID_EDGE:
        return AncestorResult(TRIVIAL, None)
    return AncestorResult(NONTRIVIAL, best)


class MaximalRoots(NamedTuple):
    type1: tuple
    type2: tuple


def maximal_roots(max_period: int) -> MaximalRoots:
    """Cardioid-edge roots and the primitive roots not inside another gap."""
    roots = all_roots(max_period)
    type1 = tuple(r for r in roots if r.ctype == CARDIOID_EDGE)
    type2 = []
    for r in roots:
        if r.ctype != PRIMITIVE:
            continue
        outer = (x for x in roots if x.period < r.period and r.period % x.period == 0)
        if not any(in_gap_V(x, r.minor) for x in outer):
            type2.append(r)
    return MaximalRoots(type1, tuple(type2))


def v_edges(root: HyperbolicRoot, dyadic_depth: int) -> tuple:
    """Edges of the root's gap over dyadic angles of depth up to dyadic_depth.

    The edge over t = k/2^j joins the tunings of the two expansions of t;
    the root minor is the edge over 0.
    """
    if dyadic_depth < 0:
        raise ValueError("dyadic_depth must be non-negative")
    out = {root.chord}
    for j in range(1, dyadic_depth + 1):
        for k in range(1, 1 << j, 2):
            hi, lo = both_expansions(Angle(k, 1 << j))
            out.add(Chord(from_binary(tune_expansion(root, hi)),
                          from_binary(tune_expansion(root, lo))))
    return tuple(sorted(out))


class NrResult(NamedTuple):
    kept: tuple
    erased: tuple
    v_gap_edges: tuple
    ca_nr_edges: tuple


def build_qml_nr(max_period: int, dyadic_depth: int) -> NrResult:
    """Erase minors inside maximal gaps together with the cardioid edges."""
    minors = lavaurs_qml(max_period)
    roots = maximal_roots(max_period)
    type1_minors = {r.minor for r in roots.type1}
    maximal = sorted(roots.type1 + roots.type2)
    kept, erased = [], []
    for m in minors:
        if m in type1_minors:
            erased.append(m)
            continue
        inside = any(r.period < m.period and m.period % r.period == 0 and in_gap_V(r, m)
                     for r in maximal)
        (erased if inside else kept).append(m)
    vgaps = set()
    for r in roots.type2:
        vgaps.update(v_edges(r, dyadic_depth))
    canr = set()
    for r in roots.type1:
        canr.update(e for e in v_edges(r, dyadic_depth) if e != r.chord)
    return NrResult(tuple(kept), tuple(erased), tuple(sorted(vgaps)), tuple(sorted(canr)))


class TuningCheck(NamedTuple):
    angles: int
    semiconjugacy_failures: int
    roundtrip_failures: int
    first_failure: Angle | None


class AngleFamily:
    """Canonical expansions of many angles, packed for the compiled checks."""

    def __init__(self, angles):
        self.angles = list(angles)
        index = {a: i for i, a in enumerate(self.angles)}
        exps = [to_binary(a) for a in self.angles]
        image = []
        for a in self.angles:
            j = index.get(sigma(2, a))
            if j is None:
                raise ValueError(f"family is not closed under doubling at {a}")
            image.append(j)
        self.image = np.array(image, dtype=np.int64)
        self.ks = np.array([len(e.preperiod) for e in exps], dtype=np.int64)
        self.ls = np.array([len(e.period) for e in exps], dtype=np.int64)
        nwords = [(len(e.preperiod) + len(e.period)) // 64 + 1 for e in exps]
        self.offs = np.zeros(len(exps), dtype=np.int64)
        if exps:
            self.offs[1:] = np.cumsum(nwords)[:-1]
        chunks = []
        for e, nw in zip(exps, nwords):
            bits = e.preperiod + e.period
            v = int(bits, 2) << (nw * 64 - len(bits))
            chunks.append(v.to_bytes(nw * 8, "big"))
        raw = b"".join(chunks) + bytes(16)
        self.flat = np.frombuffer(raw, dtype=">u8").astype(np.uint64)
        self.order = self._orbit_order()

    def _orbit_order(self) -> np.ndarray:
        # follow doubling cycles so each tuned image can be reused once
        seen = np.zeros(len(self.angles), dtype=bool)
        order = []
        for i in range(len(self.angles)):
            j = i
            while not seen[j]:
                seen[j] = True
                order.append(j)
                j = int(self.image[j])
        return np.array(order, dtype=np.int64)

    @classmethod
    def up_to_denominator(cls, max_den: int) -> AngleFamily:
        from math import gcd

        return cls(Angle(p, q) for q in range(1, max_den + 1) for p in range(q) if gcd(p, q) == 1)


def check_tuning(root: HyperbolicRoot, family: AngleFamily) -> TuningCheck:
    """Exhaustive check of the tuning identities over a family of angles.

    For each angle t it compares sigma^n(tune(t)) with tune(sigma(t)) and
    untune(tune(t)) with t, on canonical expansions, using the same
    compiled kernels as ``tune`` and ``untune``.
    """
    table, a, b, n = _kernel_args(root)
    conj, trip, first = bw.tuning_scan(family.flat, family.offs, family.ks, family.ls,
                                       family.order, family.image, table, a, b, n)
    bad = family.angles[first] if first >= 0 else None
    return TuningCheck(len(family.angles), int(conj), int(trip), bad)
