"""Acceptance gate: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are
written straight to the terminal.
"""

import random
import time
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from quadlam import qml as qml_module
from quadlam.angles import periodic_angles
from quadlam.cleaning import CASE_2A, CASE_2B, build_qml_l, limit_class_of_qlam
from quadlam.cli import main
from quadlam.lamination import (Chord, Lamination, check_sibling_invariant, hausdorff_distance,
                                linked, pairwise_unlinked)
from quadlam.leaffile import read_leaves
from quadlam.pullback import CriticalPortrait, build_pullback, critical_leaf
from quadlam.qml import CARDIOID_EDGE, PRIMITIVE, lavaurs_qml
from quadlam.renorm import (NONTRIVIAL, TRIVIAL, AngleFamily, all_roots, build_qml_nr,
                            check_tuning, oldest_ancestor, tune_chord)

import oracles


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} [{number}] {title}"
        if detail:
            line += f" -- {detail}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return emit


def C(a, b=None):
    return Chord(a, b)


def test_1_minor_counts(report):
    expected = [oracles.minor_count(n) for n in range(2, 13)]
    assert expected == [1, 3, 6, 15, 27, 63, 120, 252, 495, 1023, 2010]
    qml_module._lavaurs.cache_clear()
    start = time.perf_counter()
    minors = lavaurs_qml(12)
    elapsed = time.perf_counter() - start
    got = [sum(1 for m in minors if m.period == n) for n in range(2, 13)]
    report(1, "minor counts for periods 2..12", got == expected and elapsed < 10,
           f"counts {got}, {elapsed:.2f} s")


def test_2_unlinked(report):
    qml = [m.chord for m in lavaurs_qml(12)]
    ok_qml = pairwise_unlinked(qml)
    kept_l = build_qml_l(8).leaves()
    ok_l = pairwise_unlinked(kept_l)
    r = build_qml_nr(8, 6)
    nr = [m.chord for m in r.kept] + list(r.v_gap_edges) + list(r.ca_nr_edges)
    ok_nr = pairwise_unlinked(nr)
    report(2, "QML(12), QML^l(8) and QML^nr(8, depth 6) are unlinked", ok_qml and ok_l and ok_nr,
           f"{len(qml)} / {len(kept_l)} / {len(nr)} leaves: {ok_qml} {ok_l} {ok_nr}")


def test_3_cleaning_partition(report):
    r = build_qml_l(4)
    kept = {m.chord for m in r.kept}
    erased = {m.chord for m in r.erased}
    oracle_kept = {m.chord for m in lavaurs_qml(4)
                   if oracles.fixed_return((Fraction(m.a), Fraction(m.b)))}
    want_erased = {C("1/3", "2/3"), C("1/7", "2/7"), C("5/7", "6/7"),
                   C("1/15", "2/15"), C("13/15", "14/15"), C("2/5", "3/5")}
    want_kept = {C("3/7", "4/7"), C("1/5", "4/15"), C("7/15", "8/15"), C("11/15", "4/5")}
    ok = kept == want_kept == oracle_kept and erased == want_erased
    report(3, "kept and erased minors of period <= 4", ok,
           f"kept {sorted(map(str, kept))}")


def test_4_limit_classes(report):
    air = limit_class_of_qlam(C("3/7", "4/7"))
    ok_air = (len(air) == 1 and air[0].tag == CASE_2B and len(air[0].witnesses) == 3
              and air[0].minor_set == C("3/7", "4/7"))
    rabbit = limit_class_of_qlam(C("1/7", "2/7"))
    ok_rabbit = (len(rabbit) == 2 and all(c.tag == CASE_2A for c in rabbit)
                 and {c.minor_set for c in rabbit} == {C("1/7"), C("2/7")})
    report(4, "limit classes of the airplane and the rabbit", ok_air and ok_rabbit,
           f"airplane {len(air)} class(es), rabbit {len(rabbit)} class(es)")


def test_5_tuning_identities(report):
    start = time.perf_counter()
    family = AngleFamily.up_to_denominator(1023)
    roots = all_roots(5)
    results = [check_tuning(r, family) for r in roots]
    elapsed = time.perf_counter() - start
    bad = [(str(r.minor), c) for r, c in zip(roots, results)
           if c.semiconjugacy_failures or c.roundtrip_failures]
    report(5, "tuning semiconjugacy and round trip, roots of period <= 5, denominators <= 1023",
           len(roots) == 25 and not bad and elapsed < 30,
           f"{len(roots)} roots x {family.image.shape[0]} angles, {len(bad)} failing, {elapsed:.1f} s")


def test_6_renormalization_erasure(report):
    max_period = 12
    r = build_qml_nr(max_period, 2)
    erased = {m.chord for m in r.erased}
    pool = all_roots(6)
    problems = []
    count = 0
    for root in all_roots(4):
        if root.ctype == PRIMITIVE:
            want = (NONTRIVIAL, root)
        elif root.ctype == CARDIOID_EDGE:
            want = (TRIVIAL, None)
        else:
            want = tuple(oldest_ancestor(root.minor, pool))
        for m in lavaurs_qml(3):
            tuned = tune_chord(root, m)
            count += 1
            if tuned not in erased:
                problems.append(f"{tuned} kept")
            got = tuple(oldest_ancestor(tuned, all_roots(max_period // 2)))
            if got != want:
                problems.append(f"{tuned} ancestor {got}")
    report(6, "tuned minors are erased and keep their ancestor", not problems,
           f"{count} tuned minors, {len(problems)} problems {problems[:3]}")


def test_7_pullback_sibling_invariance(report):
    portraits = [critical_leaf(x) for n in range(1, 7) for x in periodic_angles(n)]
    half = Fraction(1, 2)
    for m in lavaurs_qml(6):
        a, b = Fraction(m.a) / 2, Fraction(m.b) / 2
        portraits.append(CriticalPortrait((a, a + half, b, b + half)))
    failing = []
    for p in portraits:
        lam = build_pullback(p, 8)
        v = check_sibling_invariant(lam, 7)
        if v:
            failing.append((str(p), str(v[0])))
    report(7, "pullbacks of periodic portraits of period <= 6 at depth 8 are sibling invariant",
           not failing, f"{len(portraits)} portraits, {len(failing)} with violations {failing[:2]}")


def _random_lamination(rng):
    out = []
    for _ in range(rng.randint(1, 6)):
        q = rng.randint(2, 255)
        x, y = rng.randrange(q), rng.randrange(q)
        c = Chord(Fraction(x, q), Fraction(y, q))
        if not c.is_degenerate and all(not linked(c, e) and c != e for e in out):
            out.append(c)
    if not out:
        out.append(Chord("1/3", "2/3"))
    return Lamination(out)


def test_8_hausdorff_metric(report):
    rng = random.Random(20240607)
    bad = []
    for i in range(1000):
        a, b, c = (_random_lamination(rng) for _ in range(3))
        dab, dba = hausdorff_distance(a, b), hausdorff_distance(b, a)
        dbc, dac = hausdorff_distance(b, c), hausdorff_distance(a, c)
        if hausdorff_distance(a, a) != 0 or dab != dba or dac > dab + dbc:
            bad.append(i)
        if (dab == 0) != (set(a) == set(b)):
            bad.append(i)
    report(8, "Hausdorff distance is a metric on 1000 random triples", not bad,
           f"{len(bad)} failing triples")


def test_9_render_cli(report, tmp_path):
    leaves = tmp_path / "qml10.leaves"
    assert main(["gen-qml", "--max-period", "10", "--out", str(leaves)]) == 0
    outs = [tmp_path / "a.svg", tmp_path / "b.svg"]
    codes = [main(["render", "--in", str(leaves), "--out", str(o)]) for o in outs]
    root = ET.parse(outs[0]).getroot()
    paths = len(list(root.iter("{http://www.w3.org/2000/svg}path")))
    n = len(read_leaves(leaves))
    same = outs[0].read_bytes() == outs[1].read_bytes()
    report(9, "rendering QML(10) gives valid SVG, one path per leaf plus the circle, reproducibly",
           codes == [0, 0] and paths == n + 1 and same and root.tag.endswith("svg"),
           f"{n} leaves, {paths} paths, identical={same}")
