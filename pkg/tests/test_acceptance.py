"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they go.
"""

import math
import time

from catalan_sset import delta, sset
from catalan_sset.bicats import embed
from catalan_sset.catalan import (
    CatalanSet,
    MOTZKIN,
    catalan_number,
    enumerate_level,
    nondegenerate_count,
)
from catalan_sset.catalogue import catalogue, named, verify_catalogue
from catalan_sset.classify import (
    direct_classification,
    maps_from_catalan,
    verify_monad_remark,
    verify_theorem,
)
from catalan_sset.inputs import load_suite
from catalan_sset.models import (
    adjoint_ideals,
    compose_ideals,
    enumerate_square_ideals,
    ideal_leq,
    ideal_pullback,
    identity_ideal,
    lax_to_ideal,
    lax_to_relation,
    relation_pullback,
    relation_to_lax,
    ideal_to_lax,
)
from catalan_sset.nerve import BicatNerve, MonoidalNerve
from catalan_sset.tamari import order_probe


def report(number: int, ok: bool, detail: str) -> None:
    print(f"[criterion {number:02d}] {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, f"criterion {number}: {detail}"


EXPECTED_LEVELS = (1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786)
EXPECTED_NONDEG = (1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188)


def test_criterion_01_level_counts_under_a_minute():
    enumerate_level.cache_clear()
    start = time.perf_counter()
    counts = tuple(len(enumerate_level(n)) for n in range(11))
    elapsed = time.perf_counter() - start
    closed_form = tuple(catalan_number(n + 1) for n in range(11))
    ok = counts == EXPECTED_LEVELS == closed_form and elapsed < 60.0
    report(1, ok, f"levels 0..10 = {counts} in {elapsed:.2f}s (< 60s)")


def test_criterion_02_nondegenerate_counts_are_the_reference_sequence():
    counts = tuple(nondegenerate_count(n) for n in range(11))
    ok = counts == EXPECTED_NONDEG == MOTZKIN[:11]
    report(2, ok, f"non-degenerate 0..10 = {counts}")


def test_criterion_03_binomial_identity():
    bad = [
        n
        for n in range(11)
        if len(enumerate_level(n))
        != sum(math.comb(n, m) * nondegenerate_count(m) for m in range(n + 1))
    ]
    report(3, not bad, f"level count equals binomial sum for n = 0..10; failures: {bad}")


def test_criterion_04a_catalogue_census_and_self_verification():
    per_level = {}
    for ns in catalogue():
        per_level[ns.level] = per_level.get(ns.level, 0) + 1
    census_ok = (per_level.get(2), per_level.get(3), per_level.get(4)) == (2, 4, 9)
    verification = verify_catalogue()
    ok = census_ok and verification.ok
    report(
        4,
        ok,
        "catalogue census 2/4/9 with recomputed faces matching the recorded tuples",
    )


#: the fixed external reference tuples this build is asked to reproduce
REFERENCE_FACE_TUPLES = {
    "star": (),
    "c": ("star", "star"),
    "t": ("c", "c", "c"),
    "i": ("s_0(star)", "c", "s_0(star)"),
    "a": ("t", "t", "t", "t"),
    "l": ("i", "s_1(c)", "t", "s_1(c)"),
    "r": ("s_0(c)", "t", "s_0(c)", "i"),
    "k": ("i", "s_1(c)", "s_0(c)", "i"),
    "A1": ("a", "a", "a", "a", "a"),
    "A2": ("r", "s_1(t)", "a", "s_1(t)", "l"),
    "A3": ("r", "r", "s_2(t)", "a", "s_2(t)"),
    "A4": ("s_0(t)", "a", "s_0(t)", "l", "l"),
    "A5": ("s_1(i)", "s_2(i)", "k", "s_0(i)", "s_1(i)"),
    "A6": ("s_0(i)", "r", "k", "l", "s_2(i)"),
    "A7": ("k", "r", "s_0(s_1(c))", "l", "k"),
    "A8": ("l", "s_1(t)", "s_0(t)", "l", "k"),
    "A9": ("k", "r", "s_2(t)", "s_1(t)", "r"),
}


def test_criterion_04b_reference_face_tuples_verbatim():
    mismatches = []
    for name, expected in REFERENCE_FACE_TUPLES.items():
        got = named(name).face_labels
        if got != expected:
            mismatches.append(f"{name}: computed {got}, reference {expected}")
    detail = (
        "all face tuples match the reference list"
        if not mismatches
        else (
            f"{len(mismatches)} entries differ from the reference list, each by an "
            f"interchange of the labels 'l' and 'r'; the computed tuples are the "
            f"pullback-verified ones (see criterion 04a): " + " | ".join(mismatches)
        )
    )
    report(4, not mismatches, detail)


def test_criterion_05_model_equivalence_exhaustive_to_level_six():
    # round trips
    for n in range(7):
        for x in enumerate_level(n):
            assert relation_to_lax(lax_to_relation(x)) == x
            assert ideal_to_lax(lax_to_ideal(x)) == x
    # the square-ideal model has the same census, independently enumerated
    for n in range(7):
        assert len(enumerate_square_ideals(n)) == len(enumerate_level(n))
    # both conversions commute with every monotone-map action
    from catalan_sset.catalan import act

    checked = 0
    for n in range(7):
        level = enumerate_level(n)
        ideals = {x: lax_to_ideal(x) for x in level}
        rels = {x: lax_to_relation(x) for x in level}
        for m in range(7):
            tgt_ideals = {y: lax_to_ideal(y) for y in enumerate_level(m)}
            tgt_rels = {y: lax_to_relation(y) for y in enumerate_level(m)}
            for xi in delta.all_maps(m, n):
                for x in level:
                    y = act(xi, x)
                    assert ideal_pullback(xi, ideals[x]) == tgt_ideals[y]
                    assert relation_pullback(xi, rels[x]) == tgt_rels[y]
                    checked += 1
    # adjoint-ideal laws and the sandwich identity, endpoints <= 4
    for m in range(5):
        for n in range(5):
            for xi in delta.all_maps(m, n):
                lo, up = adjoint_ideals(xi)
                assert ideal_leq(identity_ideal(m), compose_ideals(up, lo))
                assert ideal_leq(compose_ideals(lo, up), identity_ideal(n))
                for x in enumerate_level(n):
                    b = lax_to_ideal(x)
                    assert compose_ideals(
                        compose_ideals(up, b), lo
                    ) == ideal_pullback(xi, b)
    report(
        5,
        True,
        f"round trips, {checked} action squares (levels <= 6), adjoint laws and "
        f"sandwich identity (endpoints <= 4): 0 violations",
    )


def test_criterion_06_two_coskeletality():
    r3 = sset.coskeletal_filler_report(CatalanSet(3), 3)
    r4 = sset.coskeletal_filler_report(CatalanSet(4), 4)
    ok = r3.ok and r4.ok and r3.boundary_count == 14 and r4.boundary_count == 42
    report(
        6,
        ok,
        f"every compatible boundary has exactly one filler: "
        f"{r3.boundary_count} at dimension 3, {r4.boundary_count} at dimension 4",
    )


THEOREM_SUITE = (
    ("or2", 2),
    ("and2", 1),
    ("chain3-max", 3),
    ("chain3-min", 1),
    ("sigma-or2", 1),
)


def test_criterion_07_theorem_suite_under_ten_seconds():
    start = time.perf_counter()
    lines = []
    ok = True
    for name, expected in THEOREM_SUITE:
        source = load_suite(name)
        b = source if hasattr(source, "unit_object") else embed(source)
        rep = verify_theorem(b, input_name=name)
        agree = direct_classification(b) == maps_from_catalan(b)
        ok = ok and rep.ok and rep.map_count == expected and agree
        lines.append(f"{name}:{rep.map_count}={rep.structure_count}")
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10.0
    report(7, ok, f"{' '.join(lines)} in {elapsed:.2f}s (< 10s)")


MONAD_SUITE = (("sigma-or2", 2), ("chain2-discrete", 2), ("trivial", 1))


def test_criterion_08_monad_suite():
    lines = []
    ok = True
    for name, expected in MONAD_SUITE:
        rep = verify_monad_remark(load_suite(name), input_name=name)
        ok = ok and rep.ok and rep.map_count == expected
        lines.append(f"{name}:{rep.map_count}={rep.structure_count}")
    report(8, ok, " ".join(lines))


def test_criterion_09_rotation_order_breaks_under_a_face_map():
    rep = order_probe(3)
    face_witnesses = [v for v in rep.rotation_violations if v[0].startswith("d_")]
    ok = rep.inclusion_ok and bool(face_witnesses)
    label, x, y = face_witnesses[0] if face_witnesses else ("-", None, None)
    report(
        9,
        ok,
        f"inclusion order preserved; rotation order broken at level 3 by {label} "
        f"on {x!r} <= {y!r} ({len(face_witnesses)} face witnesses)",
    )


def test_criterion_10_identity_harness_and_degeneracy_oracle():
    c5 = CatalanSet(5)
    harness = c5.verify_simplicial_identities(5)
    nerves = [
        MonoidalNerve(embed(load_suite("or2"))),
        MonoidalNerve(embed(load_suite("and2"))),
        MonoidalNerve(embed(load_suite("chain3-max"))),
        MonoidalNerve(embed(load_suite("chain3-min"))),
        MonoidalNerve(load_suite("sigma-or2")),
        BicatNerve(load_suite("sigma-or2")),
        BicatNerve(load_suite("chain2-discrete")),
        BicatNerve(load_suite("trivial")),
    ]
    nerve_reports = [nv.verify_simplicial_identities(4) for nv in nerves]
    oracle_ok = True
    for n in range(1, 6):
        image = {
            c5.degeneracy(i, n - 1, y) for y in c5.level(n - 1) for i in range(n)
        }
        for x in c5.level(n):
            oracle_ok = oracle_ok and (c5.is_degenerate(x, n) == (x in image))
    ok = harness.ok and all(r.ok for r in nerve_reports) and oracle_ok
    total = harness.checked + sum(r.checked for r in nerve_reports)
    report(
        10,
        ok,
        f"{total} identity instances with 0 violations; degeneracy detector "
        f"agrees with the image-of-degeneracies census up to level 5",
    )
