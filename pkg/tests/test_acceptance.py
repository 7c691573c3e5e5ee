"""End-to-end acceptance checks, one printed verdict line per criterion."""

import json
import time

from weylcells import (
    ArrangementSpec,
    build_cell_automaton,
    build_root_system,
    check_short_long_preset,
    count_words,
    enumerate_regions,
    enumerate_words,
    from_arrangement,
    kl_table,
    right_cell_automaton,
    stable_cell_reports,
    verify_star,
)
from weylcells.cellregions import report_json

import _reference as ref
import _kl_reference as klref


def _verdict(capsys, number, name, ok):
    with capsys.disabled():
        print(f"criterion {number} ({name}): {'PASS' if ok else 'FAIL'}")


def test_criterion_1_region_counts(capsys):
    cases = [
        ("A", 1, 0, 3),
        ("A", 2, 0, 16),
        ("G", 2, 0, 49),
        ("A", 2, 1, 49),
        ("C", 2, 1, 81),
    ]
    failures = []
    for fam, rank, n, expected in cases:
        start = time.perf_counter()
        spec = ArrangementSpec.uniform(build_root_system(fam, rank), n)
        got = len(enumerate_regions(spec))
        elapsed = time.perf_counter() - start
        if got != expected or elapsed >= 1.0:
            failures.append((fam, rank, n, got, round(elapsed, 3)))
    _verdict(capsys, 1, "region counts", not failures)
    assert not failures


def test_criterion_2_language_correctness(capsys):
    failures = []
    for fam in ("A", "C", "G"):
        rs = build_root_system(fam, 2)
        expected = ref.reduced_words_up_to(rs, 10)
        for n in (0, 1):
            aut = from_arrangement(ArrangementSpec.uniform(rs, n))
            got = set(enumerate_words(aut, 10))
            if got != expected:
                failures.append((fam, n, len(got), len(expected)))
    _verdict(capsys, 2, "reduced word language", not failures)
    assert not failures


def test_criterion_3_one_step_property(capsys):
    failures = []
    for fam in ("C", "G"):
        rs = build_root_system(fam, 2)
        specs = [ArrangementSpec.uniform(rs, n) for n in (0, 1, 2)]
        specs.append(ArrangementSpec.short_zero_long_one(rs))
        for spec in specs:
            report = verify_star(spec, 10)
            if not report.ok or report.violations:
                failures.append((fam, spec.nu, len(report.violations)))
    _verdict(capsys, 3, "one-step region property", not failures)
    assert not failures


def test_criterion_4_dihedral_counts(capsys):
    rs = build_root_system("A", 1)
    counts = count_words(from_arrangement(ArrangementSpec.uniform(rs, 0)), 20)
    ok = counts == [1] + [2] * 20
    _verdict(capsys, 4, "dihedral word counts", ok)
    assert ok


def test_criterion_5_kl_invariants(capsys):
    failures = []
    for fam, radius in (("A", 10), ("C", 8)):
        table = kl_table(build_root_system(fam, 2), radius)
        b = table.ball
        for w in range(len(b)):
            for u in range(w + 1):
                p = table.poly(u, w)
                if not table.leq(u, w):
                    if p != ():
                        failures.append((fam, u, w, "nonzero off order"))
                    continue
                d = b.lengths[w] - b.lengths[u]
                if u == w and p != (1,):
                    failures.append((fam, u, w, "diagonal"))
                elif p[0] != 1 or 2 * (len(p) - 1) > max(d - 1, 0):
                    failures.append((fam, u, w, p))
    table = kl_table(build_root_system("A", 1), 8)
    oracle = klref.kl_polynomials(table.ball)
    for (u, w), pol in oracle.items():
        if pol != (1,) or table.poly(u, w) != pol:
            failures.append(("A1", u, w, pol))
    _verdict(capsys, 5, "kl invariants and oracle", not failures)
    assert not failures


def test_criterion_6_cells_as_region_unions(capsys, a2, g2, a2_dec, g2_dec):
    a2_reports = stable_cell_reports(a2_dec, ArrangementSpec.uniform(a2, 0))
    g2_zero = stable_cell_reports(g2_dec, ArrangementSpec.uniform(g2, 0))
    g2_one = stable_cell_reports(g2_dec, ArrangementSpec.uniform(g2, 1))
    ok = (
        len(a2_reports) == 10
        and all(r.exact_on_ball for r in a2_reports)
        and len(g2_one) > 0
        and all(r.exact_on_ball for r in g2_one)
        and any(not r.exact_on_ball for r in g2_zero)
    )
    _verdict(capsys, 6, "cells are region unions", ok)
    assert ok


def test_criterion_7_cell_automata(capsys, a2, g2, a2_dec, g2_dec):
    failures = []
    for rs, dec, n in ((a2, a2_dec, 0), (g2, g2_dec, 1)):
        spec = ArrangementSpec.uniform(rs, n)
        base = from_arrangement(spec)
        bound = dec.radius - 2
        words = ref.reduced_words_up_to(rs, bound)
        for c in range(len(dec.classes)):
            if not dec.stable[c]:
                continue
            aut = build_cell_automaton(dec, c, spec, base=base)
            targets = {dec.ball.elements[i].b for i in dec.classes[c]}
            expected = {
                w for w in words if tuple(ref.strip_numbers(rs, w)) in targets
            }
            if set(enumerate_words(aut, bound)) != expected:
                failures.append((rs.describe(), dec.class_name(c)))
    # the ten stable classes cover every region, so their machines
    # partition the full language at every length
    spec = ArrangementSpec.uniform(a2, 0)
    base = from_arrangement(spec)
    auts = [
        build_cell_automaton(a2_dec, c, spec, base=base)
        for c in range(len(a2_dec.classes))
        if a2_dec.stable[c]
    ]
    pooled = [count_words(a, 12) for a in auts]
    if count_words(base, 12) != [sum(col) for col in zip(*pooled)]:
        failures.append(("A2", "partition"))
    _verdict(capsys, 7, "cell automata vs brute force", not failures)
    assert not failures


def test_criterion_8_short_long_preset(capsys):
    failures = []
    for fam, rank, max_len, check_len, star_len in (
        ("C", 2, 10, 12, 10),
        ("G", 2, 10, 12, 10),
        ("C", 3, 8, 10, 8),
    ):
        rep = check_short_long_preset(
            build_root_system(fam, rank), max_len, check_len, star_len=star_len
        )
        if not rep.all_exact or not rep.reports:
            failures.append((fam, rank))
        doc = json.loads(report_json(rep.decomposition, rep.spec))
        if not doc["cells"]:
            failures.append((fam, rank, "empty report"))
    _verdict(capsys, 8, "short/long preset exactness", not failures)
    assert not failures


def test_criterion_9_reversal(capsys, a2, a2_dec):
    spec = ArrangementSpec.uniform(a2, 0)
    bound = a2_dec.radius - 2
    words = ref.reduced_words_up_to(a2, bound)
    failures = []
    for label in ("0", "0 1 0"):
        c = next(
            c
            for c in range(len(a2_dec.classes))
            if a2_dec.class_name(c) == label
        )
        left_aut = build_cell_automaton(a2_dec, c, spec)
        right_aut = right_cell_automaton(left_aut)
        got = set(enumerate_words(right_aut, bound))
        reversed_left = {
            tuple(reversed(w)) for w in enumerate_words(left_aut, bound)
        }
        inverse_targets = {
            a2_dec.ball.elements[a2_dec.ball.inv[i]].b for i in a2_dec.classes[c]
        }
        inverse_words = {
            w for w in words if tuple(ref.strip_numbers(a2, w)) in inverse_targets
        }
        if got != reversed_left or got != inverse_words:
            failures.append(label)
    _verdict(capsys, 9, "reversal gives inverse cells", not failures)
    assert not failures
