"""Acceptance criteria. Each test carries an ``acceptance`` marker; a PASS/FAIL
line per criterion is printed in the terminal summary."""

import json
import subprocess
import sys
import time

import pytest

from conftest import LZ2, corpus_upto
from oracles import naive_associative_tables
from semigroup_sep.analysis import Analysis
from semigroup_sep.enumeration import EnumerationConfig, enumerate_flat
from semigroup_sep.green import h_classes, pi_map
from semigroup_sep.order2 import (
    is_E_separated_by_coideals,
    is_two_trivial,
    prime_coideals,
    semilattice_congruences,
    semilattice_reflection,
    two_order_fixpoint,
    two_order_oracle,
    updown_congruence,
)
from semigroup_sep.predicates import evaluate_properties
from semigroup_sep.verify import exit_status, run_all

ENUM_BUDGET_S = 1.0
SWEEP_BUDGET_S = 600.0


@pytest.fixture(scope="module")
def sweep4():
    start = time.perf_counter()
    reports = run_all(4)
    return reports, time.perf_counter() - start


@pytest.fixture(scope="module")
def corpus4():
    return corpus_upto(4)


@pytest.mark.acceptance(1, "backtracking enumeration equals the naive associativity filter at orders 2 and 3, < 1 s")
def test_enumeration_oracle_equivalence():
    elapsed = 0.0
    for n in (2, 3):
        start = time.perf_counter()
        got = list(enumerate_flat(EnumerationConfig(n)))
        elapsed += time.perf_counter() - start
        expected = naive_associative_tables(n)
        assert set(got) == set(expected)
        assert len(got) == len(expected)
    print(f"enumeration time orders 2+3: {elapsed:.3f}s")
    assert elapsed < ENUM_BUDGET_S


@pytest.mark.acceptance(2, "all 22 suites pass with zero violations on the labelled order <= 4 corpus, <= 10 min")
def test_full_sweep(sweep4):
    reports, elapsed = sweep4
    for r in reports:
        print(r.summary())
    assert len(reports) == 22
    bad = [r.suite for r in reports if r.violation_count]
    assert not bad, bad
    assert all(r.semigroups_checked == 1 + 8 + 113 + 3492 for r in reports)
    assert elapsed <= SWEEP_BUDGET_S


@pytest.mark.acceptance(3, "non-vacuity: both sides of E-separatedness, non-commutative duo count, VACUOUS justified")
def test_non_vacuity(sweep4):
    reports, _ = sweep4
    by_id = {r.suite: r for r in reports}
    sep = by_id["SEPAR_EQUIV"].counters
    assert sep["(1) E-separated:yes"] >= 1 and sep["(1) E-separated:no"] >= 1
    duo = by_id["DUO_ESEP"]
    assert duo.counters["noncommutative_duo"] >= 1 or any("no non-commutative duo" in n for n in duo.notes)
    assert any("non-commutative duo semigroup(s) checked" in n for n in duo.notes)
    for r in reports:
        if r.status == "VACUOUS":
            assert any(n.startswith("VACUOUS:") for n in r.notes), r.suite
    assert exit_status(reports) in (0, 2)


@pytest.mark.acceptance(4, "left-zero band: E-hypocentral, E-upcentral, not E-hypercentral, not E-separated")
def test_left_zero_counterexample():
    r = evaluate_properties(LZ2)
    assert r.is_E_hypocentral and r.is_E_upcentral
    assert not r.is_E_hypercentral and not r.is_E_separated


@pytest.mark.acceptance(5, "cross-implementation identities on every semigroup of order <= 4")
def test_cross_implementation(corpus4):
    for s in corpus4:
        oracle = two_order_oracle(s)
        assert two_order_fixpoint(s).leq == oracle.leq, s.to_line()
        by_count = len(prime_coideals(s)) == 2  # only the empty set and X
        by_reflection = semilattice_reflection(s, order=oracle).quotient.order == 1
        assert by_count == by_reflection == is_two_trivial(s), s.to_line()
        es = [e for e in s.elements if s(e, e) == e]
        by_classes = all(len(oracle.bi(e) & set(es)) == 1 for e in es)
        assert by_classes == is_E_separated_by_coideals(s), s.to_line()
        meet = {(x, y) for x in s.elements for y in s.elements}
        for c in semilattice_congruences(s):
            meet &= c.pairs()
        assert meet == updown_congruence(s, order=oracle).pairs(), s.to_line()


@pytest.mark.acceptance(6, "finiteness: pi-regular, eventually Clifford, pi total, power lemma over full orbits")
def test_finiteness_facts(corpus4):
    for s in corpus4:
        a = Analysis(s)
        flags = evaluate_properties(a).flags
        assert flags["is_pi_regular"] and flags["is_eventually_clifford"], s.to_line()
        hs = h_classes(s)
        for x in s.elements:
            e = pi_map(s, x, classes=hs)
            assert s(e, e) == e
            o = a.orbits[x]
            powers = [s.power(x, k) for k in range(1, o.index + 2 * o.period + 1)]
            hits = [k for k, p in enumerate(powers) if p in hs[e]]
            assert hits, (s.to_line(), x)
            # once some power lands in H_e, every later power stays there
            assert hits == list(range(hits[0], len(powers))), (s.to_line(), x)


def _verify_out(tmp_path, jobs):
    out = tmp_path / f"jobs{jobs}"
    proc = subprocess.run(
        [sys.executable, "-m", "semigroup_sep", "verify", "--max-order", "3", "--jobs", str(jobs),
         "--out", str(out), "--format", "json"],
        capture_output=True,
    )
    assert proc.returncode == 0, proc.stderr
    return proc.stdout, {p.name: p.read_bytes() for p in sorted(out.glob("*.json"))}


@pytest.mark.acceptance(7, "verify --max-order 3 with --jobs 1 and --jobs 8 gives byte-identical JSON")
def test_determinism(tmp_path):
    stdout1, files1 = _verify_out(tmp_path, 1)
    stdout8, files8 = _verify_out(tmp_path, 8)
    assert len(files1) == 22
    assert files1 == files8
    assert stdout1 == stdout8
    assert json.loads(stdout1)["exit_status"] == 0
