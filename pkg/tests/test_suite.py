"""The claim catalog: budgets, determinism, and sensitivity to broken rules."""

import re

import pytest

from ivp import localfield
from ivp.localfield import RatFunc, SetDescriptor
from ivp.expr import parse_expression
from ivp.suite import (Budget, check_lemma, check_ideal_generators,
                       check_probe_family, check_obstruction, check_conclusion,
                       run_all)

CATALOG = ['lemma1-ideal-intersection', 'lemma2-locality',
           'lemma3-integral-generator', 'lemma4-conductor', 'lemma5-contraction',
           'ideal-generators', 'probe-family', 'obstruction', 'flatness-conclusion']

fast = Budget(degree_bound=6, samples=300, seed=42)


def test_catalog_order_and_statuses():
    reports = run_all(fast)
    assert [r.check_id for r in reports] == CATALOG
    assert all(r.status == 'pass' for r in reports)
    assert all(r.witness is None for r in reports)


def test_exact_subset_survives_zero_budget():
    reports = run_all(Budget(degree_bound=0, samples=0, seed=1))
    assert all(r.status == 'pass' for r in reports)


def test_runs_are_deterministic():
    a = run_all(fast)
    b = run_all(fast)
    assert [(r.check_id, r.status, r.witness, r.details) for r in a] == \
           [(r.check_id, r.status, r.witness, r.details) for r in b]


def test_statuses_are_seed_independent():
    a = run_all(Budget(degree_bound=6, samples=200, seed=42))
    b = run_all(Budget(degree_bound=6, samples=200, seed=20260817))
    assert [(r.check_id, r.status) for r in a] == [(r.check_id, r.status) for r in b]


def test_single_parts_run_standalone():
    for part in (1, 2, 3, 4, 5):
        report = check_lemma(part, fast)
        assert report.status == 'pass'
        assert report.passed
    with pytest.raises(ValueError):
        check_lemma(6, fast)
    with pytest.raises(ValueError):
        check_lemma(0, fast)


def test_part3_scans_degree_10_even_on_small_budgets():
    report = check_lemma(3, Budget(degree_bound=2, samples=0, seed=1))
    assert report.status == 'pass'
    assert 'degree <= 10' in report.details
    assert '512' in report.details          # 2^9 qualifying polynomials


def test_side_facts_are_flagged_as_accepted():
    assert 'not machine checked' in check_lemma(2, fast).details
    assert 'assumed, not computed' in check_conclusion(run_all(fast)[:-1], fast).details


def test_obstruction_check_counts_the_corpus():
    report = check_obstruction(fast)
    assert report.status == 'pass'
    assert '56 bundled candidates' in report.details
    assert '44 sum mismatches' in report.details


def test_conclusion_fails_if_prerequisites_failed():
    reports = run_all(fast)
    broken = [type(reports[0])(r.check_id, 'fail' if r.check_id == 'probe-family' else r.status,
                               r.budget, r.witness, r.details) for r in reports[:-1]]
    conclusion = check_conclusion(broken, fast)
    assert conclusion.status == 'fail'
    assert 'probe-family' in conclusion.details


# --- mutation sensitivity: broken membership rules must be caught -----------------

def _mutant_is_member(broken):
    original = localfield.is_member

    def mutant(x, target):
        if not isinstance(target, SetDescriptor):
            target = SetDescriptor.parse(target) if isinstance(target, str) else target
        return broken(original, x, target)

    return mutant


def _assert_suite_notices(monkeypatch, broken):
    monkeypatch.setattr(localfield, 'is_member', _mutant_is_member(broken))
    reports = run_all(Budget(degree_bound=5, samples=150, seed=42))
    failed = [r for r in reports if r.status == 'fail']
    assert failed, 'the broken rule went unnoticed'
    for r in failed:
        if r.check_id != 'flatness-conclusion':
            assert r.witness is not None
    return failed


def test_dropping_residue_equality_is_caught(monkeypatch):
    def no_residue_clause(original, x, target):
        if target.kind == 'D':
            return original(x, localfield.T)       # forget D's residue condition
        return original(x, target)
    _assert_suite_notices(monkeypatch, no_residue_clause)


def test_ignoring_ideal_powers_is_caught(monkeypatch):
    def flatten_powers(original, x, target):
        if target.kind in ('M', 'N0', 'N1') and target.power > 1:
            return original(x, SetDescriptor(target.kind, 1))
        return original(x, target)
    failed = _assert_suite_notices(monkeypatch, flatten_powers)
    assert any(r.check_id == 'probe-family' for r in failed)


def test_confusing_the_two_places_is_caught(monkeypatch):
    def n1_becomes_n0(original, x, target):
        if target.kind == 'N1':
            return original(x, SetDescriptor('N0', target.power))
        return original(x, target)
    failed = _assert_suite_notices(monkeypatch, n1_becomes_n0)
    assert any(r.check_id == 'lemma1-ideal-intersection' for r in failed)


def test_failure_witnesses_parse_back(monkeypatch):
    def no_residue_clause(original, x, target):
        if target.kind == 'D':
            return original(x, localfield.T)
        return original(x, target)
    failed = _assert_suite_notices(monkeypatch, no_residue_clause)
    monkeypatch.undo()
    element_shaped = re.compile(r'^[01tXV+*/^() ]+$')
    parsed = 0
    for r in failed:
        if r.witness is None or not element_shaped.match(r.witness):
            continue
        value = parse_expression(r.witness).value
        assert isinstance(value, RatFunc)
        parsed += 1
    assert parsed > 0
