import json

import pytest

from stlc_nbe.pcatlab.enumerate import Bounds
from stlc_nbe.pcatlab.laws import (SUITES, laws_actions, laws_rnm_category,
                                   laws_subst_category, off_by_one_rnm_comp,
                                   off_by_one_sub_comp, run_all)
from stlc_nbe.pcatlab.report import LawReport

SMALL = Bounds(type_depth=1, ctxt_len=2, term_depth=2, fuel=4, subst_term_depth=1,
               chain_type_depth=1, chain_term_depth=1, chain_subject_depth=1)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_holds_at_small_bounds(name):
    rep = SUITES[name](SMALL)
    assert rep.cases > 0
    assert rep.passed, rep.failures[:3]


def test_rotation_breaks_renaming_composition():
    rep = laws_rnm_category(SMALL, comp=off_by_one_rnm_comp)
    assert not rep.passed
    assert {f["law"] for f in rep.failures} <= {"left unit", "right unit", "associativity"}


def test_rotation_breaks_substitution_composition():
    assert not laws_subst_category(SMALL, comp=off_by_one_sub_comp).passed


def test_actions_catch_a_bad_composition():
    assert not laws_actions(SMALL, rnm_comp=off_by_one_rnm_comp).passed
    assert not laws_actions(SMALL, sub_comp=off_by_one_sub_comp).passed


def test_report_bookkeeping():
    rep = LawReport("demo")
    for k in range(50):
        rep.check(k % 2 == 0, "even", k=k)
    assert rep.cases == 50 and rep.n_failures == 25 and len(rep.failures) == 20
    assert rep.summary() == "demo: 50 cases, FAILED (25)"
    other = LawReport("x", cases=5)
    assert rep.merge(other).cases == 55
    json.dumps(rep.to_json())
    assert LawReport("ok", cases=3).summary() == "ok: 3 cases, ok"


def test_failure_witnesses_serialize():
    rep = laws_rnm_category(SMALL, comp=off_by_one_rnm_comp)
    j = rep.to_json()
    assert j["passed"] is False and j["failures"]
    json.dumps(j)


def test_run_all_selects_suites():
    reps = run_all(SMALL, ["rnm_category", "cartesian"])
    assert [r.suite for r in reps] == ["rnm_category", "cartesian"]
