import pytest

from church import II
from stlc_nbe.errors import BudgetExceeded
from stlc_nbe.pcatlab.enumerate import (Bounds, enum_ctxts, enum_rnms, enum_substs, enum_terms,
                                        enum_types)
from stlc_nbe.renaming import rnm_id
from stlc_nbe.syntax import IOTA, NIL, Abs, arrows, ctxt_of, term_depth, validate, var


def test_types():
    assert enum_types(0) == (IOTA,)
    assert enum_types(1) == (IOTA, II)
    assert len(enum_types(2)) == 5
    assert arrows(II, II) in enum_types(2)


def test_contexts():
    assert enum_ctxts(0, 2) == [NIL]
    assert len(enum_ctxts(2, 1)) == 1 + 2 + 4


def test_no_closed_base_terms():
    assert enum_terms(NIL, IOTA, 5) == []


def test_closed_identity():
    assert enum_terms(NIL, II, 1) == [Abs(var(ctxt_of(IOTA), 0))]


def test_terms_are_well_typed_and_bounded():
    g = ctxt_of(II, IOTA)
    ts = enum_terms(g, IOTA, 3)
    assert len(set(ts)) == len(ts)
    for t in ts:
        assert validate(t) and t.ctxt == g and t.ty == IOTA and term_depth(t) <= 3
    assert var(g, 0) in ts


def test_renamings():
    g = ctxt_of(IOTA)
    assert enum_rnms(g, g) == [rnm_id(g)]
    assert len(enum_rnms(ctxt_of(IOTA, IOTA), ctxt_of(IOTA, IOTA))) == 4
    assert enum_rnms(ctxt_of(II), ctxt_of(IOTA)) == []
    assert len(enum_rnms(g, NIL)) == 1


def test_substitutions():
    g = ctxt_of(II, IOTA)
    ss = enum_substs(g, ctxt_of(IOTA), 1)
    assert {s.entries[0] for s in ss} == set(enum_terms(g, IOTA, 1))


def test_limit():
    g = ctxt_of(II, IOTA)
    with pytest.raises(BudgetExceeded):
        enum_terms(g, IOTA, 4, limit=50)
    with pytest.raises(BudgetExceeded):
        enum_substs(g, ctxt_of(IOTA, IOTA, IOTA), 2, limit=10)


def test_bounds_validation():
    assert Bounds().fuel == 8
    with pytest.raises(ValueError):
        Bounds(fuel=0)
    with pytest.raises(ValueError):
        Bounds(term_depth=-1)
