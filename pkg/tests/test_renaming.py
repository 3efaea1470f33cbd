import pytest
from hypothesis import given

from church import II, random_rnm, seeds, terms
from stlc_nbe.errors import CtxtMismatch, TypeMismatch
from stlc_nbe.renaming import Rnm, rename, rnm_comp, rnm_id, rnm_lift, rnm_weaken, weakening
from stlc_nbe.syntax import IOTA, NIL, Abs, App, Idx, ctxt_of, var


def test_entries_are_checked():
    g = ctxt_of(IOTA, II)
    with pytest.raises(TypeMismatch):
        Rnm(g, ctxt_of(IOTA), (Idx(g, II, 0),))
    with pytest.raises(CtxtMismatch):
        Rnm(g, ctxt_of(IOTA, IOTA), (Idx(g, IOTA, 1),))
    with pytest.raises(CtxtMismatch):
        Rnm(g, ctxt_of(IOTA), (Idx(ctxt_of(IOTA), IOTA, 0),))


def test_identity_and_weakening():
    g = ctxt_of(IOTA, II)
    assert [e.depth for e in rnm_id(g).entries] == [1, 0]
    w = weakening(g, IOTA)
    assert w.src == g.snoc(IOTA) and w.tgt == g
    assert [e.depth for e in w.entries] == [2, 1]
    assert rename(var(g, 0), w) == var(g.snoc(IOTA), 1)


def test_lift_fixes_the_new_variable():
    g = ctxt_of(IOTA)
    r = rnm_weaken(rnm_id(g), II)
    lr = rnm_lift(r, IOTA)
    assert lr.src == ctxt_of(IOTA, II, IOTA) and lr.tgt == ctxt_of(IOTA, IOTA)
    assert [e.depth for e in lr.entries] == [2, 0]


def test_rename_under_binder():
    # λy. x y with x free, pushed past a fresh variable
    g = ctxt_of(II)
    t = Abs(App(var(g.snoc(IOTA), 1), var(g.snoc(IOTA), 0)))
    u = rename(t, weakening(g, IOTA))
    g2 = ctxt_of(II, IOTA, IOTA)
    assert u == Abs(App(var(g2, 2), var(g2, 0)))


def test_composition_checks_endpoints():
    g = ctxt_of(IOTA)
    with pytest.raises(CtxtMismatch):
        rnm_comp(rnm_id(g), rnm_id(ctxt_of(II)))
    with pytest.raises(CtxtMismatch):
        rename(var(g, 0), rnm_id(NIL))


@given(terms())
def test_rename_identity(t):
    assert rename(t, rnm_id(t.ctxt)) == t


@given(terms(), seeds())
def test_rename_preserves_type(t, rng):
    r = random_rnm(rng, t.ctxt)
    u = rename(t, r)
    assert u.ctxt == r.src and u.ty == t.ty


@given(terms(), seeds())
def test_rename_composition(t, rng):
    r = random_rnm(rng, t.ctxt)
    s = random_rnm(rng, r.src)
    assert rename(rename(t, r), s) == rename(t, rnm_comp(r, s))


@given(seeds())
def test_category_laws(rng):
    r = random_rnm(rng, ctxt_of(IOTA, II))
    s = random_rnm(rng, r.src)
    q = random_rnm(rng, s.src)
    assert rnm_comp(r, rnm_id(r.src)) == r == rnm_comp(rnm_id(r.tgt), r)
    assert rnm_comp(rnm_comp(r, s), q) == rnm_comp(r, rnm_comp(s, q))
