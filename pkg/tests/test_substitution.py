import pytest
from hypothesis import given

from church import II, random_rnm, random_subst, seeds, terms
from stlc_nbe.errors import CtxtMismatch, TypeMismatch
from stlc_nbe.renaming import rename, rnm_comp
from stlc_nbe.substitution import (Subst, beta_subst, hcomp_rs, hcomp_sr, lift_rnm, shift,
                                   sub_comp, sub_id, sub_lift, sub_snoc, sub_weakening, subst)
from stlc_nbe.syntax import IOTA, NIL, Abs, App, ctxt_of, var


def test_variables_pick_entries():
    g = ctxt_of(IOTA, IOTA)
    h = ctxt_of(II, IOTA)
    u, v = var(h, 0), App(var(h, 1), var(h, 0))
    s = Subst(h, g, (u, v))
    # depth 0 picks the last entry
    assert subst(var(g, 0), s) == v and subst(var(g, 1), s) == u


def test_beta_subst_examples():
    g = ctxt_of(IOTA)
    # (λy. y) x  ~>  x
    assert beta_subst(var(ctxt_of(IOTA, IOTA), 0), var(g, 0)) == var(g, 0)
    # (λy. x) x'  ~>  x  when the bound variable is unused
    assert beta_subst(var(ctxt_of(IOTA, II), 1), Abs(var(ctxt_of(IOTA, IOTA), 0))) == var(g, 0)
    # (λf. λz. f z) g  ~>  λz. g z, with the binder carried over
    body = Abs(App(var(ctxt_of(II, II, IOTA), 1), var(ctxt_of(II, II, IOTA), 0)))
    out = beta_subst(body, var(ctxt_of(II), 0))
    assert out == Abs(App(var(ctxt_of(II, IOTA), 1), var(ctxt_of(II, IOTA), 0)))
    with pytest.raises(TypeMismatch):
        beta_subst(var(ctxt_of(IOTA), 0), Abs(var(ctxt_of(IOTA), 0)))
    with pytest.raises(CtxtMismatch):
        beta_subst(var(ctxt_of(IOTA), 0), var(ctxt_of(II, IOTA), 0))


def test_entries_are_checked():
    g = ctxt_of(IOTA)
    with pytest.raises(TypeMismatch):
        Subst(g, ctxt_of(II), (var(g, 0),))
    with pytest.raises(CtxtMismatch):
        Subst(g, g, ())
    with pytest.raises(CtxtMismatch):
        sub_snoc(sub_id(g), var(ctxt_of(II), 0))


def test_identity_flag():
    g = ctxt_of(IOTA, II)
    assert sub_id(g).is_identity
    assert Subst(g, g, (var(g, 1), var(g, 0))).is_identity
    assert not sub_weakening(g, IOTA).is_identity
    assert sub_lift(sub_id(g), IOTA).is_identity
    assert Subst(NIL, NIL, ()).is_identity


@given(terms())
def test_subst_identity(t):
    assert subst(t, sub_id(t.ctxt)) == t


@given(terms(), seeds())
def test_renaming_is_a_substitution(t, rng):
    r = random_rnm(rng, t.ctxt)
    assert subst(t, lift_rnm(r)) == rename(t, r)


@given(terms(), seeds())
def test_weakening_substitution_is_shift(t, rng):
    ty = II if rng.random() < 0.5 else IOTA
    assert subst(t, sub_weakening(t.ctxt, ty)) == shift(t, ty)


@given(terms(), seeds())
def test_subst_composition(t, rng):
    s = random_subst(rng, t.ctxt)
    u = random_subst(rng, s.src)
    assert subst(subst(t, s), u) == subst(t, sub_comp(s, u))


@given(terms(), seeds())
def test_mixed_compositions(t, rng):
    s = random_subst(rng, t.ctxt)
    r = random_rnm(rng, s.src)
    assert rename(subst(t, s), r) == subst(t, hcomp_sr(s, r))
    r2 = random_rnm(rng, t.ctxt)
    s2 = random_subst(rng, r2.src)
    assert subst(rename(t, r2), s2) == subst(t, hcomp_rs(r2, s2))
    assert lift_rnm(rnm_comp(r2, random_rnm(rng, r2.src))).tgt == t.ctxt


@given(terms(), seeds())
def test_shift_then_beta_is_identity(t, rng):
    a_ty = t.ctxt.types[0] if len(t.ctxt) else None
    if a_ty is None:
        return
    a = var(t.ctxt, len(t.ctxt) - 1)
    assert beta_subst(shift(t, a_ty), a) == t
