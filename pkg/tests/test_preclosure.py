import pytest
from hypothesis import given, strategies as st

from church import II, random_subst, seeds
from stlc_nbe.conversion import check_subst_deriv
from stlc_nbe.errors import CtxtMismatch, TypeMismatch
from stlc_nbe.glue import decide_conv
from stlc_nbe.pcatlab.gen import gen_ctxt
from stlc_nbe.preclosure import (abs1, bang, curry, curry_uncurry_cert, ev1, exp_ctxt, exp_ty,
                                 pair, proj1, proj2, rnm_pair, uncurry, uncurry_curry_cert)
from stlc_nbe.renaming import rnm_id
from stlc_nbe.substitution import hcomp_rs, hcomp_sr, lift_rnm, sub_comp, sub_id
from stlc_nbe.syntax import IOTA, NIL, Abs, App, arrows, ctxt_of, var


def test_exponential_examples():
    assert exp_ty(ctxt_of(IOTA, II), IOTA) == ctxt_of(II, arrows(IOTA, IOTA, IOTA))
    assert exp_ctxt(ctxt_of(IOTA), ctxt_of(II, IOTA)) == ctxt_of(arrows(II, IOTA, IOTA))
    assert exp_ctxt(ctxt_of(IOTA), NIL) == ctxt_of(IOTA)
    assert exp_ty(NIL, II) == NIL


def test_abs1_ev1():
    t = var(ctxt_of(II), 0)
    g = ctxt_of(II, IOTA)
    assert ev1(t) == App(var(g, 1), var(g, 0))
    assert abs1(ev1(t)) == Abs(App(var(g, 1), var(g, 0)))
    assert ev1(abs1(var(ctxt_of(IOTA, IOTA), 0))).ty == IOTA
    with pytest.raises(TypeMismatch):
        ev1(var(ctxt_of(IOTA), 0))


def test_projections_and_pairing():
    g, d = ctxt_of(IOTA), ctxt_of(II, IOTA)
    p1, p2 = proj1(g, d), proj2(g, d)
    assert p1.src == g + d and p1.tgt == g and [e.depth for e in p1.entries] == [2]
    assert [e.depth for e in p2.entries] == [1, 0]
    assert rnm_pair(p1, p2) == rnm_id(g + d)
    assert bang(g).tgt == NIL
    with pytest.raises(CtxtMismatch):
        pair(sub_id(g), sub_id(d))


def test_curry_requires_matching_suffix():
    s = sub_id(ctxt_of(IOTA, II))
    with pytest.raises(CtxtMismatch):
        curry(s, ctxt_of(IOTA))
    with pytest.raises(TypeMismatch):
        uncurry(sub_id(ctxt_of(IOTA)), ctxt_of(IOTA))


def test_curry_shapes():
    g, d = ctxt_of(IOTA), ctxt_of(II, IOTA)
    s = sub_id(g + d)
    c = curry(s, d)
    assert c.src == g and c.tgt == exp_ctxt(g + d, d)
    u = uncurry(c, d)
    assert u.src == g + d and u.tgt == g + d


@st.composite
def split_substs(draw):
    """A substitution out of Γ ++ Δ, paired with Δ."""
    rng = draw(seeds())
    g, d = gen_ctxt(rng, 2, 2), gen_ctxt(rng, 2, 2)
    s = random_subst(rng, gen_ctxt(rng, 2, 1))
    return hcomp_sr(s, proj1(s.src, g + d)), d


@given(split_substs())
def test_uncurry_curry_is_certified(case):
    s, d = case
    lhs, rhs = check_subst_deriv(uncurry_curry_cert(s, d))
    assert lhs == uncurry(curry(s, d), d) and rhs == s


@given(split_substs())
def test_curry_uncurry_is_certified(case):
    s, d = case
    u = curry(s, d)
    lhs, rhs = check_subst_deriv(curry_uncurry_cert(u, d))
    assert lhs == curry(uncurry(u, d), d) and rhs == u
    assert all(decide_conv(a, b) for a, b in zip(lhs.entries, rhs.entries))


@given(seeds())
def test_pairing_is_universal(rng):
    a = random_subst(rng, ctxt_of(IOTA, II))
    b = hcomp_rs(proj2(ctxt_of(IOTA), ctxt_of(II)), a)
    p = pair(a, b)
    assert sub_comp(lift_rnm(proj1(a.tgt, b.tgt)), p) == a
    assert hcomp_rs(proj2(a.tgt, b.tgt), p) == b
