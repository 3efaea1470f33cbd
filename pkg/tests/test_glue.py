import pytest
from hypothesis import given

from church import II, church_one, church_succ, church_two_nf, eta_long_one, random_subst, \
    seeds, terms
from stlc_nbe.conversion import CEta, CSymm, CTrans, check_deriv
from stlc_nbe.errors import InvalidCert, TypeMismatch
from stlc_nbe.glue import (GEnv, NfResult, decide_conv, geval, greflect, greflect_env, greify,
                           grestrict, nf4, nf4_subst)
from stlc_nbe.nbe import nf3
from stlc_nbe.pcatlab.gen import random_rewrite
from stlc_nbe.substitution import sub_weakening, subst
from stlc_nbe.syntax import IOTA, Abs, App, alpha_eq, ctxt_of, var


def test_church_one_with_certificates():
    r = nf4(church_one(), check=True)
    assert r.nf == eta_long_one()
    # nothing to evaluate: the witness is the input itself
    assert r.witness == church_one()
    assert check_deriv(r.cert) == (church_one(), eta_long_one())
    assert r.nf != church_one()


def test_succ_one():
    r = nf4(App(church_succ(), church_one()), check=True)
    assert r.nf == church_two_nf()
    assert r.cert == CTrans(r.cert_in_wit, r.cert_wit_nf)


def test_base_type_values_keep_their_term():
    t = var(ctxt_of(IOTA), 0)
    v = greflect(t)
    assert greify(v) == (t, None)
    assert check_deriv(v.certificate()) == (t, t)
    w = grestrict(v, sub_weakening(ctxt_of(IOTA), II))
    assert w.syn == subst(t, sub_weakening(ctxt_of(IOTA), II))


def test_variable_greify_is_one_eta_step():
    f = var(ctxt_of(II), 0)
    nf, cert = greify(greflect(f))
    assert cert == CEta(f, IOTA)
    assert check_deriv(cert) == (f, nf)


def test_arrow_values_have_no_stored_certificate():
    with pytest.raises(TypeMismatch):
        greflect(var(ctxt_of(II), 0)).certificate()


def test_geval_certificate_endpoints():
    g = ctxt_of(IOTA)
    t = App(Abs(var(ctxt_of(IOTA, IOTA), 0)), var(g, 0))
    env = greflect_env(g)
    assert isinstance(env, GEnv)
    val, c = geval(t, env)
    assert check_deriv(c) == (t, val.syn) and val.syn == var(g, 0)


def test_verify_rejects_tampering():
    r = nf4(church_one())
    bad = NfResult(r.input, r.nf, r.witness, r.cert_in_wit, CSymm(r.cert_wit_nf), r.cert)
    with pytest.raises(InvalidCert):
        bad.verify()


def test_decide_conv():
    assert decide_conv(church_one(), eta_long_one())
    assert not decide_conv(church_one(), Abs(Abs(var(ctxt_of(II, IOTA), 0))))
    with pytest.raises(TypeMismatch):
        decide_conv(church_one(), var(ctxt_of(IOTA), 0))


@given(terms())
def test_certificates_check(t):
    r = nf4(t, check=True)
    lhs, rhs = check_deriv(r.cert)
    assert alpha_eq(lhs, t) and alpha_eq(rhs, r.nf)


@given(terms())
def test_agrees_with_kripke_normalizer(t):
    assert nf4(t).nf == nf3(t)


@given(terms())
def test_idempotent(t):
    n = nf4(t).nf
    assert nf4(n).nf == n


@given(terms(), seeds())
def test_rewrites_are_decided_convertible(t, rng):
    u, _ = random_rewrite(t, rng, steps=4)
    assert decide_conv(t, u)


@given(seeds())
def test_subst_entries(rng):
    s = random_subst(rng, ctxt_of(IOTA, II))
    rs = nf4_subst(s, check=True)
    assert [r.nf for r in rs] == [nf3(e) for e in s.entries]
