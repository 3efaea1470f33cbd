"""Exhaustive finite-instance checks of the categorical laws of the syntax.

Each suite enumerates every instance within a :class:`Bounds` and returns a
:class:`LawReport`.  Laws about renamings and α-substitutions are checked
with exact equality.  Laws that only hold up to βη (the exponential laws)
are checked with ``decide_conv`` *and* by validating the explicit
certificates built in ``preclosure``; the former is a consistency check of
the normalizer against itself, the latter is independent of it.
"""

from __future__ import annotations

from ..conversion import check_deriv, check_subst_deriv
from ..errors import NbeError
from ..glue import decide_conv, greflect, greify
from ..nbe import nf3, nf3_subst, nf3_subst_curried, reflect, reify, restrict
from ..preclosure import (bang, curry, curry_uncurry_cert, exp_ctxt, pair, proj1, proj2,
                          rnm_pair, uncurry, uncurry_curry_cert)
from ..renaming import Rnm, rename, rnm_comp, rnm_id, rnm_lift
from ..substitution import (Subst, beta_subst, hcomp_rs, hcomp_sr, lift_rnm, shift, sub_comp,
                            sub_id, sub_lift, sub_weakening, subst)
from ..syntax import NIL, Arr, alpha_eq
from .enumerate import Bounds, enum_ctxts, enum_rnms, enum_substs, enum_terms, enum_types
from .report import LawReport

__all__ = [
    "laws_rnm_category", "laws_subst_category", "laws_actions", "laws_cartesian",
    "laws_ccc", "laws_qu_naturality", "run_all", "SUITES",
    "off_by_one_rnm_comp", "off_by_one_sub_comp",
]


# -- enumeration helpers -------------------------------------------------------


def _ctxts(b: Bounds, chain: bool = False):
    return enum_ctxts(b.ctxt_len, b.chain_type_depth if chain else b.type_depth)


def _terms(b: Bounds, ctxts, depth=None):
    depth = b.term_depth if depth is None else depth
    for g in ctxts:
        for ty in enum_types(b.type_depth):
            yield from enum_terms(g, ty, depth, limit=b.limit)


def _rnm_table(cs):
    return {(g, d): enum_rnms(g, d) for g in cs for d in cs}


def _subst_table(b: Bounds, cs, chain: bool):
    depth = b.chain_term_depth if chain else b.subst_term_depth
    tys = enum_types(b.chain_type_depth if chain else b.type_depth)
    return {(g, d): enum_substs(g, d, depth, arg_types=tys, limit=b.limit)
            for g in cs for d in cs}


def _guard(rep: LawReport, law: str, fn, **witness):
    """Run one case; an exception counts as a failure of that case."""
    try:
        ok = fn()
    except NbeError as e:
        rep.tick()
        rep.fail(law, error=str(e), **witness)
        return
    rep.check(ok, law, **witness)


# -- mutated compositions (negative controls) ----------------------------------


def _rotate(depth: int, tgt) -> int:
    """The next depth of ``tgt`` holding the same type, cyclically."""
    same = [k for k in range(len(tgt)) if tgt.at(k) == tgt.at(depth)]
    return same[(same.index(depth) + 1) % len(same)]


def off_by_one_rnm_comp(r: Rnm, s: Rnm) -> Rnm:
    """A deliberately wrong composition: each index lands one slot off."""
    return Rnm._trusted(s.src, r.tgt, tuple(s.lookup(_rotate(e.depth, s.tgt)) for e in r.entries))


def off_by_one_sub_comp(s: Subst, t: Subst) -> Subst:
    """``sub_comp`` with the variables of ``s``'s entries shifted to a
    neighbour of the same type before substituting."""
    wrong = Subst._trusted(t.src, t.tgt, tuple(
        t.lookup(_rotate(len(t.tgt) - 1 - k, t.tgt)) for k in range(len(t.tgt))))
    return Subst._trusted(t.src, s.tgt, tuple(subst(e, wrong) for e in s.entries))


# -- suites --------------------------------------------------------------------


def laws_rnm_category(b: Bounds = Bounds(), comp=rnm_comp) -> LawReport:
    """Unit and associativity laws of renaming composition."""
    rep = LawReport("rnm_category")
    cs = _ctxts(b)
    R = _rnm_table(cs)
    for (g, d), rs in R.items():
        for r in rs:
            rep.check(comp(rnm_id(d), r) == r, "left unit", r=r)
            rep.check(comp(r, rnm_id(g)) == r, "right unit", r=r)
    for a_src in cs:
        for a_tgt in cs:
            for a in R[a_src, a_tgt]:
                for c_src in cs:
                    for bb in R[c_src, a_src]:
                        ab = comp(a, bb)
                        for d_src in cs:
                            for c in R[d_src, c_src]:
                                rep.check(comp(ab, c) == comp(a, comp(bb, c)),
                                          "associativity", a=a, b=bb, c=c)
    return rep


def laws_subst_category(b: Bounds = Bounds(), comp=sub_comp) -> LawReport:
    """Unit laws over all substitutions within bounds, associativity over
    chains of the smaller chain bounds."""
    rep = LawReport("subst_category")
    cs = _ctxts(b)
    for (g, d), ss in _subst_table(b, cs, chain=False).items():
        for s in ss:
            rep.check(comp(sub_id(d), s) == s, "left unit", s=s)
            rep.check(comp(s, sub_id(g)) == s, "right unit", s=s)
    cs = _ctxts(b, chain=True)
    S = _subst_table(b, cs, chain=True)
    for (a_src, a_tgt), as_ in S.items():
        for a in as_:
            for c_src in cs:
                for bb in S[c_src, a_src]:
                    ab = comp(a, bb)
                    for d_src in cs:
                        for c in S[d_src, c_src]:
                            rep.check(comp(ab, c) == comp(a, comp(bb, c)),
                                      "associativity", a=a, b=bb, c=c)
    return rep


def laws_actions(b: Bounds = Bounds(), rnm_comp=rnm_comp, sub_comp=sub_comp) -> LawReport:
    """Renaming and substitution act on terms, and the mixed composites agree.

    The compositions are parameters so that a mutated one can be plugged in
    as a negative control.
    """
    rep = LawReport("actions")
    for t in _terms(b, _ctxts(b)):
        g = t.ctxt
        rep.check(rename(t, rnm_id(g)) == t, "rename identity", t=t)
        rep.check(subst(t, sub_id(g)) == t, "subst identity", t=t)
        for ty in enum_types(b.chain_type_depth):
            sh = shift(t, ty)
            rep.check(subst(t, sub_weakening(g, ty)) == sh, "weakening substitution is shift",
                      t=t)
            for u in enum_terms(g, ty, 0):
                rep.check(beta_subst(sh, u) == t, "beta after shift", t=t, u=u)

    cs = _ctxts(b, chain=True)
    R = _rnm_table(cs)
    S = _subst_table(b, cs, chain=True)
    for t in _terms(b, cs, b.chain_subject_depth):
        th = t.ctxt
        for d in cs:
            for r in R[d, th]:
                tr = rename(t, r)
                tr_s = lift_rnm(r)
                rep.check(subst(t, tr_s) == tr, "renaming as substitution", t=t, r=r)
                for g in cs:
                    for r2 in R[g, d]:
                        _guard(rep, "rename composition",
                               lambda: rename(tr, r2) == rename(t, rnm_comp(r, r2)),
                               t=t, r=r, s=r2)
                    for s2 in S[g, d]:
                        _guard(rep, "rename then subst",
                               lambda: subst(tr, s2) == subst(t, hcomp_rs(r, s2)),
                               t=t, r=r, s=s2)
            for s in S[d, th]:
                ts = subst(t, s)
                for g in cs:
                    for s2 in S[g, d]:
                        _guard(rep, "subst composition",
                               lambda: subst(ts, s2) == subst(t, sub_comp(s, s2)),
                               t=t, s=s, s2=s2)
                    for r2 in R[g, d]:
                        _guard(rep, "subst then rename",
                               lambda: rename(ts, r2) == subst(t, hcomp_sr(s, r2)),
                               t=t, s=s, r=r2)

    # lifting is functorial
    for (g, d), rs in R.items():
        for ty in enum_types(b.chain_type_depth):
            rep.check(rnm_lift(rnm_id(g), ty) == rnm_id(g.snoc(ty)), "lift identity", g=g)
            for r in rs:
                for e in cs:
                    for r2 in R[e, g]:
                        _guard(rep, "lift composition",
                               lambda: rnm_lift(rnm_comp(r, r2), ty)
                               == rnm_comp(rnm_lift(r, ty), rnm_lift(r2, ty)),
                               r=r, s=r2, ty=ty)
    for (g, d), ss in S.items():
        for ty in enum_types(b.chain_type_depth):
            for s in ss:
                for e in cs:
                    for s2 in S[e, g]:
                        _guard(rep, "subst lift composition",
                               lambda: sub_lift(sub_comp(s, s2), ty)
                               == sub_comp(sub_lift(s, ty), sub_lift(s2, ty)),
                               s=s, s2=s2, ty=ty)
    return rep


def laws_cartesian(b: Bounds = Bounds()) -> LawReport:
    """Concatenation with projections and pairing is a product; ``•`` is terminal."""
    rep = LawReport("cartesian")
    cs = _ctxts(b)
    R = _rnm_table(cs)
    for x in cs:
        rep.check(enum_rnms(x, NIL) == [Rnm._trusted(x, NIL, ())], "terminal (renamings)", x=x)
        rep.check(bang(x) == Subst._trusted(x, NIL, ()), "terminal (substitutions)", x=x)
        for g in cs:
            for d in cs:
                p1, p2 = proj1(g, d), proj2(g, d)
                for r1 in R[x, g]:
                    for r2 in R[x, d]:
                        h = rnm_pair(r1, r2)
                        rep.check(rnm_comp(p1, h) == r1, "first projection", r1=r1, r2=r2)
                        rep.check(rnm_comp(p2, h) == r2, "second projection", r1=r1, r2=r2)
                for h in enum_rnms(x, g + d):
                    rep.check(rnm_pair(rnm_comp(p1, h), rnm_comp(p2, h)) == h,
                              "pairing is unique", h=h)

    cs = _ctxts(b, chain=True)
    S = _subst_table(b, cs, chain=True)
    for x in cs:
        for g in cs:
            for d in cs:
                p1, p2 = lift_rnm(proj1(g, d)), lift_rnm(proj2(g, d))
                for s1 in S[x, g]:
                    for s2 in S[x, d]:
                        h = pair(s1, s2)
                        rep.check(sub_comp(p1, h) == s1, "first projection (subst)",
                                  s1=s1, s2=s2)
                        rep.check(sub_comp(p2, h) == s2, "second projection (subst)",
                                  s1=s1, s2=s2)
                        # the same laws read in the βη quotient
                        rep.check(all(decide_conv(u, v) for u, v in
                                      zip(sub_comp(p1, h).entries, s1.entries)),
                                  "first projection (βη)", s1=s1, s2=s2)
                for s1 in S[x, g]:
                    for s2 in S[x, d]:
                        h = pair(s1, s2)
                        rep.check(pair(sub_comp(p1, h), sub_comp(p2, h)) == h,
                                  "pairing is unique (subst)", h=h)
    return rep


def laws_ccc(b: Bounds = Bounds()) -> LawReport:
    """``uncurry ∘ curry`` and ``curry ∘ uncurry`` are identities up to βη.

    Each case validates the explicit certificate and, separately, asks
    ``decide_conv`` for every entry.
    """
    rep = LawReport("ccc")
    cs = _ctxts(b)
    depth = b.chain_term_depth
    tys = enum_types(b.chain_type_depth)
    for g in cs:
        for d in cs:
            if len(g) + len(d) > b.ctxt_len:
                continue
            for th in cs:
                for s in enum_substs(g + d, th, depth, arg_types=tys, limit=b.limit):
                    out = uncurry(curry(s, d), d)
                    _guard(rep, "uncurry.curry certificate",
                           lambda: _cert_ok(uncurry_curry_cert(s, d), out, s), s=s, d=d)
                    rep.check(all(decide_conv(u, v) for u, v in zip(out.entries, s.entries)),
                              "uncurry.curry (βη)", s=s, d=d)
                exp = exp_ctxt(th, d)
                for u in enum_substs(g, exp, depth, arg_types=tys, limit=b.limit):
                    out = curry(uncurry(u, d), d)
                    _guard(rep, "curry.uncurry certificate",
                           lambda: _cert_ok(curry_uncurry_cert(u, d), out, u), u=u, d=d)
                    rep.check(all(decide_conv(x, y) for x, y in zip(out.entries, u.entries)),
                              "curry.uncurry (βη)", u=u, d=d)
    return rep


def _cert_ok(sd, lhs: Subst, rhs: Subst) -> bool:
    a, c = check_subst_deriv(sd)
    return (all(alpha_eq(x, y) for x, y in zip(a.entries, lhs.entries))
            and all(alpha_eq(x, y) for x, y in zip(c.entries, rhs.entries)))


def laws_qu_naturality(b: Bounds = Bounds()) -> LawReport:
    """Reify and reflect commute with renamings and are identities at the base type.

    Also compares normalizing a substitution entrywise with normalizing it
    curried into closed terms; a mismatch there would be an intensional
    difference between the two realizations, not an unsound result.
    """
    rep = LawReport("qu_naturality")
    cs = _ctxts(b)
    R = _rnm_table(cs)
    for t in _terms(b, cs):
        g = t.ctxt
        n = nf3(t)
        if not isinstance(t.ty, Arr):
            rep.check(reify(reflect(t)) is t, "reflect then reify is the identity at o", t=t)
            rep.check(reflect(t).payload is t, "reflect is the identity at o", t=t)
            nf, c = greify(greflect(t))
            rep.check(nf is t and (c is None or check_deriv(c) == (t, t)),
                      "glued reflect then reify is the identity at o", t=t)
        for d in cs:
            for r in R[d, g]:
                rep.check(alpha_eq(rename(n, r), nf3(rename(t, r))), "nf commutes with renaming",
                          t=t, r=r)
                rep.check(alpha_eq(reify(restrict(reflect(t), lift_rnm(r))),
                                   rename(reify(reflect(t)), r)),
                          "reify.reflect commutes with renaming", t=t, r=r)
    # substitutions normalized entrywise and through the pre-exponential
    for ss in _subst_table(b, cs, chain=False).values():
        for s in ss:
            rep.check(nf3_subst(s) == nf3_subst_curried(s), "curried nf agrees with pointwise nf",
                      s=s)
    return rep


SUITES = {
    "rnm_category": laws_rnm_category,
    "subst_category": laws_subst_category,
    "actions": laws_actions,
    "cartesian": laws_cartesian,
    "ccc": laws_ccc,
    "qu_naturality": laws_qu_naturality,
}


def run_all(b: Bounds = Bounds(), names=None) -> list:
    return [SUITES[n](b) for n in (names or SUITES)]
