"""Shared terms and strategies for the test-suite."""

import random

from hypothesis import strategies as st

from stlc_nbe.pcatlab.gen import GenConfig, gen_sample
from stlc_nbe.syntax import IOTA, Abs, App, arrows, ctxt_of, var

II = arrows(IOTA, IOTA)
NAT = arrows(II, IOTA, IOTA)


def church_one():
    return Abs(var(ctxt_of(II), 0))


def church_succ():
    g = ctxt_of(NAT, II, IOTA)
    return Abs(Abs(Abs(App(var(g, 1), App(App(var(g, 2), var(g, 1)), var(g, 0))))))


def church_two_nf():
    g = ctxt_of(II, IOTA)
    return Abs(Abs(App(var(g, 1), App(var(g, 1), var(g, 0)))))


def eta_long_one():
    g = ctxt_of(II, IOTA)
    return Abs(Abs(App(var(g, 1), var(g, 0))))


def terms(max_depth=4, max_ctxt=2):
    """Random well-typed terms, drawn from a seeded generator."""
    cfg = GenConfig(max_depth=max_depth, max_ctxt=max_ctxt)
    return st.integers(0, 2**32 - 1).map(lambda s: gen_sample(random.Random(s), cfg))


def random_rnm(rng, tgt, extra=2):
    """A random renaming into ``tgt`` from a shuffled, padded copy of it."""
    from stlc_nbe.pcatlab.gen import gen_ty
    from stlc_nbe.renaming import Rnm
    from stlc_nbe.syntax import Ctxt, Idx
    tys = list(tgt.types) + [gen_ty(rng, 1) for _ in range(rng.randint(0, extra))]
    rng.shuffle(tys)
    src = Ctxt(tuple(tys))
    entries = []
    for ty in tgt.types:
        ks = [k for k in range(len(src)) if src.at(k) == ty]
        entries.append(Idx(src, ty, rng.choice(ks)))
    return Rnm(src, tgt, tuple(entries))


def random_subst(rng, tgt, depth=2):
    """A random substitution into ``tgt``; entries are variables or small terms."""
    from stlc_nbe.pcatlab.gen import gen_term
    from stlc_nbe.substitution import Subst
    from stlc_nbe.syntax import Var
    r = random_rnm(rng, tgt)
    entries = []
    for e in r.entries:
        t = gen_term(rng, r.src, e.ty, depth) if rng.random() < 0.6 else None
        entries.append(t if t is not None else Var(e))
    return Subst(r.src, tgt, tuple(entries))


def seeds():
    return st.integers(0, 2**32 - 1).map(random.Random)
