"""Random well-typed terms and random certified βη-rewrites.

``gen_term`` builds terms top-down from a target type.  Not every type is
inhabited in every context (there is no closed term of type ``o``), so it
may return ``None``; ``gen_sample`` retries until it has a term.

``random_rewrite`` applies random β/η steps in either direction at random
positions and returns the rewritten term together with a derivation whose
endpoints are the input and the output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from ..conversion import CAbs, CApp, CBeta, CEta, CSymm, CTrans, deriv_refl, eta_rhs
from ..substitution import beta_subst, shift
from ..syntax import Abs, App, Arr, Ctxt, Idx, Tm, Ty, Var, term_depth, term_size
from .enumerate import enum_types

__all__ = ["GenConfig", "gen_ty", "gen_ctxt", "gen_term", "gen_sample", "gen_corpus",
           "random_rewrite", "strengthen", "rewrite_sites"]


@dataclass(frozen=True)
class GenConfig:
    max_depth: int = 6
    max_ctxt: int = 3
    ty_depth: int = 2
    redex_weight: float = 0.25   # chance of building an explicit β-redex when allowed


def gen_ty(rng: random.Random, depth: int) -> Ty:
    return rng.choice(enum_types(depth))


def gen_ctxt(rng: random.Random, maxlen: int, ty_depth: int) -> Ctxt:
    return Ctxt(tuple(gen_ty(rng, ty_depth) for _ in range(rng.randint(0, maxlen))))


def _spine(ty: Ty, target: Ty):
    """Argument types ``A₁..Aₙ`` with ``ty = A₁ → … → Aₙ → target``, or None."""
    args = []
    while ty != target:
        if not isinstance(ty, Arr):
            return None
        args.append(ty.dom)
        ty = ty.cod
    return args


def gen_term(rng: random.Random, g: Ctxt, ty: Ty, depth: int,
             redex_weight: float = 0.25) -> Optional[Tm]:
    """A random term ``g ⊢ t : ty`` with ``term_depth(t) ≤ depth``, or None."""
    opts = []
    heads = []
    for k in range(len(g)):
        sp = _spine(g.at(k), ty)
        if sp is not None and len(sp) <= depth:
            heads.append((k, sp))
    if heads:
        opts.append("head")
    if isinstance(ty, Arr) and depth > 0:
        opts += ["abs", "abs"]
    if depth > 1 and rng.random() < redex_weight:
        opts.append("redex")
    rng.shuffle(opts)
    for opt in opts:
        t = _build(rng, g, ty, depth, opt, heads, redex_weight)
        if t is not None:
            return t
    return None


def _build(rng, g, ty, depth, opt, heads, rw):
    if opt == "abs":
        body = gen_term(rng, g.snoc(ty.dom), ty.cod, depth - 1, rw)
        return None if body is None else Abs(body)
    if opt == "head":
        k, sp = rng.choice(heads)
        t = Var(Idx(g, g.at(k), k))
        # a head applied to n arguments has depth n; arguments get the rest
        for a_ty in sp:
            a = gen_term(rng, g, a_ty, min(depth - len(sp), rng.randint(0, depth - 1)), rw)
            if a is None:
                return None
            t = App(t, a)
        return t
    # an explicit β-redex (λx:A. body) arg
    a_ty = rng.choice(g.types) if g.types and rng.random() < 0.5 else gen_ty(rng, 1)
    arg = gen_term(rng, g, a_ty, depth - 1, rw)
    if arg is None:
        return None
    body = gen_term(rng, g.snoc(a_ty), ty, depth - 2, rw)
    return None if body is None else App(Abs(body), arg)


def gen_sample(rng: random.Random, cfg: GenConfig = GenConfig(), tries: int = 1000) -> Tm:
    """One random term within ``cfg``; retries context and type until inhabited."""
    for _ in range(tries):
        g = gen_ctxt(rng, cfg.max_ctxt, cfg.ty_depth)
        ty = gen_ty(rng, cfg.ty_depth)
        t = gen_term(rng, g, ty, rng.randint(cfg.max_depth // 2, cfg.max_depth),
                     cfg.redex_weight)
        if t is not None:
            assert term_depth(t) <= cfg.max_depth
            return t
    raise RuntimeError("no inhabited instance found")


def gen_corpus(seed: int, n: int, cfg: GenConfig = GenConfig()) -> list:
    rng = random.Random(seed)
    return [gen_sample(rng, cfg) for _ in range(n)]


# -- certified rewriting ---------------------------------------------------------


def strengthen(t: Tm) -> Optional[Tm]:
    """Drop the last context entry if ``t`` does not use variable 0."""
    g = t.ctxt
    if not len(g):
        return None
    return _str(t, 0, g.rest)


def _str(t, cut, g):
    # ``cut`` binders sit between the removed variable and ``t``; ``g`` is
    # the context of the result
    if isinstance(t, Var):
        d = t.idx.depth
        if d == cut:
            return None
        return Var(Idx(g, t.ty, d if d < cut else d - 1))
    if isinstance(t, App):
        f = _str(t.fn, cut, g)
        if f is None:
            return None
        a = _str(t.arg, cut, g)
        return None if a is None else App(f, a)
    b = _str(t.body, cut + 1, g.snoc(t.ty.dom))
    return None if b is None else Abs(b)


def rewrite_sites(t: Tm, path=()):
    """All positions in ``t`` as ``(path, subterm)``; path items are 'fn', 'arg', 'body'."""
    yield path, t
    if isinstance(t, App):
        yield from rewrite_sites(t.fn, path + ("fn",))
        yield from rewrite_sites(t.arg, path + ("arg",))
    elif isinstance(t, Abs):
        yield from rewrite_sites(t.body, path + ("body",))


def _local_steps(rng, s: Tm):
    """Possible single rewrites at the root of ``s`` as ``(new, deriv)``."""
    out = []
    if isinstance(s, App) and isinstance(s.fn, Abs):
        out.append((beta_subst(s.fn.body, s.arg), CBeta(s.fn.body, s.arg)))
    if isinstance(s.ty, Arr):
        out.append((eta_rhs(s, s.ty.dom), CEta(s, s.ty.dom)))
    if isinstance(s, Abs) and isinstance(s.body, App):
        b = s.body
        if isinstance(b.arg, Var) and b.arg.idx.depth == 0:
            f = strengthen(b.fn)
            if f is not None:
                out.append((f, CSymm(CEta(f, s.ty.dom))))
    # β-expansion: s ~ (λx:A. s↑) a for some a : A in scope
    g = s.ctxt
    a_ty = rng.choice(g.types) if g.types else None
    if a_ty is not None:
        a = gen_term(rng, g, a_ty, 1)
        if a is not None:
            body = shift(s, a_ty)
            out.append((App(Abs(body), a), CSymm(CBeta(body, a))))
    return out


def _replace(t: Tm, path, rng):
    """Rewrite the subterm at ``path``; returns ``(new_t, deriv)`` or None."""
    if not path:
        steps = _local_steps(rng, t)
        return rng.choice(steps) if steps else None
    head, rest = path[0], path[1:]
    if head == "fn":
        r = _replace(t.fn, rest, rng)
        return None if r is None else (App(r[0], t.arg), CApp(r[1], deriv_refl(t.arg)))
    if head == "arg":
        r = _replace(t.arg, rest, rng)
        return None if r is None else (App(t.fn, r[0]), CApp(deriv_refl(t.fn), r[1]))
    r = _replace(t.body, rest, rng)
    return None if r is None else (Abs(r[0]), CAbs(t.ty.dom, r[1]))


def random_rewrite(t: Tm, rng: random.Random, steps: int = 3, max_size: int = 400):
    """Apply up to ``steps`` random βη steps; returns ``(t', deriv)`` with
    ``deriv : t ~ t'`` (reflexivity if nothing applied)."""
    cur, d = t, None
    for _ in range(steps):
        sites = list(rewrite_sites(cur))
        rng.shuffle(sites)
        for path, _sub in sites:
            r = _replace(cur, path, rng)
            if r is not None and term_size(r[0]) <= max_size:
                cur = r[0]
                d = r[1] if d is None else CTrans(d, r[1])
                break
    return cur, (deriv_refl(t) if d is None else d)
