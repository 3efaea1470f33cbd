"""Kripke-style normalization by evaluation over the category of substitutions.

A semantic value lives at a world (a context).  At the base type it is a
term of that world; at ``T₁ → T₂`` it is a closure that accepts a world map
``s : Δ → Γ`` (a substitution) and a value at Δ and returns a value at Δ.
``reify`` turns values back into terms and ``reflect`` embeds terms as values;
both are the identity at the base type.  ``nf3`` is reify ∘ eval ∘ reflect.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import CtxtMismatch, TypeMismatch
from .preclosure import curry, uncurry
from .substitution import Subst, _subst, sub_comp, sub_id, sub_weakening
from .syntax import Abs, App, Arr, Ctxt, Tm, Ty, Var, var

__all__ = [
    "Sem", "Env", "restrict", "reflect", "reify", "eval_tm", "reflect_env",
    "nf3", "nf3_subst", "nf3_subst_curried",
]


@dataclass(frozen=True, slots=True)
class Sem:
    ty: Ty
    world: Ctxt
    payload: Union[Tm, Callable]

    def apply(self, s: Subst, a: Sem) -> Sem:
        """Run the closure of an arrow-typed value along ``s : Δ → world``."""
        if not isinstance(self.ty, Arr):
            raise TypeMismatch(f"cannot apply a value of type {self.ty!r}")
        if s.tgt != self.world or a.world != s.src:
            raise CtxtMismatch("world map does not match the value's world")
        if a.ty != self.ty.dom:
            raise TypeMismatch(f"argument of type {a.ty!r}, expected {self.ty.dom!r}")
        return self.payload(s, a)


@dataclass(frozen=True, slots=True)
class Env:
    """One value at ``world`` for every type of ``tgt``, in context order."""

    world: Ctxt
    tgt: Ctxt
    values: tuple

    def lookup(self, depth: int) -> Sem:
        return self.values[len(self.values) - 1 - depth]


def restrict(v: Sem, s: Subst) -> Sem:
    """Move ``v`` from world Γ to world Δ along ``s : Δ → Γ``."""
    if s.tgt != v.world:
        raise CtxtMismatch(f"value lives at {v.world!r}, map targets {s.tgt!r}")
    return _restrict(v, s)


def _restrict(v, s):
    if s.is_identity:
        return v
    if not isinstance(v.ty, Arr):
        return Sem(v.ty, s.src, _subst(v.payload, s))
    f = v.payload
    return Sem(v.ty, s.src, lambda s2, a: f(sub_comp(s, s2), a))


def reflect(t: Tm) -> Sem:
    ty = t.ty
    if not isinstance(ty, Arr):
        return Sem(ty, t.ctxt, t)

    def closure(s, a):
        return reflect(App(_subst(t, s), reify(a)))

    return Sem(ty, t.ctxt, closure)


def reify(v: Sem) -> Tm:
    ty = v.ty
    if not isinstance(ty, Arr):
        return v.payload
    g = v.world
    x = reflect(var(g.snoc(ty.dom), 0))
    return Abs(reify(v.payload(sub_weakening(g, ty.dom), x)))


def eval_tm(t: Tm, env: Env) -> Sem:
    """Interpret ``Δ ⊢ t : T`` in an environment for Δ at world Γ."""
    if t.ctxt != env.tgt:
        raise CtxtMismatch(f"term lives in {t.ctxt!r}, environment covers {env.tgt!r}")
    return _eval(t, env)


def _eval(t, env):
    if isinstance(t, Var):
        return env.lookup(t.idx.depth)
    if isinstance(t, App):
        f = _eval(t.fn, env)
        return f.payload(sub_id(env.world), _eval(t.arg, env))
    body, ty = t.body, t.ty

    def closure(s, a):
        vals = tuple(_restrict(v, s) for v in env.values) + (a,)
        return _eval(body, Env(s.src, body.ctxt, vals))

    return Sem(ty, env.world, closure)


def reflect_env(g: Ctxt) -> Env:
    n = len(g)
    return Env(g, g, tuple(reflect(var(g, n - 1 - k)) for k in range(n)))


def nf3(t: Tm) -> Tm:
    return reify(_eval(t, reflect_env(t.ctxt)))


def nf3_subst(s: Subst) -> Subst:
    """Normalize a substitution pointwise."""
    return Subst._trusted(s.src, s.tgt, tuple(nf3(e) for e in s.entries))


def nf3_subst_curried(s: Subst) -> Subst:
    """Normalize through the pre-exponential: curry ``s`` to closed terms,
    normalize those, uncurry back and normalize pointwise."""
    closed = curry(s, s.src)
    return nf3_subst(uncurry(nf3_subst(closed), s.src))

