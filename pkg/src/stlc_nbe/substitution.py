"""Context substitutions as explicit lists of terms, and their action on terms.

``Subst(src=Γ, tgt=Δ)`` holds a term in Γ for every type of Δ, in context
order.  Also provides the lifting of renamings, the two mixed compositions
with renamings, and the ``beta_subst``/``shift`` helpers of βη-conversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import CtxtMismatch, TypeMismatch
from .renaming import Rnm, rename, weakening
from .syntax import Abs, App, Ctxt, Idx, Tm, Ty, Var

__all__ = [
    "Subst", "sub_id", "sub_weaken", "sub_lift", "sub_comp", "sub_snoc", "subst",
    "lift_rnm", "hcomp_sr", "hcomp_rs", "beta_subst", "shift", "sub_weakening",
]


@dataclass(frozen=True)
class Subst:
    src: Ctxt
    tgt: Ctxt
    entries: tuple

    def __post_init__(self):
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != len(self.tgt):
            raise CtxtMismatch(
                f"substitution into {self.tgt!r} needs {len(self.tgt)} entries, "
                f"got {len(self.entries)}")
        for i, (e, ty) in enumerate(zip(self.entries, self.tgt.types)):
            if not isinstance(e, Tm) or e.ctxt != self.src:
                raise CtxtMismatch(f"entry {i} does not live in {self.src!r}")
            if e.ty != ty:
                raise TypeMismatch(f"entry {i} has type {e.ty!r}, expected {ty!r}")

    @classmethod
    def _trusted(cls, src: Ctxt, tgt: Ctxt, entries: tuple, identity: bool = False) -> Subst:
        s = object.__new__(cls)
        object.__setattr__(s, "src", src)
        object.__setattr__(s, "tgt", tgt)
        object.__setattr__(s, "entries", entries)
        if identity:
            s.__dict__["is_identity"] = True
        return s

    @cached_property
    def is_identity(self) -> bool:
        n = len(self.entries)
        if self.src != self.tgt:
            return False
        return all(isinstance(e, Var) and e.idx.depth == n - 1 - k
                   for k, e in enumerate(self.entries))

    def lookup(self, depth: int) -> Tm:
        return self.entries[len(self.entries) - 1 - depth]

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return f"Subst{list(self.entries)!r}"


def sub_id(g: Ctxt) -> Subst:
    n = len(g)
    return Subst._trusted(
        g, g, tuple(Var(Idx(g, g.types[k], n - 1 - k)) for k in range(n)), identity=True)


def sub_weaken(s: Subst, ty: Ty) -> Subst:
    """``σ_T : (Γ, T) → Δ``: every entry is shifted past the new variable."""
    w = weakening(s.src, ty)
    return Subst._trusted(w.src, s.tgt, tuple(rename(e, w) for e in s.entries))


def sub_weakening(g: Ctxt, ty: Ty) -> Subst:
    """The weakening substitution ``(id)_T : (Γ, T) → Γ``."""
    return lift_rnm(weakening(g, ty))


def sub_snoc(s: Subst, t: Tm) -> Subst:
    if t.ctxt != s.src:
        raise CtxtMismatch(f"{t!r} does not live in {s.src!r}")
    return Subst._trusted(s.src, s.tgt.snoc(t.ty), s.entries + (t,))


def sub_lift(s: Subst, ty: Ty) -> Subst:
    """Extend ``σ : Γ → Δ`` to ``(Γ, T) → (Δ, T)``."""
    memo = s.__dict__.setdefault("_lifts", {})
    out = memo.get(ty)
    if out is None:
        src = s.src.snoc(ty)
        if s.is_identity:
            out = sub_id(src)
        else:
            w = sub_weaken(s, ty)
            out = Subst._trusted(src, s.tgt.snoc(ty), w.entries + (Var(Idx(src, ty, 0)),))
        memo[ty] = out
    return out


def sub_comp(s: Subst, t: Subst) -> Subst:
    """``s ∘ t`` for ``s : Δ → Θ`` and ``t : Γ → Δ``."""
    if t.tgt != s.src:
        raise CtxtMismatch(f"cannot compose: {t.tgt!r} is not {s.src!r}")
    return Subst._trusted(t.src, s.tgt, tuple(_subst(e, t) for e in s.entries))


def subst(t: Tm, s: Subst) -> Tm:
    if t.ctxt != s.tgt:
        raise CtxtMismatch(f"term lives in {t.ctxt!r}, substitution targets {s.tgt!r}")
    return _subst(t, s)


def _subst(t: Tm, s: Subst) -> Tm:
    if s.is_identity:
        return t
    if isinstance(t, Var):
        return s.lookup(t.idx.depth)
    if isinstance(t, App):
        return App(_subst(t.fn, s), _subst(t.arg, s))
    return Abs(_subst(t.body, sub_lift(s, t.ty.dom)))


def lift_rnm(r: Rnm) -> Subst:
    return Subst._trusted(r.src, r.tgt, tuple(Var(e) for e in r.entries))


def hcomp_sr(s: Subst, r: Rnm) -> Subst:
    """``s ∘ r`` for ``s : Δ → Θ`` and ``r : Γ → Δ``: rename every entry of ``s``."""
    if r.tgt != s.src:
        raise CtxtMismatch(f"cannot compose: {r.tgt!r} is not {s.src!r}")
    return Subst._trusted(r.src, s.tgt, tuple(rename(e, r) for e in s.entries))


def hcomp_rs(r: Rnm, s: Subst) -> Subst:
    """``r ∘ s`` for ``r : Δ → Θ`` and ``s : Γ → Δ``: select entries of ``s``."""
    if s.tgt != r.src:
        raise CtxtMismatch(f"cannot compose: {s.tgt!r} is not {r.src!r}")
    return Subst._trusted(s.src, r.tgt, tuple(s.lookup(e.depth) for e in r.entries))


def beta_subst(body: Tm, arg: Tm) -> Tm:
    """Substitute ``arg`` for index 0 of ``body``, dropping the bound variable."""
    bctx = body.ctxt
    if not len(bctx):
        raise CtxtMismatch("beta_subst needs a body with a bound variable")
    if bctx.last != arg.ty:
        raise TypeMismatch(f"bound variable has type {bctx.last!r}, argument {arg.ty!r}")
    if bctx.rest != arg.ctxt:
        raise CtxtMismatch(f"argument lives in {arg.ctxt!r}, expected {bctx.rest!r}")
    return _subst(body, sub_snoc(sub_id(arg.ctxt), arg))


def shift(t: Tm, ty: Ty) -> Tm:
    """Weaken ``t`` into ``(Γ, T)``; the new variable is index 0."""
    return rename(t, weakening(t.ctxt, ty))
