"""Context renamings stored as explicit lists of indices.

A renaming ``Rnm(src=Γ, tgt=Δ)`` holds one index into Γ for every type of Δ,
listed in context order (``entries[-1]`` is the image of depth 0).  Renaming
a term ``Δ ⊢ t : T`` by it yields ``Γ ⊢ t[ρ] : T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CtxtMismatch, TypeMismatch
from .syntax import Abs, App, Ctxt, Idx, Tm, Ty, Var

__all__ = ["Rnm", "rnm_id", "rnm_weaken", "rnm_lift", "rnm_comp", "rename", "weakening"]


@dataclass(frozen=True, slots=True)
class Rnm:
    src: Ctxt
    tgt: Ctxt
    entries: tuple

    def __post_init__(self):
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != len(self.tgt):
            raise CtxtMismatch(
                f"renaming into {self.tgt!r} needs {len(self.tgt)} entries, got {len(self.entries)}")
        for i, (e, ty) in enumerate(zip(self.entries, self.tgt.types)):
            if not isinstance(e, Idx) or e.ctxt != self.src:
                raise CtxtMismatch(f"entry {i} does not live in {self.src!r}")
            if e.ty != ty:
                raise TypeMismatch(f"entry {i} has type {e.ty!r}, expected {ty!r}")

    @classmethod
    def _trusted(cls, src: Ctxt, tgt: Ctxt, entries: tuple) -> Rnm:
        r = object.__new__(cls)
        object.__setattr__(r, "src", src)
        object.__setattr__(r, "tgt", tgt)
        object.__setattr__(r, "entries", entries)
        return r

    def lookup(self, depth: int) -> Idx:
        return self.entries[len(self.entries) - 1 - depth]

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return f"Rnm[{', '.join(str(e.depth) for e in self.entries)}]"


@lru_cache(maxsize=4096)
def rnm_id(g: Ctxt) -> Rnm:
    n = len(g)
    return Rnm._trusted(g, g, tuple(Idx(g, g.types[k], n - 1 - k) for k in range(n)))


def rnm_weaken(r: Rnm, ty: Ty) -> Rnm:
    """``ρ_T : (Γ, T) → Δ``: every index moves one binder further out."""
    src = r.src.snoc(ty)
    return Rnm._trusted(src, r.tgt, tuple(Idx(src, e.ty, e.depth + 1) for e in r.entries))


@lru_cache(maxsize=4096)
def rnm_lift(r: Rnm, ty: Ty) -> Rnm:
    """Extend ``ρ : Γ → Δ`` to ``(Γ, T) → (Δ, T)`` by mapping depth 0 to itself."""
    w = rnm_weaken(r, ty)
    return Rnm._trusted(w.src, r.tgt.snoc(ty), w.entries + (Idx(w.src, ty, 0),))


@lru_cache(maxsize=4096)
def weakening(g: Ctxt, ty: Ty) -> Rnm:
    """The weakening renaming ``(id)_T : (Γ, T) → Γ``."""
    return rnm_weaken(rnm_id(g), ty)


def rnm_comp(r: Rnm, s: Rnm) -> Rnm:
    """``r ∘ s`` for ``r : Δ → Θ`` and ``s : Γ → Δ``."""
    if s.tgt != r.src:
        raise CtxtMismatch(f"cannot compose: {s.tgt!r} is not {r.src!r}")
    return Rnm._trusted(s.src, r.tgt, tuple(s.lookup(e.depth) for e in r.entries))


def rename(t: Tm, r: Rnm) -> Tm:
    if t.ctxt != r.tgt:
        raise CtxtMismatch(f"term lives in {t.ctxt!r}, renaming targets {r.tgt!r}")
    return _rename(t, r)


def _rename(t: Tm, r: Rnm) -> Tm:
    if isinstance(t, Var):
        return Var(r.lookup(t.idx.depth))
    if isinstance(t, App):
        return App(_rename(t.fn, r), _rename(t.arg, r))
    return Abs(_rename(t.body, rnm_lift(r, t.ty.dom)))
