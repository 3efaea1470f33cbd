"""Cartesian and pre-exponential structure on the category of contexts.

Products are context concatenation ``Γ ++ Δ`` (left block first) with the
projections as renamings.  The pre-exponential ``Θ^Δ`` curries every type
of Θ over Δ.  ``curry``/``uncurry`` are built entrywise from ``abs1``/``ev1``,
first by types and then by contexts (outer induction on Δ, last type first).
They are not inverse on the nose; the ``*_cert`` builders produce the βη
certificates that make them inverse up to conversion.
"""

from __future__ import annotations

from .conversion import (CAbs, CApp, CBeta, CEta, CSymm, CVar, SubstDeriv,
                         deriv_rename, deriv_refl, trans)
from .errors import CtxtMismatch, TypeMismatch
from .renaming import Rnm, weakening
from .substitution import Subst, shift
from .syntax import Abs, App, Arr, Ctxt, Idx, NIL, Tm, Ty, var

__all__ = [
    "ctxt_concat", "proj1", "proj2", "pair", "rnm_pair", "bang",
    "exp_ty", "exp_ctxt", "abs1", "ev1", "curry_ty", "uncurry_ty", "curry", "uncurry",
    "uncurry_curry_cert", "curry_uncurry_cert",
]


def ctxt_concat(g: Ctxt, d: Ctxt) -> Ctxt:
    return g + d


def proj1(g: Ctxt, d: Ctxt) -> Rnm:
    """``π₁ : Γ ++ Δ → Γ``."""
    gd, n, m = g + d, len(g), len(d)
    return Rnm._trusted(gd, g, tuple(Idx(gd, g.types[k], m + n - 1 - k) for k in range(n)))


def proj2(g: Ctxt, d: Ctxt) -> Rnm:
    """``π₂ : Γ ++ Δ → Δ``."""
    gd, m = g + d, len(d)
    return Rnm._trusted(gd, d, tuple(Idx(gd, d.types[k], m - 1 - k) for k in range(m)))


def pair(s1: Subst, s2: Subst) -> Subst:
    """``⟨s₁, s₂⟩ : Γ → Θ₁ ++ Θ₂``."""
    if s1.src != s2.src:
        raise CtxtMismatch(f"cannot pair substitutions out of {s1.src!r} and {s2.src!r}")
    return Subst._trusted(s1.src, s1.tgt + s2.tgt, s1.entries + s2.entries)


def rnm_pair(r1: Rnm, r2: Rnm) -> Rnm:
    if r1.src != r2.src:
        raise CtxtMismatch(f"cannot pair renamings out of {r1.src!r} and {r2.src!r}")
    return Rnm._trusted(r1.src, r1.tgt + r2.tgt, r1.entries + r2.entries)


def bang(g: Ctxt) -> Subst:
    """The unique substitution into the empty context."""
    return Subst._trusted(g, NIL, ())


def exp_ty(g: Ctxt, ty: Ty) -> Ctxt:
    """``Γ^T``: every type ``T'`` of Γ becomes ``T → T'``."""
    return Ctxt(tuple(Arr(ty, t) for t in g.types))


def exp_ctxt(g: Ctxt, d: Ctxt) -> Ctxt:
    """``Γ^Δ = (Γ^T)^Δ'`` for ``Δ = (Δ', T)``; ``Γ^• = Γ``."""
    for ty in reversed(d.types):
        g = exp_ty(g, ty)
    return g


def abs1(t: Tm) -> Tm:
    return Abs(t)


def ev1(t: Tm) -> Tm:
    """``App (t[(id)_T]) (Var 0)`` for ``t : T → S``."""
    if not isinstance(t.ty, Arr):
        raise TypeMismatch(f"pre-evaluation needs an arrow type, got {t.ty!r}")
    ty = t.ty.dom
    return App(shift(t, ty), var(t.ctxt.snoc(ty), 0))


def curry_ty(s: Subst) -> Subst:
    """``(Γ, T) → Θ``  to  ``Γ → Θ^T``."""
    if not len(s.src):
        raise CtxtMismatch("currying needs a non-empty source context")
    ty = s.src.last
    return Subst._trusted(s.src.rest, exp_ty(s.tgt, ty), tuple(Abs(e) for e in s.entries))


def uncurry_ty(u: Subst, ty: Ty) -> Subst:
    """``Γ → Θ^T``  to  ``(Γ, T) → Θ``."""
    cods = []
    for e in u.tgt.types:
        if not isinstance(e, Arr) or e.dom != ty:
            raise TypeMismatch(f"{e!r} is not of the form {ty!r} -> _")
        cods.append(e.cod)
    return Subst._trusted(u.src.snoc(ty), Ctxt(tuple(cods)), tuple(ev1(e) for e in u.entries))


def _split(src: Ctxt, d: Ctxt) -> None:
    n = len(d)
    if n > len(src) or (n and src.types[-n:] != d.types):
        raise CtxtMismatch(f"{src!r} does not end with {d!r}")


def curry(s: Subst, d: Ctxt) -> Subst:
    """``Γ ++ Δ → Θ``  to  ``Γ → Θ^Δ``."""
    _split(s.src, d)
    for _ in d.types:
        s = curry_ty(s)
    return s


def uncurry(u: Subst, d: Ctxt) -> Subst:
    """``Γ → Θ^Δ``  to  ``Γ ++ Δ → Θ``."""
    for ty in d.types:
        u = uncurry_ty(u, ty)
    return u


# -- certificates for the β and η laws -----------------------------------------


def _ev1_cong(d, src: Ctxt, ty: Ty):
    """From ``d : e ~ e'`` in Γ build ``ev1(e) ~ ev1(e')`` in ``(Γ, T)``."""
    if d is None:
        return None
    g = src.snoc(ty)
    return CApp(deriv_rename(d, weakening(src, ty)), CVar(Idx(g, ty, 0)))


def _uc(s: Subst, types: tuple) -> list:
    """Entry derivations ``uncurry(curry(s)) ~ s`` with ``None`` for identity."""
    if not types:
        return [None] * len(s.entries)
    head, rest = types[0], types[1:]
    x = s
    for _ in rest:
        x = curry_ty(x)
    # U_rest(U_head(C_head(x))) ~ U_rest(x) ~ s
    ux = uncurry_ty(curry_ty(x), head)
    beta = [CBeta(shift(Abs(e), head).body, var(ux.src, 0)) for e in x.entries]
    src = x.src
    for ty in rest:
        beta = [_ev1_cong(b, src, ty) for b in beta]
        src = src.snoc(ty)
    return [trans(b, r) for b, r in zip(beta, _uc(s, rest))]


def uncurry_curry_cert(s: Subst, d: Ctxt) -> SubstDeriv:
    """Certificate that ``uncurry(curry(s, Δ), Δ)`` is pointwise convertible to ``s``."""
    _split(s.src, d)
    out = uncurry(curry(s, d), d)
    ds = _uc(s, d.types)
    return SubstDeriv(s.src, s.tgt, tuple(
        deriv_refl(e) if x is None else x for x, e in zip(ds, out.entries)))


def _cu(u: Subst, types: tuple) -> list:
    """Entry derivations ``curry(uncurry(u)) ~ u`` with ``None`` for identity."""
    if not types:
        return [None] * len(u.entries)
    head, rest = types[0], types[1:]
    y = uncurry_ty(u, head)
    inner = _cu(y, rest)                  # C_rest(U_rest(y)) ~ y
    out = []
    for d, e in zip(inner, u.entries):
        cong = None if d is None else CAbs(head, d)
        out.append(trans(cong, CSymm(CEta(e, head))))
    return out


def curry_uncurry_cert(u: Subst, d: Ctxt) -> SubstDeriv:
    """Certificate that ``curry(uncurry(u, Δ), Δ)`` is pointwise convertible to ``u``."""
    return SubstDeriv(u.src, u.tgt, tuple(
        deriv_refl(e) if x is None else x for x, e in zip(_cu(u, d.types), u.entries)))
