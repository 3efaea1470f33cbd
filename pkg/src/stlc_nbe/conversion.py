"""βη-conversion derivations as explicit, independently checkable trees.

A derivation never stores both of its endpoints.  β and η leaves store the
data the rule needs and :func:`check_deriv` recomputes the endpoints, so a
tree that checks is a genuine conversion between the two terms it returns.
There is no reflexivity rule; :func:`deriv_refl` derives it by congruence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadNode, CtxtMismatch, NbeError, TypeMismatch
from .renaming import Rnm
from .substitution import Subst, beta_subst, lift_rnm, shift, sub_lift, subst
from .syntax import Abs, App, Arr, Ctxt, Idx, Tm, Ty, Var, alpha_eq, var

__all__ = [
    "Deriv", "CVar", "CApp", "CAbs", "CBeta", "CEta", "CSymm", "CTrans",
    "SubstDeriv", "check_deriv", "check_subst_deriv", "deriv_refl", "deriv_subst",
    "deriv_rename", "deriv_size", "count_rules", "eta_rhs", "trans", "or_refl",
]


class Deriv:
    __slots__ = ()
    rule = "?"


@dataclass(frozen=True, slots=True, eq=True)
class CVar(Deriv):
    idx: Idx
    rule = "Var"


@dataclass(frozen=True, slots=True, eq=True)
class CApp(Deriv):
    fn: Deriv
    arg: Deriv
    rule = "App"


@dataclass(frozen=True, slots=True, eq=True)
class CAbs(Deriv):
    ty: Ty          # type of the bound variable
    body: Deriv
    rule = "Abs"


@dataclass(frozen=True, slots=True, eq=True)
class CBeta(Deriv):
    body: Tm
    arg: Tm
    rule = "Beta"


@dataclass(frozen=True, slots=True, eq=True)
class CEta(Deriv):
    term: Tm
    ty: Ty          # domain of the term's arrow type
    rule = "Eta"


@dataclass(frozen=True, slots=True, eq=True)
class CSymm(Deriv):
    d: Deriv
    rule = "Symm"


@dataclass(frozen=True, slots=True, eq=True)
class CTrans(Deriv):
    left: Deriv
    right: Deriv
    rule = "Trans"


@dataclass(frozen=True)
class SubstDeriv:
    """Pointwise derivations between two substitutions ``src → tgt``."""

    src: Ctxt
    tgt: Ctxt
    entries: tuple


def eta_rhs(t: Tm, ty: Ty) -> Tm:
    """``Abs (App (Shift t) (Var 0))``, the right endpoint of an η step."""
    g = t.ctxt.snoc(ty)
    return Abs(App(shift(t, ty), var(g, 0)))


def check_deriv(d: Deriv) -> tuple[Tm, Tm]:
    """Validate ``d`` and return its endpoints ``(lhs, rhs)``.

    Raises :class:`BadNode` naming the path to the first offending node.
    Shared subtrees are checked once.
    """
    return _check(d, {})


def _check(d, memo):
    key = id(d)
    hit = memo.get(key)
    if hit is not None:
        return hit[0]
    out = _check_node(d, memo)
    memo[key] = (out, d)  # keep d alive so its id is not reused
    return out


def _child(label, d, memo):
    try:
        return _check(d, memo)
    except BadNode as e:
        raise BadNode((label,) + e.path, e.reason) from None


def _check_node(d, memo):
    try:
        if isinstance(d, CVar):
            if not isinstance(d.idx, Idx):
                raise BadNode((), "Var node without an index")
            v = Var(d.idx)
            return v, v
        if isinstance(d, CApp):
            l1, r1 = _child("App.fn", d.fn, memo)
            l2, r2 = _child("App.arg", d.arg, memo)
            return App(l1, l2), App(r1, r2)
        if isinstance(d, CAbs):
            l, r = _child("Abs.body", d.body, memo)
            if not len(l.ctxt) or l.ctxt.last != d.ty:
                raise BadNode((), f"body does not bind a variable of type {d.ty!r}")
            return Abs(l), Abs(r)
        if isinstance(d, CBeta):
            return App(Abs(d.body), d.arg), beta_subst(d.body, d.arg)
        if isinstance(d, CEta):
            t = d.term
            if not isinstance(t.ty, Arr) or t.ty.dom != d.ty:
                raise BadNode((), f"η needs a term of type {d.ty!r} -> _, got {t.ty!r}")
            return t, eta_rhs(t, d.ty)
        if isinstance(d, CSymm):
            l, r = _child("Symm", d.d, memo)
            return r, l
        if isinstance(d, CTrans):
            a, b = _child("Trans.left", d.left, memo)
            b2, c = _child("Trans.right", d.right, memo)
            if not alpha_eq(b, b2):
                raise BadNode((), "middle terms of a transitivity step differ")
            return a, c
    except BadNode:
        raise
    except (NbeError, TypeError) as e:
        raise BadNode((), f"{d.rule}: {e}") from None
    raise BadNode((), f"unknown derivation node {d!r}")


def check_subst_deriv(sd: SubstDeriv) -> tuple[Subst, Subst]:
    if len(sd.entries) != len(sd.tgt):
        raise BadNode((), f"{len(sd.entries)} entries for a target of length {len(sd.tgt)}")
    lhs, rhs = [], []
    memo = {}
    for k, (d, ty) in enumerate(zip(sd.entries, sd.tgt.types)):
        l, r = _child(f"entry {k}", d, memo)
        if l.ctxt != sd.src or l.ty != ty:
            raise BadNode((f"entry {k}",), f"endpoints are not terms of {ty!r} in {sd.src!r}")
        lhs.append(l)
        rhs.append(r)
    return Subst(sd.src, sd.tgt, tuple(lhs)), Subst(sd.src, sd.tgt, tuple(rhs))


def deriv_refl(t: Tm) -> Deriv:
    if isinstance(t, Var):
        return CVar(t.idx)
    if isinstance(t, App):
        return CApp(deriv_refl(t.fn), deriv_refl(t.arg))
    return CAbs(t.ty.dom, deriv_refl(t.body))


def trans(*ds):
    """Chain derivations left to right.  ``None`` stands for reflexivity."""
    out = None
    for d in ds:
        if d is None:
            continue
        out = d if out is None else CTrans(out, d)
    return out


def or_refl(d, t: Tm) -> Deriv:
    """Materialize an optional derivation; ``None`` becomes ``deriv_refl(t)``."""
    return deriv_refl(t) if d is None else d


def deriv_subst(d: Deriv, s: Subst) -> Deriv:
    """Transport ``d : t ~ u`` in Δ to ``t[σ] ~ u[σ]`` in Γ, for ``σ : Γ → Δ``."""
    return _dsubst(d, s, {})


def _dsubst(d, s, memo):
    key = (id(d), id(s))
    hit = memo.get(key)
    if hit is not None:
        return hit[0]
    if isinstance(d, CVar):
        if d.idx.ctxt != s.tgt:
            raise CtxtMismatch(f"variable lives in {d.idx.ctxt!r}, not {s.tgt!r}")
        out = deriv_refl(s.lookup(d.idx.depth))
    elif isinstance(d, CApp):
        out = CApp(_dsubst(d.fn, s, memo), _dsubst(d.arg, s, memo))
    elif isinstance(d, CAbs):
        out = CAbs(d.ty, _dsubst(d.body, sub_lift(s, d.ty), memo))
    elif isinstance(d, CBeta):
        out = CBeta(subst(d.body, sub_lift(s, d.arg.ty)), subst(d.arg, s))
    elif isinstance(d, CEta):
        out = CEta(subst(d.term, s), d.ty)
    elif isinstance(d, CSymm):
        out = CSymm(_dsubst(d.d, s, memo))
    elif isinstance(d, CTrans):
        out = CTrans(_dsubst(d.left, s, memo), _dsubst(d.right, s, memo))
    else:
        raise TypeMismatch(f"not a derivation: {d!r}")
    memo[key] = (out, d, s)
    return out


def deriv_rename(d: Deriv, r: Rnm) -> Deriv:
    return deriv_subst(d, lift_rnm(r))


def deriv_size(d: Deriv) -> int:
    if isinstance(d, (CVar, CBeta, CEta)):
        return 1
    if isinstance(d, CApp):
        return 1 + deriv_size(d.fn) + deriv_size(d.arg)
    if isinstance(d, CAbs):
        return 1 + deriv_size(d.body)
    if isinstance(d, CSymm):
        return 1 + deriv_size(d.d)
    return 1 + deriv_size(d.left) + deriv_size(d.right)


def count_rules(d: Deriv) -> dict:
    """Histogram of rule names over the tree (shared subtrees counted per use)."""
    counts: dict = {}
    stack = [d]
    while stack:
        n = stack.pop()
        counts[n.rule] = counts.get(n.rule, 0) + 1
        if isinstance(n, CApp):
            stack += [n.fn, n.arg]
        elif isinstance(n, CAbs):
            stack.append(n.body)
        elif isinstance(n, CSymm):
            stack.append(n.d)
        elif isinstance(n, CTrans):
            stack += [n.left, n.right]
    return counts
