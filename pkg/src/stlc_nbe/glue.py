"""Glued normalization: a syntactic track and a canonical track, linked by proofs.

Every glued value carries ``syn``, a term at its world standing for the value
on the syntactic side.  At the base type it also carries the canonical term
``nfm`` and a derivation ``syn ~ nfm``.  At arrow type its closure returns,
with each result, a step derivation ``App(syn[s], a.syn) ~ result.syn``.
Evaluation threads these derivations through, so normalizing a term yields
the normal form together with a certificate of its conversion to the input.

Internally ``None`` stands for a reflexive derivation; it is expanded with
``deriv_refl`` only where a concrete tree is required.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from .conversion import (CAbs, CApp, CBeta, CEta, CTrans, Deriv, check_deriv,
                         deriv_refl, deriv_subst, or_refl, trans)
from .errors import BadNode, CtxtMismatch, InvalidCert, TypeMismatch
from .substitution import Subst, _subst, sub_comp, sub_id, sub_weakening
from .syntax import Abs, App, Arr, Ctxt, Tm, Ty, Var, alpha_eq, var

__all__ = [
    "GVal", "GEnv", "NfResult", "grestrict", "greflect", "greify", "geval",
    "greflect_env", "nf4", "nf4_subst", "decide_conv",
]


@dataclass(frozen=True, slots=True)
class GVal:
    ty: Ty
    world: Ctxt
    syn: Tm
    payload: Union[Tm, Callable]   # canonical term at base type, closure at arrow type
    cert: Optional[Deriv] = None   # base type only: syn ~ payload

    def certificate(self) -> Deriv:
        """The base-type derivation ``syn ~ nfm`` as a concrete tree."""
        if isinstance(self.ty, Arr):
            raise TypeMismatch("arrow-typed values carry no stored certificate")
        return or_refl(self.cert, self.syn)

    def apply(self, s: Subst, a: GVal):
        """Apply along ``s : Δ → world``; returns ``(result, step)`` with
        ``step : App(syn[s], a.syn) ~ result.syn`` (``None`` if reflexive)."""
        if not isinstance(self.ty, Arr):
            raise TypeMismatch(f"cannot apply a value of type {self.ty!r}")
        if s.tgt != self.world or a.world != s.src or a.ty != self.ty.dom:
            raise CtxtMismatch("world map or argument does not fit the value")
        return self.payload(s, a)


@dataclass(frozen=True, slots=True)
class GEnv:
    world: Ctxt
    tgt: Ctxt
    values: tuple

    def lookup(self, depth: int) -> GVal:
        return self.values[len(self.values) - 1 - depth]

    def syn_subst(self) -> Subst:
        """The substitution ``tgt → world`` formed by the syntactic tracks."""
        return Subst._trusted(self.world, self.tgt, tuple(v.syn for v in self.values))


@dataclass(frozen=True)
class NfResult:
    input: Tm
    nf: Tm
    witness: Tm
    cert_in_wit: Deriv
    cert_wit_nf: Deriv
    cert: Deriv

    def verify(self) -> None:
        """Check all three certificates against their claimed endpoints."""
        for name, d, lhs, rhs in (
                ("cert_in_wit", self.cert_in_wit, self.input, self.witness),
                ("cert_wit_nf", self.cert_wit_nf, self.witness, self.nf),
                ("cert", self.cert, self.input, self.nf)):
            try:
                a, b = check_deriv(d)
            except BadNode as e:
                raise InvalidCert(f"{name}: {e}") from None
            if not (alpha_eq(a, lhs) and alpha_eq(b, rhs)):
                raise InvalidCert(f"{name}: endpoints differ from the claimed terms")


def grestrict(v: GVal, s: Subst) -> GVal:
    if s.tgt != v.world:
        raise CtxtMismatch(f"value lives at {v.world!r}, map targets {s.tgt!r}")
    return _grestrict(v, s)


def _grestrict(v, s):
    if s.is_identity:
        return v
    syn = _subst(v.syn, s)
    if not isinstance(v.ty, Arr):
        cert = None if v.cert is None else deriv_subst(v.cert, s)
        return GVal(v.ty, s.src, syn, _subst(v.payload, s), cert)
    f = v.payload
    # syn[s][s2] is syn[s ∘ s2] on the nose, so f's step certificate is reused
    return GVal(v.ty, s.src, syn, lambda s2, a: f(sub_comp(s, s2), a))


def greflect(t: Tm) -> GVal:
    ty = t.ty
    if not isinstance(ty, Arr):
        return GVal(ty, t.ctxt, t, t, None)

    def closure(s, a):
        ts = _subst(t, s)
        nf_a, c_a = greify(a)
        step = None if c_a is None else CApp(deriv_refl(ts), c_a)
        return greflect(App(ts, nf_a)), step

    return GVal(ty, t.ctxt, t, closure)


def greify(v: GVal):
    """Return ``(nf, cert)`` with ``cert : v.syn ~ nf`` (``None`` if reflexive)."""
    ty = v.ty
    if not isinstance(ty, Arr):
        return v.payload, v.cert
    g = v.world
    x = greflect(var(g.snoc(ty.dom), 0))
    r, step = v.payload(sub_weakening(g, ty.dom), x)
    body, c = greify(r)
    inner = trans(step, c)
    eta = CEta(v.syn, ty.dom)
    if inner is None:
        return Abs(body), eta
    return Abs(body), CTrans(eta, CAbs(ty.dom, inner))


def geval(t: Tm, env: GEnv):
    """Return ``(val, cert)`` with ``cert : t[env.syn_subst()] ~ val.syn``."""
    if t.ctxt != env.tgt:
        raise CtxtMismatch(f"term lives in {t.ctxt!r}, environment covers {env.tgt!r}")
    return _geval(t, env)


def _geval(t, env):
    if isinstance(t, Var):
        return env.lookup(t.idx.depth), None
    if isinstance(t, App):
        f, cf = _geval(t.fn, env)
        a, ca = _geval(t.arg, env)
        r, step = f.payload(sub_id(env.world), a)
        cong = None
        if cf is not None or ca is not None:
            cong = CApp(or_refl(cf, f.syn), or_refl(ca, a.syn))
        return r, trans(cong, step)
    body = t.body
    syn = _subst(t, env.syn_subst())

    def closure(s, a):
        beta = CBeta(_subst(syn, s).body, a.syn)
        vals = tuple(_grestrict(v, s) for v in env.values) + (a,)
        r, c = _geval(body, GEnv(s.src, body.ctxt, vals))
        return r, trans(beta, c)

    return GVal(t.ty, env.world, syn, closure), None


def greflect_env(g: Ctxt) -> GEnv:
    n = len(g)
    return GEnv(g, g, tuple(greflect(var(g, n - 1 - k)) for k in range(n)))


def nf4(t: Tm, check: bool = False) -> NfResult:
    """Normalize ``t``; ``nf`` is the canonical output and ``witness`` the
    syntactic one.  With ``check=True`` the certificates are validated and
    :class:`InvalidCert` is raised on failure."""
    val, c_in = _geval(t, greflect_env(t.ctxt))
    nf, c_out = greify(val)
    d1 = or_refl(c_in, t)
    d2 = or_refl(c_out, val.syn)
    res = NfResult(t, nf, val.syn, d1, d2, CTrans(d1, d2))
    if check:
        res.verify()
    return res


def nf4_subst(s: Subst, check: bool = False) -> list:
    return [nf4(e, check) for e in s.entries]


def decide_conv(t: Tm, u: Tm) -> bool:
    """βη-convertibility of two terms of the same context and type."""
    if t.ctxt != u.ctxt or t.ty != u.ty:
        raise TypeMismatch(f"cannot compare {t.ty!r} in {t.ctxt!r} with {u.ty!r} in {u.ctxt!r}")
    return alpha_eq(nf4(t).nf, nf4(u).nf)
