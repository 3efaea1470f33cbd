"""Bounded βη-conversion by rewriting, independent of evaluation.

Steps are β-reduction anywhere and *restricted* η-expansion: an arrow-typed
subterm is expanded only if it is not already an abstraction and does not
stand in function position.  That system terminates and is confluent with
long βη-normal forms as its normal forms, so two reachable sets that are
both exhausted and disjoint prove non-convertibility.
"""

from __future__ import annotations

from functools import lru_cache

from ..conversion import eta_rhs
from ..errors import FuelExhausted, TypeMismatch
from ..substitution import beta_subst
from ..syntax import Abs, App, Arr, Tm

__all__ = ["successors", "explore", "conv_oracle", "is_long_normal", "MAX_STATES"]

MAX_STATES = 20_000
_INTERN: dict = {}


@lru_cache(maxsize=200_000)
def _eta(t):
    return eta_rhs(t, t.ty.dom)


@lru_cache(maxsize=200_000)
def successors(t: Tm, head: bool = False) -> tuple:
    """All one-step rewrites of ``t``; ``head`` marks function position."""
    out = []
    if isinstance(t.ty, Arr) and not head and not isinstance(t, Abs):
        out.append(_eta(t))
    if isinstance(t, App):
        if isinstance(t.fn, Abs):
            out.append(beta_subst(t.fn.body, t.arg))
        out.extend(App(f, t.arg) for f in successors(t.fn, True))
        out.extend(App(t.fn, a) for a in successors(t.arg, False))
    elif isinstance(t, Abs):
        out.extend(Abs(b) for b in successors(t.body, False))
    # share one instance per term so later equality tests stop at identity
    return tuple(_INTERN.setdefault(r, r) for r in out)


@lru_cache(maxsize=100_000)
def explore(t: Tm, fuel: int) -> tuple[frozenset, bool]:
    """Terms reachable from ``t`` in at most ``fuel`` steps, and whether the
    search was exhaustive (nothing new would be found with more fuel)."""
    seen = {t}
    frontier = [t]
    for _ in range(fuel):
        nxt = []
        for s in frontier:
            for r in successors(s):
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
        if not frontier:
            return frozenset(seen), True
        if len(seen) > MAX_STATES:
            return frozenset(seen), False
    complete = not any(True for s in frontier for r in successors(s) if r not in seen)
    return frozenset(seen), complete


def conv_oracle(t: Tm, u: Tm, fuel: int) -> bool:
    """True if the rewrite closures of ``t`` and ``u`` meet within ``fuel``
    steps each, False if both closures are exhausted without meeting.
    Raises :class:`FuelExhausted` when the answer is unknown."""
    if t.ctxt != u.ctxt or t.ty != u.ty:
        raise TypeMismatch("conv_oracle compares terms of one context and type")
    rt, ct = explore(t, fuel)
    ru, cu = explore(u, fuel)
    if not rt.isdisjoint(ru):
        return True
    if ct and cu:
        return False
    raise FuelExhausted(f"no verdict within {fuel} steps")


def is_long_normal(t: Tm) -> bool:
    """β-normal and η-long: arrow-typed terms are abstractions, base-typed
    terms are a variable applied to long normal arguments."""
    if isinstance(t.ty, Arr):
        return isinstance(t, Abs) and is_long_normal(t.body)
    return _neutral(t)


def _neutral(t):
    if isinstance(t, App):
        return _neutral(t.fn) and is_long_normal(t.arg)
    return not isinstance(t, Abs) and not isinstance(t, App)
