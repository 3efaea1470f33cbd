"""Exhaustive, deterministic enumerations of small syntax.

Term depth counts constructors above the leaves: variables have depth 0,
``Abs(Var0)`` depth 1.  Application arguments range over ``arg_types``
(default: all types of depth ≤ 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from ..errors import BudgetExceeded
from ..renaming import Rnm
from ..substitution import Subst
from ..syntax import IOTA, Abs, App, Arr, Ctxt, Idx, Ty, Var

__all__ = ["Bounds", "enum_types", "enum_ctxts", "enum_terms", "enum_rnms", "enum_substs",
           "DEFAULT_LIMIT"]

DEFAULT_LIMIT = 200_000


@dataclass(frozen=True)
class Bounds:
    """Default sizes for the exhaustive law suites and oracle cross-checks."""

    type_depth: int = 2
    ctxt_len: int = 2
    term_depth: int = 3
    fuel: int = 8
    subst_term_depth: int = 2
    # laws quantifying over chains of two or three morphisms use smaller pieces
    chain_type_depth: int = 1
    chain_term_depth: int = 1
    chain_subject_depth: int = 2   # depth of the terms those chains act on
    limit: int = DEFAULT_LIMIT

    def __post_init__(self):
        for name in ("type_depth", "ctxt_len", "term_depth", "fuel", "subst_term_depth",
                     "chain_type_depth", "chain_term_depth", "chain_subject_depth",
                     "limit"):
            if getattr(self, name) < 0 or (name in ("fuel", "limit") and getattr(self, name) < 1):
                raise ValueError(f"bound {name} must be positive")


@lru_cache(maxsize=None)
def enum_types(depth: int) -> tuple:
    if depth <= 0:
        return (IOTA,)
    smaller = enum_types(depth - 1)
    new = [Arr(a, b) for a in smaller for b in smaller]
    out = list(smaller)
    seen = set(out)
    for t in new:
        if t not in seen:
            seen.add(t)
            out.append(t)
    return tuple(out)


def enum_ctxts(maxlen: int, depth: int) -> list:
    tys = enum_types(depth)
    out = []
    for n in range(maxlen + 1):
        out.extend(Ctxt(p) for p in product(tys, repeat=n))
    return out


def enum_terms(g: Ctxt, ty: Ty, budget: int, arg_types: tuple = None,
               limit: int = DEFAULT_LIMIT) -> list:
    """All terms ``g ⊢ t : ty`` of depth ≤ ``budget``."""
    if arg_types is None:
        arg_types = enum_types(2)
    return list(_terms(g, ty, budget, tuple(arg_types), limit))


@lru_cache(maxsize=None)
def _terms(g, ty, d, arg_types, limit):
    out = [Var(Idx(g, t, len(g) - 1 - k)) for k, t in enumerate(g.types) if t == ty]
    out.reverse()  # depth 0 first
    if d > 0:
        if isinstance(ty, Arr):
            out.extend(Abs(b) for b in _terms(g.snoc(ty.dom), ty.cod, d - 1, arg_types, limit))
        for a_ty in arg_types:
            fns = _terms(g, Arr(a_ty, ty), d - 1, arg_types, limit)
            if not fns:
                continue
            args = _terms(g, a_ty, d - 1, arg_types, limit)
            if len(out) + len(fns) * len(args) > limit:
                raise BudgetExceeded(
                    f"more than {limit} terms of type {ty!r} at depth {d} in {g!r}")
            out.extend(App(f, a) for f in fns for a in args)
    if len(out) > limit:
        raise BudgetExceeded(f"more than {limit} terms of type {ty!r} at depth {d} in {g!r}")
    return tuple(out)


def enum_rnms(g: Ctxt, d: Ctxt) -> list:
    """All renamings ``g → d``."""
    choices = [[Idx(g, t, len(g) - 1 - k) for k, t in enumerate(g.types) if t == ty]
               for ty in d.types]
    return [Rnm._trusted(g, d, tuple(p)) for p in product(*choices)]


def enum_substs(g: Ctxt, d: Ctxt, budget: int, arg_types: tuple = None,
                limit: int = DEFAULT_LIMIT) -> list:
    """All substitutions ``g → d`` whose entries have depth ≤ ``budget``."""
    choices = [enum_terms(g, ty, budget, arg_types, limit) for ty in d.types]
    total = 1
    for c in choices:
        total *= len(c)
    if total > limit:
        raise BudgetExceeded(f"{total} substitutions {g!r} → {d!r} exceed the limit {limit}")
    return [Subst._trusted(g, d, tuple(p)) for p in product(*choices)]
