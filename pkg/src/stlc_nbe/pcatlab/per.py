"""Finite partial equivalence relations and their combinators.

A ``PerRel`` pairs an explicit carrier with a relation predicate.  Nothing
is assumed about the predicate; :func:`check_per` verifies symmetry and
transitivity exhaustively.  Function spaces are represented by tables:
a carrier element of ``per_arrow(a, b)`` is a tuple listing an output in
``b.carrier`` for every element of ``a.carrier``, in carrier order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from .report import LawReport

__all__ = ["PerRel", "per_discrete", "per_unit", "per_prod", "per_arrow", "per_sub",
           "per_from_blocks", "check_per", "domain"]


@dataclass(frozen=True)
class PerRel:
    carrier: tuple
    rel: Callable

    def related(self, x, y) -> bool:
        return bool(self.rel(x, y))

    def defined(self, x) -> bool:
        """Self-relatedness: the elements that carry meaning."""
        return self.related(x, x)


def per_discrete(carrier: Iterable) -> PerRel:
    return PerRel(tuple(carrier), lambda x, y: x == y)


def per_unit() -> PerRel:
    return PerRel(((),), lambda x, y: True)


def per_prod(a: PerRel, b: PerRel) -> PerRel:
    return PerRel(tuple(product(a.carrier, b.carrier)),
                  lambda x, y: a.rel(x[0], y[0]) and b.rel(x[1], y[1]))


def per_arrow(a: PerRel, b: PerRel) -> PerRel:
    """Tables ``f ~ f'`` iff related inputs go to related outputs."""
    dom = a.carrier
    pos = {x: i for i, x in enumerate(dom)}
    pairs = [(pos[x], pos[y]) for x in dom for y in dom if a.rel(x, y)]

    def rel(f, g):
        return all(b.rel(f[i], g[j]) for i, j in pairs)

    return PerRel(tuple(product(b.carrier, repeat=len(dom))), rel)


def per_sub(a: PerRel, pred: Callable) -> PerRel:
    """Restrict both sides of the relation to elements satisfying ``pred``."""
    return PerRel(a.carrier, lambda x, y: bool(pred(x)) and bool(pred(y)) and a.rel(x, y))


def per_from_blocks(carrier: Iterable, blocks: Iterable) -> PerRel:
    """The PER whose equivalence classes are ``blocks``; elements outside
    every block are unrelated even to themselves."""
    label = {}
    for k, blk in enumerate(blocks):
        for x in blk:
            label[x] = k
    return PerRel(tuple(carrier), lambda x, y: x in label and label.get(y) == label[x])


def domain(r: PerRel) -> tuple:
    return tuple(x for x in r.carrier if r.defined(x))


def check_per(r: PerRel, suite: str = "per") -> LawReport:
    """Exhaustive symmetry and transitivity check."""
    rep = LawReport(suite)
    c = r.carrier
    table = {(x, y): r.related(x, y) for x in c for y in c}
    for x in c:
        for y in c:
            rep.tick()
            if table[x, y] and not table[y, x]:
                rep.fail("symmetry", x=x, y=y)
    for x in c:
        for y in c:
            if not table[x, y]:
                continue
            for z in c:
                rep.tick()
                if table[y, z] and not table[x, z]:
                    rep.fail("transitivity", x=x, y=y, z=z)
    return rep
