"""Simple types, contexts, typed de Bruijn indices and intrinsically typed terms.

Every term node carries its context and type.  The annotations are computed
by the constructors from the children and are never accepted from callers,
so a ``Tm`` that exists is well typed.  Depth 0 is the most recently bound
variable (the right end of the context).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import CtxtMismatch, TypeMismatch

__all__ = [
    "Ty", "Iota", "Arr", "IOTA", "arrows",
    "Ctxt", "NIL", "ctxt_of",
    "Idx", "Tm", "Var", "App", "Abs",
    "mk_var", "mk_app", "mk_abs", "var",
    "alpha_eq", "validate", "term_size", "term_depth", "ty_depth", "show",
]


# -- types -------------------------------------------------------------------


class Ty:
    __slots__ = ()

    @property
    def is_arrow(self) -> bool:
        return isinstance(self, Arr)


@dataclass(frozen=True, slots=True)
class Iota(Ty):
    def __repr__(self):
        return "o"


@dataclass(frozen=True, slots=True, eq=False)
class Arr(Ty):
    dom: Ty
    cod: Ty
    _h: int = field(init=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.dom, Ty) or not isinstance(self.cod, Ty):
            raise TypeError("Arr expects two types")
        object.__setattr__(self, "_h", hash(("arr", self.dom, self.cod)))

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not Arr or self._h != other._h:
            return False
        return self.dom == other.dom and self.cod == other.cod

    def __hash__(self):
        return self._h

    def __repr__(self):
        dom = f"({self.dom!r})" if isinstance(self.dom, Arr) else repr(self.dom)
        return f"{dom}->{self.cod!r}"


IOTA = Iota()
_ARRS: dict = {}


def _arr(dom: Ty, cod: Ty) -> Arr:
    """Shared arrow instances for the types computed by ``Abs``."""
    key = (dom, cod)
    out = _ARRS.get(key)
    if out is None:
        out = _ARRS[key] = Arr(dom, cod)
    return out


def arrows(*tys: Ty) -> Ty:
    """Right-nested arrow: ``arrows(a, b, c) == Arr(a, Arr(b, c))``."""
    out = tys[-1]
    for t in reversed(tys[:-1]):
        out = Arr(t, out)
    return out


def ty_depth(t: Ty) -> int:
    if isinstance(t, Arr):
        return 1 + max(ty_depth(t.dom), ty_depth(t.cod))
    return 0


# -- contexts ----------------------------------------------------------------


@dataclass(frozen=True, slots=True, eq=False)
class Ctxt:
    """A context ``(•, T_0, ..., T_{n-1})``; ``types[-1]`` is at depth 0."""

    types: tuple = ()
    _h: int = field(init=False, repr=False)
    _memo: dict = field(init=False, repr=False)   # snoc results and the rest, shared

    def __post_init__(self):
        if not isinstance(self.types, tuple):
            object.__setattr__(self, "types", tuple(self.types))
        object.__setattr__(self, "_h", hash(self.types))
        object.__setattr__(self, "_memo", {})

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not Ctxt or self._h != other._h:
            return False
        return self.types == other.types

    def __hash__(self):
        return self._h

    def snoc(self, ty: Ty) -> Ctxt:
        out = self._memo.get(ty)
        if out is None:
            out = self._memo[ty] = Ctxt(self.types + (ty,))
            out._memo[None] = self
        return out

    @property
    def rest(self) -> Ctxt:
        out = self._memo.get(None)
        if out is None:
            if not self.types:
                raise CtxtMismatch("the empty context has no rest")
            out = self._memo[None] = Ctxt(self.types[:-1])
        return out

    @property
    def last(self) -> Ty:
        if not self.types:
            raise CtxtMismatch("the empty context has no last type")
        return self.types[-1]

    def at(self, depth: int) -> Ty:
        """Type of the variable with de Bruijn index ``depth``."""
        if not 0 <= depth < len(self.types):
            raise CtxtMismatch(f"index {depth} out of range for {self!r}")
        return self.types[-1 - depth]

    def __len__(self):
        return len(self.types)

    def __iter__(self) -> Iterator[Ty]:
        return iter(self.types)

    def __add__(self, other: Ctxt) -> Ctxt:
        return Ctxt(self.types + other.types)

    def __repr__(self):
        return "(" + ", ".join(["•", *map(repr, self.types)]) + ")"


NIL = Ctxt(())


def ctxt_of(*tys: Ty) -> Ctxt:
    return Ctxt(tuple(tys))


# -- indices -----------------------------------------------------------------


@dataclass(frozen=True, slots=True, eq=False)
class Idx:
    ctxt: Ctxt
    ty: Ty
    depth: int

    def __post_init__(self):
        if not 0 <= self.depth < len(self.ctxt):
            raise CtxtMismatch(f"index {self.depth} out of range for {self.ctxt!r}")
        if self.ctxt.at(self.depth) != self.ty:
            raise TypeMismatch(
                f"index {self.depth} has type {self.ctxt.at(self.depth)!r}, not {self.ty!r}")

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not Idx:
            return False
        return self.depth == other.depth and self.ctxt == other.ctxt

    def __hash__(self):
        return hash((self.depth, self.ctxt._h))

    @classmethod
    def at(cls, ctxt: Ctxt, depth: int) -> Idx:
        return cls(ctxt, ctxt.at(depth), depth)

    def __repr__(self):
        return f"#{self.depth}"


# -- terms -------------------------------------------------------------------


class Tm:
    """Base class of typed terms.  Subclasses compute ``ctxt`` and ``ty``."""

    __slots__ = ()

    def __hash__(self):
        return self._h


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Var(Tm):
    idx: Idx
    ctxt: Ctxt = field(init=False)
    ty: Ty = field(init=False)
    _h: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.idx, Idx):
            raise TypeError("Var expects an Idx")
        object.__setattr__(self, "ctxt", self.idx.ctxt)
        object.__setattr__(self, "ty", self.idx.ty)
        object.__setattr__(self, "_h", hash((0, self.idx.depth, self.idx.ctxt._h)))

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not Var or self._h != other._h:
            return False
        return self.idx == other.idx

    __hash__ = Tm.__hash__

    def __repr__(self):
        return f"Var{self.idx.depth}"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class App(Tm):
    fn: Tm
    arg: Tm
    ctxt: Ctxt = field(init=False)
    ty: Ty = field(init=False)
    _h: int = field(init=False)

    def __post_init__(self):
        fty = self.fn.ty
        if not isinstance(fty, Arr):
            raise TypeMismatch(f"cannot apply a term of non-arrow type {fty!r}")
        if fty.dom != self.arg.ty:
            raise TypeMismatch(
                f"function expects {fty.dom!r} but argument has type {self.arg.ty!r}")
        if self.fn.ctxt != self.arg.ctxt:
            raise CtxtMismatch(
                f"function lives in {self.fn.ctxt!r}, argument in {self.arg.ctxt!r}")
        object.__setattr__(self, "ctxt", self.fn.ctxt)
        object.__setattr__(self, "ty", fty.cod)
        object.__setattr__(self, "_h", hash((1, self.fn._h, self.arg._h)))

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not App or self._h != other._h:
            return False
        return self.fn == other.fn and self.arg == other.arg

    __hash__ = Tm.__hash__

    def __repr__(self):
        return f"App({self.fn!r}, {self.arg!r})"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Abs(Tm):
    body: Tm
    ctxt: Ctxt = field(init=False)
    ty: Ty = field(init=False)
    _h: int = field(init=False)

    def __post_init__(self):
        bctx = self.body.ctxt
        if not len(bctx):
            raise CtxtMismatch("the body of an abstraction needs a bound variable")
        object.__setattr__(self, "ctxt", bctx.rest)
        object.__setattr__(self, "ty", _arr(bctx.last, self.body.ty))
        object.__setattr__(self, "_h", hash((2, self.body._h)))

    @property
    def binder_ty(self) -> Ty:
        return self.ty.dom

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not Abs or self._h != other._h:
            return False
        return self.body == other.body

    __hash__ = Tm.__hash__

    def __repr__(self):
        return f"Abs({self.body!r})"


def mk_var(i: Idx) -> Var:
    return Var(i)


def mk_app(fn: Tm, arg: Tm) -> App:
    return App(fn, arg)


def mk_abs(body: Tm) -> Abs:
    return Abs(body)


def var(ctxt: Ctxt, depth: int) -> Var:
    """Shorthand for the variable at ``depth`` in ``ctxt``."""
    return Var(Idx.at(ctxt, depth))


def alpha_eq(t: Tm, u: Tm) -> bool:
    """Structural identity of de Bruijn terms, including their annotations."""
    return t.ctxt == u.ctxt and t.ty == u.ty and t == u


def validate(t: Tm) -> bool:
    """Re-derive every annotation of ``t`` bottom-up; raise on any violation."""
    if isinstance(t, Var):
        i = t.idx
        if i.ctxt.at(i.depth) != i.ty or t.ctxt != i.ctxt or t.ty != i.ty:
            raise TypeMismatch(f"ill-annotated variable {t!r}")
    elif isinstance(t, App):
        validate(t.fn)
        validate(t.arg)
        if (not isinstance(t.fn.ty, Arr) or t.fn.ty.dom != t.arg.ty
                or t.fn.ty.cod != t.ty or t.fn.ctxt != t.ctxt or t.arg.ctxt != t.ctxt):
            raise TypeMismatch(f"ill-annotated application {t!r}")
    elif isinstance(t, Abs):
        validate(t.body)
        bctx = t.body.ctxt
        if bctx.rest != t.ctxt or t.ty != Arr(bctx.last, t.body.ty):
            raise TypeMismatch(f"ill-annotated abstraction {t!r}")
    else:
        raise TypeError(f"not a term: {t!r}")
    return True


def term_size(t: Tm) -> int:
    if isinstance(t, App):
        return 1 + term_size(t.fn) + term_size(t.arg)
    if isinstance(t, Abs):
        return 1 + term_size(t.body)
    return 1


def term_depth(t: Tm) -> int:
    """Height of the syntax tree; variables have depth 0."""
    if isinstance(t, App):
        return 1 + max(term_depth(t.fn), term_depth(t.arg))
    if isinstance(t, Abs):
        return 1 + term_depth(t.body)
    return 0


def show(t: Tm) -> str:
    """Compact de Bruijn rendering, e.g. ``λ.λ.1 0``."""
    if isinstance(t, Var):
        return str(t.idx.depth)
    if isinstance(t, Abs):
        return "λ." + show(t.body)
    fn = show(t.fn)
    if isinstance(t.fn, Abs):
        fn = f"({fn})"
    arg = show(t.arg)
    if not isinstance(t.arg, Var):
        arg = f"({arg})"
    return f"{fn} {arg}"
