"""Named surface syntax: parsing to de Bruijn terms and printing back.

Grammar::

    type  ::= atom ('->' type)?            atom ::= 'o' | '(' type ')'
    term  ::= '\\' name ':' type '.' term  |  app
    app   ::= simple simple*               simple ::= name | '(' term ')'

Application is left-associative, ``->`` right-associative, and a λ extends
as far right as possible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError, TypeMismatch, UnboundVariable
from ..syntax import IOTA, Abs, App, Arr, Ctxt, Idx, Tm, Ty, Var

__all__ = ["parse_type", "parse_term", "parse_ctxt_decl", "print_type", "print_term",
           "SVar", "SApp", "SLam", "parse_surface"]

_TOKEN = re.compile(r"\s*(?:(?P<arrow>->)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<sym>[\\λ:.()]))")


@dataclass(frozen=True)
class SVar:
    name: str
    pos: tuple


@dataclass(frozen=True)
class SApp:
    fn: object
    arg: object
    pos: tuple


@dataclass(frozen=True)
class SLam:
    name: str
    ty: Ty
    body: object
    pos: tuple


def _tokenize(src: str):
    toks = []
    i = 0
    while True:
        m = _TOKEN.match(src, i)
        if m is None or m.end() == i:
            rest = src[i:]
            if rest.strip():
                j = i + len(rest) - len(rest.lstrip())
                raise ParseError(f"unexpected character {src[j]!r}", *_linecol(src, j))
            toks.append(("eof", "", _linecol(src, len(src))))
            return toks
        kind = m.lastgroup
        text = m.group(kind)
        toks.append((kind if kind != "sym" else text, text, _linecol(src, m.start(kind))))
        i = m.end()


def _linecol(src, i):
    line = src.count("\n", 0, i) + 1
    return line, i - (src.rfind("\n", 0, i) + 1) + 1


class _Parser:
    def __init__(self, src):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            shown = t[1] or "end of input"
            raise ParseError(f"expected {kind!r}, found {shown!r}", *t[2])
        return t

    def type(self):
        left = self.type_atom()
        if self.peek()[0] == "arrow":
            self.next()
            return Arr(left, self.type())
        return left

    def type_atom(self):
        t = self.next()
        if t[0] == "name" and t[1] == "o":
            return IOTA
        if t[0] == "(":
            ty = self.type()
            self.expect(")")
            return ty
        raise ParseError(f"expected a type, found {t[1] or 'end of input'!r}", *t[2])

    def term(self):
        t = self.peek()
        if t[0] in ("\\", "λ"):
            self.next()
            name = self.expect("name")
            self.expect(":")
            ty = self.type()
            self.expect(".")
            return SLam(name[1], ty, self.term(), t[2])
        fn = self.simple()
        while self.peek()[0] in ("name", "(", "\\", "λ"):
            pos = self.peek()[2]
            arg = self.term() if self.peek()[0] in ("\\", "λ") else self.simple()
            fn = SApp(fn, arg, pos)
        return fn

    def simple(self):
        t = self.next()
        if t[0] == "name":
            return SVar(t[1], t[2])
        if t[0] == "(":
            e = self.term()
            self.expect(")")
            return e
        raise ParseError(f"expected a term, found {t[1] or 'end of input'!r}", *t[2])

    def done(self):
        t = self.peek()
        if t[0] != "eof":
            raise ParseError(f"unexpected {t[1]!r}", *t[2])


def parse_type(src: str) -> Ty:
    p = _Parser(src)
    ty = p.type()
    p.done()
    return ty


def parse_surface(src: str):
    p = _Parser(src)
    e = p.term()
    p.done()
    return e


def parse_ctxt_decl(decl: str) -> tuple:
    """``"name:TYPE"`` to ``(name, Ty)``."""
    name, sep, ty = decl.partition(":")
    name = name.strip()
    if not sep or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", name):
        raise ParseError(f"expected name:TYPE, got {decl!r}")
    return name, parse_type(ty)


def parse_term(src: str, ctx=()) -> Tm:
    """Parse ``src`` in the named context ``ctx`` (a sequence of ``(name, Ty)``,
    outermost first).  The innermost binding of a name wins."""
    g = Ctxt(tuple(ty for _, ty in ctx))
    names = [n for n, _ in ctx]
    return _resolve(parse_surface(src), g, names)


def _resolve(e, g, names):
    if isinstance(e, SVar):
        for k in range(len(names) - 1, -1, -1):
            if names[k] == e.name:
                depth = len(names) - 1 - k
                return Var(Idx(g, g.at(depth), depth))
        raise UnboundVariable(e.name)
    if isinstance(e, SLam):
        return Abs(_resolve(e.body, g.snoc(e.ty), names + [e.name]))
    f = _resolve(e.fn, g, names)
    a = _resolve(e.arg, g, names)
    if not isinstance(f.ty, Arr) or f.ty.dom != a.ty:
        line, col = e.pos
        raise TypeMismatch(
            f"{line}:{col}: cannot apply {print_term(f, names)} : {print_type(f.ty)} "
            f"to {print_term(a, names)} : {print_type(a.ty)}")
    return App(f, a)


def print_type(ty: Ty) -> str:
    if isinstance(ty, Arr):
        dom = print_type(ty.dom)
        if isinstance(ty.dom, Arr):
            dom = f"({dom})"
        return f"{dom}->{print_type(ty.cod)}"
    return "o"


def print_term(t: Tm, names=None) -> str:
    """Named rendering; context variables and binders are called x0, x1, …
    in binding order unless ``names`` gives the context's names."""
    names = list(names) if names is not None else [f"x{k}" for k in range(len(t.ctxt))]
    return _print(t, names, 0)


# precedence: 0 = anywhere, 1 = function position, 2 = argument position
def _print(t, names, prec):
    if isinstance(t, Var):
        return names[len(names) - 1 - t.idx.depth]
    if isinstance(t, Abs):
        k = len(names)
        while f"x{k}" in names:
            k += 1
        x = f"x{k}"
        s = f"\\{x}:{print_type(t.ty.dom)}. {_print(t.body, names + [x], 0)}"
        return f"({s})" if prec > 0 else s
    s = f"{_print(t.fn, names, 1)} {_print(t.arg, names, 2)}"
    return f"({s})" if prec == 2 else s
