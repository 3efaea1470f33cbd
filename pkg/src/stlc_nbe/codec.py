"""JSON encoding of types, terms, substitutions and derivations.

Types are ``["iota"]`` / ``["arr", a, b]``; terms are ``["var", k]`` /
``["app", f, a]`` / ``["abs", T, b]`` and are decoded against a context.
Derivation nodes are objects tagged by ``"rule"``.  :func:`dumps` produces
the canonical form (sorted keys, no whitespace), on which decoding and
re-encoding is the identity.
"""

from __future__ import annotations

import json

from .conversion import CAbs, CApp, CBeta, CEta, CSymm, CTrans, CVar, Deriv
from .errors import BadNode, NbeError, ParseError
from .substitution import Subst
from .syntax import IOTA, Abs, App, Arr, Ctxt, Idx, Tm, Ty, Var

__all__ = [
    "dumps", "loads",
    "ty_to_json", "ty_from_json", "ctxt_to_json", "ctxt_from_json",
    "term_to_json", "term_from_json", "deriv_to_json", "deriv_from_json",
    "subst_to_json", "subst_from_json", "IllTyped",
]


class IllTyped(ParseError):
    """Well-formed JSON that encodes an ill-typed term."""


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None


def _bad(what, j):
    return ParseError(f"malformed {what}: {dumps(j) if _jsonable(j) else j!r}")


def _jsonable(j):
    try:
        json.dumps(j)
        return True
    except (TypeError, ValueError):
        return False


def ty_to_json(t: Ty):
    if isinstance(t, Arr):
        return ["arr", ty_to_json(t.dom), ty_to_json(t.cod)]
    return ["iota"]


def ty_from_json(j) -> Ty:
    if j == ["iota"]:
        return IOTA
    if isinstance(j, list) and len(j) == 3 and j[0] == "arr":
        return Arr(ty_from_json(j[1]), ty_from_json(j[2]))
    raise _bad("type", j)


def ctxt_to_json(g: Ctxt):
    return [ty_to_json(t) for t in g.types]


def ctxt_from_json(j) -> Ctxt:
    if not isinstance(j, list):
        raise _bad("context", j)
    return Ctxt(tuple(ty_from_json(t) for t in j))


def term_to_json(t: Tm):
    if isinstance(t, Var):
        return ["var", t.idx.depth]
    if isinstance(t, App):
        return ["app", term_to_json(t.fn), term_to_json(t.arg)]
    return ["abs", ty_to_json(t.ty.dom), term_to_json(t.body)]


def term_from_json(j, ctxt: Ctxt) -> Tm:
    if not isinstance(j, list) or not j:
        raise _bad("term", j)
    tag = j[0]
    try:
        if tag == "var" and len(j) == 2 and type(j[1]) is int:
            return Var(Idx.at(ctxt, j[1]))
        if tag == "app" and len(j) == 3:
            return App(term_from_json(j[1], ctxt), term_from_json(j[2], ctxt))
        if tag == "abs" and len(j) == 3:
            return Abs(term_from_json(j[2], ctxt.snoc(ty_from_json(j[1]))))
    except ParseError:
        raise
    except NbeError as e:
        raise IllTyped(f"ill-typed term: {e}") from None
    raise _bad("term", j)


def subst_to_json(s: Subst):
    return {"src": ctxt_to_json(s.src), "tgt": ctxt_to_json(s.tgt),
            "entries": [term_to_json(e) for e in s.entries]}


def subst_from_json(j) -> Subst:
    if not isinstance(j, dict) or not {"src", "tgt", "entries"} <= j.keys():
        raise _bad("substitution", j)
    src = ctxt_from_json(j["src"])
    try:
        return Subst(src, ctxt_from_json(j["tgt"]),
                     tuple(term_from_json(e, src) for e in j["entries"]))
    except ParseError:
        raise
    except NbeError as e:
        raise ParseError(f"ill-typed substitution: {e}") from None


def deriv_to_json(d: Deriv):
    if isinstance(d, CVar):
        return {"rule": "Var", "index": d.idx.depth}
    if isinstance(d, CApp):
        return {"rule": "App", "fn": deriv_to_json(d.fn), "arg": deriv_to_json(d.arg)}
    if isinstance(d, CAbs):
        return {"rule": "Abs", "ty": ty_to_json(d.ty), "body": deriv_to_json(d.body)}
    if isinstance(d, CBeta):
        return {"rule": "Beta", "body": term_to_json(d.body), "arg": term_to_json(d.arg)}
    if isinstance(d, CEta):
        return {"rule": "Eta", "term": term_to_json(d.term), "ty": ty_to_json(d.ty)}
    if isinstance(d, CSymm):
        return {"rule": "Symm", "d": deriv_to_json(d.d)}
    if isinstance(d, CTrans):
        return {"rule": "Trans", "left": deriv_to_json(d.left), "right": deriv_to_json(d.right)}
    raise TypeError(f"not a derivation: {d!r}")


_FIELDS = {
    "Var": {"rule", "index"}, "App": {"rule", "fn", "arg"}, "Abs": {"rule", "ty", "body"},
    "Beta": {"rule", "body", "arg"}, "Eta": {"rule", "term", "ty"},
    "Symm": {"rule", "d"}, "Trans": {"rule", "left", "right"},
}


def deriv_from_json(j, ctxt: Ctxt, path: tuple = ()) -> Deriv:
    """Decode a derivation whose endpoints live in ``ctxt``.

    Only the shape is checked here; use :func:`check_deriv` for validity.
    A structurally malformed node raises :class:`ParseError`; a well-formed
    node whose terms do not type-check raises :class:`BadNode` located by
    the same child labels the checker uses.
    """
    if not isinstance(j, dict) or _FIELDS.get(j.get("rule")) != j.keys():
        raise _bad("derivation node", j)
    rule = j["rule"]
    try:
        if rule == "Var":
            if type(j["index"]) is not int:
                raise _bad("derivation node", j)
            return CVar(Idx.at(ctxt, j["index"]))
        if rule == "App":
            return CApp(deriv_from_json(j["fn"], ctxt, path + ("App.fn",)),
                        deriv_from_json(j["arg"], ctxt, path + ("App.arg",)))
        if rule == "Abs":
            ty = ty_from_json(j["ty"])
            return CAbs(ty, deriv_from_json(j["body"], ctxt.snoc(ty), path + ("Abs.body",)))
        if rule == "Beta":
            arg = term_from_json(j["arg"], ctxt)
            return CBeta(term_from_json(j["body"], ctxt.snoc(arg.ty)), arg)
        if rule == "Eta":
            return CEta(term_from_json(j["term"], ctxt), ty_from_json(j["ty"]))
        if rule == "Symm":
            return CSymm(deriv_from_json(j["d"], ctxt, path + ("Symm",)))
        return CTrans(deriv_from_json(j["left"], ctxt, path + ("Trans.left",)),
                      deriv_from_json(j["right"], ctxt, path + ("Trans.right",)))
    except BadNode:
        raise
    except IllTyped as e:
        raise BadNode(path, f"{rule} node: {e}") from None
    except ParseError:
        raise
    except NbeError as e:
        raise BadNode(path, f"{rule} node: {e}") from None
