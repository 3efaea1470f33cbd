"""Command-line driver: ``nf``, ``check``, ``eq`` and ``laws``.

Exit status is 0 for success (valid certificate, convertible terms, all laws
hold), 1 for a negative answer and 2 for usage, parse or typing errors.
Errors are reported on stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from ..codec import (ctxt_from_json, ctxt_to_json, deriv_from_json, deriv_to_json, dumps,
                     loads, subst_from_json, term_from_json, term_to_json, ty_from_json,
                     ty_to_json)
from ..conversion import CTrans, check_deriv
from ..errors import BadNode, NbeError, ParseError, UnboundVariable
from ..glue import NfResult, decide_conv, nf4
from ..pcatlab.enumerate import Bounds
from ..pcatlab.laws import SUITES
from ..syntax import alpha_eq
from .surface import parse_ctxt_decl, parse_term, print_term

__all__ = ["CliConfig", "main", "build_parser", "nf_result_to_json", "check_document"]

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2


@dataclass
class CliConfig:
    command: str
    terms: list = field(default_factory=list)
    file: Optional[str] = None
    variables: list = field(default_factory=list)
    cert: bool = False
    json: bool = False
    subst_json: Optional[str] = None
    bounds: dict = field(default_factory=dict)
    suites: list = field(default_factory=list)

    def __post_init__(self):
        if self.command not in ("nf", "check", "eq", "laws"):
            raise ValueError(f"unknown command {self.command!r}")
        for k, v in self.bounds.items():
            if v < 1:
                raise ValueError(f"bound {k} must be positive")


# -- documents --------------------------------------------------------------------


def nf_result_to_json(r: NfResult, names=None) -> dict:
    """Everything needed to re-check a normalization run."""
    return {
        "ctxt": ctxt_to_json(r.input.ctxt),
        "ty": ty_to_json(r.input.ty),
        "input": term_to_json(r.input),
        "nf": term_to_json(r.nf),
        "witness": term_to_json(r.witness),
        "cert_in_wit": deriv_to_json(r.cert_in_wit),
        "cert_wit_nf": deriv_to_json(r.cert_wit_nf),
        "cert": deriv_to_json(r.cert),
        "input_text": print_term(r.input, names),
        "nf_text": print_term(r.nf, names),
    }


_NF_KEYS = ("input", "nf", "witness", "cert_in_wit", "cert_wit_nf", "cert")


def check_document(doc) -> list:
    """Validate a certificate document; returns a list of problems (empty if valid).

    Two shapes are accepted: a normalization record as printed by
    ``nf --cert``, and a plain ``{"ctxt", "lhs", "rhs", "deriv"}`` claim.
    Malformed documents raise :class:`ParseError`.
    """
    if not isinstance(doc, dict) or "ctxt" not in doc:
        raise ParseError("certificate document must be an object with a 'ctxt' field")
    g = ctxt_from_json(doc["ctxt"])
    if all(k in doc for k in _NF_KEYS):
        t_in, t_nf, t_wit = (term_from_json(doc[k], g) for k in ("input", "nf", "witness"))
        if "ty" in doc and ty_from_json(doc["ty"]) != t_in.ty:
            return [{"cert": "input", "reason": "input does not have the claimed type"}]
        claims = [("cert_in_wit", t_in, t_wit), ("cert_wit_nf", t_wit, t_nf),
                  ("cert", t_in, t_nf)]
        derivs, problems = {}, []
        for k, _, _ in claims:
            try:
                derivs[k] = deriv_from_json(doc[k], g)
            except BadNode as e:
                problems.append({"cert": k, "path": list(e.path), "reason": e.reason})
        if problems:
            return problems
        problems = [p for k, lhs, rhs in claims for p in _check_claim(k, derivs[k], lhs, rhs)]
        if not problems and derivs["cert"] != CTrans(derivs["cert_in_wit"], derivs["cert_wit_nf"]):
            problems.append({"cert": "cert",
                             "reason": "cert is not cert_in_wit followed by cert_wit_nf"})
        return problems
    if all(k in doc for k in ("lhs", "rhs", "deriv")):
        lhs, rhs = term_from_json(doc["lhs"], g), term_from_json(doc["rhs"], g)
        try:
            d = deriv_from_json(doc["deriv"], g)
        except BadNode as e:
            return [{"cert": "deriv", "path": list(e.path), "reason": e.reason}]
        return _check_claim("deriv", d, lhs, rhs)
    raise ParseError("certificate document has neither nf-record nor lhs/rhs/deriv fields")


def _check_claim(name, d, lhs, rhs) -> list:
    try:
        a, b = check_deriv(d)
    except BadNode as e:
        return [{"cert": name, "path": list(e.path), "reason": e.reason}]
    out = []
    if not alpha_eq(a, lhs):
        out.append({"cert": name, "path": [], "reason": "left endpoint differs from the claim"})
    if not alpha_eq(b, rhs):
        out.append({"cert": name, "path": [], "reason": "right endpoint differs from the claim"})
    return out


# -- commands ---------------------------------------------------------------------


def _context(cfg: CliConfig):
    return [parse_ctxt_decl(v) for v in cfg.variables]


def _read_term_source(cfg: CliConfig) -> str:
    if cfg.file is not None:
        with open(cfg.file, encoding="utf-8") as fh:
            return fh.read()
    if len(cfg.terms) != 1:
        raise _Usage("nf expects exactly one term (inline or via --file)")
    return cfg.terms[0]


class _Usage(Exception):
    pass


def cmd_nf(cfg: CliConfig, out) -> int:
    if cfg.subst_json is not None:
        with open(cfg.subst_json, encoding="utf-8") as fh:
            s = subst_from_json(loads(fh.read()))
        docs = [nf_result_to_json(nf4(e, check=True)) for e in s.entries]
        print(dumps(docs), file=out)
        return EXIT_OK
    ctx = _context(cfg)
    names = [n for n, _ in ctx]
    t = parse_term(_read_term_source(cfg), ctx)
    res = nf4(t, check=cfg.cert)
    if cfg.cert:
        print(dumps(nf_result_to_json(res, names)), file=out)
    elif cfg.json:
        print(dumps({"ctxt": ctxt_to_json(t.ctxt), "ty": ty_to_json(t.ty),
                     "input": term_to_json(t), "nf": term_to_json(res.nf),
                     "nf_text": print_term(res.nf, names)}), file=out)
    else:
        print(print_term(res.nf, names), file=out)
    return EXIT_OK


def cmd_check(cfg: CliConfig, out) -> int:
    if len(cfg.terms) != 1:
        raise _Usage("check expects one certificate file")
    with open(cfg.terms[0], encoding="utf-8") as fh:
        problems = check_document(loads(fh.read()))
    if problems:
        for p in problems:
            print(json.dumps({"error": "InvalidCert", **p}, ensure_ascii=False), file=sys.stderr)
        if cfg.json:
            print(dumps({"valid": False, "problems": problems}), file=out)
        return EXIT_NO
    print(dumps({"valid": True}) if cfg.json else "valid", file=out)
    return EXIT_OK


def cmd_eq(cfg: CliConfig, out) -> int:
    if len(cfg.terms) != 2:
        raise _Usage("eq expects two terms")
    ctx = _context(cfg)
    t, u = (parse_term(src, ctx) for src in cfg.terms)
    same = decide_conv(t, u)
    if cfg.json:
        print(dumps({"convertible": same}), file=out)
    else:
        print("convertible" if same else "not convertible", file=out)
    return EXIT_OK if same else EXIT_NO


def cmd_laws(cfg: CliConfig, out) -> int:
    names = cfg.suites or list(SUITES)
    for n in names:
        if n not in SUITES:
            raise _Usage(f"unknown suite {n!r}; choose from {', '.join(SUITES)}")
    b = dataclasses.replace(Bounds(), **cfg.bounds)
    reports = [SUITES[n](b) for n in names]
    if cfg.json:
        print(dumps([r.to_json() for r in reports]), file=out)
    else:
        for r in reports:
            print(r.summary(), file=out)
            for f in r.failures[:3]:
                print("  counterexample:", {k: repr(v) for k, v in f.items()}, file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NO


COMMANDS = {"nf": cmd_nf, "check": cmd_check, "eq": cmd_eq, "laws": cmd_laws}


# -- argument parsing -------------------------------------------------------------


def _bound(text: str):
    key, sep, val = text.partition("=")
    fields = {f.name for f in dataclasses.fields(Bounds)}
    if not sep or key not in fields:
        raise argparse.ArgumentTypeError(f"expected k=v with k in {sorted(fields)}")
    try:
        return key, int(val)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bound {key} needs an integer") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stlc-nbe", description="Certified βη-normalization for the simply "
                "typed λ-calculus.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--var", dest="variables", action="append", default=[],
                        metavar="NAME:TYPE", help="free variable, outermost first")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    nf = sub.add_parser("nf", help="print the long βη-normal form of a term")
    nf.add_argument("terms", nargs="*", metavar="TERM")
    nf.add_argument("--file", help="read the term from a file")
    nf.add_argument("--cert", action="store_true", help="emit the checked certificates as JSON")
    nf.add_argument("--subst-json", help="normalize every entry of a JSON substitution")
    common(nf)

    ck = sub.add_parser("check", help="validate a certificate document")
    ck.add_argument("terms", nargs=1, metavar="CERT_JSON")
    ck.add_argument("--json", action="store_true")

    eq = sub.add_parser("eq", help="decide βη-convertibility of two terms")
    eq.add_argument("terms", nargs=2, metavar="TERM")
    common(eq)

    lw = sub.add_parser("laws", help="run the exhaustive law suites")
    lw.add_argument("--bounds", nargs="+", type=_bound, default=[], metavar="K=V")
    lw.add_argument("--suite", dest="suites", action="append", default=[],
                    choices=sorted(SUITES))
    lw.add_argument("--json", action="store_true")
    return p


def config_from_args(argv) -> CliConfig:
    ns = build_parser().parse_args(argv)
    return CliConfig(
        command=ns.command, terms=list(getattr(ns, "terms", [])),
        file=getattr(ns, "file", None), variables=getattr(ns, "variables", []),
        cert=getattr(ns, "cert", False), json=ns.json,
        subst_json=getattr(ns, "subst_json", None),
        bounds=dict(getattr(ns, "bounds", [])), suites=getattr(ns, "suites", []))


def _diagnose(e: BaseException) -> dict:
    d = {"error": type(e).__name__, "message": str(e)}
    if isinstance(e, ParseError):
        d.update(line=e.line, col=e.col)
    if isinstance(e, UnboundVariable):
        d["name"] = e.name
    return d


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        cfg = config_from_args(sys.argv[1:] if argv is None else argv)
        return COMMANDS[cfg.command](cfg, out)
    except (_Usage, ValueError, OSError, NbeError) as e:
        if isinstance(e, _Usage):
            d = {"error": "UsageError", "message": str(e)}
        else:
            d = _diagnose(e)
        print(json.dumps(d, ensure_ascii=False), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
