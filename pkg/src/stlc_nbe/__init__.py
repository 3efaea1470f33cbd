"""Normalization by evaluation for the simply typed λ-calculus, with
machine-checkable βη-conversion certificates."""

import sys

from .errors import (BadNode, BudgetExceeded, CtxtMismatch, FuelExhausted, InvalidCert,
                     NbeError, ParseError, TypeMismatch, UnboundVariable)
from .syntax import (IOTA, NIL, Abs, App, Arr, Ctxt, Idx, Tm, Ty, Var, alpha_eq, arrows,
                     ctxt_of, mk_abs, mk_app, mk_var, var)
from .conversion import check_deriv, deriv_refl
from .nbe import nf3
from .glue import NfResult, decide_conv, nf4

# terms, values and certificates are all processed by structural recursion
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)

__version__ = "0.1.0"
