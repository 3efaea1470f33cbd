"""Compare the decision procedure with bounded rewriting on every pair of
small enumerated terms, grouped by context and type."""

import argparse
import itertools
import time

from stlc_nbe.errors import FuelExhausted
from stlc_nbe.glue import decide_conv
from stlc_nbe.pcatlab.enumerate import enum_ctxts, enum_terms, enum_types
from stlc_nbe.pcatlab.oracle import conv_oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=3, help="term depth")
    ap.add_argument("--ctxt", type=int, default=1, help="context length")
    ap.add_argument("--ty-depth", type=int, default=2)
    ap.add_argument("--fuel", type=int, default=8)
    args = ap.parse_args()
    t0 = time.perf_counter()
    totals = [0, 0, 0]
    for g in enum_ctxts(args.ctxt, args.ty_depth):
        for ty in enum_types(args.ty_depth):
            ts = enum_terms(g, ty, args.depth)
            row = [0, 0, 0]   # agree, disagree, inconclusive
            for t, u in itertools.combinations_with_replacement(ts, 2):
                try:
                    row[conv_oracle(t, u, args.fuel) != decide_conv(t, u)] += 1
                except FuelExhausted:
                    row[2] += 1
            if ts:
                print(f"{g!r:>20s} ⊢ {ty!r:14s} terms={len(ts):4d} "
                      f"agree={row[0]} disagree={row[1]} inconclusive={row[2]}")
            totals = [a + b for a, b in zip(totals, row)]
    print(f"total agree={totals[0]} disagree={totals[1]} inconclusive={totals[2]} "
          f"[{time.perf_counter() - t0:.1f}s]")
    return 1 if totals[1] else 0


if __name__ == "__main__":
    raise SystemExit(main())
