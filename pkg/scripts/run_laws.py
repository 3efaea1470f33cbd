"""Run the exhaustive law suites and write a JSON report.

    python scripts/run_laws.py --suite actions --bounds term_depth=2 --out laws.json
"""

import argparse
import dataclasses
import json
import time

from stlc_nbe.pcatlab.enumerate import Bounds
from stlc_nbe.pcatlab.laws import SUITES


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", action="append", choices=sorted(SUITES))
    ap.add_argument("--bounds", nargs="*", default=[], metavar="K=V")
    ap.add_argument("--out", help="write the full JSON report here")
    args = ap.parse_args()
    overrides = {k: int(v) for k, v in (b.split("=", 1) for b in args.bounds)}
    bounds = dataclasses.replace(Bounds(), **overrides)
    print(f"bounds: {bounds}")
    reports = []
    for name in args.suite or SUITES:
        t0 = time.perf_counter()
        rep = SUITES[name](bounds)
        print(f"{rep.summary()}  [{time.perf_counter() - t0:.1f}s]")
        reports.append(rep.to_json())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump({"bounds": dataclasses.asdict(bounds), "reports": reports}, fh, indent=1)
    return 0 if all(r["passed"] for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
