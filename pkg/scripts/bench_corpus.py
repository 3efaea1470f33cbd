"""Time both normalizers and certificate checking on a random corpus."""

import argparse
import random
import time
from collections import Counter

from stlc_nbe.conversion import check_deriv, deriv_size
from stlc_nbe.glue import nf4
from stlc_nbe.nbe import nf3
from stlc_nbe.pcatlab.gen import GenConfig, gen_corpus, random_rewrite
from stlc_nbe.syntax import term_size


def timed(label, fn):
    t0 = time.perf_counter()
    out = fn()
    print(f"{label:28s} {time.perf_counter() - t0:7.2f}s")
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--depth", type=int, default=6)
    ap.add_argument("--ctxt", type=int, default=3)
    args = ap.parse_args()
    cfg = GenConfig(max_depth=args.depth, max_ctxt=args.ctxt)
    corpus = timed("generate", lambda: gen_corpus(args.seed, args.n, cfg))
    kripke = timed("nf3", lambda: [nf3(t) for t in corpus])
    glued = timed("nf4", lambda: [nf4(t) for t in corpus])
    timed("check certificates", lambda: [check_deriv(r.cert) for r in glued])
    mismatches = sum(a != r.nf for a, r in zip(kripke, glued))
    rng = random.Random(args.seed + 1)
    pairs = timed("rewrite", lambda: [random_rewrite(t, rng)[0] for t in corpus])
    unstable = timed("re-normalize rewrites",
                     lambda: sum(nf4(u).nf != r.nf for u, r in zip(pairs, glued)))
    sizes = Counter(min(deriv_size(r.cert) // 10 * 10, 200) for r in glued)
    print(f"engine mismatches: {mismatches}, rewrite mismatches: {unstable}")
    print(f"mean term size {sum(map(term_size, corpus)) / len(corpus):.1f}, "
          f"mean certificate size {sum(deriv_size(r.cert) for r in glued) / len(glued):.1f}")
    print("certificate size histogram (bucket: count):",
          dict(sorted(sizes.items())))


if __name__ == "__main__":
    main()
