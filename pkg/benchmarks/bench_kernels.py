"""Compare the compiled and pure-Python kernels on the corpus.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from noble import _purekernels as pure
from noble.kernels import compiled
from noble.oracle.corpus import generate_corpus, symmetric_table
from noble.oracle.search import presentation


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if compiled is None:
        print("compiled kernels not built; nothing to compare")
        return
    corpus = generate_corpus()
    small = [S for S in corpus if S.n <= 24]
    I3 = symmetric_table(3)
    oracle_cases = [S for S in corpus if S.n <= 8]
    pres = [presentation(S) for S in oracle_cases]

    cases = {
        "all filters (corpus, n<=24)": lambda mod: [
            mod.enumerate_filters(S.table, S.inv, S.up, S.n) for S in small
        ],
        "closed inverse subsemigroups of I_3": lambda mod: mod.enumerate_filters(
            I3.table, I3.inv, I3.up, I3.n, list(I3.idempotents)
        ),
        "transitive actions (corpus, n<=8, degree<=5)": lambda mod: [
            mod.transitive_search(gi, r, w, 5, False) for _, gi, w, r in pres
        ],
    }
    print(f"{'kernel':48s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, job in cases.items():
        tp, a = _time(lambda: job(pure), args.repeat)
        tc, b = _time(lambda: job(compiled), args.repeat)
        assert a == b, name
        print(f"{name:48s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
