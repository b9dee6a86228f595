"""Time straightening of random words as the rank grows.

Each row is a cold algebra (empty product cache) normalizing the same number
of seeded random words, so the numbers show how the rule table scales with
M+N and word length.
"""

import argparse
import random
import time

from uqglmn.pbw import Algebra
from uqglmn.rootdata import Superdim
from uqglmn.verify import random_word


def bench(dim, words, max_len, seed):
    A = Algebra(dim)
    rng = random.Random(seed)
    ws = [random_word(dim, rng, max_len) for _ in range(words)]
    t = time.perf_counter()
    terms = 0
    for w in ws:
        terms += len(A.normalize([(1, w)]))
    return time.perf_counter() - t, terms


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--words", type=int, default=300)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lengths", default="3,5,7")
    a = p.parse_args()
    print(f"{'dim':>9} {'len':>4} {'seconds':>8} {'terms/word':>11}")
    for M, N in [(2, 1), (2, 3), (3, 4), (4, 5)]:
        for L in (int(v) for v in a.lengths.split(",")):
            dt, terms = bench(Superdim(M, N), a.words, L, a.seed)
            print(f"{str(Superdim(M, N)):>9} {L:>4} {dt:8.3f} {terms / a.words:11.1f}")


if __name__ == "__main__":
    main()
