"""Run every verification suite over a list of superdimensions.

    python scripts/run_checks.py                 # the acceptance dims
    python scripts/run_checks.py 2,3 1,4 --jsonl reports.jsonl
"""

import argparse
import sys

from uqglmn.rootdata import Superdim
from uqglmn.verify import SUITES, run_suites

DEFAULT = ["1,2", "2,1", "1,3", "3,1", "2,3", "3,2"]


def main():
    p = argparse.ArgumentParser()
    p.add_argument("dims", nargs="*", default=DEFAULT, help="M,N pairs")
    p.add_argument("--suites", default=",".join(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--jsonl", help="also write one record per instance here")
    args = p.parse_args()

    ok = True
    sink = open(args.jsonl, "w") if args.jsonl else None
    for pair in args.dims:
        M, N = (int(v) for v in pair.split(","))
        for rep in run_suites(Superdim(M, N), args.suites.split(","), seed=args.seed, trials=args.trials):
            print(rep.to_text())
            ok &= rep.passed
            if sink:
                sink.write(rep.to_jsonl() + "\n")
    if sink:
        sink.close()
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
