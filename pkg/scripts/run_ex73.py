"""Gaussian-kernel symmetric Toeplitz saddle systems solved by GMRES:
backward errors versus problem size, written to CSV."""

import argparse

from structbe.cli import _parse_sizes
from structbe.experiments import EX73_HEADER, run_ex73
from structbe.fileio import write_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="8:4:100")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tol", type=float, default=1e-13)
    ap.add_argument("--out", default="ex73.csv")
    args = ap.parse_args()
    rows = run_ex73(_parse_sizes(args.sizes), args.seed, tol=args.tol)
    write_csv(args.out, EX73_HEADER, rows)
    print(",".join(EX73_HEADER))
    for row in rows:
        print(",".join(f"{v:.16g}" if isinstance(v, float) else str(v) for v in row))


if __name__ == "__main__":
    main()
