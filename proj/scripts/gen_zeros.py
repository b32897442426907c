#!/usr/bin/env python3
"""Generate a plain-text table of nontrivial zeta-zero ordinates.

One ordinate per line, 9 decimal places, strictly increasing -- the same
layout as the classic published zero tables. Used as the reference input
for tests and for the table1 reproduction run.
"""
import argparse
import mpmath as mp


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("count", type=int, help="number of leading zeros to emit")
    ap.add_argument("out", help="output path")
    args = ap.parse_args()

    mp.mp.dps = 20
    with open(args.out, "w") as fh:
        for n in range(1, args.count + 1):
            t = mp.zetazero(n).imag
            fh.write(f"{float(t):.9f}\n")
            if n % 100 == 0:
                print(f"{n}...", flush=True)
    print("done")


if __name__ == "__main__":
    main()
