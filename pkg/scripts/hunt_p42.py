"""Larger randomized hunt for vertex-decomposable spheres that are not
strongly edge-decomposable.  Appends to a ledger so runs can be resumed."""

import argparse
import sys

from plspheres.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--budget", type=int, default=10**6)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--ledger", default="p42_ledger.jsonl")
    args = ap.parse_args()
    argv = ["search-p42", "--random", str(args.random), "--seed", str(args.seed), "--budget", str(args.budget),
            "--jobs", str(args.jobs), "--ledger", args.ledger]
    sys.exit(cli_main(argv))


if __name__ == "__main__":
    main()
