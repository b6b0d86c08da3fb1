"""Classify every catalog sphere and print a verdict table."""

import argparse
import time

from plspheres.batch import CLASSES, RunConfig, classify
from plspheres.constructions import catalog


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=10**6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = RunConfig(budget=args.budget, seed=args.seed)
    print(f"{'name':28s} " + " ".join(f"{c:>12s}" for c in CLASSES) + "   ms")
    for name, c in catalog():
        t = time.perf_counter()
        recs = classify(name, c, cfg)
        v = {r["class"]: r["verdict"] for r in recs}
        bad = [r["arrow"] for r in recs if r["class"] == "containment"]
        ms = (time.perf_counter() - t) * 1000
        print(f"{name:28s} " + " ".join(f"{v[c]:>12s}" for c in CLASSES) + f" {ms:6.0f}" + (f"  VIOLATES {bad}" if bad else ""))


if __name__ == "__main__":
    main()
