"""Compare the ambient and substitution routes on catalog spheres (dims, ranks, time)."""

import argparse
import time

from plspheres.constructions import catalog
from plspheres.lefschetz import lefschetz_data, strong_lefschetz_witness


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=10)
    args = ap.parse_args()
    for name, s in catalog():
        if len(s.vertices) > args.max_vertices:
            continue
        w = strong_lefschetz_witness(s)
        row = [name]
        for method in ("ambient", "substitute"):
            t = time.perf_counter()
            dims, ranks = lefschetz_data(s, w.thetas, w.omega, method=method)
            row.append(f"{method}={dims}/{ranks} {1000 * (time.perf_counter() - t):.0f}ms")
        print(*row)


if __name__ == "__main__":
    main()
