"""Tabulate the four edge conditions over small catalog spheres.

Prints the pattern counts (link condition, deletion ball, star-union ball,
contraction sphere) and the edges where the star-union ball disagrees.
"""

import argparse
from collections import Counter

from plspheres.complex import faces
from plspheres.constructions import catalog
from plspheres.contraction import theorem_2_1_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=10)
    ap.add_argument("--budget", type=int, default=10**6)
    ap.add_argument("--show", type=int, default=10, help="disagreements to print")
    args = ap.parse_args()
    patterns = Counter()
    odd = []
    for name, s in catalog():
        if len(s.vertices) > args.max_vertices:
            continue
        for u, v in sorted(faces(s, 1)):
            r = theorem_2_1_report(s, u, v, args.budget)
            key = (r.link_condition, r.deletion_ball.verdict.value, r.star_union_ball.verdict.value,
                   r.contracted_sphere.verdict.value)
            patterns[key] += 1
            if r.decided and not r.consistent:
                odd.append((name, (u, v), key))
    for key, n in patterns.most_common():
        print(f"{n:5d}  link={key[0]!s:5s} deletion={key[1]:7s} star_union={key[2]:7s} contraction={key[3]}")
    print(f"{len(odd)} decided edges where the conditions disagree")
    for row in odd[: args.show]:
        print("  ", *row)


if __name__ == "__main__":
    main()
