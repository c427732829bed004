"""Census of knots with few petals.

Every petal permutation of each odd length up to ``max_petals`` is
fingerprinted; each knot type is reported at the first length where it
shows up, which is its petal number as far as the invariants can tell.

    python demos/small_census.py [max_petals] [workers]
"""

import sys

from petalknot.search import census_upto


def main(max_petals=7, workers=1):
    best = census_upto(max_petals, workers=workers)
    rows = sorted(best.values(), key=lambda e: (e.petals, e.fingerprint.alexander.span, e.witness.heights))
    for e in rows:
        fp = e.fingerprint
        chiral = {None: "?", True: "chiral", False: "amphichiral"}[e.chiral]
        print(f"p={e.petals}  det={fp.determinant:<4} {chiral:<11} "
              f"witness {e.witness}  Alexander {fp.alexander.format()}")
    print(f"{len(rows)} knot types (mirrors identified) with at most {max_petals} petals")


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:]]
    main(*args)
