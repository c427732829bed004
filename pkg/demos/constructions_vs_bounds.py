"""Print every closed-form petal diagram for T(r,s), s <= 20, next to the
known bounds, and check each diagram against the torus knot oracle.

    python demos/constructions_vs_bounds.py [max_s]
"""

import math
import sys

from petalknot.bounds import bounds_report
from petalknot.constructions import (
    surgery_minus_petal_permutation,
    surgery_plus_petal_permutation,
    theorem1_petal_permutation,
)
from petalknot.invariants import fingerprint, torus_alexander_oracle


def constructions(r, s):
    if r % (s - r) == 1 % (s - r):
        yield "2s-1", theorem1_petal_permutation(r, s)
    if s % r == 1:
        yield "nr+1", surgery_plus_petal_permutation(r, s // r)
    if s % r == r - 1:
        yield "nr-1", surgery_minus_petal_permutation(r, s // r + 1)


def main(max_s=20):
    print(f"{'knot':>8} {'lower':>5} {'upper':>5}  constructions")
    for s in range(3, max_s + 1):
        for r in range(2, s):
            if math.gcd(r, s) != 1:
                continue
            rep = bounds_report(r, s)
            built = []
            for name, p in constructions(r, s):
                ok = fingerprint(p, 0).alexander == torus_alexander_oracle(r, s)
                built.append(f"{name}:{len(p)}{'' if ok else '!'}")
            mark = "=" if rep.tight else " "
            print(f"{f'T({r},{s})':>8} {rep.best_lower:>5} {rep.best_upper:>5}{mark} {' '.join(built)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 20)
