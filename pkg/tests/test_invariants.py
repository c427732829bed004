import itertools
import random

import pytest

from petalknot.constructions import theorem1_petal_grid, torus_grid_diagram
from petalknot.core import GaussCode, PetalPermutation, PlanarDiagramCode, gauss_to_pd, grid_to_pd
from petalknot.invariants import (
    InvariantError,
    alexander_from_pd,
    bareiss_determinant,
    determinant,
    fingerprint,
    jones_kauffman,
    jones_mirror_free,
    torus_alexander_oracle,
    torus_jones_oracle,
)
from petalknot.laurent import LaurentPolynomial as L
from petalknot.search import trivial_petal_add

TREFOIL_ALEX = L({-1: 1, 0: -1, 1: 1})
RIGHT_TREFOIL_JONES = L({1: 1, 3: 1, 4: -1})
FIGURE_EIGHT = PlanarDiagramCode.from_text("X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]")


def two_strand(n: int, sign: int = 1) -> PlanarDiagramCode:
    """Standard alternating diagram of T(2,n), n odd."""
    first = [k if k % 2 else -k for k in range(1, n + 1)]
    return gauss_to_pd(GaussCode(tuple(first + [-v for v in first]), (sign,) * n))


def poly_div(num: list[int], den: list[int]) -> list[int]:
    # schoolbook division of integer coefficient lists, low degree first
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] // den[-1]
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    assert not any(num), "division left a remainder"
    return out


def alexander_by_division(r: int, s: int) -> L:
    """(t^{rs} - 1)(t - 1) / ((t^r - 1)(t^s - 1)), centered."""
    def xn(n):
        return [-1] + [0] * (n - 1) + [1]

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            for j, v in enumerate(b):
                out[i + j] += u * v
        return out

    q = poly_div(mul(xn(r * s), xn(1)), mul(xn(r), xn(s)))
    d = len(q) - 1
    return L({i - d // 2: c for i, c in enumerate(q) if c})


class TestLaurent:
    def test_zero_coefficients_dropped(self):
        assert L({0: 1, 3: 0}).terms == {0: 1}
        assert L({1: 1}) - L({1: 1}) == 0

    def test_arithmetic(self):
        t = L({1: 1})
        assert (t + 1) * (t - 1) == t ** 2 - 1
        assert (t ** -1) * t == 1

    def test_exact_div(self):
        a = L({0: 1, 2: 1, 4: 1})
        assert a.exact_div(L({0: 1, 1: 1, 2: 1})) == L({0: 1, 1: -1, 2: 1})

    def test_json_round_trip(self):
        p = L({-4: -1, -3: 1, -1: 1})
        assert L.from_json(p.to_json()) == p

    def test_format(self):
        assert TREFOIL_ALEX.format() == "t - 1 + t^-1"
        assert L({}).format() == "0"

    def test_substitute_inverse(self):
        assert RIGHT_TREFOIL_JONES.substitute_inverse() == L({-1: 1, -3: 1, -4: -1})


class TestAlexander:
    def test_unknot(self):
        assert alexander_from_pd(PlanarDiagramCode(())) == 1

    def test_trefoil(self):
        assert alexander_from_pd(two_strand(3)) == TREFOIL_ALEX

    def test_figure_eight(self):
        assert alexander_from_pd(FIGURE_EIGHT) == L({-1: -1, 0: 3, 1: -1})

    def test_theorem1_3_4(self):
        pd = grid_to_pd(theorem1_petal_grid(3, 4).grid, cleanup=True)
        assert alexander_from_pd(pd) == torus_alexander_oracle(3, 4)

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 21])
    def test_two_strand_family(self, n):
        assert alexander_from_pd(two_strand(n)) == torus_alexander_oracle(2, n)

    def test_oracle_values(self):
        assert torus_alexander_oracle(2, 3) == TREFOIL_ALEX
        assert torus_alexander_oracle(2, 5) == L({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
        assert abs(torus_alexander_oracle(3, 4).evaluate_int(-1)) == 3

    @pytest.mark.parametrize("r,s", [(r, s) for s in range(3, 14) for r in range(2, s)
                                     if __import__("math").gcd(r, s) == 1])
    def test_oracle_against_division(self, r, s):
        assert torus_alexander_oracle(r, s) == alexander_by_division(r, s)

    def test_oracle_rejects_links(self):
        with pytest.raises(InvariantError):
            torus_alexander_oracle(2, 4)

    def test_normalized_symmetric(self):
        for r, s in [(3, 5), (4, 7), (5, 6)]:
            a = alexander_from_pd(grid_to_pd(torus_grid_diagram(r, s), cleanup=True))
            assert a.is_symmetric() and a(1) == 1


class TestDeterminant:
    def test_values(self):
        assert determinant(PlanarDiagramCode(())) == 1
        assert determinant(torus_alexander_oracle(2, 5)) == 5
        assert determinant(torus_alexander_oracle(3, 4)) == 3
        assert determinant(FIGURE_EIGHT) == 5

    def test_bareiss_matches_expansion(self):
        rng = random.Random(7)
        for _ in range(30):
            n = rng.randint(1, 4)
            m = [[L({rng.randint(-1, 1): rng.randint(-3, 3)}) for _ in range(n)] for _ in range(n)]
            expected = L({})
            for perm in itertools.permutations(range(n)):
                sign = 1
                for i in range(n):
                    for j in range(i + 1, n):
                        if perm[i] > perm[j]:
                            sign = -sign
                term = L({0: sign})
                for i in range(n):
                    term = term * m[i][perm[i]]
                expected = expected + term
            assert bareiss_determinant(m) == expected


class TestJones:
    def test_unknot(self):
        assert jones_kauffman(PlanarDiagramCode(()), 20) == 1

    def test_trefoils(self):
        right = jones_kauffman(two_strand(3, 1), 20)
        left = jones_kauffman(two_strand(3, -1), 20)
        assert right == RIGHT_TREFOIL_JONES
        assert left == right.substitute_inverse() != right

    def test_figure_eight_amphichiral(self):
        j = jones_kauffman(FIGURE_EIGHT, 20)
        assert j == L({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
        assert j == j.substitute_inverse()

    def test_budget(self):
        assert jones_kauffman(two_strand(21), 20) is None
        assert jones_kauffman(two_strand(21), 21) == torus_jones_oracle(2, 21)

    @pytest.mark.parametrize("r,s", [(2, 3), (2, 5), (3, 4), (3, 5)])
    def test_torus_oracle(self, r, s):
        pd = grid_to_pd(torus_grid_diagram(r, s), cleanup=True)
        assert jones_kauffman(pd, 30) == torus_jones_oracle(r, s)

    def test_mirror_free(self):
        assert jones_mirror_free(RIGHT_TREFOIL_JONES) == jones_mirror_free(
            RIGHT_TREFOIL_JONES.substitute_inverse())


class TestFingerprint:
    def test_unknot(self):
        fp = fingerprint(PetalPermutation((1, 2, 3)))
        assert (fp.alexander, fp.determinant, fp.jones) == (1, 1, 1)
        assert fp.is_unknot_like()

    def test_theorem1_vs_reference(self):
        a = fingerprint(theorem1_petal_grid(2, 3))
        b = fingerprint(torus_grid_diagram(2, 3))
        assert a.same_knot_type(b, chiral=True)
        assert a.key(chiral=True) == b.key(chiral=True)

    def test_stabilization(self):
        p = PetalPermutation((1, 3, 5, 2, 4))
        for i in range(5):
            assert fingerprint(trivial_petal_add(p, i)).same_knot_type(fingerprint(p), chiral=True)

    def test_mirror_key(self):
        p = PetalPermutation((1, 3, 5, 2, 4))
        a, b = fingerprint(p), fingerprint(p.mirror())
        assert a.key() == b.key()
        assert a.key(chiral=True) != b.key(chiral=True)

    def test_json(self):
        data = fingerprint(PetalPermutation((1, 3, 5, 2, 4))).to_json()
        assert data["alexander_text"] == "t - 1 + t^-1" and data["determinant"] == 3
